// Copyright 2026 The gaborkit Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "gaborkit/error.hpp"
#include "gaborkit/linalg.hpp"
#include "test_support.hpp"

using namespace gaborkit;
using gaborkit::testing::Gen;

namespace {

void check_values(const std::vector<double>& got, const std::vector<double>& want, double tol) {
  REQUIRE(got.size() == want.size());
  for (std::size_t i = 0; i < got.size(); ++i) CHECK(std::abs(got[i] - want[i]) <= tol);
}

double reconstruction_error(const CMatrix& m, const EigenSystem& es) {
  const std::size_t n = m.rows();
  CMatrix d(n, n);
  for (std::size_t i = 0; i < n; ++i) d(i, i) = es.values[i];
  const CMatrix r = es.vectors * d * es.vectors.adjoint();
  CMatrix diff(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) diff(i, j) = r(i, j) - m(i, j);
  }
  return diff.frobenius_norm() / m.frobenius_norm();
}

}  // namespace

TEST_CASE("hermitian_eigs on small closed-form cases") {
  check_values(hermitian_eigs(CMatrix::identity(3)), {1, 1, 1}, 1e-14);
  check_values(hermitian_eigs(CMatrix{{2, 0}, {0, -1}}), {-1, 2}, 1e-14);
  check_values(hermitian_eigs(CMatrix{{2, 1}, {1, 2}}), {1, 3}, 1e-14);
  // [[1, i], [-i, 1]] has characteristic polynomial (1 - l)^2 - 1.
  check_values(hermitian_eigs(CMatrix{{1, Complex(0, 1)}, {Complex(0, -1), 1}}), {0, 2}, 1e-14);
}

TEST_CASE("hermitian_eigs rejects bad input") {
  CHECK_THROWS_AS(hermitian_eigs(CMatrix{{1, 2}, {0, 1}}), Error);
  try {
    hermitian_eigs(CMatrix{{1, 2}, {0, 1}});
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kNonHermitian);
  }
  CMatrix bad{{1, 0}, {0, std::numeric_limits<double>::quiet_NaN()}};
  try {
    hermitian_eigs(bad);
    FAIL("expected NonFinite");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kNonFinite);
  }
  try {
    hermitian_eigs(CMatrix(2, 3));
    FAIL("expected a shape error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kDimensionMismatch);
  }
}

TEST_CASE("eigensystem reconstructs the matrix on both code paths") {
  Gen gen(1);
  for (std::size_t n : {1u, 2u, 7u, 40u, 96u, 97u, 150u}) {
    const CMatrix m = gen.hermitian(n);
    const EigenSystem es = hermitian_eigensystem(m);
    CHECK(std::is_sorted(es.values.begin(), es.values.end()));
    CHECK(reconstruction_error(m, es) <= 1e-10);
    const auto plain = hermitian_eigs(m);
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(std::abs(plain[i] - es.values[i]) <= 1e-10 * (1.0 + std::abs(es.values.back())));
    }
  }
}

TEST_CASE("large path handles clusters of tiny eigenvalues") {
  // Rank-deficient Gram matrix: many eigenvalues at roundoff level.
  Gen gen(2);
  const CMatrix b = gen.matrix(200, 20);
  const CMatrix g = b * b.adjoint();
  CMatrix h(200, 200);
  for (std::size_t i = 0; i < 200; ++i) {
    for (std::size_t j = 0; j < 200; ++j) h(i, j) = 0.5 * (g(i, j) + std::conj(g(j, i)));
  }
  const EigenSystem es = hermitian_eigensystem(h);
  CHECK(reconstruction_error(h, es) <= 1e-10);
  CHECK(std::abs(es.values[0]) <= 1e-10 * es.values.back());
}

TEST_CASE("singular values on closed-form cases") {
  check_values(singular_values(CMatrix(2, 3)), {0, 0}, 0.0);
  const double s = 1.0 / std::sqrt(2.0);
  check_values(singular_values(CMatrix{{s, s}, {-s, s}}), {1, 1}, 1e-14);
  check_values(singular_values(CMatrix{{1, 0}, {0, 0}, {0, 2}}), {2, 1}, 1e-14);
  const auto sp = singular_spectrum(CMatrix{{1, 0}, {0, 0}, {0, 2}});
  CHECK(sp.min == doctest::Approx(1.0));
  CHECK(sp.max == doctest::Approx(2.0));
}

TEST_CASE("opnorm_offdiag_rowsum") {
  CHECK(opnorm_offdiag_rowsum(CMatrix::identity(4)) == 0.0);
  CHECK(opnorm_offdiag_rowsum(CMatrix{{0, 1}, {1, 0}}) == 1.0);
  CHECK(opnorm_offdiag_rowsum(CMatrix{{0, .5, .25}, {.5, 0, .5}, {.25, .5, 0}}) ==
        doctest::Approx(1.0));
}

TEST_CASE("property: squared singular values match eigenvalues of m* m") {
  Gen gen(3);
  for (int draw = 0; draw < 200; ++draw) {
    const std::size_t r = static_cast<std::size_t>(gen.integer(1, 50));
    const std::size_t c = static_cast<std::size_t>(gen.integer(1, 50));
    const CMatrix m = gen.matrix(r, c);
    auto sv = singular_values(m);
    CMatrix mm = m.adjoint() * m;
    auto ev = hermitian_eigs(mm);
    std::reverse(ev.begin(), ev.end());
    const double scale = ev.front();
    for (std::size_t i = 0; i < sv.size(); ++i) {
      REQUIRE(std::abs(sv[i] * sv[i] - ev[i]) <= 1e-9 * scale);
    }
  }
}

TEST_CASE("property: principal submatrices interlace") {
  Gen gen(4);
  for (int draw = 0; draw < 200; ++draw) {
    const std::size_t n = static_cast<std::size_t>(gen.integer(2, 30));
    const CMatrix m = gen.hermitian(n);
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::shuffle(idx.begin(), idx.end(), std::mt19937_64(static_cast<unsigned>(draw)));
    idx.resize(static_cast<std::size_t>(gen.integer(1, static_cast<long>(n) - 1)));
    std::sort(idx.begin(), idx.end());
    const auto full = hermitian_spectrum(m);
    const auto sub = hermitian_spectrum(m.principal_submatrix(idx));
    REQUIRE(sub.min >= full.min - 1e-12);
    REQUIRE(sub.max <= full.max + 1e-12);
  }
}

TEST_CASE("property: eigenvalues invariant under unitary conjugation") {
  Gen gen(5);
  for (int draw = 0; draw < 200; ++draw) {
    const std::size_t n = static_cast<std::size_t>(gen.integer(1, 24));
    const CMatrix m = gen.hermitian(n);
    const CMatrix u = gen.unitary(n);
    CMatrix c = u * m * u.adjoint();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) c(j, i) = std::conj(c(i, j));
      c(i, i) = c(i, i).real();
    }
    const auto a = hermitian_eigs(m);
    const auto b = hermitian_eigs(c);
    const double scale = std::max(std::abs(a.front()), std::abs(a.back()));
    for (std::size_t i = 0; i < n; ++i) REQUIRE(std::abs(a[i] - b[i]) <= 1e-10 * scale);
  }
}
