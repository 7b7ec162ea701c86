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

// Shared helpers for the test binaries: seeded generators and small
// numerical comparisons.

#ifndef GABORKIT_TESTS_TEST_SUPPORT_HPP_
#define GABORKIT_TESTS_TEST_SUPPORT_HPP_

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>

#include "gaborkit/linalg.hpp"

namespace gaborkit::testing {

inline constexpr std::uint64_t kSeed = 20260415;

class Gen {
 public:
  explicit Gen(std::uint64_t salt = 0) : eng_(kSeed ^ (salt * 0x9E3779B97F4A7C15ULL)) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(eng_); }
  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(eng_); }
  double normal() { return std::normal_distribution<double>(0.0, 1.0)(eng_); }
  Complex cnormal() { return {normal(), normal()}; }

  CMatrix matrix(std::size_t rows, std::size_t cols) {
    CMatrix m(rows, cols);
    for (auto& e : m.entries()) e = cnormal();
    return m;
  }

  CMatrix hermitian(std::size_t n) {
    CMatrix a = matrix(n, n);
    CMatrix h(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) h(i, j) = 0.5 * (a(i, j) + std::conj(a(j, i)));
    }
    return h;
  }

  // Gram-Schmidt on a complex Gaussian matrix.
  CMatrix unitary(std::size_t n) {
    CMatrix a = matrix(n, n);
    for (std::size_t c = 0; c < n; ++c) {
      for (std::size_t k = 0; k < c; ++k) {
        Complex dot = 0.0;
        for (std::size_t r = 0; r < n; ++r) dot += std::conj(a(r, k)) * a(r, c);
        for (std::size_t r = 0; r < n; ++r) a(r, c) -= dot * a(r, k);
      }
      double norm = 0.0;
      for (std::size_t r = 0; r < n; ++r) norm += std::norm(a(r, c));
      norm = std::sqrt(norm);
      for (std::size_t r = 0; r < n; ++r) a(r, c) /= norm;
    }
    return a;
  }

 private:
  std::mt19937_64 eng_;
};

inline double rel_err(double a, double b) {
  const double s = std::max(std::abs(a), std::abs(b));
  return s == 0.0 ? 0.0 : std::abs(a - b) / s;
}

}  // namespace gaborkit::testing

#endif  // GABORKIT_TESTS_TEST_SUPPORT_HPP_
