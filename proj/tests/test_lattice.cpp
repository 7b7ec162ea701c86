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

#include <cmath>
#include <numbers>

#include "gaborkit/error.hpp"
#include "gaborkit/lattice.hpp"
#include "test_support.hpp"

using namespace gaborkit;
using gaborkit::testing::Gen;

namespace {

void check_basis(const Lattice& l, double a11, double a12, double a21, double a22) {
  CHECK(l.a11() == doctest::Approx(a11));
  CHECK(l.a12() == doctest::Approx(a12));
  CHECK(l.a21() == doctest::Approx(a21));
  CHECK(l.a22() == doctest::Approx(a22));
}

Lattice random_lattice(Gen& gen) {
  for (;;) {
    const double a = gen.uniform(-2, 2), b = gen.uniform(-2, 2);
    const double c = gen.uniform(-2, 2), d = gen.uniform(-2, 2);
    if (std::abs(a * d - b * c) > 0.1) return Lattice(a, b, c, d);
  }
}

}  // namespace

TEST_CASE("volume") {
  CHECK(volume(Lattice::integer()) == 1.0);
  CHECK(volume(Lattice(RectLattice{1.0, 0.5})) == 0.5);
  CHECK(volume(Lattice(1, 1, 0, 1)) == 1.0);
  CHECK(density(Lattice(RectLattice{1.0, 0.5})) == 2.0);
}

TEST_CASE("invalid bases") {
  try {
    Lattice(1, 2, 2, 4);
    FAIL("expected Singular");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kSingular);
  }
  try {
    static_cast<void>(Lattice(RectLattice{0.0, 1.0}));
    FAIL("expected InvalidArgument");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kInvalidArgument);
  }
  CHECK_THROWS_AS(Lattice(std::nan(""), 0, 0, 1), Error);
}

TEST_CASE("dual lattice") {
  check_basis(dual_lattice(Lattice::integer()), 1, 0, 0, 1);
  check_basis(dual_lattice(Lattice(RectLattice{2.0, 0.25})), 0.5, 0, 0, 4);
  check_basis(dual_lattice(Lattice(2, 1, 0, 1)), 0.5, 0, -0.5, 1);
}

TEST_CASE("adjoint lattice") {
  const Lattice adj = adjoint_lattice(Lattice(RectLattice{1.0, 0.5}));
  CHECK(adj.same_points(Lattice(RectLattice{2.0, 1.0})));
  CHECK(adjoint_lattice(Lattice::integer()).same_points(Lattice::integer()));
  CHECK(volume(adjoint_lattice(Lattice(RectLattice{1.0 / 3.0, 2.0}))) == doctest::Approx(1.5));
  CHECK_FALSE(adj.same_points(Lattice(RectLattice{1.0, 2.0})));
}

TEST_CASE("commutation phase") {
  const auto one = commutation_phase({1, 0}, {0, 1});
  CHECK(std::abs(one - Complex(1.0)) < 1e-15);
  const auto minus = commutation_phase({1, 0}, {0, 0.5});
  CHECK(std::abs(minus - Complex(-1.0)) < 1e-15);
  const RectLattice r{0.7, 1.3};
  const Lattice lat(r);
  const Lattice adj(RectLattice{1.0 / r.beta, 1.0 / r.alpha});
  for (auto lam : {lat.point(1, 0), lat.point(0, 1)}) {
    for (auto mu : {adj.point(1, 0), adj.point(0, 1)}) {
      CHECK(std::abs(commutation_phase(lam, mu) - Complex(1.0)) < 1e-12);
    }
  }
}

TEST_CASE("rational structure") {
  auto a = rational_structure({1.0, 0.5}, 64);
  CHECK(a.p == 1);
  CHECK(a.q == 2);
  CHECK(a.exact);
  auto b = rational_structure({2.0 / 3.0, 1.0}, 64);
  CHECK(b.p == 2);
  CHECK(b.q == 3);
  CHECK(b.exact);
  // Convergents of 1/sqrt(2) = [0; 1, 2, 2, 2, ...]: ..., 12/17, 29/41, 70/99.
  auto c = rational_structure({std::numbers::sqrt2 / 2.0, 1.0}, 50);
  CHECK(c.p == 29);
  CHECK(c.q == 41);
  CHECK_FALSE(c.exact);
  auto d = rational_structure({1.0, 1.0}, 1);
  CHECK(d.p == 1);
  CHECK(d.q == 1);
  CHECK(d.exact);
  CHECK_THROWS_AS(rational_structure({1.0, 1.0}, 0), Error);
  // alpha beta = 3/2 keeps p > q
  auto e = rational_structure({1.0, 1.5}, 64);
  CHECK(e.p == 3);
  CHECK(e.q == 2);
}

TEST_CASE("op norm and min singular value") {
  const Lattice l(RectLattice{3.0, 0.5});
  CHECK(l.op_norm() == doctest::Approx(3.0));
  CHECK(l.min_singular() == doctest::Approx(0.5));
  CHECK(l.as_rect().has_value());
  CHECK_FALSE(Lattice(1, 1, 0, 1).as_rect().has_value());
}

TEST_CASE("property: adjoint is an involution on point sets") {
  Gen gen(11);
  for (int draw = 0; draw < 200; ++draw) {
    const Lattice l = random_lattice(gen);
    REQUIRE(adjoint_lattice(adjoint_lattice(l)).same_points(l));
  }
}

TEST_CASE("property: vol(L) vol(adjoint) = 1") {
  Gen gen(12);
  for (int draw = 0; draw < 200; ++draw) {
    const Lattice l = random_lattice(gen);
    REQUIRE(std::abs(volume(l) * volume(adjoint_lattice(l)) - 1.0) <= 1e-12);
  }
}

TEST_CASE("property: commutation phase is 1 on L x adjoint and breaks off it") {
  Gen gen(13);
  for (int draw = 0; draw < 200; ++draw) {
    const Lattice l = random_lattice(gen);
    const Lattice adj = adjoint_lattice(l);
    const PhasePoint gens[2] = {l.point(1, 0), l.point(0, 1)};
    const PhasePoint agens[2] = {adj.point(1, 0), adj.point(0, 1)};
    for (const auto& lam : gens) {
      for (const auto& mu : agens) {
        REQUIRE(std::abs(commutation_phase(lam, mu) - Complex(1.0)) <= 1e-12);
      }
    }
    // Perturb an adjoint generator by 0.01 in a random direction.
    const double t = gen.uniform(0, 2 * std::numbers::pi);
    const PhasePoint mu{agens[0].x + 0.01 * std::cos(t), agens[0].xi + 0.01 * std::sin(t)};
    double worst = 0.0;
    for (const auto& lam : gens) worst = std::max(worst, std::abs(commutation_phase(lam, mu) - 1.0));
    REQUIRE(worst > 1e-6);
  }
}
