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

#include "gaborkit/criteria.hpp"
#include "gaborkit/error.hpp"
#include "gaborkit/oracle.hpp"
#include "test_support.hpp"

using namespace gaborkit;
using gaborkit::testing::rel_err;

namespace {

bool throws_code(ErrorCode code, auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code() == code;
  }
  return false;
}

}  // namespace

TEST_CASE("orthonormal basis: indicator on the integer lattice") {
  OracleOptions o;
  o.M = 24;
  o.probe_freq_half = 1.0;
  const OracleResult r = oracle_frame_bounds(Window::char_interval(0, 1), Lattice(RectLattice{1, 1}), o);
  CHECK(std::abs(r.lower - 1.0) < 0.02);
  CHECK(std::abs(r.upper - 1.0) < 0.02);
  CHECK(r.atom_norm_error < 0.01);
  CHECK(r.relative_change < 0.1);
}

TEST_CASE("Gaussian on Z x Z/2 agrees with the Zak engine") {
  const OracleResult r = oracle_frame_bounds(Window::gaussian(), Lattice(RectLattice{1.0, 0.5}));
  const FrameDiagnosis zz = zz_frame_bounds(Window::gaussian(), {1.0, 0.5});
  CHECK(rel_err(r.lower, zz.lower_bound) < 0.10);
  CHECK(rel_err(r.upper, zz.upper_bound) < 0.10);
  // compression to a subspace can only shrink the spectral interval
  CHECK(r.lower >= zz.lower_bound * (1.0 - 0.02));
  CHECK(r.upper <= zz.upper_bound * (1.0 + 0.02));
}

TEST_CASE("single atom gives a rank-one operator") {
  OracleOptions o;
  o.M = 0;
  const OracleResult r = oracle_frame_bounds(Window::gaussian(), Lattice(RectLattice{1.0, 0.5}), o);
  CHECK(r.atoms == 1);
  CHECK(std::abs(r.upper - 1.0) < 1e-3);
  CHECK(r.lower < 1e-6);
}

TEST_CASE("upper bound is non-decreasing in the atom box") {
  OracleOptions o;
  o.probe_time_half = 2.0;
  o.probe_freq_half = 2.0;
  o.halve_check = false;
  const Lattice lat(RectLattice{1.0, 0.5});
  double prev_upper = 0.0;
  double prev_lower = 0.0;
  for (long m = 0; m <= 6; ++m) {
    o.M = m;
    const OracleResult r = oracle_frame_bounds(Window::gaussian(), lat, o);
    CHECK(r.upper >= prev_upper * (1.0 - 1e-12));
    CHECK(r.lower >= prev_lower * (1.0 - 1e-12));
    prev_upper = r.upper;
    prev_lower = r.lower;
  }
}

TEST_CASE("resolution errors") {
  const Lattice lat(RectLattice{1.0, 0.5});
  OracleOptions coarse;
  coarse.h = 0.25;
  CHECK(throws_code(ErrorCode::kResolutionInsufficient,
                    [&] { oracle_frame_bounds(Window::gaussian(), lat, coarse); }));
  OracleOptions narrow;
  narrow.T = 0.5;
  narrow.M = 2;
  CHECK(throws_code(ErrorCode::kResolutionInsufficient,
                    [&] { oracle_frame_bounds(Window::gaussian(), lat, narrow); }));
  OracleOptions bad;
  bad.h = 0.0;
  CHECK(throws_code(ErrorCode::kInvalidArgument,
                    [&] { oracle_frame_bounds(Window::gaussian(), lat, bad); }));
}
