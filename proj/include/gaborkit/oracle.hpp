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

// Brute-force check of the criterion engines: samples the atoms pi(lam) g on
// a uniform grid of [-T, T] and compresses the discrete frame operator to a
// subspace of Gaussian probes placed well inside the grid and the atom box.

#ifndef GABORKIT_ORACLE_HPP_
#define GABORKIT_ORACLE_HPP_

#include "gaborkit/lattice.hpp"
#include "gaborkit/windows.hpp"

namespace gaborkit {

struct OracleOptions {
  double T = 8.0;          // grid half-width
  double h = 1.0 / 64.0;   // grid step
  long M = 8;              // lattice index box [-M, M]^2
  bool halve_check = true; // repeat at h/2 and compare
  /// Probe region half-widths; <= 0 selects min(T/2, max(box_time/2, 1)) and
  /// max(box_freq/2, 1), the inner half of the grid and the atom box.
  double probe_time_half = 0.0;
  double probe_freq_half = 0.0;
};

struct OracleResult {
  double lower = 0.0;
  double upper = 0.0;
  double lower_half_step = 0.0;  // same at h/2 (equal to lower if not run)
  double upper_half_step = 0.0;
  double relative_change = 0.0;  // max relative change between h and h/2
  double atom_norm_error = 0.0;  // |h sum |g(t_i)|^2 - ||g||^2| / ||g||^2
  long probes = 0;
  long atoms = 0;
  OracleOptions options;
};

/// Throws Error(kResolutionInsufficient) when halving h moves a bound by more
/// than 10%, the sampled norm of g is off by more than 1%, or the atom box
/// reaches the grid's Nyquist frequency 1/(2h).
OracleResult oracle_frame_bounds(const Window& g, const Lattice& lat,
                                 const OracleOptions& opts = {});

}  // namespace gaborkit

#endif  // GABORKIT_ORACLE_HPP_
