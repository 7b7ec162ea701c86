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

// Frame diagnosis engines. Every engine returns a FrameDiagnosis with bound
// estimates, the resolution it used, and caveats describing what the numbers
// do and do not show. Conditions that hold "for almost every x" are sampled
// on grids with local refinement; nothing here claims a proof.

#ifndef GABORKIT_CRITERIA_HPP_
#define GABORKIT_CRITERIA_HPP_

#include <string>
#include <utility>
#include <vector>

#include "gaborkit/lattice.hpp"
#include "gaborkit/linalg.hpp"
#include "gaborkit/windows.hpp"

namespace gaborkit {

enum class Verdict { kFrame, kNotFrame, kRieszSequence, kNotRiesz, kTight, kInconclusive };

const char* verdict_name(Verdict v) noexcept;

struct FrameDiagnosis {
  Verdict verdict = Verdict::kInconclusive;
  double lower_bound = 0.0;
  double upper_bound = 0.0;
  std::string criterion;
  /// Resolution record (truncation, grid sizes, p, q, ...), in insertion order.
  std::vector<std::pair<std::string, double>> params;
  std::vector<std::string> caveats;
  /// Minimum after each refinement step (grid levels, then truncations).
  std::vector<double> min_trace;

  double param(const std::string& key, double fallback = 0.0) const;
};

struct Tolerances {
  double frame_tol = 1e-8;     // on lower_bound / ||g||^2
  double tight_tol = 1e-6;     // relative spread
  double not_frame_rel = 1e-6; // minimum must fall below this * upper_bound
};

struct GridSpec {
  long nx = 32;
  long nxi = 32;
  int refine_levels = 3;
  int refine_factor = 4;
};

inline constexpr const char* kGridCaveat = "grid-sampled a.e. condition";
inline constexpr const char* kInterlacingCaveat =
    "truncated section: lower bound can only decrease with larger truncation";

// -- density -----------------------------------------------------------------

enum class DensityClass {
  kOkFrameSide,
  kOkRieszSide,
  kViolatesFrameNecessity,
  kViolatesRieszNecessity,
};

const char* density_class_name(DensityClass c) noexcept;

struct DensityGuard {
  DensityClass frame_side = DensityClass::kOkFrameSide;
  DensityClass riesz_side = DensityClass::kOkRieszSide;
  double volume = 1.0;

  bool frame_possible() const { return frame_side == DensityClass::kOkFrameSide; }
  bool riesz_possible() const { return riesz_side == DensityClass::kOkRieszSide; }
};

/// vol <= 1 is necessary for a frame, vol >= 1 for a Riesz sequence; vol
/// within 1e-12 of 1 counts as both.
DensityGuard density_guard(const Lattice& lat);

// -- fiber matrices ------------------------------------------------------------

/// Q(x, xi)_{r,s} = Z_{1/b} g(x + (p/(b q)) r, b xi + b s / p), q x p.
CMatrix zz_matrix(const Window& g, const RectLattice& r, const RationalStructure& rs, double x,
                  double xi);

/// P(x)_{j,k} = conj(g(x + a j - k / b)), j, k in [-trunc, trunc].
CMatrix pre_gramian(const Window& g, const RectLattice& r, double x, long trunc);

/// R(x)_{k,l} = sum_j g(x + a j - k/b) conj(g(x + a j - l/b)), k, l in
/// [-trunc, trunc], with j running over every index where a term is nonzero.
CMatrix ron_shen_matrix(const Window& g, const RectLattice& r, double x, long trunc);

/// Gramian <pi(nu) g, pi(mu) g> over mu, nu in lat with index box [-trunc, trunc]^2.
CMatrix gramian_section(const Window& g, const Lattice& lat, long trunc);

// -- engines -----------------------------------------------------------------

/// Singular values of Q over the cell [0, a) x [0, 1/p). Bounds are reported
/// as frame bounds, sigma^2 / (p b).
FrameDiagnosis zz_frame_bounds(const Window& g, const RectLattice& r, const GridSpec& grid = {},
                               long max_q = 64, const Tolerances& tol = {});

/// Spectrum of R(x) over x in [0, a); bounds are lambda / b.
FrameDiagnosis ron_shen_bounds(const Window& g, const RectLattice& r, long nx = 32,
                               long trunc = 16, const Tolerances& tol = {});

/// Single-point criterion for irrational a b.
FrameDiagnosis ron_shen_single_point(const Window& g, const RectLattice& r, double x0 = 0.0,
                                     long trunc = 16, long max_q = 1000,
                                     const Tolerances& tol = {});

/// vol^{-1} times the spectrum of the Gramian of g over the adjoint lattice.
FrameDiagnosis gramian_duality_bounds(const Window& g, const Lattice& lat, long trunc = 12,
                                      const Tolerances& tol = {});

/// Spectrum of the Gramian of g over lat itself.
FrameDiagnosis riesz_sequence_bounds(const Window& g, const Lattice& lat, long trunc = 12,
                                     const Tolerances& tol = {});

/// Off-diagonal size of the adjoint Gramian.
FrameDiagnosis tight_frame_check(const Window& g, const Lattice& lat, long trunc = 12,
                                 const Tolerances& tol = {});

/// Sufficient condition: s = sum_{mu != 0} |V_g g(mu)| / ||g||^2 < 1.
FrameDiagnosis schur_sufficient_bound(const Window& g, const Lattice& lat, long trunc = 8,
                                      const Tolerances& tol = {});

/// Compactly supported g with a <= L and b <= 1/L: the frame operator is
/// multiplication by b^{-1} m(x), m(x) = sum_k |g(x - a k)|^2.
FrameDiagnosis painless_check(const Window& g, const RectLattice& r, long nx = 4096,
                              const Tolerances& tol = {});

/// True when painless_check's support and step preconditions hold.
bool painless_applicable(const Window& g, const RectLattice& r);

/// gamma = b g / m as a sampled window on the support of g.
Window painless_dual(const Window& g, const RectLattice& r, double step = 1.0 / 16384.0);

/// max over mu in the adjoint box of |<gamma, pi(mu) g> - vol delta_{mu,0}|.
double wexler_raz_residual(const Window& g, const Window& gamma, const Lattice& lat,
                           long trunc = 8);

/// max over x on a grid of [0, a) and |k| <= k_range of
/// |sum_j gamma(x + a j) conj(g(x + a j - k/b)) - b delta_{k,0}|.
double janssen_residual(const Window& g, const Window& gamma, const RectLattice& r,
                        long nx = 256, long k_range = 8);

}  // namespace gaborkit

#endif  // GABORKIT_CRITERIA_HPP_
