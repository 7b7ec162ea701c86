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

// Short-time Fourier transform by direct quadrature and residual checks for
// the covariance rules and the fundamental identity of Gabor analysis.

#ifndef GABORKIT_TF_CORE_HPP_
#define GABORKIT_TF_CORE_HPP_

#include "gaborkit/lattice.hpp"
#include "gaborkit/windows.hpp"

namespace gaborkit {

struct STFTSample {
  PhasePoint point;
  Complex value;
};

/// V_g f(x, xi) = int f(t) conj(g(t - x)) e^{-2 pi i xi t} dt.
Complex stft(const Window& f, const Window& g, PhasePoint z);

/// |V_g(pi(w) f)(z) - e^{-2 pi i (z.xi - w.xi) w.x} V_g f(z - w)|, both sides
/// by separate quadratures.
double check_covariance(const Window& f, const Window& g, PhasePoint w, PhasePoint z);

/// |V_{pi(w) g}(pi(w) f)(z) - e^{2 pi i (z.x w.xi - z.xi w.x)} V_g f(z)|.
double check_joint_covariance(const Window& f, const Window& g, PhasePoint w, PhasePoint z);

struct FigaResult {
  double residual = 0.0;    // |lhs - rhs|
  Complex lhs;              // sum over the lattice box
  Complex rhs;              // vol^{-1} sum over the adjoint lattice box
  double tail_bound = 0.0;  // envelope bound on both omitted tails
};

/// Both sides of
///   sum_lam V_g f(z + lam) conj(V_gamma h(z + lam))
///     = vol^{-1} sum_mu V_g gamma(mu) conj(V_f h(mu)) e^{2 pi i (mu.x z.xi - mu.xi z.x)}
/// over index boxes [-trunc, trunc]^2 of the lattice and its adjoint.
/// Throws Error(kTailNotSummable) if the envelope tail exceeds tail_tol.
FigaResult figa_residual(const Window& f, const Window& h, const Window& g, const Window& gamma,
                         const Lattice& lat, PhasePoint z, long trunc, double tail_tol = 1e-6);

}  // namespace gaborkit

#endif  // GABORKIT_TF_CORE_HPP_
