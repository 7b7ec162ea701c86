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

// Adaptive Gauss-Legendre quadrature on piecewise-smooth integrands.

#ifndef GABORKIT_QUADRATURE_HPP_
#define GABORKIT_QUADRATURE_HPP_

#include <complex>
#include <functional>
#include <span>
#include <vector>

namespace gaborkit {

struct QuadratureOptions {
  double abs_tol = 1e-11;
  /// Oscillation frequency of the integrand (cycles per unit). Initial panels
  /// are no longer than two periods.
  double frequency = 0.0;
  int max_depth = 40;
};

/// Integral of `f` over [breaks.front(), breaks.back()]. `breaks` must be
/// sorted; the integrand is assumed smooth between consecutive breakpoints.
/// Each panel is integrated with 32-point Gauss-Legendre and accepted when
/// the embedded 16-point rule agrees; otherwise it is bisected.
/// Throws Error(kQuadratureFailure) if a panel cannot reach its share of the
/// tolerance within max_depth bisections.
std::complex<double> integrate(const std::function<std::complex<double>(double)>& f,
                               std::span<const double> breaks,
                               const QuadratureOptions& opts = {});

/// Sorted, de-duplicated breakpoints: [lo, hi] plus every knot strictly inside.
std::vector<double> make_breaks(double lo, double hi, std::vector<double> knots);

}  // namespace gaborkit

#endif  // GABORKIT_QUADRATURE_HPP_
