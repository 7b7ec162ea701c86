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

// Zak transform Z_a f(x, w) = sum_k f(x - a k) e^{2 pi i a k w}, evaluated
// from a truncated series whose omitted tail is bounded by the window's time
// envelope.

#ifndef GABORKIT_ZAK_HPP_
#define GABORKIT_ZAK_HPP_

#include "gaborkit/lattice.hpp"
#include "gaborkit/windows.hpp"

namespace gaborkit {

struct ZakValue {
  double alpha = 1.0;
  double x = 0.0;
  double xi = 0.0;
  Complex value;
  double tail_bound = 0.0;
  long k_min = 0;  // summed terms k_min..k_max
  long k_max = -1;
};

/// Reusable evaluator for one window and one parameter a > 0.
class ZakEvaluator {
 public:
  ZakEvaluator(Window f, double alpha);

  ZakValue operator()(double x, double xi) const;
  Complex value(double x, double xi) const;

  double alpha() const { return alpha_; }
  /// Bound on the omitted part of the series (0 for compact support).
  double tail_bound() const { return tail_; }
  const Window& window() const { return f_; }

 private:
  Window f_;
  double alpha_;
  Interval range_;  // t-range whose samples are summed
  double tail_;
};

/// Omitted tail is below 1e-12 by construction.
ZakValue zak(const Window& f, double alpha, double x, double xi);

struct QuasiperiodicityResidual {
  double time_shift = 0.0;       // |Z(x + a, w) - e^{2 pi i a w} Z(x, w)|
  double frequency_shift = 0.0;  // |Z(x, w + 1/a) - Z(x, w)|
};

QuasiperiodicityResidual check_quasiperiodicity(const Window& f, double alpha, double x,
                                                double xi);

/// |Z_{1/b} g(x + a j, b w) - e^{2 pi i p l w} Z_{1/b} g(x + (p / (q b)) r, b w)| with
/// j = q l + r, 0 <= r < q, for a rational lattice a b = p/q.
double zz_factorization_residual(const Window& g, const RectLattice& r,
                                 const RationalStructure& rs, double x, double xi, long j);

}  // namespace gaborkit

#endif  // GABORKIT_ZAK_HPP_
