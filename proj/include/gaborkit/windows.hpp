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

// Window functions that can be evaluated exactly at any t, together with
// the metadata the criterion engines need: exact support, knots (points
// where the window is not smooth), L2 norm, and decay envelopes in time and
// frequency used to certify truncation tails.

#ifndef GABORKIT_WINDOWS_HPP_
#define GABORKIT_WINDOWS_HPP_

#include <complex>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gaborkit/lattice.hpp"

namespace gaborkit {

using Complex = std::complex<double>;

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  double length() const { return hi - lo; }
  bool empty() const { return !(hi > lo); }
};

enum class WindowKind {
  kGaussian,      // 2^{1/4} e^{-pi t^2}, unit L2 norm
  kHermite1,      // t e^{-pi t^2}
  kHat,           // (1 - |t|)_+
  kBSpline,       // centered cardinal B-spline of order n, support [-n/2, n/2]
  kCharInterval,  // indicator of [a, b)
  kTwoSidedExp,   // e^{-rate |t|}
  kSampled,       // linear interpolation of uniform samples, zero outside
  kCombination,   // finite linear combination of other windows
};

class Window {
 public:
  static Window gaussian();
  static Window hermite1();
  static Window hat();
  static Window bspline(int order);
  static Window char_interval(double a, double b);
  static Window two_sided_exp(double rate);
  static Window sampled(double t0, double step, std::vector<double> values);
  static Window combination(std::vector<std::pair<Complex, Window>> terms);

  /// c * (*this).
  Window scaled(Complex c) const;

  WindowKind kind() const;
  /// Spec string understood by parse_window(), e.g. "char:0,1" or "bspline:3".
  std::string describe() const;

  Complex eval(double t) const;
  Complex operator()(double t) const { return eval(t); }
  bool is_real() const;

  /// Exact support when the window is compactly supported.
  std::optional<Interval> support() const;
  /// Interval outside of which |g| < 1e-18 * sup|g| (exact support if compact).
  Interval effective_support() const;
  /// Points where the window or its derivative may jump.
  std::vector<double> knots() const;

  double l2_norm() const;

  // -- envelopes ----------------------------------------------------------
  /// phi(r) >= sup_{|t| >= r} |g(t)|, non-increasing.
  double time_profile(double r) const;
  /// Upper bound for ||g||_1.
  double time_l1() const;
  /// psi(r) >= sup_{|w| >= r} |g^(w)|, non-increasing.
  double freq_profile(double r) const;
  /// Upper bound for ||g^||_1 (may be +inf).
  double freq_l1() const;
  /// Polynomial decay order of psi (+inf for faster than any polynomial).
  double freq_decay_order() const;

  /// Sampled representation of the parts of a Sampled window.
  const std::vector<double>* samples() const;
  double sample_t0() const;
  double sample_step() const;

  struct Impl;

 private:
  explicit Window(std::shared_ptr<const Impl> impl);
  std::shared_ptr<const Impl> impl_;
};

/// Envelope for |V_g f(z)| as a function of |z|, built from the time and
/// frequency profiles of f and g.
struct DecayEnvelope {
  enum class Kind { kPolynomial, kExponential, kCompact };
  Kind kind = Kind::kExponential;
  double order = 0.0;  // polynomial decay order, +inf for kExponential
  double cap = 0.0;    // ||f|| ||g||
  Window f = Window::gaussian();
  Window g = Window::gaussian();

  /// Bound for sup_{|z| >= r} |V_g f(z)|.
  double operator()(double r) const;
};

DecayEnvelope stft_envelope(const Window& f, const Window& g);
inline DecayEnvelope decay_envelope(const Window& g) { return stft_envelope(g, g); }

/// Checks |V_g g(z)| <= envelope(|z|) on a polar grid of `n_radii` radii up to
/// `r_max` and `n_angles` angles.
bool verify_envelope(const Window& g, double r_max = 6.0, int n_radii = 12, int n_angles = 8);

/// sum_k ess sup_{x in [0,1]} |g(x + k)| (Wiener amalgam norm), from dense
/// sampling plus one-sided limits at knots and cell edges.
double wiener_amalgam_norm(const Window& g);

/// <f, g> = int f conj(g). Exact zero for disjoint compact supports.
Complex inner_product(const Window& f, const Window& g);

/// <pi(zf) f, pi(zg) g> where pi(x, xi) h(t) = e^{2 pi i xi t} h(t - x).
Complex shifted_inner_product(const Window& f, PhasePoint zf, const Window& g, PhasePoint zg);

/// Upper bound on the sum of env(|A k + shift|) over lattice indices with
/// max(|k1|, |k2|) > n. Returns +inf when the decay order does not exceed 2.
double lattice_tail_bound(const DecayEnvelope& env, const Lattice& lat, long n,
                          double shift_norm = 0.0);

/// Same for a product of two envelopes evaluated at the same point.
double lattice_tail_bound_product(const DecayEnvelope& e1, const DecayEnvelope& e2,
                                  const Lattice& lat, long n, double shift_norm = 0.0);

/// Parses "gaussian", "hermite1", "hat", "bspline:N", "char:a,b", "exp:rate",
/// "csv:PATH".
Window parse_window(const std::string& spec);

/// CSV with header "t,value" and a uniform t step (to 1e-9).
Window load_window_csv(const std::string& path);
void save_window_csv(const Window& w, const std::string& path);

}  // namespace gaborkit

#endif  // GABORKIT_WINDOWS_HPP_
