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

#include "gaborkit/windows.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <numbers>
#include <sstream>

#include "gaborkit/error.hpp"
#include "gaborkit/quadrature.hpp"

namespace gaborkit {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();
const double kGaussNorm = std::pow(2.0, 0.25);
constexpr int kMaxBSplineOrder = 20;

// Cardinal B-spline M_n supported on [0, n].
double cardinal_bspline(int n, double x) {
  if (x < 0.0 || x >= n) return 0.0;
  double m[kMaxBSplineOrder + 1];
  for (int j = 0; j < n; ++j) {
    const double y = x - j;
    m[j] = (y >= 0.0 && y < 1.0) ? 1.0 : 0.0;
  }
  for (int k = 2; k <= n; ++k) {
    for (int j = 0; j + k <= n; ++j) {
      const double y = x - j;
      m[j] = (y * m[j] + (k - y) * m[j + 1]) / (k - 1);
    }
  }
  return m[0];
}

double hermite1_value(double t) { return t * std::exp(-kPi * t * t); }

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

struct Window::Impl {
  WindowKind kind = WindowKind::kGaussian;
  double a = 0.0;  // char interval start / exp rate / sample t0
  double b = 0.0;  // char interval end / sample step
  int order = 0;
  std::vector<double> values;
  std::vector<std::pair<Complex, Window>> terms;
  double norm = 0.0;
  Interval effective{};
  // Sampled envelope data
  double jump = 0.0;
  double slope_variation = 0.0;
};

Window::Window(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

namespace {

Interval compute_effective(const Window& w) {
  if (auto s = w.support()) return *s;
  const double top = w.time_profile(0.0);
  double r = 1.0;
  while (w.time_profile(r) > 1e-18 * top && r < 1e6) r *= 2.0;
  double lo = 0.0;
  double hi = r;
  for (int i = 0; i < 60; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (w.time_profile(mid) > 1e-18 * top) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return {-hi, hi};
}

}  // namespace

Window Window::gaussian() {
  auto impl = std::make_shared<Impl>();
  impl->kind = WindowKind::kGaussian;
  const double r = std::sqrt(18.0 * std::log(10.0) / kPi);
  impl->effective = {-r, r};
  impl->norm = 1.0;
  return Window(std::move(impl));
}

Window Window::hermite1() {
  auto impl = std::make_shared<Impl>();
  impl->kind = WindowKind::kHermite1;
  Window w(impl);
  impl->effective = compute_effective(w);
  impl->norm = 1.0 / std::sqrt(4.0 * kPi * std::sqrt(2.0));
  return Window(std::move(impl));
}

Window Window::hat() {
  auto impl = std::make_shared<Impl>();
  impl->kind = WindowKind::kHat;
  impl->effective = {-1.0, 1.0};
  impl->norm = std::sqrt(2.0 / 3.0);
  return Window(std::move(impl));
}

Window Window::bspline(int order) {
  if (order < 1 || order > kMaxBSplineOrder) {
    throw Error(ErrorCode::kInvalidArgument, "bspline: order must be in [1, 20]");
  }
  auto impl = std::make_shared<Impl>();
  impl->kind = WindowKind::kBSpline;
  impl->order = order;
  impl->effective = {-0.5 * order, 0.5 * order};
  // ||B_n||^2 = M_{2n}(n)
  const double norm2 = 2 * order <= kMaxBSplineOrder
                           ? cardinal_bspline(2 * order, order)
                           : std::numeric_limits<double>::quiet_NaN();
  Window w(impl);
  if (std::isnan(norm2)) {
    impl->norm = std::sqrt(inner_product(w, w).real());
  return Window(std::move(impl));
  }
  impl->norm = std::sqrt(norm2);
  return Window(std::move(impl));
}

Window Window::char_interval(double a, double b) {
  if (!(b > a) || !std::isfinite(a) || !std::isfinite(b)) {
    throw Error(ErrorCode::kInvalidArgument, "char_interval: need finite a < b");
  }
  auto impl = std::make_shared<Impl>();
  impl->kind = WindowKind::kCharInterval;
  impl->a = a;
  impl->b = b;
  impl->effective = {a, b};
  impl->norm = std::sqrt(b - a);
  return Window(std::move(impl));
}

Window Window::two_sided_exp(double rate) {
  if (!(rate > 0.0) || !std::isfinite(rate)) {
    throw Error(ErrorCode::kInvalidArgument, "two_sided_exp: rate must be positive");
  }
  auto impl = std::make_shared<Impl>();
  impl->kind = WindowKind::kTwoSidedExp;
  impl->a = rate;
  const double r = 18.0 * std::log(10.0) / rate;
  impl->effective = {-r, r};
  impl->norm = 1.0 / std::sqrt(rate);
  return Window(std::move(impl));
}

Window Window::sampled(double t0, double step, std::vector<double> values) {
  if (!(step > 0.0) || !std::isfinite(t0) || values.size() < 2) {
    throw Error(ErrorCode::kInvalidArgument, "sampled: need step > 0 and at least two samples");
  }
  for (double v : values) {
    if (!std::isfinite(v)) throw Error(ErrorCode::kNonFinite, "sampled: non-finite sample");
  }
  auto impl = std::make_shared<Impl>();
  impl->kind = WindowKind::kSampled;
  impl->a = t0;
  impl->b = step;
  const std::size_t n = values.size();
  impl->effective = {t0, t0 + step * static_cast<double>(n - 1)};
  impl->jump = std::abs(values.front()) + std::abs(values.back());
  double prev_slope = 0.0;
  double variation = 0.0;
  double norm2 = 0.0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double slope = (values[i + 1] - values[i]) / step;
    variation += std::abs(slope - prev_slope);
    prev_slope = slope;
    norm2 += step * (values[i] * values[i] + values[i] * values[i + 1] +
                     values[i + 1] * values[i + 1]) / 3.0;
  }
  variation += std::abs(prev_slope);
  impl->slope_variation = variation;
  impl->values = std::move(values);
  if (!(norm2 > 0.0)) throw Error(ErrorCode::kInvalidArgument, "sampled: window is zero");
  impl->norm = std::sqrt(norm2);
  return Window(std::move(impl));
}

Window Window::combination(std::vector<std::pair<Complex, Window>> terms) {
  if (terms.empty()) throw Error(ErrorCode::kInvalidArgument, "combination: no terms");
  auto impl = std::make_shared<Impl>();
  impl->kind = WindowKind::kCombination;
  double lo = kInf;
  double hi = -kInf;
  for (const auto& [c, w] : terms) {
    const Interval e = w.effective_support();
    lo = std::min(lo, e.lo);
    hi = std::max(hi, e.hi);
  }
  impl->effective = {lo, hi};
  impl->terms = std::move(terms);
  Window w(impl);
  const double norm2 = inner_product(w, w).real();
  if (!(norm2 > 0.0)) throw Error(ErrorCode::kInvalidArgument, "combination: window is zero");
  impl->norm = std::sqrt(norm2);
  return Window(std::move(impl));
}

Window Window::scaled(Complex c) const { return combination({{c, *this}}); }

WindowKind Window::kind() const { return impl_->kind; }

std::string Window::describe() const {
  const Impl& w = *impl_;
  switch (w.kind) {
    case WindowKind::kGaussian:
      return "gaussian";
    case WindowKind::kHermite1:
      return "hermite1";
    case WindowKind::kHat:
      return "hat";
    case WindowKind::kBSpline:
      return "bspline:" + std::to_string(w.order);
    case WindowKind::kCharInterval:
      return "char:" + fmt17(w.a) + "," + fmt17(w.b);
    case WindowKind::kTwoSidedExp:
      return "exp:" + fmt17(w.a);
    case WindowKind::kSampled:
      return "sampled(n=" + std::to_string(w.values.size()) + ",t0=" + fmt17(w.a) +
             ",step=" + fmt17(w.b) + ")";
    case WindowKind::kCombination: {
      std::string s = "combination(";
      for (std::size_t i = 0; i < w.terms.size(); ++i) {
        if (i) s += " + ";
        const Complex c = w.terms[i].first;
        s += "(" + fmt17(c.real()) + (c.imag() != 0.0 ? "+" + fmt17(c.imag()) + "i" : "") +
             ")*" + w.terms[i].second.describe();
      }
      return s + ")";
    }
  }
  return "unknown";
}

Complex Window::eval(double t) const {
  const Impl& w = *impl_;
  switch (w.kind) {
    case WindowKind::kGaussian:
      return kGaussNorm * std::exp(-kPi * t * t);
    case WindowKind::kHermite1:
      return hermite1_value(t);
    case WindowKind::kHat:
      return std::max(0.0, 1.0 - std::abs(t));
    case WindowKind::kBSpline:
      return cardinal_bspline(w.order, t + 0.5 * w.order);
    case WindowKind::kCharInterval:
      return (t >= w.a && t < w.b) ? 1.0 : 0.0;
    case WindowKind::kTwoSidedExp:
      return std::exp(-w.a * std::abs(t));
    case WindowKind::kSampled: {
      const double u = (t - w.a) / w.b;
      const double last = static_cast<double>(w.values.size() - 1);
      if (!(u >= 0.0) || u > last) return 0.0;
      const std::size_t i = std::min(static_cast<std::size_t>(u), w.values.size() - 2);
      const double frac = u - static_cast<double>(i);
      return w.values[i] + frac * (w.values[i + 1] - w.values[i]);
    }
    case WindowKind::kCombination: {
      Complex s = 0.0;
      for (const auto& [c, g] : w.terms) s += c * g.eval(t);
      return s;
    }
  }
  return 0.0;
}

bool Window::is_real() const {
  if (impl_->kind != WindowKind::kCombination) return true;
  return std::all_of(impl_->terms.begin(), impl_->terms.end(), [](const auto& term) {
    return term.first.imag() == 0.0 && term.second.is_real();
  });
}

std::optional<Interval> Window::support() const {
  const Impl& w = *impl_;
  switch (w.kind) {
    case WindowKind::kHat:
    case WindowKind::kBSpline:
    case WindowKind::kCharInterval:
    case WindowKind::kSampled:
      return w.effective;
    case WindowKind::kCombination: {
      for (const auto& term : w.terms) {
        if (!term.second.support()) return std::nullopt;
      }
      return w.effective;
    }
    default:
      return std::nullopt;
  }
}

Interval Window::effective_support() const { return impl_->effective; }

std::vector<double> Window::knots() const {
  const Impl& w = *impl_;
  switch (w.kind) {
    case WindowKind::kHat:
      return {-1.0, 0.0, 1.0};
    case WindowKind::kBSpline: {
      std::vector<double> k;
      for (int j = 0; j <= w.order; ++j) k.push_back(-0.5 * w.order + j);
      return k;
    }
    case WindowKind::kCharInterval:
      return {w.a, w.b};
    case WindowKind::kTwoSidedExp:
      return {0.0};
    case WindowKind::kSampled: {
      std::vector<double> k(w.values.size());
      for (std::size_t i = 0; i < k.size(); ++i) k[i] = w.a + w.b * static_cast<double>(i);
      return k;
    }
    case WindowKind::kCombination: {
      std::vector<double> k;
      for (const auto& term : w.terms) {
        const auto sub = term.second.knots();
        k.insert(k.end(), sub.begin(), sub.end());
      }
      std::sort(k.begin(), k.end());
      k.erase(std::unique(k.begin(), k.end()), k.end());
      return k;
    }
    default:
      return {};
  }
}

double Window::l2_norm() const { return impl_->norm; }

double Window::time_profile(double r) const {
  const Impl& w = *impl_;
  r = std::max(r, 0.0);
  switch (w.kind) {
    case WindowKind::kGaussian:
      return kGaussNorm * std::exp(-kPi * r * r);
    case WindowKind::kHermite1: {
      const double peak = 1.0 / std::sqrt(2.0 * kPi);
      return hermite1_value(std::max(r, peak));
    }
    case WindowKind::kHat:
      return std::max(0.0, 1.0 - r);
    case WindowKind::kBSpline:
      return cardinal_bspline(w.order, r + 0.5 * w.order);
    case WindowKind::kCharInterval:
      return r <= std::max(std::abs(w.a), std::abs(w.b)) ? 1.0 : 0.0;
    case WindowKind::kTwoSidedExp:
      return std::exp(-w.a * r);
    case WindowKind::kSampled: {
      double best = 0.0;
      for (std::size_t i = 0; i < w.values.size(); ++i) {
        const double t = w.a + w.b * static_cast<double>(i);
        if (std::abs(t) >= r - w.b) best = std::max(best, std::abs(w.values[i]));
      }
      return best;
    }
    case WindowKind::kCombination: {
      double s = 0.0;
      for (const auto& [c, g] : w.terms) s += std::abs(c) * g.time_profile(r);
      return s;
    }
  }
  return kInf;
}

double Window::time_l1() const {
  const Impl& w = *impl_;
  switch (w.kind) {
    case WindowKind::kGaussian:
      return kGaussNorm;
    case WindowKind::kHermite1:
      return 1.0 / kPi;
    case WindowKind::kHat:
    case WindowKind::kBSpline:
      return 1.0;
    case WindowKind::kCharInterval:
      return w.b - w.a;
    case WindowKind::kTwoSidedExp:
      return 2.0 / w.a;
    case WindowKind::kSampled: {
      double s = 0.0;
      for (double v : w.values) s += std::abs(v);
      return s * w.b;
    }
    case WindowKind::kCombination: {
      double s = 0.0;
      for (const auto& [c, g] : w.terms) s += std::abs(c) * g.time_l1();
      return s;
    }
  }
  return kInf;
}

double Window::freq_profile(double r) const {
  const Impl& w = *impl_;
  r = std::max(r, 0.0);
  switch (w.kind) {
    case WindowKind::kGaussian:
    case WindowKind::kHermite1:
      // Both are eigenfunctions of the Fourier transform up to a unit factor.
      return time_profile(r);
    case WindowKind::kHat:
      return r > 0.0 ? std::min(1.0, 1.0 / (kPi * kPi * r * r)) : 1.0;
    case WindowKind::kBSpline:
      return r > 0.0 ? std::min(1.0, std::pow(kPi * r, -w.order)) : 1.0;
    case WindowKind::kCharInterval:
      return r > 0.0 ? std::min(w.b - w.a, 1.0 / (kPi * r)) : w.b - w.a;
    case WindowKind::kTwoSidedExp:
      return 2.0 * w.a / (w.a * w.a + 4.0 * kPi * kPi * r * r);
    case WindowKind::kSampled: {
      const double l1 = time_l1();
      if (r == 0.0) return l1;
      return std::min(l1, w.jump / (2.0 * kPi * r) + w.slope_variation / (4.0 * kPi * kPi * r * r));
    }
    case WindowKind::kCombination: {
      double s = 0.0;
      for (const auto& [c, g] : w.terms) s += std::abs(c) * g.freq_profile(r);
      return s;
    }
  }
  return kInf;
}

double Window::freq_l1() const {
  const Impl& w = *impl_;
  switch (w.kind) {
    case WindowKind::kGaussian:
      return kGaussNorm;
    case WindowKind::kHermite1:
      return 1.0 / kPi;
    case WindowKind::kHat:
      return 1.0;
    case WindowKind::kBSpline:
      return w.order >= 2 ? (2.0 / kPi) * w.order / (w.order - 1.0) : kInf;
    case WindowKind::kCharInterval:
      return kInf;
    case WindowKind::kTwoSidedExp:
      return 1.0;
    case WindowKind::kSampled:
      if (w.jump > 0.0) return kInf;
      return (2.0 / kPi) * std::sqrt(time_l1() * w.slope_variation);
    case WindowKind::kCombination: {
      double s = 0.0;
      for (const auto& [c, g] : w.terms) s += std::abs(c) * g.freq_l1();
      return s;
    }
  }
  return kInf;
}

double Window::freq_decay_order() const {
  const Impl& w = *impl_;
  switch (w.kind) {
    case WindowKind::kGaussian:
    case WindowKind::kHermite1:
      return kInf;
    case WindowKind::kHat:
    case WindowKind::kTwoSidedExp:
      return 2.0;
    case WindowKind::kBSpline:
      return w.order;
    case WindowKind::kCharInterval:
      return 1.0;
    case WindowKind::kSampled:
      return w.jump > 0.0 ? 1.0 : 2.0;
    case WindowKind::kCombination: {
      double s = kInf;
      for (const auto& term : w.terms) s = std::min(s, term.second.freq_decay_order());
      return s;
    }
  }
  return 0.0;
}

const std::vector<double>* Window::samples() const {
  return impl_->kind == WindowKind::kSampled ? &impl_->values : nullptr;
}
double Window::sample_t0() const { return impl_->a; }
double Window::sample_step() const { return impl_->b; }

// ---------------------------------------------------------------------------

double DecayEnvelope::operator()(double r) const {
  r = std::max(r, 0.0);
  const double s = r / std::numbers::sqrt2;
  const double time_part =
      f.time_profile(0.5 * s) * g.time_l1() + g.time_profile(0.5 * s) * f.time_l1();
  double freq_part = kInf;
  if (std::isfinite(f.freq_l1()) && std::isfinite(g.freq_l1())) {
    freq_part = f.freq_profile(0.5 * s) * g.freq_l1() + g.freq_profile(0.5 * s) * f.freq_l1();
  }
  return std::min(cap, std::max(time_part, freq_part));
}

DecayEnvelope stft_envelope(const Window& f, const Window& g) {
  DecayEnvelope e;
  e.f = f;
  e.g = g;
  e.cap = f.l2_norm() * g.l2_norm();
  if (std::isfinite(f.freq_l1()) && std::isfinite(g.freq_l1())) {
    e.order = std::min(f.freq_decay_order(), g.freq_decay_order());
  } else {
    e.order = 0.0;
  }
  e.kind = std::isinf(e.order) ? DecayEnvelope::Kind::kExponential
                               : DecayEnvelope::Kind::kPolynomial;
  return e;
}

bool verify_envelope(const Window& g, double r_max, int n_radii, int n_angles) {
  const DecayEnvelope env = decay_envelope(g);
  for (int i = 0; i <= n_radii; ++i) {
    const double r = r_max * i / n_radii;
    for (int j = 0; j < n_angles; ++j) {
      const double th = 2.0 * kPi * j / n_angles;
      const PhasePoint z{r * std::cos(th), r * std::sin(th)};
      const double v = std::abs(shifted_inner_product(g, {}, g, z));
      if (v > env(r) * (1.0 + 1e-9) + 1e-11) return false;
    }
  }
  return true;
}

double wiener_amalgam_norm(const Window& g) {
  const Interval e = g.effective_support();
  const long k0 = static_cast<long>(std::floor(e.lo)) - 1;
  const long k1 = static_cast<long>(std::ceil(e.hi)) + 1;
  const auto knots = g.knots();
  double total = 0.0;
  for (long k = k0; k <= k1; ++k) {
    const double lo = static_cast<double>(k);
    const double hi = lo + 1.0;
    // essential sup on the cell: interior samples and one-sided limits
    double best = std::max(std::abs(g.eval(std::nextafter(lo, kInf))),
                           std::abs(g.eval(std::nextafter(hi, -kInf))));
    for (int i = 1; i < 512; ++i) best = std::max(best, std::abs(g.eval(lo + i / 512.0)));
    for (double t : knots) {
      if (t > lo && t < hi) {
        best = std::max(best, std::abs(g.eval(std::nextafter(t, kInf))));
        best = std::max(best, std::abs(g.eval(std::nextafter(t, -kInf))));
      }
    }
    total += best;
  }
  return total;
}

Complex shifted_inner_product(const Window& f, PhasePoint zf, const Window& g, PhasePoint zg) {
  const Interval ef = f.effective_support();
  const Interval eg = g.effective_support();
  const double lo = std::max(ef.lo + zf.x, eg.lo + zg.x);
  const double hi = std::min(ef.hi + zf.x, eg.hi + zg.x);
  if (!(hi > lo)) return 0.0;
  std::vector<double> knots;
  for (double k : f.knots()) knots.push_back(k + zf.x);
  for (double k : g.knots()) knots.push_back(k + zg.x);
  const auto breaks = make_breaks(lo, hi, std::move(knots));
  const double nu = zf.xi - zg.xi;
  const auto integrand = [&](double t) -> Complex {
    const Complex v = f.eval(t - zf.x) * std::conj(g.eval(t - zg.x));
    if (nu == 0.0) return v;
    return v * std::polar(1.0, 2.0 * kPi * nu * t);
  };
  QuadratureOptions opts;
  opts.abs_tol = 1e-11 * std::max(1.0, f.l2_norm() * g.l2_norm());
  opts.frequency = std::abs(nu);
  return integrate(integrand, breaks, opts);
}

Complex inner_product(const Window& f, const Window& g) {
  return shifted_inner_product(f, {}, g, {});
}

double lattice_tail_bound(const DecayEnvelope& env, const Lattice& lat, long n,
                          double shift_norm) {
  if (!(env.order > 2.0)) return kInf;
  const double sigma = lat.min_singular();
  double sum = 0.0;
  long m = n + 1;
  for (; m <= n + 200000; ++m) {
    const double term = 8.0 * m * env(std::max(0.0, sigma * m - shift_norm));
    sum += term;
    if (term < 1e-30) break;
  }
  if (std::isfinite(env.order)) {
    const double r = std::max(0.0, sigma * m - shift_norm);
    sum += 8.0 * env(r) * static_cast<double>(m) * m / (env.order - 2.0);
  }
  return sum;
}

double lattice_tail_bound_product(const DecayEnvelope& e1, const DecayEnvelope& e2,
                                  const Lattice& lat, long n, double shift_norm) {
  const double order = e1.order + e2.order;
  if (!(order > 2.0)) return kInf;
  const double sigma = lat.min_singular();
  double sum = 0.0;
  long m = n + 1;
  for (; m <= n + 200000; ++m) {
    const double r = std::max(0.0, sigma * m - shift_norm);
    const double term = 8.0 * m * e1(r) * e2(r);
    sum += term;
    if (term < 1e-30) break;
  }
  if (std::isfinite(order)) {
    const double r = std::max(0.0, sigma * m - shift_norm);
    sum += 8.0 * e1(r) * e2(r) * static_cast<double>(m) * m / (order - 2.0);
  }
  return sum;
}

// ---------------------------------------------------------------------------

Window parse_window(const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string head = spec.substr(0, colon);
  const std::string rest = colon == std::string::npos ? "" : spec.substr(colon + 1);
  auto parse_numbers = [&](std::size_t count) {
    std::vector<double> out;
    std::stringstream ss(rest);
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        std::size_t used = 0;
        out.push_back(std::stod(item, &used));
        if (used != item.size()) throw std::invalid_argument(item);
      } catch (const std::exception&) {
        throw Error(ErrorCode::kInvalidArgument, "window: bad number '" + item + "' in " + spec);
      }
    }
    if (out.size() != count) {
      throw Error(ErrorCode::kInvalidArgument, "window: " + head + " expects " +
                                                   std::to_string(count) + " parameter(s)");
    }
    return out;
  };
  if (head == "gaussian" && rest.empty()) return Window::gaussian();
  if ((head == "hermite1" || head == "h1") && rest.empty()) return Window::hermite1();
  if (head == "hat" && rest.empty()) return Window::hat();
  if (head == "bspline") {
    const double n = parse_numbers(1)[0];
    if (n != std::floor(n)) throw Error(ErrorCode::kInvalidArgument, "window: bspline order");
    return Window::bspline(static_cast<int>(n));
  }
  if (head == "char") {
    const auto v = parse_numbers(2);
    return Window::char_interval(v[0], v[1]);
  }
  if (head == "exp") return Window::two_sided_exp(parse_numbers(1)[0]);
  if (head == "csv") return load_window_csv(rest);
  throw Error(ErrorCode::kInvalidArgument, "window: unknown window spec '" + spec + "'");
}

Window load_window_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "window csv: cannot open " + path);
  std::string line;
  if (!std::getline(in, line)) throw Error(ErrorCode::kInvalidArgument, "window csv: empty file");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "t,value") {
    throw Error(ErrorCode::kInvalidArgument, "window csv: header must be 't,value'");
  }
  std::vector<double> ts;
  std::vector<double> vs;
  long lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) {
      throw Error(ErrorCode::kInvalidArgument,
                  "window csv: line " + std::to_string(lineno) + " needs two columns");
    }
    try {
      ts.push_back(std::stod(line.substr(0, comma)));
      vs.push_back(std::stod(line.substr(comma + 1)));
    } catch (const std::exception&) {
      throw Error(ErrorCode::kInvalidArgument,
                  "window csv: line " + std::to_string(lineno) + " is not numeric");
    }
  }
  if (ts.size() < 2) throw Error(ErrorCode::kInvalidArgument, "window csv: need >= 2 rows");
  const double step = (ts.back() - ts.front()) / static_cast<double>(ts.size() - 1);
  for (std::size_t i = 0; i < ts.size(); ++i) {
    if (std::abs(ts[i] - (ts.front() + step * static_cast<double>(i))) > 1e-9) {
      throw Error(ErrorCode::kInvalidArgument, "window csv: t step is not uniform (row " +
                                                   std::to_string(i + 2) + ")");
    }
  }
  return Window::sampled(ts.front(), step, std::move(vs));
}

void save_window_csv(const Window& w, const std::string& path) {
  const auto* vals = w.samples();
  if (vals == nullptr) {
    throw Error(ErrorCode::kInvalidArgument, "save_window_csv: only sampled windows");
  }
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::kIo, "window csv: cannot write " + path);
  out << "t,value\n";
  for (std::size_t i = 0; i < vals->size(); ++i) {
    out << fmt17(w.sample_t0() + w.sample_step() * static_cast<double>(i)) << ','
        << fmt17((*vals)[i]) << '\n';
  }
}

}  // namespace gaborkit
