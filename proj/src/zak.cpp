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

#include "gaborkit/zak.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "gaborkit/error.hpp"

namespace gaborkit {

namespace {

constexpr double kZakTailTarget = 1e-13;

Complex unit_phase(double cycles) {
  return std::polar(1.0, 2.0 * std::numbers::pi * (cycles - std::round(cycles)));
}

// sum_{j >= 0} phi(r + a j), for a non-increasing profile.
double profile_tail(const Window& f, double r, double a) {
  double sum = 0.0;
  for (long j = 0; j < 10000000; ++j) {
    const double term = f.time_profile(r + a * static_cast<double>(j));
    sum += term;
    if (term == 0.0 || term < 1e-30) return sum;
  }
  return std::numeric_limits<double>::infinity();
}

}  // namespace

ZakEvaluator::ZakEvaluator(Window f, double alpha) : f_(std::move(f)), alpha_(alpha), tail_(0.0) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw Error(ErrorCode::kInvalidArgument, "zak: alpha must be positive");
  }
  if (auto s = f_.support()) {
    range_ = *s;
    return;
  }
  const Interval e = f_.effective_support();
  double r = std::max(std::abs(e.lo), std::abs(e.hi));
  for (int it = 0; it < 200; ++it) {
    tail_ = 2.0 * profile_tail(f_, r, alpha_);
    if (tail_ < kZakTailTarget) break;
    r *= 1.25;
  }
  if (!(tail_ < kZakTailTarget)) {
    throw Error(ErrorCode::kTailNotSummable, "zak: envelope does not certify the series tail");
  }
  range_ = {-r, r};
}

ZakValue ZakEvaluator::operator()(double x, double xi) const {
  ZakValue out;
  out.alpha = alpha_;
  out.x = x;
  out.xi = xi;
  out.tail_bound = tail_;
  // x - a k in [lo, hi]
  out.k_min = static_cast<long>(std::ceil((x - range_.hi) / alpha_));
  out.k_max = static_cast<long>(std::floor((x - range_.lo) / alpha_));
  Complex sum = 0.0;
  for (long k = out.k_min; k <= out.k_max; ++k) {
    const double kd = static_cast<double>(k);
    const Complex v = f_.eval(x - alpha_ * kd);
    if (v != 0.0) sum += v * unit_phase(alpha_ * kd * xi);
  }
  out.value = sum;
  return out;
}

Complex ZakEvaluator::value(double x, double xi) const { return (*this)(x, xi).value; }

ZakValue zak(const Window& f, double alpha, double x, double xi) {
  return ZakEvaluator(f, alpha)(x, xi);
}

QuasiperiodicityResidual check_quasiperiodicity(const Window& f, double alpha, double x,
                                                double xi) {
  const ZakEvaluator z(f, alpha);
  const Complex base = z.value(x, xi);
  QuasiperiodicityResidual out;
  out.time_shift = std::abs(z.value(x + alpha, xi) - unit_phase(alpha * xi) * base);
  out.frequency_shift = std::abs(z.value(x, xi + 1.0 / alpha) - base);
  return out;
}

double zz_factorization_residual(const Window& g, const RectLattice& r,
                                 const RationalStructure& rs, double x, double xi, long j) {
  const ZakEvaluator z(g, 1.0 / r.beta);
  const long q = rs.q;
  const long l = (j >= 0) ? j / q : -((-j + q - 1) / q);
  const long rr = j - q * l;
  const double step = static_cast<double>(rs.p) / (static_cast<double>(q) * r.beta);
  const Complex lhs = z.value(x + r.alpha * static_cast<double>(j), r.beta * xi);
  const Complex rhs = unit_phase(static_cast<double>(rs.p * l) * xi) *
                      z.value(x + step * static_cast<double>(rr), r.beta * xi);
  return std::abs(lhs - rhs);
}

}  // namespace gaborkit
