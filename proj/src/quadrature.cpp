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

#include "gaborkit/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "gaborkit/error.hpp"

namespace gaborkit {

namespace {

template <int N>
struct GaussLegendre {
  std::array<double, N> nodes{};
  std::array<double, N> weights{};

  GaussLegendre() {
    for (int i = 0; i < N; ++i) {
      double x = std::cos(std::numbers::pi * (i + 0.75) / (N + 0.5));
      double dp = 0.0;
      for (int it = 0; it < 100; ++it) {
        double p0 = 1.0;
        double p1 = x;
        for (int k = 2; k <= N; ++k) {
          const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
          p0 = p1;
          p1 = p2;
        }
        dp = N * (x * p1 - p0) / (x * x - 1.0);
        const double dx = p1 / dp;
        x -= dx;
        if (std::abs(dx) < 1e-16) break;
      }
      nodes[i] = x;
      weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
  }
};

const GaussLegendre<32>& gl32() {
  static const GaussLegendre<32> rule;
  return rule;
}

const GaussLegendre<16>& gl16() {
  static const GaussLegendre<16> rule;
  return rule;
}

struct PanelResult {
  std::complex<double> fine;
  std::complex<double> coarse;
  double abs_mass;
};

PanelResult panel(const std::function<std::complex<double>(double)>& f, double a, double b) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  PanelResult r{0.0, 0.0, 0.0};
  const auto& r32 = gl32();
  for (int i = 0; i < 32; ++i) {
    const auto v = f(mid + half * r32.nodes[i]);
    r.fine += r32.weights[i] * v;
    r.abs_mass += r32.weights[i] * std::abs(v);
  }
  const auto& r16 = gl16();
  for (int i = 0; i < 16; ++i) r.coarse += r16.weights[i] * f(mid + half * r16.nodes[i]);
  r.fine *= half;
  r.coarse *= half;
  r.abs_mass *= half;
  return r;
}

}  // namespace

std::vector<double> make_breaks(double lo, double hi, std::vector<double> knots) {
  std::vector<double> out;
  out.reserve(knots.size() + 2);
  out.push_back(lo);
  std::sort(knots.begin(), knots.end());
  for (double k : knots) {
    if (k > lo && k < hi && k - out.back() > 1e-14 * (1.0 + std::abs(k))) out.push_back(k);
  }
  if (hi - out.back() <= 1e-14 * (1.0 + std::abs(hi)) && out.size() > 1) out.pop_back();
  out.push_back(hi);
  return out;
}

std::complex<double> integrate(const std::function<std::complex<double>(double)>& f,
                               std::span<const double> breaks, const QuadratureOptions& opts) {
  if (breaks.size() < 2) return 0.0;
  const double total = breaks.back() - breaks.front();
  if (!(total > 0.0)) return 0.0;

  struct Task {
    double a;
    double b;
    int depth;
  };
  std::vector<Task> stack;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    const double a = breaks[i];
    const double b = breaks[i + 1];
    if (!(b > a)) continue;
    int pieces = 1;
    if (opts.frequency > 0.0) {
      const double max_width = 2.0 / opts.frequency;
      pieces = static_cast<int>(std::min(1e5, std::ceil((b - a) / max_width)));
      pieces = std::max(pieces, 1);
    }
    for (int k = pieces - 1; k >= 0; --k) {
      const double lo = a + (b - a) * k / pieces;
      const double hi = k + 1 == pieces ? b : a + (b - a) * (k + 1) / pieces;
      stack.push_back({lo, hi, 0});
    }
  }

  std::complex<double> sum = 0.0;
  while (!stack.empty()) {
    const Task t = stack.back();
    stack.pop_back();
    const PanelResult r = panel(f, t.a, t.b);
    const double tol = opts.abs_tol * (t.b - t.a) / total;
    const double err = std::abs(r.fine - r.coarse);
    if (err <= tol || err <= 1e-14 * r.abs_mass) {
      sum += r.fine;
      continue;
    }
    if (t.depth >= opts.max_depth) {
      throw Error(ErrorCode::kQuadratureFailure,
                  "integrate: tolerance unreachable on panel [" + std::to_string(t.a) + ", " +
                      std::to_string(t.b) + "]");
    }
    const double mid = 0.5 * (t.a + t.b);
    stack.push_back({mid, t.b, t.depth + 1});
    stack.push_back({t.a, mid, t.depth + 1});
  }
  return sum;
}

}  // namespace gaborkit
