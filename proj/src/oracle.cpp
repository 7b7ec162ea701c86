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

#include "gaborkit/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "gaborkit/error.hpp"
#include "gaborkit/linalg.hpp"

namespace gaborkit {

namespace {

constexpr double kProbeSpacing = 0.5;
constexpr double kKeepFraction = 0.5;

struct Bounds {
  double lower;
  double upper;
  double atom_norm_error;
  long probes;
  long atoms;
};

std::vector<double> centered_grid(double half) {
  std::vector<double> out;
  const long n = static_cast<long>(std::floor(half / kProbeSpacing + 1e-9));
  for (long i = -n; i <= n; ++i) out.push_back(kProbeSpacing * static_cast<double>(i));
  return out;
}

Bounds discrete_bounds(const Window& g, const Lattice& lat, double T, double h, long M,
                       double probe_time_half, double probe_freq_half) {
  const long n = static_cast<long>(std::llround(2.0 * T / h)) + 1;
  std::vector<double> t(static_cast<std::size_t>(n));
  for (long i = 0; i < n; ++i) t[i] = -T + h * static_cast<double>(i);
  const double sqrt_h = std::sqrt(h);
  const double two_pi = 2.0 * std::numbers::pi;
  const double norm2 = g.l2_norm() * g.l2_norm();

  // Atoms pi(lam) g * sqrt(h), skipping those that vanish on the grid.
  const Interval eff = g.effective_support();
  std::vector<std::vector<Complex>> atoms;
  double box_time = 0.0, box_freq = 0.0;
  for (long k1 = -M; k1 <= M; ++k1) {
    for (long k2 = -M; k2 <= M; ++k2) {
      const PhasePoint lam = lat.point(k1, k2);
      box_time = std::max(box_time, std::abs(lam.x));
      box_freq = std::max(box_freq, std::abs(lam.xi));
      if (eff.hi + lam.x < -T || eff.lo + lam.x > T) continue;
      std::vector<Complex> col(static_cast<std::size_t>(n));
      bool any = false;
      for (long i = 0; i < n; ++i) {
        const Complex v = g.eval(t[i] - lam.x);
        if (v == 0.0) continue;
        any = true;
        const double ph = lam.xi * t[i];
        col[i] = sqrt_h * v * std::polar(1.0, two_pi * (ph - std::round(ph)));
      }
      if (any) atoms.push_back(std::move(col));
    }
  }
  double sampled = 0.0;
  for (long i = 0; i < n; ++i) sampled += h * std::norm(g.eval(t[i]));
  const double atom_norm_error = std::abs(sampled - norm2) / norm2;

  // Probe subspace: unit Gaussians on a spacing-1/2 lattice over the inner
  // half of the time grid / atom box. Only the well-conditioned part of their
  // span is kept (Gram eigenvalues >= kKeepFraction * max); the discarded
  // directions carry their energy outside the probe region.
  if (box_freq >= 0.5 / h) {
    throw Error(ErrorCode::kResolutionInsufficient,
                "oracle: atom frequencies reach the Nyquist limit 1/(2h); refine h or reduce M");
  }
  const double time_half =
      probe_time_half > 0.0 ? probe_time_half : std::min(T / 2.0, std::max(box_time / 2.0, 1.0));
  const double freq_half = probe_freq_half > 0.0 ? probe_freq_half : std::max(box_freq / 2.0, 1.0);
  const Window probe = Window::gaussian();
  std::vector<std::vector<Complex>> probes;
  for (double a : centered_grid(time_half)) {
    for (double b : centered_grid(freq_half)) {
      std::vector<Complex> v(static_cast<std::size_t>(n));
      for (long i = 0; i < n; ++i) {
        const double ph = b * t[i];
        v[i] = sqrt_h * probe.eval(t[i] - a) * std::polar(1.0, two_pi * (ph - std::round(ph)));
      }
      probes.push_back(std::move(v));
    }
  }
  const std::size_t np = probes.size();
  auto dot = [n](const std::vector<Complex>& u, const std::vector<Complex>& v) {
    Complex c = 0.0;
    for (long i = 0; i < n; ++i) c += std::conj(u[i]) * v[i];
    return c;
  };
  CMatrix gram(np, np);
  for (std::size_t i = 0; i < np; ++i) {
    for (std::size_t j = i; j < np; ++j) {
      gram(i, j) = dot(probes[i], probes[j]);
      gram(j, i) = std::conj(gram(i, j));
    }
    gram(i, i) = gram(i, i).real();
  }
  const EigenSystem es = hermitian_eigensystem(gram);
  const double top = es.values.back();
  std::vector<std::size_t> keep;
  for (std::size_t k = 0; k < np; ++k) {
    if (es.values[k] >= kKeepFraction * top) keep.push_back(k);
  }

  // W = V* Phi, then B = diag(1/sqrt(lambda_k)) U_k* W has orthonormal rows in
  // sample space, and C = B B* is the compressed frame operator.
  CMatrix w(np, atoms.size());
  for (std::size_t p = 0; p < np; ++p) {
    for (std::size_t a = 0; a < atoms.size(); ++a) w(p, a) = dot(probes[p], atoms[a]);
  }
  CMatrix b(keep.size(), atoms.size());
  for (std::size_t r = 0; r < keep.size(); ++r) {
    const std::size_t k = keep[r];
    const double inv = 1.0 / std::sqrt(es.values[k]);
    for (std::size_t a = 0; a < atoms.size(); ++a) {
      Complex c = 0.0;
      for (std::size_t p = 0; p < np; ++p) c += std::conj(es.vectors(p, k)) * w(p, a);
      b(r, a) = inv * c;
    }
  }
  const std::size_t nk = keep.size();
  CMatrix c(nk, nk);
  for (std::size_t i = 0; i < nk; ++i) {
    for (std::size_t j = i; j < nk; ++j) {
      Complex s = 0.0;
      for (std::size_t a = 0; a < atoms.size(); ++a) s += b(i, a) * std::conj(b(j, a));
      c(i, j) = s;
      c(j, i) = std::conj(s);
    }
    c(i, i) = c(i, i).real();
  }
  const SpectrumSummary s = hermitian_spectrum(c);
  return {std::max(0.0, s.min), s.max, atom_norm_error, static_cast<long>(nk),
          static_cast<long>(atoms.size())};
}

double rel_change(double a, double b, double scale) {
  return std::abs(a - b) / std::max(std::abs(scale), 1e-300);
}

}  // namespace

OracleResult oracle_frame_bounds(const Window& g, const Lattice& lat, const OracleOptions& opts) {
  if (!(opts.T > 0.0) || !(opts.h > 0.0) || opts.M < 0 || opts.h >= opts.T) {
    throw Error(ErrorCode::kInvalidArgument, "oracle: need T > h > 0 and M >= 0");
  }
  const Bounds base = discrete_bounds(g, lat, opts.T, opts.h, opts.M, opts.probe_time_half, opts.probe_freq_half);
  OracleResult out;
  out.options = opts;
  out.lower = base.lower;
  out.upper = base.upper;
  out.atom_norm_error = base.atom_norm_error;
  out.probes = base.probes;
  out.atoms = base.atoms;
  out.lower_half_step = base.lower;
  out.upper_half_step = base.upper;
  if (base.atom_norm_error > 0.01) {
    throw Error(ErrorCode::kResolutionInsufficient,
                "oracle: sampled ||g||^2 off by " + std::to_string(100.0 * base.atom_norm_error) +
                    "%; refine h or enlarge T");
  }
  if (opts.halve_check) {
    const Bounds fine = discrete_bounds(g, lat, opts.T, opts.h / 2.0, opts.M, opts.probe_time_half,
                                        opts.probe_freq_half);
    out.lower_half_step = fine.lower;
    out.upper_half_step = fine.upper;
    out.relative_change = std::max(rel_change(base.lower, fine.lower, base.upper),
                                   rel_change(base.upper, fine.upper, base.upper));
    if (out.relative_change > 0.10) {
      throw Error(ErrorCode::kResolutionInsufficient,
                  "oracle: halving h changed the bounds by " +
                      std::to_string(100.0 * out.relative_change) + "%");
    }
  }
  return out;
}

}  // namespace gaborkit
