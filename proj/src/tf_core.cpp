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

#include "gaborkit/tf_core.hpp"

#include <cmath>
#include <numbers>

#include "gaborkit/error.hpp"

namespace gaborkit {

namespace {

Complex unit_phase(double cycles) {
  return std::polar(1.0, 2.0 * std::numbers::pi * (cycles - std::round(cycles)));
}

}  // namespace

Complex stft(const Window& f, const Window& g, PhasePoint z) {
  return shifted_inner_product(f, {}, g, z);
}

double check_covariance(const Window& f, const Window& g, PhasePoint w, PhasePoint z) {
  const Complex lhs = shifted_inner_product(f, w, g, z);
  const Complex rhs = unit_phase(-(z.xi - w.xi) * w.x) * stft(f, g, z - w);
  return std::abs(lhs - rhs);
}

double check_joint_covariance(const Window& f, const Window& g, PhasePoint w, PhasePoint z) {
  // pi(z) pi(w) = e^{-2 pi i w.xi z.x} pi(z + w)
  const Complex lhs = unit_phase(w.xi * z.x) * shifted_inner_product(f, w, g, z + w);
  const Complex rhs = unit_phase(z.x * w.xi - z.xi * w.x) * stft(f, g, z);
  return std::abs(lhs - rhs);
}

FigaResult figa_residual(const Window& f, const Window& h, const Window& g, const Window& gamma,
                         const Lattice& lat, PhasePoint z, long trunc, double tail_tol) {
  if (trunc < 0) throw Error(ErrorCode::kInvalidArgument, "figa_residual: trunc < 0");
  const Lattice adj = adjoint_lattice(lat);
  const double vol = volume(lat);

  FigaResult out;
  out.tail_bound =
      lattice_tail_bound_product(stft_envelope(f, g), stft_envelope(h, gamma), lat, trunc,
                                 z.norm()) +
      lattice_tail_bound_product(stft_envelope(gamma, g), stft_envelope(h, f), adj, trunc) / vol;
  if (!(out.tail_bound <= tail_tol)) {
    throw Error(ErrorCode::kTailNotSummable,
                "figa_residual: envelope tail " + std::to_string(out.tail_bound) +
                    " exceeds tolerance");
  }

  Complex lhs = 0.0;
  Complex rhs = 0.0;
  for (long k1 = -trunc; k1 <= trunc; ++k1) {
    for (long k2 = -trunc; k2 <= trunc; ++k2) {
      const PhasePoint lam = z + lat.point(k1, k2);
      const Complex a = stft(f, g, lam);
      if (a != 0.0) lhs += a * std::conj(stft(h, gamma, lam));
      const PhasePoint mu = adj.point(k1, k2);
      const Complex b = stft(gamma, g, mu);
      if (b != 0.0) rhs += b * std::conj(stft(h, f, mu)) * unit_phase(mu.x * z.xi - mu.xi * z.x);
    }
  }
  out.lhs = lhs;
  out.rhs = rhs / vol;
  out.residual = std::abs(out.lhs - out.rhs);
  return out;
}

}  // namespace gaborkit
