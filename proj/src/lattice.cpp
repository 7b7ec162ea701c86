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

#include "gaborkit/lattice.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

#include "gaborkit/error.hpp"

namespace gaborkit {

double PhasePoint::norm() const { return std::hypot(x, xi); }

Lattice::Lattice(double a11, double a12, double a21, double a22) : m_{a11, a12, a21, a22} {
  for (double v : m_) {
    if (!std::isfinite(v)) throw Error(ErrorCode::kNonFinite, "Lattice: non-finite basis entry");
  }
  if (det() == 0.0) throw Error(ErrorCode::kSingular, "Lattice: basis is singular");
}

namespace {

const RectLattice& checked(const RectLattice& r) {
  if (!(r.alpha > 0.0) || !(r.beta > 0.0) || !std::isfinite(r.alpha) || !std::isfinite(r.beta)) {
    throw Error(ErrorCode::kInvalidArgument, "RectLattice: alpha and beta must be positive");
  }
  return r;
}

}  // namespace

Lattice::Lattice(const RectLattice& r)
    : Lattice(checked(r).alpha, 0.0, 0.0, r.beta) {}

std::optional<RectLattice> Lattice::as_rect() const {
  if (m_[1] != 0.0 || m_[2] != 0.0) return std::nullopt;
  return RectLattice{std::abs(m_[0]), std::abs(m_[3])};
}

namespace {

// Singular values of a real 2x2 matrix in closed form.
std::array<double, 2> singular_values_2x2(const std::array<double, 4>& m) {
  const double a = m[0], b = m[1], c = m[2], d = m[3];
  const double s1 = a * a + b * b + c * c + d * d;
  const double det = a * d - b * c;
  const double disc = std::sqrt(std::max(0.0, s1 * s1 - 4.0 * det * det));
  const double big = std::sqrt(0.5 * (s1 + disc));
  const double small = big > 0.0 ? std::abs(det) / big : 0.0;
  return {small, big};
}

}  // namespace

double Lattice::op_norm() const { return singular_values_2x2(m_)[1]; }

double Lattice::min_singular() const { return singular_values_2x2(m_)[0]; }

bool Lattice::same_points(const Lattice& other) const {
  // U = other^{-1} * this must be integral and unimodular.
  const double d = other.det();
  const double i11 = other.a22() / d, i12 = -other.a12() / d;
  const double i21 = -other.a21() / d, i22 = other.a11() / d;
  const double u[4] = {i11 * a11() + i12 * a21(), i11 * a12() + i12 * a22(),
                       i21 * a11() + i22 * a21(), i21 * a12() + i22 * a22()};
  for (double v : u) {
    if (std::abs(v - std::round(v)) > 1e-9) return false;
  }
  const double du = std::round(u[0]) * std::round(u[3]) - std::round(u[1]) * std::round(u[2]);
  return std::abs(std::abs(du) - 1.0) < 1e-9;
}

double volume(const Lattice& l) { return std::abs(l.det()); }

double density(const Lattice& l) { return 1.0 / volume(l); }

Lattice dual_lattice(const Lattice& l) {
  // (A^T)^{-1} = (1/det) [[a22, -a21], [-a12, a11]]
  const double d = l.det();
  return Lattice(l.a22() / d, -l.a21() / d, -l.a12() / d, l.a11() / d);
}

Lattice adjoint_lattice(const Lattice& l) {
  // I = [[0, 1], [-1, 0]] applied to the dual basis.
  const Lattice dual = dual_lattice(l);
  return Lattice(dual.a21(), dual.a22(), -dual.a11(), -dual.a12());
}

std::complex<double> commutation_phase(PhasePoint lam, PhasePoint mu) {
  const double t = lam.x * mu.xi - lam.xi * mu.x;
  const double frac = t - std::round(t);
  return std::polar(1.0, 2.0 * std::numbers::pi * frac);
}

RationalStructure rational_structure(const RectLattice& r, long max_q) {
  if (max_q < 1) throw Error(ErrorCode::kInvalidArgument, "rational_structure: max_q < 1");
  const double target = r.alpha * r.beta;
  if (!(target > 0.0) || !std::isfinite(target)) {
    throw Error(ErrorCode::kInvalidArgument, "rational_structure: alpha*beta must be positive");
  }
  // Convergent recurrences h_n = a_n h_{n-1} + h_{n-2}, k_n likewise.
  long h_prev = 1, h = static_cast<long>(std::floor(target));
  long k_prev = 0, k = 1;
  double x = target - std::floor(target);
  long best_p = h, best_q = k;
  for (int iter = 0; iter < 64 && x > 1e-15; ++iter) {
    const double inv = 1.0 / x;
    const double a = std::floor(inv);
    if (a > 1e12) break;
    const long ai = static_cast<long>(a);
    const long h_next = ai * h + h_prev;
    const long k_next = ai * k + k_prev;
    if (k_next > max_q) break;
    h_prev = h;
    h = h_next;
    k_prev = k;
    k = k_next;
    best_p = h;
    best_q = k;
    x = inv - a;
  }
  if (best_p == 0) {
    // alpha*beta < 1/max_q: 0 is not a usable approximation.
    best_p = 1;
    best_q = max_q;
  }
  const long g = std::gcd(best_p, best_q);
  RationalStructure out{best_p / g, best_q / g, false};
  const double qd = static_cast<double>(out.q);
  const double err = std::abs(target - static_cast<double>(out.p) / qd);
  out.exact = err < 1e-9 / (qd * qd) && std::abs(target * qd - static_cast<double>(out.p)) < 1e-12;
  return out;
}

}  // namespace gaborkit
