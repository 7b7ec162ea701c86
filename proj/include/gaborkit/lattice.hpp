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

// Lattices in the time-frequency plane R^2: A * Z^2 for an invertible 2x2
// basis A whose columns are the generators.

#ifndef GABORKIT_LATTICE_HPP_
#define GABORKIT_LATTICE_HPP_

#include <array>
#include <complex>
#include <optional>

namespace gaborkit {

/// A point (x, xi) of phase space: time shift x, frequency shift xi.
struct PhasePoint {
  double x = 0.0;
  double xi = 0.0;

  friend PhasePoint operator+(PhasePoint a, PhasePoint b) { return {a.x + b.x, a.xi + b.xi}; }
  friend PhasePoint operator-(PhasePoint a, PhasePoint b) { return {a.x - b.x, a.xi - b.xi}; }
  friend PhasePoint operator-(PhasePoint a) { return {-a.x, -a.xi}; }
  double norm() const;
};

struct RectLattice {
  double alpha = 1.0;  // time step
  double beta = 1.0;   // frequency step
};

/// Continued-fraction approximation p/q of alpha*beta.
struct RationalStructure {
  long p = 1;
  long q = 1;
  bool exact = false;
};

class Lattice {
 public:
  /// Basis given row-major: [[a11, a12], [a21, a22]]; columns generate.
  Lattice(double a11, double a12, double a21, double a22);
  explicit Lattice(const RectLattice& r);

  static Lattice integer() { return Lattice(1.0, 0.0, 0.0, 1.0); }

  double a11() const noexcept { return m_[0]; }
  double a12() const noexcept { return m_[1]; }
  double a21() const noexcept { return m_[2]; }
  double a22() const noexcept { return m_[3]; }
  double det() const noexcept { return m_[0] * m_[3] - m_[1] * m_[2]; }

  /// Lattice point A * (k1, k2).
  PhasePoint point(long k1, long k2) const {
    return {m_[0] * k1 + m_[1] * k2, m_[2] * k1 + m_[3] * k2};
  }

  /// The diagonal case with positive-or-negative steps; nullopt otherwise.
  std::optional<RectLattice> as_rect() const;

  /// ||A||_op. Depends on the basis, not only on the lattice.
  double op_norm() const;
  /// Smallest singular value of A; |A k| >= min_singular() * |k|.
  double min_singular() const;

  /// Same point set: A2^{-1} A1 integral with |det| = 1 (to 1e-9).
  bool same_points(const Lattice& other) const;

 private:
  std::array<double, 4> m_;
};

double volume(const Lattice& l);
double density(const Lattice& l);
Lattice dual_lattice(const Lattice& l);
Lattice adjoint_lattice(const Lattice& l);

/// e^{2 pi i (lam.x * mu.xi - lam.xi * mu.x)}: the phase picked up when the
/// time-frequency shifts by lam and mu are swapped.
std::complex<double> commutation_phase(PhasePoint lam, PhasePoint mu);

/// Best continued-fraction convergent of alpha*beta with q <= max_q.
RationalStructure rational_structure(const RectLattice& r, long max_q);

}  // namespace gaborkit

#endif  // GABORKIT_LATTICE_HPP_
