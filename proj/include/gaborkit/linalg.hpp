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

// Dense complex linear algebra sized for criterion matrices (a few hundred
// rows at most). Everything here is self-contained: cyclic Jacobi for small
// Hermitian problems, Householder tridiagonalization + implicit QL for the
// larger Gramian sections, and one-sided Jacobi for singular values.

#ifndef GABORKIT_LINALG_HPP_
#define GABORKIT_LINALG_HPP_

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace gaborkit {

using Complex = std::complex<double>;

/// Row-major dense complex matrix.
class CMatrix {
 public:
  CMatrix() = default;
  CMatrix(std::size_t rows, std::size_t cols);
  CMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static CMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Complex& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  std::span<const Complex> entries() const noexcept { return entries_; }
  std::span<Complex> entries() noexcept { return entries_; }

  CMatrix adjoint() const;
  double frobenius_norm() const;
  bool all_finite() const;

  /// Principal submatrix on the index set `idx` (rows and columns).
  CMatrix principal_submatrix(std::span<const std::size_t> idx) const;

  friend CMatrix operator*(const CMatrix& a, const CMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> entries_;
};

/// Extremal values of a spectrum (eigenvalues or singular values).
struct SpectrumSummary {
  double min = 0.0;
  double max = 0.0;
};

struct EigenSystem {
  std::vector<double> values;  // ascending
  CMatrix vectors;             // column i belongs to values[i]
};

/// Eigenvalues of a Hermitian matrix in ascending order.
///
/// Symmetry is checked entrywise at 1e-12 (relative to the largest entry).
/// Matrices up to kJacobiMaxDim use cyclic Jacobi; larger ones go through a
/// Householder reduction to real tridiagonal form followed by implicit QL.
std::vector<double> hermitian_eigs(const CMatrix& m);

/// Eigenvalues and eigenvectors, with the same method split as hermitian_eigs.
EigenSystem hermitian_eigensystem(const CMatrix& m);

/// Smallest and largest eigenvalue of a Hermitian matrix.
SpectrumSummary hermitian_spectrum(const CMatrix& m);

/// Singular values in descending order; min(rows, cols) of them.
std::vector<double> singular_values(const CMatrix& m);

/// Smallest and largest singular value.
SpectrumSummary singular_spectrum(const CMatrix& m);

/// sup over rows of the off-diagonal absolute row sum. For Hermitian input
/// this bounds the operator norm of the off-diagonal part (Schur test).
double opnorm_offdiag_rowsum(const CMatrix& m);

inline constexpr std::size_t kJacobiMaxDim = 96;
inline constexpr int kMaxJacobiSweeps = 60;

}  // namespace gaborkit

#endif  // GABORKIT_LINALG_HPP_
