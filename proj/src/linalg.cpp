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

#include "gaborkit/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "gaborkit/error.hpp"

namespace gaborkit {

CMatrix::CMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Complex(0.0, 0.0)) {}

CMatrix::CMatrix(std::initializer_list<std::initializer_list<Complex>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) {
      throw Error(ErrorCode::kDimensionMismatch, "CMatrix: ragged initializer");
    }
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
}

CMatrix CMatrix::identity(std::size_t n) {
  CMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

CMatrix CMatrix::adjoint() const {
  CMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
  }
  return out;
}

double CMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const auto& z : entries_) s += std::norm(z);
  return std::sqrt(s);
}

bool CMatrix::all_finite() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Complex& z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
  });
}

CMatrix CMatrix::principal_submatrix(std::span<const std::size_t> idx) const {
  CMatrix out(idx.size(), idx.size());
  for (std::size_t i = 0; i < idx.size(); ++i) {
    for (std::size_t j = 0; j < idx.size(); ++j) out(i, j) = (*this)(idx[i], idx[j]);
  }
  return out;
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
  if (a.cols_ != b.rows_) {
    throw Error(ErrorCode::kDimensionMismatch, "CMatrix product: inner dimensions differ");
  }
  CMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    Complex* orow = &out.entries_[i * b.cols_];
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex(0.0, 0.0)) continue;
      const Complex* brow = &b.entries_[k * b.cols_];
      for (std::size_t j = 0; j < b.cols_; ++j) orow[j] += aik * brow[j];
    }
  }
  return out;
}

namespace {

void require_finite(const CMatrix& m, const char* what) {
  if (!m.all_finite()) {
    throw Error(ErrorCode::kNonFinite, std::string(what) + ": matrix has NaN/Inf entries");
  }
}

void require_hermitian(const CMatrix& m, const char* what) {
  if (!m.is_square()) {
    throw Error(ErrorCode::kDimensionMismatch, std::string(what) + ": matrix is not square");
  }
  require_finite(m, what);
  double scale = 1.0;
  for (const auto& z : m.entries()) scale = std::max(scale, std::abs(z));
  const double tol = 1e-12 * scale;
  const std::size_t n = m.rows();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      if (std::abs(m(i, j) - std::conj(m(j, i))) > tol) {
        throw Error(ErrorCode::kNonHermitian,
                    std::string(what) + ": matrix is not Hermitian to 1e-12");
      }
    }
  }
}

double offdiag_frobenius(const CMatrix& a) {
  double s = 0.0;
  const std::size_t n = a.rows();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j) s += std::norm(a(i, j));
    }
  }
  return std::sqrt(s);
}

// Cyclic Jacobi. Each rotation is a phase fix that makes the (p,q) block real
// followed by the classical symmetric rotation.
EigenSystem jacobi_eigen(CMatrix a, bool want_vectors) {
  const std::size_t n = a.rows();
  CMatrix v = want_vectors ? CMatrix::identity(n) : CMatrix();
  const double norm = a.frobenius_norm();
  bool converged = false;
  for (int sweep = 0; sweep <= kMaxJacobiSweeps; ++sweep) {
    if (offdiag_frobenius(a) <= 1e-14 * norm) {
      converged = true;
      break;
    }
    if (sweep == kMaxJacobiSweeps) break;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex apq = a(p, q);
        const double r = std::abs(apq);
        if (r == 0.0) continue;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const Complex e = apq / r;
        const double tau = (aqq - app) / (2.0 * r);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        // U = [[c, s], [-s conj(e), c conj(e)]]
        const Complex u00 = c;
        const Complex u01 = s;
        const Complex u10 = -s * std::conj(e);
        const Complex u11 = c * std::conj(e);
        for (std::size_t k = 0; k < n; ++k) {
          const Complex akp = a(k, p);
          const Complex akq = a(k, q);
          a(k, p) = akp * u00 + akq * u10;
          a(k, q) = akp * u01 + akq * u11;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const Complex apk = a(p, k);
          const Complex aqk = a(q, k);
          a(p, k) = std::conj(u00) * apk + std::conj(u10) * aqk;
          a(q, k) = std::conj(u01) * apk + std::conj(u11) * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
        if (want_vectors) {
          for (std::size_t k = 0; k < n; ++k) {
            const Complex vkp = v(k, p);
            const Complex vkq = v(k, q);
            v(k, p) = vkp * u00 + vkq * u10;
            v(k, q) = vkp * u01 + vkq * u11;
          }
        }
      }
    }
  }
  if (!converged) {
    throw Error(ErrorCode::kNoConvergence, "hermitian Jacobi: no convergence in 60 sweeps");
  }

  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });
  EigenSystem out;
  out.values.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.values[i] = a(order[i], order[i]).real();
  if (want_vectors) {
    out.vectors = CMatrix(n, n);
    for (std::size_t col = 0; col < n; ++col) {
      for (std::size_t k = 0; k < n; ++k) out.vectors(k, col) = v(k, order[col]);
    }
  }
  return out;
}

// Implicit QL with Wilkinson-type shifts on a real symmetric tridiagonal
// matrix (diagonal d, sub-diagonal e with e.size() == d.size()). When z is
// non-null it holds an n x n row-major matrix whose columns are rotated along.
void tridiagonal_ql(std::vector<double>& d, std::vector<double>& e, std::vector<double>* z) {
  const int n = static_cast<int>(d.size());
  if (n == 0) return;
  e[n - 1] = 0.0;
  const double eps = std::numeric_limits<double>::epsilon();
  // Absolute floor: deflating below eps * ||T|| is within backward error, and
  // avoids stalls on clusters of near-zero eigenvalues.
  double tnorm = 0.0;
  for (int i = 0; i < n; ++i) tnorm = std::max(tnorm, std::abs(d[i]) + 2.0 * std::abs(e[i]));
  const double floor_tol = eps * tnorm;
  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m = l;
    do {
      for (m = l; m < n - 1; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= eps * dd || std::abs(e[m]) <= floor_tol) break;
      }
      if (m != l) {
        if (iter++ == 100) {
          throw Error(ErrorCode::kNoConvergence, "tridiagonal QL: no convergence");
        }
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
        double s = 1.0;
        double c = 1.0;
        double p = 0.0;
        int i = m - 1;
        bool underflow = false;
        for (; i >= l; --i) {
          const double f = s * e[i];
          const double b = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            underflow = true;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
          if (z != nullptr) {
            for (int k = 0; k < n; ++k) {
              double* row = z->data() + static_cast<std::size_t>(k) * n;
              const double zf = row[i + 1];
              row[i + 1] = s * row[i] + c * zf;
              row[i] = c * row[i] - s * zf;
            }
          }
        }
        if (underflow) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }
}

// Householder reduction of a Hermitian matrix to Hermitian tridiagonal form.
// The complex sub-diagonal can be made real by a diagonal unitary similarity,
// so only its moduli are returned. With q non-null, q receives the unitary Q D
// with A = (Q D) T (Q D)*, where T is the real tridiagonal matrix (d, e).
void householder_tridiagonalize(CMatrix a, std::vector<double>& d, std::vector<double>& e,
                                CMatrix* q = nullptr) {
  const std::size_t n = a.rows();
  d.assign(n, 0.0);
  e.assign(n, 0.0);
  if (q != nullptr) *q = CMatrix::identity(n);
  std::vector<Complex> v(n), p(n), w(n);
  for (std::size_t k = 0; k + 2 < n; ++k) {
    const std::size_t m = n - k - 1;  // length of the reflected block
    double xnorm2 = 0.0;
    for (std::size_t i = 0; i < m; ++i) xnorm2 += std::norm(a(k + 1 + i, k));
    const double xnorm = std::sqrt(xnorm2);
    if (xnorm == 0.0) continue;
    const Complex x0 = a(k + 1, k);
    const Complex phase = std::abs(x0) > 0.0 ? x0 / std::abs(x0) : Complex(1.0, 0.0);
    const Complex alpha = -phase * xnorm;
    for (std::size_t i = 0; i < m; ++i) v[i] = a(k + 1 + i, k);
    v[0] -= alpha;
    double vnorm2 = 0.0;
    for (std::size_t i = 0; i < m; ++i) vnorm2 += std::norm(v[i]);
    if (vnorm2 == 0.0) continue;
    const double inv = 1.0 / std::sqrt(vnorm2);
    for (std::size_t i = 0; i < m; ++i) v[i] *= inv;
    if (q != nullptr) {
      // Q <- Q (I - 2 v v*) on columns k+1..n-1
      for (std::size_t r = 0; r < n; ++r) {
        Complex* row = &(*q)(r, k + 1);
        Complex acc = 0.0;
        for (std::size_t j = 0; j < m; ++j) acc += row[j] * v[j];
        acc *= 2.0;
        for (std::size_t j = 0; j < m; ++j) row[j] -= acc * std::conj(v[j]);
      }
    }

    // p = A_sub v ; K = v* p ; w = p - K v ; A_sub -= 2 (v w* + w v*)
    Complex kk = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      const Complex* row = &a(k + 1 + i, k + 1);
      Complex acc = 0.0;
      for (std::size_t j = 0; j < m; ++j) acc += row[j] * v[j];
      p[i] = acc;
      kk += std::conj(v[i]) * acc;
    }
    const double kr = kk.real();
    for (std::size_t i = 0; i < m; ++i) w[i] = p[i] - kr * v[i];
    for (std::size_t i = 0; i < m; ++i) {
      Complex* row = &a(k + 1 + i, k + 1);
      const Complex vi = v[i];
      const Complex wi = w[i];
      for (std::size_t j = 0; j < m; ++j) {
        row[j] -= 2.0 * (vi * std::conj(w[j]) + wi * std::conj(v[j]));
      }
    }
    a(k + 1, k) = alpha;
    a(k, k + 1) = std::conj(alpha);
    for (std::size_t i = 1; i < m; ++i) {
      a(k + 1 + i, k) = 0.0;
      a(k, k + 1 + i) = 0.0;
    }
  }
  for (std::size_t i = 0; i < n; ++i) d[i] = a(i, i).real();
  for (std::size_t i = 0; i + 1 < n; ++i) e[i] = std::abs(a(i + 1, i));
  if (q != nullptr) {
    // D = diag(phase_i) with phase_{i+1} = phase_i * t_{i+1,i} / |t_{i+1,i}|
    Complex phase = 1.0;
    for (std::size_t i = 1; i < n; ++i) {
      const Complex t = a(i, i - 1);
      if (std::abs(t) > 0.0) phase *= t / std::abs(t);
      for (std::size_t r = 0; r < n; ++r) (*q)(r, i) *= phase;
    }
  }
}

EigenSystem householder_eigen(const CMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<double> d;
  std::vector<double> e;
  CMatrix qd;
  householder_tridiagonalize(m, d, e, &qd);
  std::vector<double> z(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) z[i * n + i] = 1.0;
  tridiagonal_ql(d, e, &z);
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return d[i] < d[j]; });
  EigenSystem out;
  out.values.resize(n);
  out.vectors = CMatrix(n, n);
  std::vector<Complex> acc(n);
  for (std::size_t col = 0; col < n; ++col) {
    const std::size_t src = order[col];
    out.values[col] = d[src];
    std::fill(acc.begin(), acc.end(), Complex(0.0));
    for (std::size_t k = 0; k < n; ++k) {
      const double zk = z[k * n + src];
      if (zk == 0.0) continue;
      for (std::size_t r = 0; r < n; ++r) acc[r] += qd(r, k) * zk;
    }
    for (std::size_t r = 0; r < n; ++r) out.vectors(r, col) = acc[r];
  }
  return out;
}

}  // namespace

std::vector<double> hermitian_eigs(const CMatrix& m) {
  require_hermitian(m, "hermitian_eigs");
  if (m.rows() <= kJacobiMaxDim) return jacobi_eigen(m, false).values;
  std::vector<double> d;
  std::vector<double> e;
  householder_tridiagonalize(m, d, e);
  tridiagonal_ql(d, e, nullptr);
  std::sort(d.begin(), d.end());
  return d;
}

EigenSystem hermitian_eigensystem(const CMatrix& m) {
  require_hermitian(m, "hermitian_eigensystem");
  if (m.rows() <= kJacobiMaxDim) return jacobi_eigen(m, true);
  return householder_eigen(m);
}

SpectrumSummary hermitian_spectrum(const CMatrix& m) {
  const auto ev = hermitian_eigs(m);
  if (ev.empty()) return {};
  return {ev.front(), ev.back()};
}

std::vector<double> singular_values(const CMatrix& m) {
  require_finite(m, "singular_values");
  // One-sided (Hestenes) Jacobi on the columns of a tall matrix.
  CMatrix a = m.rows() >= m.cols() ? m : m.adjoint();
  const std::size_t rows = a.rows();
  const std::size_t n = a.cols();
  const double eps = 4.0 * std::numeric_limits<double>::epsilon();
  bool converged = n <= 1;
  for (int sweep = 0; sweep < kMaxJacobiSweeps && !converged; ++sweep) {
    converged = true;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        double alpha = 0.0;
        double beta = 0.0;
        Complex gamma = 0.0;
        for (std::size_t i = 0; i < rows; ++i) {
          const Complex ap = a(i, p);
          const Complex aq = a(i, q);
          alpha += std::norm(ap);
          beta += std::norm(aq);
          gamma += std::conj(ap) * aq;
        }
        const double g = std::abs(gamma);
        if (alpha == 0.0 || beta == 0.0 || g <= eps * std::sqrt(alpha * beta)) continue;
        converged = false;
        const Complex e = gamma / g;
        const double zeta = (beta - alpha) / (2.0 * g);
        const double t =
            (zeta >= 0.0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        for (std::size_t i = 0; i < rows; ++i) {
          const Complex ap = a(i, p);
          const Complex aq = a(i, q);
          a(i, p) = c * ap - s * std::conj(e) * aq;
          a(i, q) = s * ap + c * std::conj(e) * aq;
        }
      }
    }
  }
  if (!converged) {
    throw Error(ErrorCode::kNoConvergence, "singular_values: no convergence in 60 sweeps");
  }
  std::vector<double> sv(n);
  for (std::size_t j = 0; j < n; ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < rows; ++i) s += std::norm(a(i, j));
    sv[j] = std::sqrt(s);
  }
  std::sort(sv.begin(), sv.end(), std::greater<>());
  return sv;
}

SpectrumSummary singular_spectrum(const CMatrix& m) {
  const auto sv = singular_values(m);
  if (sv.empty()) return {};
  return {sv.back(), sv.front()};
}

double opnorm_offdiag_rowsum(const CMatrix& m) {
  if (!m.is_square()) {
    throw Error(ErrorCode::kDimensionMismatch, "opnorm_offdiag_rowsum: matrix is not square");
  }
  require_finite(m, "opnorm_offdiag_rowsum");
  double best = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j != i) s += std::abs(m(i, j));
    }
    best = std::max(best, s);
  }
  return best;
}

}  // namespace gaborkit
