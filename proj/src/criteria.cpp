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

#include "gaborkit/criteria.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <unordered_map>

#include "gaborkit/error.hpp"
#include "gaborkit/tf_core.hpp"
#include "gaborkit/zak.hpp"

namespace gaborkit {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kUnitTol = 1e-12;
// Gramian entries whose envelope is below this fraction of ||g||^2 are not
// integrated; the envelope value itself is far below the quadrature tolerance.
constexpr double kNegligibleEntry = 1e-13;
constexpr int kStencilHalf = 4;

Complex unit_phase(double cycles) {
  return std::polar(1.0, 2.0 * std::numbers::pi * (cycles - std::round(cycles)));
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

bool non_increasing(const std::vector<double>& trace) {
  for (std::size_t i = 1; i < trace.size(); ++i) {
    if (trace[i] > trace[i - 1] * (1.0 + 1e-9) + 1e-15) return false;
  }
  return true;
}

// Frame-side verdict from bounds and the refinement trace of the minimum.
Verdict classify(double lower, double upper, double norm2, const std::vector<double>& trace,
                 const Tolerances& tol, bool frame_side = true) {
  if (!trace.empty() && non_increasing(trace) && lower < tol.not_frame_rel * upper) {
    return frame_side ? Verdict::kNotFrame : Verdict::kNotRiesz;
  }
  if (lower / norm2 > tol.frame_tol) {
    if (!frame_side) return Verdict::kRieszSequence;
    return (upper - lower) <= tol.tight_tol * upper ? Verdict::kTight : Verdict::kFrame;
  }
  return Verdict::kInconclusive;
}

void apply_frame_guard(FrameDiagnosis& d, const Lattice& lat) {
  const DensityGuard guard = density_guard(lat);
  if (!guard.frame_possible()) {
    d.verdict = Verdict::kNotFrame;
    d.caveats.push_back("density guard: vol > 1 excludes a frame");
  }
}

struct Extremes {
  double min = kInf;
  double max = -kInf;
  double min_x = 0.0, min_y = 0.0;
  double max_x = 0.0, max_y = 0.0;
  std::vector<double> min_trace;
};

// Evaluates f(x, y) -> {low, high} on [0, X) x [0, Y) (y fixed at 0 when
// ny == 1), then refines on 9-point stencils around the argmin and argmax.
template <class F>
Extremes grid_search(F&& f, double X, double Y, long nx, long ny, int levels, int factor) {
  Extremes e;
  auto visit_min = [&](double x, double y, double v) {
    if (v < e.min) {
      e.min = v;
      e.min_x = x;
      e.min_y = y;
    }
  };
  auto visit_max = [&](double x, double y, double v) {
    if (v > e.max) {
      e.max = v;
      e.max_x = x;
      e.max_y = y;
    }
  };
  for (long i = 0; i < nx; ++i) {
    for (long j = 0; j < ny; ++j) {
      const double x = X * static_cast<double>(i) / static_cast<double>(nx);
      const double y = ny > 1 ? Y * static_cast<double>(j) / static_cast<double>(ny) : 0.0;
      const auto [lo, hi] = f(x, y);
      visit_min(x, y, lo);
      visit_max(x, y, hi);
    }
  }
  e.min_trace.push_back(e.min);
  double hx = X / static_cast<double>(nx);
  double hy = ny > 1 ? Y / static_cast<double>(ny) : 0.0;
  const int jy = ny > 1 ? kStencilHalf : 0;
  for (int level = 0; level < levels; ++level) {
    hx /= factor;
    hy /= factor;
    const double cx = e.min_x, cy = e.min_y;
    const double mx = e.max_x, my = e.max_y;
    for (int a = -kStencilHalf; a <= kStencilHalf; ++a) {
      for (int b = -jy; b <= jy; ++b) {
        if (a == 0 && b == 0) continue;
        const double x1 = cx + a * hx, y1 = cy + b * hy;
        visit_min(x1, y1, f(x1, y1).first);
        const double x2 = mx + a * hx, y2 = my + b * hy;
        visit_max(x2, y2, f(x2, y2).second);
      }
    }
    e.min_trace.push_back(e.min);
  }
  return e;
}

std::vector<double> scaled(std::vector<double> v, double s) {
  for (double& x : v) x *= s;
  return v;
}

// V_g g at the points lat.point(d), d in [-R, R]^2. Entries that the decay
// envelope puts below kNegligibleEntry * ||g||^2 are left at zero; their
// envelope bound is kept and reported by skipped_bound().
class AutoCorrelation {
 public:
  AutoCorrelation(const Window& g, const Lattice& lat, long radius)
      : radius_(radius), side_(2 * radius + 1), values_(side_ * side_) {
    const DecayEnvelope env = decay_envelope(g);
    const double norm2 = g.l2_norm() * g.l2_norm();
    for (long d1 = -radius; d1 <= radius; ++d1) {
      for (long d2 = -radius; d2 <= radius; ++d2) {
        if (d1 < 0 || (d1 == 0 && d2 < 0)) continue;
        const PhasePoint z = lat.point(d1, d2);
        Complex v = 0.0;
        const double bound = env(z.norm());
        if (bound > kNegligibleEntry * norm2) {
          v = stft(g, g, z);
        } else {
          skipped_bound_[key(d1, d2)] = bound;
        }
        at(d1, d2) = v;
        // V_g g(-z) = e^{-2 pi i xi x} conj(V_g g(z))
        if (d1 != 0 || d2 != 0) at(-d1, -d2) = unit_phase(-z.xi * z.x) * std::conj(v);
      }
    }
  }

  const Complex& operator()(long d1, long d2) const { return values_[index(d1, d2)]; }

  /// Envelope bound used for an entry that was not integrated (0 otherwise).
  double skipped_bound(long d1, long d2) const {
    if (d1 < 0 || (d1 == 0 && d2 < 0)) {
      d1 = -d1;
      d2 = -d2;
    }
    const auto it = skipped_bound_.find(key(d1, d2));
    return it == skipped_bound_.end() ? 0.0 : it->second;
  }

 private:
  std::size_t index(long d1, long d2) const {
    return static_cast<std::size_t>((d1 + radius_) * side_ + (d2 + radius_));
  }
  Complex& at(long d1, long d2) { return values_[index(d1, d2)]; }
  long key(long d1, long d2) const { return (d1 + radius_) * side_ + (d2 + radius_); }

  long radius_;
  long side_;
  std::vector<Complex> values_;
  std::unordered_map<long, double> skipped_bound_;
};

std::vector<std::size_t> inner_box(long trunc, long inner) {
  std::vector<std::size_t> idx;
  const long side = 2 * trunc + 1;
  for (long k1 = -inner; k1 <= inner; ++k1) {
    for (long k2 = -inner; k2 <= inner; ++k2) {
      idx.push_back(static_cast<std::size_t>((k1 + trunc) * side + (k2 + trunc)));
    }
  }
  return idx;
}

double quad_tol(const Window& g) {
  return 1e-11 * std::max(1.0, g.l2_norm() * g.l2_norm());
}

}  // namespace

double FrameDiagnosis::param(const std::string& key, double fallback) const {
  for (const auto& [k, v] : params) {
    if (k == key) return v;
  }
  return fallback;
}

const char* verdict_name(Verdict v) noexcept {
  switch (v) {
    case Verdict::kFrame: return "Frame";
    case Verdict::kNotFrame: return "NotFrame";
    case Verdict::kRieszSequence: return "RieszSequence";
    case Verdict::kNotRiesz: return "NotRiesz";
    case Verdict::kTight: return "Tight";
    case Verdict::kInconclusive: return "Inconclusive";
  }
  return "Inconclusive";
}

const char* density_class_name(DensityClass c) noexcept {
  switch (c) {
    case DensityClass::kOkFrameSide: return "OkFrameSide";
    case DensityClass::kOkRieszSide: return "OkRieszSide";
    case DensityClass::kViolatesFrameNecessity: return "ViolatesFrameNecessity";
    case DensityClass::kViolatesRieszNecessity: return "ViolatesRieszNecessity";
  }
  return "Unknown";
}

DensityGuard density_guard(const Lattice& lat) {
  DensityGuard g;
  g.volume = volume(lat);
  if (!(g.volume > 0.0)) throw Error(ErrorCode::kSingular, "density_guard: singular lattice");
  g.frame_side = g.volume <= 1.0 + kUnitTol ? DensityClass::kOkFrameSide
                                            : DensityClass::kViolatesFrameNecessity;
  g.riesz_side = g.volume >= 1.0 - kUnitTol ? DensityClass::kOkRieszSide
                                            : DensityClass::kViolatesRieszNecessity;
  return g;
}

// -- fiber matrices -------------------------------------------------------------

namespace {

CMatrix zz_matrix_with(const ZakEvaluator& zak, const RectLattice& r, const RationalStructure& rs,
                       double x, double xi) {
  const long p = rs.p, q = rs.q;
  CMatrix m(static_cast<std::size_t>(q), static_cast<std::size_t>(p));
  const double step = static_cast<double>(p) / (r.beta * static_cast<double>(q));
  for (long row = 0; row < q; ++row) {
    for (long s = 0; s < p; ++s) {
      m(row, s) = zak.value(x + step * static_cast<double>(row),
                            r.beta * xi + r.beta * static_cast<double>(s) / static_cast<double>(p));
    }
  }
  return m;
}

}  // namespace

CMatrix zz_matrix(const Window& g, const RectLattice& r, const RationalStructure& rs, double x,
                  double xi) {
  return zz_matrix_with(ZakEvaluator(g, 1.0 / r.beta), r, rs, x, xi);
}

CMatrix pre_gramian(const Window& g, const RectLattice& r, double x, long trunc) {
  const long side = 2 * trunc + 1;
  CMatrix m(static_cast<std::size_t>(side), static_cast<std::size_t>(side));
  for (long j = -trunc; j <= trunc; ++j) {
    for (long k = -trunc; k <= trunc; ++k) {
      m(j + trunc, k + trunc) = std::conj(g.eval(x + r.alpha * j - k / r.beta));
    }
  }
  return m;
}

CMatrix ron_shen_matrix(const Window& g, const RectLattice& r, double x, long trunc) {
  if (trunc < 0) throw Error(ErrorCode::kInvalidArgument, "ron_shen_matrix: trunc < 0");
  const long side = 2 * trunc + 1;
  const Interval e = g.effective_support();
  const double reach = static_cast<double>(trunc) / r.beta;
  const long j0 = static_cast<long>(std::ceil((e.lo - reach - x) / r.alpha));
  const long j1 = static_cast<long>(std::floor((e.hi + reach - x) / r.alpha));
  CMatrix m(static_cast<std::size_t>(side), static_cast<std::size_t>(side));
  std::vector<Complex> v(static_cast<std::size_t>(side));
  for (long j = j0; j <= j1; ++j) {
    bool any = false;
    for (long k = -trunc; k <= trunc; ++k) {
      v[k + trunc] = g.eval(x + r.alpha * static_cast<double>(j) - static_cast<double>(k) / r.beta);
      any = any || v[k + trunc] != 0.0;
    }
    if (!any) continue;
    for (long a = 0; a < side; ++a) {
      if (v[a] == 0.0) continue;
      for (long b = 0; b < side; ++b) m(a, b) += v[a] * std::conj(v[b]);
    }
  }
  return m;
}

CMatrix gramian_section(const Window& g, const Lattice& lat, long trunc) {
  if (trunc < 0) throw Error(ErrorCode::kInvalidArgument, "gramian_section: trunc < 0");
  const AutoCorrelation corr(g, lat, 2 * trunc);
  const long side = 2 * trunc + 1;
  const std::size_t dim = static_cast<std::size_t>(side * side);
  CMatrix m(dim, dim);
  auto idx = [&](long k1, long k2) { return static_cast<std::size_t>((k1 + trunc) * side + (k2 + trunc)); };
  for (long a1 = -trunc; a1 <= trunc; ++a1) {
    for (long a2 = -trunc; a2 <= trunc; ++a2) {
      const std::size_t ia = idx(a1, a2);
      const PhasePoint mu = lat.point(a1, a2);
      for (long b1 = -trunc; b1 <= trunc; ++b1) {
        for (long b2 = -trunc; b2 <= trunc; ++b2) {
          const std::size_t ib = idx(b1, b2);
          if (ib < ia) continue;
          const PhasePoint nu = lat.point(b1, b2);
          // <pi(nu) g, pi(mu) g> = e^{-2 pi i (mu.xi - nu.xi) nu.x} V_g g(mu - nu)
          const Complex v = unit_phase(-(mu.xi - nu.xi) * nu.x) * corr(a1 - b1, a2 - b2);
          m(ia, ib) = v;
          m(ib, ia) = std::conj(v);
        }
      }
      m(ia, ia) = m(ia, ia).real();
    }
  }
  return m;
}

// -- Zeevi-Zibulski -------------------------------------------------------------

FrameDiagnosis zz_frame_bounds(const Window& g, const RectLattice& r, const GridSpec& grid,
                               long max_q, const Tolerances& tol) {
  if (grid.nx < 1 || grid.nxi < 1) throw Error(ErrorCode::kInvalidArgument, "zz: grid must be positive");
  if (!density_guard(Lattice(r)).frame_possible()) {
    throw Error(ErrorCode::kDensityViolation,
                "zz: alpha*beta = " + std::to_string(r.alpha * r.beta) + " > 1, no frame is possible");
  }
  const RationalStructure rs = rational_structure(r, max_q);
  if (!rs.exact) {
    throw Error(ErrorCode::kIrrationalLattice,
                "zz: alpha*beta is not rational with q <= " + std::to_string(max_q));
  }
  const ZakEvaluator zak(g, 1.0 / r.beta);
  const double scale = 1.0 / (static_cast<double>(rs.p) * r.beta);
  auto eval = [&](double x, double xi) {
    const SpectrumSummary s = singular_spectrum(zz_matrix_with(zak, r, rs, x, xi));
    return std::pair<double, double>{s.min * s.min, s.max * s.max};
  };
  const Extremes e = grid_search(eval, r.alpha, 1.0 / static_cast<double>(rs.p), grid.nx, grid.nxi,
                                 grid.refine_levels, grid.refine_factor);

  FrameDiagnosis d;
  d.criterion = "zz";
  d.lower_bound = e.min * scale;
  d.upper_bound = e.max * scale;
  d.min_trace = scaled(e.min_trace, scale);
  d.params = {{"p", static_cast<double>(rs.p)},
              {"q", static_cast<double>(rs.q)},
              {"nx", static_cast<double>(grid.nx)},
              {"nxi", static_cast<double>(grid.nxi)},
              {"refine_levels", static_cast<double>(grid.refine_levels)},
              {"refine_factor", static_cast<double>(grid.refine_factor)},
              {"argmin_x", e.min_x},
              {"argmin_xi", e.min_y},
              {"zak_tail_bound", zak.tail_bound()}};
  d.caveats.push_back(kGridCaveat);
  const double norm2 = g.l2_norm() * g.l2_norm();
  d.verdict = classify(d.lower_bound, d.upper_bound, norm2, d.min_trace, tol);
  return d;
}

// -- Ron-Shen ---------------------------------------------------------------------

FrameDiagnosis ron_shen_bounds(const Window& g, const RectLattice& r, long nx, long trunc,
                               const Tolerances& tol) {
  if (nx < 1 || trunc < 1) throw Error(ErrorCode::kInvalidArgument, "ron_shen: nx and trunc must be >= 1");
  static_cast<void>(Lattice(r));  // validates alpha, beta
  auto eval = [&](double x, double) {
    const SpectrumSummary s = hermitian_spectrum(ron_shen_matrix(g, r, x, trunc));
    return std::pair<double, double>{s.min, s.max};
  };
  const GridSpec grid;
  const Extremes e = grid_search(eval, r.alpha, 0.0, nx, 1, grid.refine_levels, grid.refine_factor);
  const double scale = 1.0 / r.beta;
  const double extended = hermitian_spectrum(ron_shen_matrix(g, r, e.min_x, trunc + 5)).min;

  FrameDiagnosis d;
  d.criterion = "ronshen";
  d.min_trace = scaled(e.min_trace, scale);
  d.min_trace.push_back(extended * scale);
  d.lower_bound = std::max(0.0, d.min_trace.back());
  d.upper_bound = e.max * scale;
  d.params = {{"trunc", static_cast<double>(trunc)},
              {"nx", static_cast<double>(nx)},
              {"refine_levels", static_cast<double>(grid.refine_levels)},
              {"argmin_x", e.min_x},
              {"lambda_min_trunc", e.min * scale},
              {"lambda_min_trunc_plus_5", extended * scale}};
  d.caveats.push_back(kGridCaveat);
  d.caveats.push_back(kInterlacingCaveat);
  const double norm2 = g.l2_norm() * g.l2_norm();
  d.verdict = classify(d.lower_bound, d.upper_bound, norm2, d.min_trace, tol);
  if ((d.verdict == Verdict::kFrame || d.verdict == Verdict::kTight) && extended < 0.95 * e.min) {
    d.verdict = Verdict::kInconclusive;
    d.caveats.push_back("lambda_min not stable under trunc -> trunc + 5");
  }
  apply_frame_guard(d, Lattice(r));
  return d;
}

FrameDiagnosis ron_shen_single_point(const Window& g, const RectLattice& r, double x0, long trunc,
                                     long max_q, const Tolerances& tol) {
  if (trunc < 1) throw Error(ErrorCode::kInvalidArgument, "ron_shen_single_point: trunc < 1");
  const RationalStructure rs = rational_structure(r, max_q);
  if (rs.exact) {
    throw Error(ErrorCode::kRationalLattice,
                "ron_shen_single_point: alpha*beta = " + std::to_string(rs.p) + "/" +
                    std::to_string(rs.q) + " is rational");
  }
  const double scale = 1.0 / r.beta;
  FrameDiagnosis d;
  d.criterion = "ronshen-point";
  double upper = 0.0;
  const long truncs[] = {trunc, trunc + 5, 2 * trunc};
  for (long n : truncs) {
    const SpectrumSummary s = hermitian_spectrum(ron_shen_matrix(g, r, x0, n));
    d.min_trace.push_back(s.min * scale);
    upper = std::max(upper, s.max * scale);
  }
  d.lower_bound = std::max(0.0, d.min_trace.back());
  d.upper_bound = upper;
  d.params = {{"x0", x0},
              {"trunc", static_cast<double>(trunc)},
              {"wiener_amalgam_norm", wiener_amalgam_norm(g)}};
  d.caveats.push_back("irrational-criterion: single-point evidence");
  d.caveats.push_back(kInterlacingCaveat);
  const double norm2 = g.l2_norm() * g.l2_norm();
  d.verdict = classify(d.lower_bound, d.upper_bound, norm2, d.min_trace, tol);
  if ((d.verdict == Verdict::kFrame || d.verdict == Verdict::kTight) &&
      d.min_trace[1] < 0.95 * d.min_trace[0]) {
    d.verdict = Verdict::kInconclusive;
    d.caveats.push_back("lambda_min not stable under trunc -> trunc + 5");
  }
  apply_frame_guard(d, Lattice(r));
  return d;
}

// -- Gramians ---------------------------------------------------------------------

namespace {

struct SectionSpectrum {
  SpectrumSummary full;
  double inner_min = 0.0;
};

SectionSpectrum section_spectrum(const CMatrix& m, long trunc) {
  SectionSpectrum out;
  out.full = hermitian_spectrum(m);
  const auto idx = inner_box(trunc, trunc / 2);
  out.inner_min = hermitian_spectrum(m.principal_submatrix(idx)).min;
  return out;
}

void add_tail_param(FrameDiagnosis& d, const Window& g, const Lattice& lat, long trunc) {
  const double tail = lattice_tail_bound(decay_envelope(g), lat, trunc);
  if (std::isfinite(tail)) {
    d.params.emplace_back("row_tail_bound", tail);
  } else {
    d.caveats.push_back("entry decay envelope not summable: truncation tail not certified");
  }
}

}  // namespace

FrameDiagnosis gramian_duality_bounds(const Window& g, const Lattice& lat, long trunc,
                                      const Tolerances& tol) {
  if (trunc < 1) throw Error(ErrorCode::kInvalidArgument, "gramian: trunc < 1");
  const Lattice adj = adjoint_lattice(lat);
  const double vol = volume(lat);
  const SectionSpectrum s = section_spectrum(gramian_section(g, adj, trunc), trunc);

  FrameDiagnosis d;
  d.criterion = "gramian";
  d.lower_bound = std::max(0.0, s.full.min / vol);
  d.upper_bound = s.full.max / vol;
  d.min_trace = {s.inner_min / vol, s.full.min / vol};
  d.params = {{"trunc", static_cast<double>(trunc)},
              {"volume", vol},
              {"adjoint_riesz_lower", s.full.min},
              {"adjoint_riesz_upper", s.full.max}};
  d.caveats.push_back(kInterlacingCaveat);
  add_tail_param(d, g, adj, trunc);
  const double norm2 = g.l2_norm() * g.l2_norm();
  d.verdict = classify(d.lower_bound, d.upper_bound, norm2, d.min_trace, tol);
  apply_frame_guard(d, lat);
  const Verdict riesz = classify(s.full.min, s.full.max, norm2, {s.inner_min, s.full.min}, tol, false);
  d.caveats.push_back(std::string("adjoint system: ") + verdict_name(riesz));
  return d;
}

FrameDiagnosis riesz_sequence_bounds(const Window& g, const Lattice& lat, long trunc,
                                     const Tolerances& tol) {
  if (trunc < 1) throw Error(ErrorCode::kInvalidArgument, "riesz: trunc < 1");
  const SectionSpectrum s = section_spectrum(gramian_section(g, lat, trunc), trunc);
  FrameDiagnosis d;
  d.criterion = "riesz";
  d.lower_bound = std::max(0.0, s.full.min);
  d.upper_bound = s.full.max;
  d.min_trace = {s.inner_min, s.full.min};
  d.params = {{"trunc", static_cast<double>(trunc)}, {"volume", volume(lat)}};
  d.caveats.push_back(kInterlacingCaveat);
  add_tail_param(d, g, lat, trunc);
  const double norm2 = g.l2_norm() * g.l2_norm();
  d.verdict = classify(d.lower_bound, d.upper_bound, norm2, d.min_trace, tol, false);
  if (!density_guard(lat).riesz_possible()) {
    d.verdict = Verdict::kNotRiesz;
    d.caveats.push_back("density guard: vol < 1 excludes a Riesz sequence");
  }
  return d;
}

FrameDiagnosis tight_frame_check(const Window& g, const Lattice& lat, long trunc,
                                 const Tolerances& tol) {
  if (trunc < 1) throw Error(ErrorCode::kInvalidArgument, "tight: trunc < 1");
  const Lattice adj = adjoint_lattice(lat);
  const double vol = volume(lat);
  const double norm2 = g.l2_norm() * g.l2_norm();
  const AutoCorrelation corr(g, adj, trunc);
  double max_off = 0.0;
  double sum_off = 0.0;
  for (long d1 = -trunc; d1 <= trunc; ++d1) {
    for (long d2 = -trunc; d2 <= trunc; ++d2) {
      if (d1 == 0 && d2 == 0) continue;
      const double v = std::abs(corr(d1, d2)) + corr.skipped_bound(d1, d2);
      max_off = std::max(max_off, v);
      sum_off += v;
    }
  }
  FrameDiagnosis d;
  d.criterion = "tight";
  d.params = {{"trunc", static_cast<double>(trunc)}, {"max_offdiag", max_off}};
  d.caveats.push_back("orthogonality of the adjoint system checked on the index box only");
  if (max_off <= tol.tight_tol * norm2) {
    d.verdict = Verdict::kTight;
    d.lower_bound = d.upper_bound = norm2 / vol;
  } else {
    d.verdict = Verdict::kInconclusive;
    const double tail = lattice_tail_bound(decay_envelope(g), adj, trunc);
    d.lower_bound = 0.0;
    d.upper_bound = (norm2 + sum_off + tail) / vol;
    d.caveats.push_back("not tight: max off-diagonal |<g, pi(mu) g>| = " + fmt(max_off));
  }
  apply_frame_guard(d, lat);
  return d;
}

namespace {

// Exact tail of sum |V_g g(mu)| outside the index box for g = 1_[a, a + w) on
// a rectangular lattice. The adjoint points are (k / b, j / a) and
// |V_g g(x, w)| = |sin(pi w l) / (pi w)| with overlap l = w - |x|, so a column
// with l / a integral vanishes for j != 0 and contributes l at j = 0; any
// other column sums like a harmonic series.
double char_interval_tail(const Window& g, const RectLattice& r, long trunc) {
  const Interval supp = *g.support();
  const double w = supp.length();
  double tail = 0.0;
  const long kmax = static_cast<long>(std::ceil(w * r.beta));
  for (long k = -kmax; k <= kmax; ++k) {
    const double ell = w - std::abs(static_cast<double>(k)) / r.beta;
    if (!(ell > 0.0)) continue;
    const double ratio = ell / r.alpha;
    if (std::abs(ratio - std::round(ratio)) > 1e-12 * std::max(1.0, ratio)) {
      return std::numeric_limits<double>::infinity();
    }
    if (std::abs(k) > trunc) tail += ell;
  }
  return tail;
}

double schur_tail(const Window& g, const Lattice& lat, const Lattice& adj, long trunc) {
  if (g.kind() == WindowKind::kCharInterval) {
    if (auto r = lat.as_rect()) return char_interval_tail(g, *r, trunc);
  }
  return lattice_tail_bound(decay_envelope(g), adj, trunc);
}

}  // namespace

FrameDiagnosis schur_sufficient_bound(const Window& g, const Lattice& lat, long trunc,
                                      const Tolerances& tol) {
  if (trunc < 1) throw Error(ErrorCode::kInvalidArgument, "schur: trunc < 1");
  const Lattice adj = adjoint_lattice(lat);
  const double vol = volume(lat);
  const double norm2 = g.l2_norm() * g.l2_norm();
  const double tail = schur_tail(g, lat, adj, trunc);
  if (!std::isfinite(tail)) {
    throw Error(ErrorCode::kTailNotSummable,
                "schur: decay envelope of V_g g is not summable over the adjoint lattice");
  }
  const AutoCorrelation corr(g, adj, trunc);
  const double qtol = quad_tol(g);
  double sum = 0.0;
  for (long d1 = -trunc; d1 <= trunc; ++d1) {
    for (long d2 = -trunc; d2 <= trunc; ++d2) {
      if (d1 == 0 && d2 == 0) continue;
      const double skipped = corr.skipped_bound(d1, d2);
      sum += skipped > 0.0 || corr(d1, d2) == 0.0 ? skipped : std::abs(corr(d1, d2)) + qtol;
    }
  }
  const double s = (sum + tail) / norm2;
  FrameDiagnosis d;
  d.criterion = "schur";
  d.params = {{"trunc", static_cast<double>(trunc)}, {"s", s}, {"tail_bound", tail}};
  d.caveats.push_back("sufficient condition only");
  if (s < 1.0) {
    d.lower_bound = norm2 * (1.0 - s) / vol;
    d.upper_bound = norm2 * (1.0 + s) / vol;
    d.verdict = (d.upper_bound - d.lower_bound) <= tol.tight_tol * d.upper_bound ? Verdict::kTight
                                                                                 : Verdict::kFrame;
  } else {
    d.lower_bound = 0.0;
    d.upper_bound = norm2 * (1.0 + s) / vol;
    d.verdict = Verdict::kInconclusive;
  }
  apply_frame_guard(d, lat);
  return d;
}

// -- painless ---------------------------------------------------------------------

namespace {

double painless_m(const Window& g, const RectLattice& r, const Interval& supp, double x) {
  const long k0 = static_cast<long>(std::ceil((x - supp.hi) / r.alpha));
  const long k1 = static_cast<long>(std::floor((x - supp.lo) / r.alpha));
  double m = 0.0;
  for (long k = k0; k <= k1; ++k) m += std::norm(g.eval(x - r.alpha * static_cast<double>(k)));
  return m;
}

}  // namespace

bool painless_applicable(const Window& g, const RectLattice& r) {
  const auto supp = g.support();
  if (!supp) return false;
  const double len = supp->length();
  return r.alpha <= len * (1.0 + kUnitTol) && r.beta <= (1.0 / len) * (1.0 + kUnitTol);
}

FrameDiagnosis painless_check(const Window& g, const RectLattice& r, long nx,
                              const Tolerances& tol) {
  const Lattice lat(r);
  const auto supp = g.support();
  if (!supp) throw Error(ErrorCode::kNotPainless, "painless: window is not compactly supported");
  if (!painless_applicable(g, r)) {
    throw Error(ErrorCode::kNotPainless,
                "painless: need alpha <= L and beta <= 1/L with L = " + fmt(supp->length()));
  }
  if (nx < 2) throw Error(ErrorCode::kInvalidArgument, "painless: nx < 2");
  auto eval = [&](double x, double) {
    const double m = painless_m(g, r, *supp, x);
    return std::pair<double, double>{m, m};
  };
  const GridSpec grid;
  Extremes e = grid_search(eval, r.alpha, 0.0, nx, 1, grid.refine_levels, grid.refine_factor);
  // Continuous windows: the value at a knot is not a null-set outlier.
  if (g.freq_decay_order() >= 2.0) {
    for (double k : g.knots()) {
      const double x = k - r.alpha * std::floor(k / r.alpha);
      for (double t : {x, std::nextafter(x, -kInf)}) {
        const double m = painless_m(g, r, *supp, t);
        if (m < e.min) {
          e.min = m;
          e.min_x = t;
        }
        e.max = std::max(e.max, m);
      }
    }
    e.min_trace.push_back(e.min);
  }
  const double scale = 1.0 / r.beta;
  FrameDiagnosis d;
  d.criterion = "painless";
  d.lower_bound = e.min * scale;
  d.upper_bound = e.max * scale;
  d.min_trace = scaled(e.min_trace, scale);
  d.params = {{"support_length", supp->length()},
              {"nx", static_cast<double>(nx)},
              {"argmin_x", e.min_x}};
  d.caveats.push_back(kGridCaveat);
  const double norm2 = g.l2_norm() * g.l2_norm();
  d.verdict = classify(d.lower_bound, d.upper_bound, norm2, d.min_trace, tol);
  apply_frame_guard(d, lat);
  return d;
}

Window painless_dual(const Window& g, const RectLattice& r, double step) {
  const FrameDiagnosis check = painless_check(g, r);
  if (check.verdict != Verdict::kFrame && check.verdict != Verdict::kTight) {
    throw Error(ErrorCode::kNotPainless,
                std::string("painless_dual: painless check gave ") + verdict_name(check.verdict));
  }
  if (!g.is_real()) throw Error(ErrorCode::kInvalidArgument, "painless_dual: window must be real");
  if (!(step > 0.0)) throw Error(ErrorCode::kInvalidArgument, "painless_dual: step must be positive");
  const Interval supp = *g.support();
  const long n = std::max(2L, static_cast<long>(std::ceil(supp.length() / step)));
  const double h = supp.length() / static_cast<double>(n);
  std::vector<double> values(static_cast<std::size_t>(n + 1));
  for (long i = 0; i <= n; ++i) {
    double t = supp.lo + h * static_cast<double>(i);
    if (i == n) t = std::nextafter(supp.hi, supp.lo);
    const double m = painless_m(g, r, supp, t);
    values[i] = m > 0.0 ? r.beta * g.eval(t).real() / m : 0.0;
  }
  return Window::sampled(supp.lo, h, std::move(values));
}

// -- dual windows -------------------------------------------------------------------

double wexler_raz_residual(const Window& g, const Window& gamma, const Lattice& lat, long trunc) {
  if (trunc < 0) throw Error(ErrorCode::kInvalidArgument, "wexler_raz: trunc < 0");
  const Lattice adj = adjoint_lattice(lat);
  const double vol = volume(lat);
  double worst = 0.0;
  for (long k1 = -trunc; k1 <= trunc; ++k1) {
    for (long k2 = -trunc; k2 <= trunc; ++k2) {
      const Complex v = shifted_inner_product(gamma, {}, g, adj.point(k1, k2));
      const double target = (k1 == 0 && k2 == 0) ? vol : 0.0;
      worst = std::max(worst, std::abs(v - target));
    }
  }
  return worst;
}

double janssen_residual(const Window& g, const Window& gamma, const RectLattice& r, long nx,
                        long k_range) {
  if (nx < 1 || k_range < 0) throw Error(ErrorCode::kInvalidArgument, "janssen: bad grid");
  static_cast<void>(Lattice(r));
  const Interval e = gamma.effective_support();
  double worst = 0.0;
  for (long i = 0; i < nx; ++i) {
    const double x = r.alpha * static_cast<double>(i) / static_cast<double>(nx);
    const long j0 = static_cast<long>(std::ceil((e.lo - x) / r.alpha));
    const long j1 = static_cast<long>(std::floor((e.hi - x) / r.alpha));
    for (long k = -k_range; k <= k_range; ++k) {
      Complex sum = 0.0;
      for (long j = j0; j <= j1; ++j) {
        const double t = x + r.alpha * static_cast<double>(j);
        const Complex a = gamma.eval(t);
        if (a != 0.0) sum += a * std::conj(g.eval(t - static_cast<double>(k) / r.beta));
      }
      worst = std::max(worst, std::abs(sum - (k == 0 ? r.beta : 0.0)));
    }
  }
  return worst;
}

}  // namespace gaborkit
