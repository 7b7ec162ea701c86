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

#include "gaborkit/gaborkit.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "gaborkit/criteria.hpp"
#include "gaborkit/error.hpp"
#include "gaborkit/lattice.hpp"
#include "gaborkit/report.hpp"
#include "gaborkit/windows.hpp"
#include "gaborkit/zak.hpp"

struct gk_window {
  gaborkit::Window w;
};

struct gk_lattice {
  gaborkit::Lattice l;
};

namespace {

thread_local std::string g_last_error;

gk_status fail(gk_status s, const std::string& msg) {
  g_last_error = msg;
  return s;
}

// Runs body, mapping exceptions to status codes.
template <typename F>
gk_status guarded(F&& body) {
  try {
    body();
    g_last_error.clear();
    return GK_OK;
  } catch (const gaborkit::Error& e) {
    return fail(static_cast<gk_status>(static_cast<int>(e.code())), e.what());
  } catch (const std::bad_alloc&) {
    return fail(GK_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(GK_INTERNAL, e.what());
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

gk_verdict to_c(gaborkit::Verdict v) {
  switch (v) {
    case gaborkit::Verdict::kFrame: return GK_FRAME;
    case gaborkit::Verdict::kNotFrame: return GK_NOT_FRAME;
    case gaborkit::Verdict::kRieszSequence: return GK_RIESZ_SEQUENCE;
    case gaborkit::Verdict::kNotRiesz: return GK_NOT_RIESZ;
    case gaborkit::Verdict::kTight: return GK_TIGHT;
    case gaborkit::Verdict::kInconclusive: return GK_INCONCLUSIVE;
  }
  return GK_INCONCLUSIVE;
}

std::vector<std::string> split_engines(const char* s) {
  std::vector<std::string> out;
  if (s == nullptr) return out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) {
      throw gaborkit::Error(gaborkit::ErrorCode::kInvalidArgument, "engines: empty engine name");
    }
    out.push_back(item.substr(b, e - b + 1));
  }
  return out;
}

std::optional<gaborkit::GridSpec> grid_from(long nx, long nxi) {
  if (nx <= 0) return std::nullopt;
  gaborkit::GridSpec g;
  g.nx = nx;
  g.nxi = nxi > 0 ? nxi : nx;
  return g;
}

#define GK_REQUIRE(cond, what)                                                   \
  do {                                                                           \
    if (!(cond)) return fail(GK_INVALID_ARGUMENT, std::string(what) + ": null"); \
  } while (0)

}  // namespace

extern "C" {

const char* gk_version(void) { return gaborkit::kToolVersion; }

const char* gk_last_error(void) { return g_last_error.c_str(); }

const char* gk_status_name(gk_status s) {
  if (s == GK_OK) return "Ok";
  return gaborkit::error_code_name(static_cast<gaborkit::ErrorCode>(static_cast<int>(s)));
}

const char* gk_verdict_name(gk_verdict v) {
  switch (v) {
    case GK_FRAME: return gaborkit::verdict_name(gaborkit::Verdict::kFrame);
    case GK_NOT_FRAME: return gaborkit::verdict_name(gaborkit::Verdict::kNotFrame);
    case GK_RIESZ_SEQUENCE: return gaborkit::verdict_name(gaborkit::Verdict::kRieszSequence);
    case GK_NOT_RIESZ: return gaborkit::verdict_name(gaborkit::Verdict::kNotRiesz);
    case GK_TIGHT: return gaborkit::verdict_name(gaborkit::Verdict::kTight);
    case GK_INCONCLUSIVE: return gaborkit::verdict_name(gaborkit::Verdict::kInconclusive);
  }
  return "Unknown";
}

void gk_string_free(char* s) { std::free(s); }

gk_status gk_window_parse(const char* spec, gk_window** out) {
  GK_REQUIRE(spec, "spec");
  GK_REQUIRE(out, "out");
  *out = nullptr;
  return guarded([&] { *out = new gk_window{gaborkit::parse_window(spec)}; });
}

void gk_window_free(gk_window* w) { delete w; }

gk_status gk_window_eval(const gk_window* w, double t, double* re, double* im) {
  GK_REQUIRE(w, "window");
  GK_REQUIRE(re && im, "out");
  return guarded([&] {
    const auto v = w->w.eval(t);
    *re = v.real();
    *im = v.imag();
  });
}

gk_status gk_window_l2_norm(const gk_window* w, double* out) {
  GK_REQUIRE(w, "window");
  GK_REQUIRE(out, "out");
  return guarded([&] { *out = w->w.l2_norm(); });
}

gk_status gk_window_describe(const gk_window* w, char** out) {
  GK_REQUIRE(w, "window");
  GK_REQUIRE(out, "out");
  return guarded([&] { *out = dup_string(w->w.describe()); });
}

gk_status gk_window_save_csv(const gk_window* w, const char* path) {
  GK_REQUIRE(w, "window");
  GK_REQUIRE(path, "path");
  return guarded([&] { gaborkit::save_window_csv(w->w, path); });
}

gk_status gk_lattice_rect(double alpha, double beta, gk_lattice** out) {
  GK_REQUIRE(out, "out");
  *out = nullptr;
  return guarded([&] { *out = new gk_lattice{gaborkit::Lattice(gaborkit::RectLattice{alpha, beta})}; });
}

gk_status gk_lattice_matrix(double a11, double a12, double a21, double a22, gk_lattice** out) {
  GK_REQUIRE(out, "out");
  *out = nullptr;
  return guarded([&] { *out = new gk_lattice{gaborkit::Lattice(a11, a12, a21, a22)}; });
}

void gk_lattice_free(gk_lattice* l) { delete l; }

gk_status gk_lattice_volume(const gk_lattice* l, double* out) {
  GK_REQUIRE(l, "lattice");
  GK_REQUIRE(out, "out");
  return guarded([&] { *out = gaborkit::volume(l->l); });
}

gk_status gk_density_guard(const gk_lattice* l, int* frame_possible, int* riesz_possible) {
  GK_REQUIRE(l, "lattice");
  GK_REQUIRE(frame_possible && riesz_possible, "out");
  return guarded([&] {
    const auto g = gaborkit::density_guard(l->l);
    *frame_possible = g.frame_possible() ? 1 : 0;
    *riesz_possible = g.riesz_possible() ? 1 : 0;
  });
}

gk_status gk_zak(const gk_window* w, double alpha, double x, double xi, double* re, double* im) {
  GK_REQUIRE(w, "window");
  GK_REQUIRE(re && im, "out");
  return guarded([&] {
    const auto z = gaborkit::zak(w->w, alpha, x, xi);
    *re = z.value.real();
    *im = z.value.imag();
  });
}

gk_status gk_diagnose(const gk_window* w, const gk_lattice* l, const char* engine,
                      gk_diagnosis* out) {
  GK_REQUIRE(w, "window");
  GK_REQUIRE(l, "lattice");
  GK_REQUIRE(engine, "engine");
  GK_REQUIRE(out, "out");
  return guarded([&] {
    const auto d = gaborkit::run_engine(engine, w->w, l->l, gaborkit::AnalyzeOptions{});
    out->verdict = to_c(d.verdict);
    out->lower_bound = d.lower_bound;
    out->upper_bound = d.upper_bound;
  });
}

void gk_analyze_options_init(gk_analyze_options* o) {
  if (o == nullptr) return;
  o->engines = nullptr;
  o->trunc = 0;
  o->grid_nx = 0;
  o->grid_nxi = 0;
  o->max_q = 64;
}

gk_status gk_analyze(const gk_window* w, const gk_lattice* l, const gk_analyze_options* o,
                     gk_format format, char** out, int* exit_code) {
  GK_REQUIRE(w, "window");
  GK_REQUIRE(l, "lattice");
  GK_REQUIRE(out, "out");
  *out = nullptr;
  return guarded([&] {
    gaborkit::AnalyzeOptions opts;
    if (o != nullptr) {
      opts.engines = split_engines(o->engines);
      opts.trunc = o->trunc;
      opts.grid = grid_from(o->grid_nx, o->grid_nxi);
      if (o->max_q > 0) opts.max_q = o->max_q;
    }
    const auto report = gaborkit::analyze(w->w, l->l, opts);
    *out = dup_string(format == GK_FORMAT_CSV ? gaborkit::analysis_csv(report)
                                              : gaborkit::analysis_json(report));
    if (exit_code != nullptr) *exit_code = report.exit_code;
  });
}

void gk_sweep_options_init(gk_sweep_options* o) {
  if (o == nullptr) return;
  const gaborkit::SweepOptions d;
  o->alpha_lo = d.alpha_lo;
  o->alpha_hi = d.alpha_hi;
  o->beta_lo = d.beta_lo;
  o->beta_hi = d.beta_hi;
  o->steps = d.steps;
  o->engine = nullptr;
  o->max_q = d.max_q;
  o->trunc = 0;
  o->grid_nx = 0;
  o->grid_nxi = 0;
  o->threads = 0;
}

gk_status gk_sweep(const gk_window* w, const gk_sweep_options* o, gk_format format, char** out) {
  GK_REQUIRE(w, "window");
  GK_REQUIRE(o, "options");
  GK_REQUIRE(out, "out");
  *out = nullptr;
  return guarded([&] {
    gaborkit::SweepOptions opts;
    opts.alpha_lo = o->alpha_lo;
    opts.alpha_hi = o->alpha_hi;
    opts.beta_lo = o->beta_lo;
    opts.beta_hi = o->beta_hi;
    opts.steps = o->steps;
    if (o->engine != nullptr && *o->engine != '\0') opts.engine = o->engine;
    if (o->max_q > 0) opts.max_q = o->max_q;
    opts.trunc = o->trunc;
    opts.grid = grid_from(o->grid_nx, o->grid_nxi);
    opts.threads = o->threads;
    const auto report = gaborkit::sweep(w->w, opts);
    *out = dup_string(format == GK_FORMAT_CSV ? gaborkit::sweep_csv(report)
                                              : gaborkit::sweep_json(report));
  });
}

gk_status gk_painless_dual(const gk_window* w, const gk_lattice* l, gk_window** out) {
  GK_REQUIRE(w, "window");
  GK_REQUIRE(l, "lattice");
  GK_REQUIRE(out, "out");
  *out = nullptr;
  return guarded([&] {
    auto r = l->l.as_rect();
    if (!r) {
      throw gaborkit::Error(gaborkit::ErrorCode::kNotPainless,
                            "painless dual: requires a rectangular lattice");
    }
    *out = new gk_window{gaborkit::painless_dual(w->w, *r)};
  });
}

gk_status gk_verify_dual(const gk_window* g, const gk_window* gamma, const gk_lattice* l,
                         char** json_out, int* passed) {
  GK_REQUIRE(g, "window");
  GK_REQUIRE(gamma, "gamma");
  GK_REQUIRE(l, "lattice");
  return guarded([&] {
    const auto rep = gaborkit::verify_dual(g->w, gamma->w, l->l);
    if (passed != nullptr) *passed = rep.pass ? 1 : 0;
    if (json_out != nullptr) *json_out = dup_string(gaborkit::dual_json(rep));
  });
}

}  // extern "C"
