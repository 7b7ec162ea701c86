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

#include "gaborkit/report.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <limits>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "gaborkit/error.hpp"

namespace gaborkit {

namespace {

using Json = nlohmann::ordered_json;

constexpr double kDualityTol = 0.05;

// -- serialization ---------------------------------------------------------

std::string format_double(double v) {
  if (!std::isfinite(v)) return "null";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  std::string s(buf);
  // keep floats recognizable as floats
  if (s.find_first_of(".eEn") == std::string::npos) s += ".0";
  return s;
}

void write_json(const Json& j, int indent, std::string& out) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  const std::string inner(static_cast<std::size_t>(indent + 1) * 2, ' ');
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ",\n";
        first = false;
        out += inner + Json(it.key()).dump() + ": ";
        write_json(it.value(), indent + 1, out);
      }
      out += "\n" + pad + "}";
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      const bool scalars = std::none_of(j.begin(), j.end(), [](const Json& e) {
        return e.is_structured();
      });
      if (scalars) {
        out += "[";
        for (std::size_t i = 0; i < j.size(); ++i) {
          if (i > 0) out += ", ";
          write_json(j[i], indent + 1, out);
        }
        out += "]";
        return;
      }
      out += "[\n";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i > 0) out += ",\n";
        out += inner;
        write_json(j[i], indent + 1, out);
      }
      out += "\n" + pad + "]";
      return;
    }
    case Json::value_t::number_float:
      out += format_double(j.get<double>());
      return;
    default:
      out += j.dump();
  }
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string document(Json data) {
  Json doc;
  doc["schema"] = kSchemaVersion;
  doc["data"] = std::move(data);
  doc["metadata"] = Json{{"tool", "gaborkit"}, {"version", kToolVersion},
                         {"timestamp", utc_timestamp()}};
  std::string out;
  write_json(doc, 0, out);
  out += "\n";
  return out;
}

Json lattice_json(const Lattice& lat) {
  Json j;
  j["matrix"] = {lat.a11(), lat.a12(), lat.a21(), lat.a22()};
  j["volume"] = volume(lat);
  if (auto r = lat.as_rect()) {
    j["alpha"] = r->alpha;
    j["beta"] = r->beta;
  }
  return j;
}

Json diagnosis_json(const FrameDiagnosis& d) {
  Json j;
  j["verdict"] = verdict_name(d.verdict);
  j["lower_bound"] = d.lower_bound;
  j["upper_bound"] = d.upper_bound;
  j["criterion"] = d.criterion;
  Json params = Json::object();
  for (const auto& [k, v] : d.params) params[k] = v;
  j["params"] = std::move(params);
  j["caveats"] = d.caveats;
  Json trace = Json::array();
  for (double v : d.min_trace) trace.push_back(v);
  j["min_trace"] = std::move(trace);
  return j;
}

std::string csv_double(double v) { return std::isfinite(v) ? format_double(v) : ""; }

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

// -- engines ---------------------------------------------------------------

RectLattice require_rect(const std::string& engine, const Lattice& lat) {
  auto r = lat.as_rect();
  if (!r) {
    throw Error(ErrorCode::kInvalidArgument, engine + ": requires a rectangular lattice");
  }
  return *r;
}

long trunc_or(const AnalyzeOptions& o, long fallback) { return o.trunc > 0 ? o.trunc : fallback; }

bool is_positive(Verdict v) { return v == Verdict::kFrame || v == Verdict::kTight; }

// Frame bounds of (g, adjoint) read as Riesz bounds of (g, lat).
FrameDiagnosis as_riesz_side(FrameDiagnosis d, double vol) {
  d.lower_bound /= vol;
  d.upper_bound /= vol;
  switch (d.verdict) {
    case Verdict::kFrame:
    case Verdict::kTight:
      d.verdict = Verdict::kRieszSequence;
      break;
    case Verdict::kNotFrame:
      d.verdict = Verdict::kNotRiesz;
      break;
    default:
      break;
  }
  d.criterion = "zz on adjoint lattice";
  d.caveats.push_back("Riesz bounds = frame bounds on the adjoint lattice / vol");
  return d;
}

EngineRecord run_record(const std::string& engine, const Window& g, const Lattice& lat,
                        const AnalyzeOptions& opts) {
  EngineRecord rec;
  rec.engine = engine;
  try {
    rec.diagnosis = run_engine(engine, g, lat, opts);
    rec.ok = true;
  } catch (const Error& e) {
    rec.error = error_code_name(e.code());
    rec.message = e.what();
    if (engine == "zz" && e.code() == ErrorCode::kDensityViolation) {
      // The guard decides the frame side; the adjoint system carries the
      // Riesz-side information.
      const RectLattice r = *lat.as_rect();
      rec.ok = true;
      rec.diagnosis = FrameDiagnosis{};
      rec.diagnosis.verdict = Verdict::kNotFrame;
      rec.diagnosis.lower_bound = 0.0;
      rec.diagnosis.upper_bound = std::numeric_limits<double>::quiet_NaN();
      rec.diagnosis.criterion = "density guard";
      rec.diagnosis.params = {{"volume", volume(lat)}};
      rec.diagnosis.caveats = {"vol > 1: no frame exists for any window"};
      try {
        AnalyzeOptions adj = opts;
        const FrameDiagnosis d =
            run_engine("zz", g, Lattice(RectLattice{1.0 / r.beta, 1.0 / r.alpha}), adj);
        rec.riesz_side = as_riesz_side(d, volume(lat));
      } catch (const Error&) {
        // Riesz side stays unreported; the frame-side verdict stands.
      }
    }
  } catch (const std::exception& e) {
    rec.error = error_code_name(ErrorCode::kInternal);
    rec.message = e.what();
  }
  return rec;
}

double rel_diff(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  if (scale == 0.0) return 0.0;
  return std::abs(a - b) / scale;
}

DualityCheck duality_check(const Window& g, const Lattice& lat, const AnalysisReport& report,
                           const AnalyzeOptions& opts) {
  DualityCheck dc;
  const EngineRecord* ref = nullptr;
  const EngineRecord* gram = nullptr;
  for (const auto& rec : report.records) {
    if (!rec.ok) continue;
    if (rec.engine == "gramian") {
      gram = &rec;
      continue;
    }
    if (rec.engine == "riesz" || rec.engine == "oracle" || rec.engine == "schur") continue;
    if (ref == nullptr && is_positive(rec.diagnosis.verdict)) ref = &rec;
  }
  if (ref == nullptr) {
    dc.note = "no frame-side bounds to compare";
    return dc;
  }
  const double vol = volume(lat);
  double rl = 0.0;
  double ru = 0.0;
  if (gram != nullptr && gram->diagnosis.param("adjoint_riesz_upper", -1.0) >= 0.0) {
    rl = gram->diagnosis.param("adjoint_riesz_lower");
    ru = gram->diagnosis.param("adjoint_riesz_upper");
  } else {
    try {
      const FrameDiagnosis d = riesz_sequence_bounds(g, adjoint_lattice(lat), trunc_or(opts, 12));
      rl = d.lower_bound;
      ru = d.upper_bound;
    } catch (const Error& e) {
      dc.note = std::string("adjoint Riesz bounds failed: ") + e.what();
      return dc;
    }
  }
  dc.computed = true;
  dc.reference = ref->engine;
  dc.frame_lower = ref->diagnosis.lower_bound;
  dc.frame_upper = ref->diagnosis.upper_bound;
  dc.riesz_lower_scaled = rl / vol;
  dc.riesz_upper_scaled = ru / vol;
  dc.lower_rel = rel_diff(dc.frame_lower, dc.riesz_lower_scaled);
  dc.upper_rel = rel_diff(dc.frame_upper, dc.riesz_upper_scaled);
  dc.consistent = dc.lower_rel <= kDualityTol && dc.upper_rel <= kDualityTol;
  return dc;
}

}  // namespace

const std::vector<std::string>& engine_names() {
  static const std::vector<std::string> names = {
      "zz", "ronshen", "ronshen-point", "gramian", "riesz", "schur", "painless", "tight", "oracle"};
  return names;
}

std::string auto_engine(const Window& g, const Lattice& lat, long max_q) {
  if (auto r = lat.as_rect()) {
    if (painless_applicable(g, *r)) return "painless";
    if (rational_structure(*r, max_q).exact) return "zz";
  }
  return "gramian";
}

FrameDiagnosis run_engine(const std::string& engine, const Window& g, const Lattice& lat,
                          const AnalyzeOptions& opts) {
  const GridSpec grid = opts.grid.value_or(GridSpec{});
  if (engine == "zz") return zz_frame_bounds(g, require_rect(engine, lat), grid, opts.max_q);
  if (engine == "ronshen") {
    return ron_shen_bounds(g, require_rect(engine, lat), grid.nx, trunc_or(opts, 16));
  }
  if (engine == "ronshen-point") {
    return ron_shen_single_point(g, require_rect(engine, lat), 0.0, trunc_or(opts, 16));
  }
  if (engine == "gramian") return gramian_duality_bounds(g, lat, trunc_or(opts, 12));
  if (engine == "riesz") return riesz_sequence_bounds(g, lat, trunc_or(opts, 12));
  if (engine == "tight") return tight_frame_check(g, lat, trunc_or(opts, 12));
  if (engine == "schur") return schur_sufficient_bound(g, lat, trunc_or(opts, 8));
  if (engine == "painless") return painless_check(g, require_rect(engine, lat));
  if (engine == "oracle") {
    const OracleResult o = oracle_frame_bounds(g, lat, opts.oracle);
    FrameDiagnosis d;
    d.verdict = Verdict::kInconclusive;
    d.lower_bound = o.lower;
    d.upper_bound = o.upper;
    d.criterion = "discretized frame operator";
    d.params = {{"T", o.options.T},
                {"h", o.options.h},
                {"M", static_cast<double>(o.options.M)},
                {"probes", static_cast<double>(o.probes)},
                {"atoms", static_cast<double>(o.atoms)},
                {"relative_change", o.relative_change},
                {"atom_norm_error", o.atom_norm_error}};
    d.caveats = {"brute-force estimate for validation; not a criterion"};
    return d;
  }
  throw Error(ErrorCode::kInvalidArgument, "engines: unknown engine '" + engine + "'");
}

AnalysisReport analyze(const Window& g, const Lattice& lat, const AnalyzeOptions& opts) {
  const auto& known = engine_names();
  for (const auto& e : opts.engines) {
    if (std::find(known.begin(), known.end(), e) == known.end()) {
      throw Error(ErrorCode::kInvalidArgument, "engines: unknown engine '" + e + "'");
    }
  }
  if (opts.max_q < 1) throw Error(ErrorCode::kInvalidArgument, "max-q: must be >= 1");
  AnalysisReport report;
  report.window = g.describe();
  report.lattice = lat;
  report.engines = opts.engines;
  if (report.engines.empty()) {
    report.engines = {auto_engine(g, lat, opts.max_q)};
    report.auto_selected = true;
  }
  for (const auto& e : report.engines) report.records.push_back(run_record(e, g, lat, opts));

  bool any_ok = false;
  bool any_positive = false;
  bool all_positive_tight = true;
  bool any_negative = false;
  for (const auto& rec : report.records) {
    if (!rec.ok) continue;
    any_ok = true;
    if (rec.engine == "riesz" || rec.engine == "oracle") continue;
    const Verdict v = rec.diagnosis.verdict;
    if (is_positive(v)) {
      any_positive = true;
      if (v != Verdict::kTight) all_positive_tight = false;
    }
    if (v == Verdict::kNotFrame) any_negative = true;
  }
  report.agree = !(any_positive && any_negative);
  if (!report.agree) {
    report.verdict = Verdict::kInconclusive;
  } else if (any_negative) {
    report.verdict = Verdict::kNotFrame;
  } else if (any_positive) {
    report.verdict = all_positive_tight ? Verdict::kTight : Verdict::kFrame;
  } else if (report.engines.size() == 1 && report.engines[0] == "riesz" && any_ok) {
    report.verdict = report.records[0].diagnosis.verdict;
  }
  report.exit_code = !any_ok ? 1 : (report.agree ? 0 : 2);

  for (std::size_t i = 0; i < report.records.size(); ++i) {
    const auto& a = report.records[i];
    if (!a.ok || a.engine == "riesz") continue;
    for (std::size_t k = i + 1; k < report.records.size(); ++k) {
      const auto& b = report.records[k];
      if (!b.ok || b.engine == "riesz") continue;
      if (!std::isfinite(a.diagnosis.upper_bound) || !std::isfinite(b.diagnosis.upper_bound)) {
        continue;
      }
      report.comparisons.push_back({a.engine, b.engine,
                                    rel_diff(a.diagnosis.lower_bound, b.diagnosis.lower_bound),
                                    rel_diff(a.diagnosis.upper_bound, b.diagnosis.upper_bound)});
    }
  }
  report.duality = duality_check(g, lat, report, opts);
  return report;
}

std::string analysis_json(const AnalysisReport& report) {
  Json data;
  data["kind"] = "analysis";
  data["window"] = report.window;
  data["lattice"] = lattice_json(report.lattice);
  data["engines"] = report.engines;
  data["auto_selected"] = report.auto_selected;
  Json records = Json::array();
  for (const auto& rec : report.records) {
    Json j;
    j["engine"] = rec.engine;
    j["status"] = rec.ok ? "ok" : "error";
    if (rec.ok) {
      Json d = diagnosis_json(rec.diagnosis);
      for (auto it = d.begin(); it != d.end(); ++it) j[it.key()] = it.value();
    }
    if (!rec.error.empty()) {
      j["error"] = rec.error;
      j["message"] = rec.message;
    }
    if (rec.riesz_side) j["riesz_side"] = diagnosis_json(*rec.riesz_side);
    records.push_back(std::move(j));
  }
  data["diagnoses"] = std::move(records);
  Json cons;
  cons["verdict"] = verdict_name(report.verdict);
  cons["agree"] = report.agree;
  Json pairs = Json::array();
  for (const auto& c : report.comparisons) {
    pairs.push_back(Json{{"engines", {c.first, c.second}},
                         {"lower_rel_diff", c.lower_rel},
                         {"upper_rel_diff", c.upper_rel}});
  }
  cons["pairwise"] = std::move(pairs);
  Json dual;
  dual["computed"] = report.duality.computed;
  if (report.duality.computed) {
    dual["reference_engine"] = report.duality.reference;
    dual["frame_lower"] = report.duality.frame_lower;
    dual["frame_upper"] = report.duality.frame_upper;
    dual["adjoint_riesz_lower_over_vol"] = report.duality.riesz_lower_scaled;
    dual["adjoint_riesz_upper_over_vol"] = report.duality.riesz_upper_scaled;
    dual["lower_rel_diff"] = report.duality.lower_rel;
    dual["upper_rel_diff"] = report.duality.upper_rel;
    dual["tolerance"] = kDualityTol;
    dual["consistent"] = report.duality.consistent;
  }
  if (!report.duality.note.empty()) dual["note"] = report.duality.note;
  cons["duality"] = std::move(dual);
  data["consistency"] = std::move(cons);
  data["exit_code"] = report.exit_code;
  return document(std::move(data));
}

std::string analysis_csv(const AnalysisReport& report) {
  std::string out = "engine,status,verdict,lower_bound,upper_bound,error\n";
  for (const auto& rec : report.records) {
    out += csv_field(rec.engine) + "," + (rec.ok ? "ok" : "error") + ",";
    if (rec.ok) {
      out += std::string(verdict_name(rec.diagnosis.verdict)) + "," +
             csv_double(rec.diagnosis.lower_bound) + "," + csv_double(rec.diagnosis.upper_bound);
    } else {
      out += ",,";
    }
    out += "," + csv_field(rec.error) + "\n";
  }
  return out;
}

double axis_value(double lo, double hi, long steps, long i) {
  if (steps <= 1) return lo;
  return lo + static_cast<double>(i) * (hi - lo) / static_cast<double>(steps - 1);
}

SweepReport sweep(const Window& g, const SweepOptions& opts) {
  if (opts.steps < 1) throw Error(ErrorCode::kInvalidArgument, "steps: must be >= 1");
  if (!(opts.alpha_lo > 0.0) || !(opts.alpha_hi >= opts.alpha_lo)) {
    throw Error(ErrorCode::kInvalidArgument, "alpha: range must be positive and ordered");
  }
  if (!(opts.beta_lo > 0.0) || !(opts.beta_hi >= opts.beta_lo)) {
    throw Error(ErrorCode::kInvalidArgument, "beta: range must be positive and ordered");
  }
  const auto& known = engine_names();
  if (std::find(known.begin(), known.end(), opts.engine) == known.end()) {
    throw Error(ErrorCode::kInvalidArgument, "engines: unknown engine '" + opts.engine + "'");
  }
  if (opts.max_q < 1) throw Error(ErrorCode::kInvalidArgument, "max-q: must be >= 1");

  SweepReport report;
  report.window = g.describe();
  report.options = opts;
  const std::size_t n = static_cast<std::size_t>(opts.steps * opts.steps);
  report.cells.resize(n);

  AnalyzeOptions aopts;
  aopts.trunc = opts.trunc;
  aopts.grid = opts.grid;
  aopts.max_q = opts.max_q;

  auto eval_cell = [&](std::size_t idx) {
    SweepCell& cell = report.cells[idx];
    const long i = static_cast<long>(idx) / opts.steps;
    const long k = static_cast<long>(idx) % opts.steps;
    cell.alpha = axis_value(opts.alpha_lo, opts.alpha_hi, opts.steps, i);
    cell.beta = axis_value(opts.beta_lo, opts.beta_hi, opts.steps, k);
    cell.lower_bound = std::numeric_limits<double>::quiet_NaN();
    cell.upper_bound = std::numeric_limits<double>::quiet_NaN();
    const RectLattice r{cell.alpha, cell.beta};
    try {
      const FrameDiagnosis d = run_engine(opts.engine, g, Lattice(r), aopts);
      cell.verdict = verdict_name(d.verdict);
      cell.lower_bound = d.lower_bound;
      cell.upper_bound = d.upper_bound;
    } catch (const Error& e) {
      if (e.code() == ErrorCode::kDensityViolation) {
        cell.verdict = verdict_name(Verdict::kNotFrame);
        cell.lower_bound = 0.0;
      } else {
        cell.verdict = "Skipped";
        cell.skipped_reason = std::string(error_code_name(e.code())) + ": " + e.what();
      }
    } catch (const std::exception& e) {
      cell.verdict = "Skipped";
      cell.skipped_reason = std::string("Internal: ") + e.what();
    }
  };

  const unsigned workers =
      std::max(1u, std::min<unsigned>(opts.threads > 0 ? opts.threads : worker_count(),
                                      static_cast<unsigned>(n)));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t idx = next.fetch_add(1); idx < n; idx = next.fetch_add(1)) eval_cell(idx);
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  return report;
}

std::string sweep_csv(const SweepReport& report) {
  std::string out =
      "alpha,beta,alpha_beta,verdict,lower_bound,upper_bound,cell_skipped_reason\n";
  for (const auto& c : report.cells) {
    out += format_double(c.alpha) + "," + format_double(c.beta) + "," +
           format_double(c.alpha * c.beta) + "," + c.verdict + "," + csv_double(c.lower_bound) +
           "," + csv_double(c.upper_bound) + "," + csv_field(c.skipped_reason) + "\n";
  }
  return out;
}

std::string sweep_json(const SweepReport& report) {
  const SweepOptions& o = report.options;
  const GridSpec grid = o.grid.value_or(GridSpec{});
  Json data;
  data["kind"] = "sweep";
  data["window"] = report.window;
  data["engine"] = o.engine;
  data["alpha_range"] = {o.alpha_lo, o.alpha_hi};
  data["beta_range"] = {o.beta_lo, o.beta_hi};
  data["steps"] = o.steps;
  data["resolution"] = Json{{"max_q", o.max_q}, {"trunc", o.trunc},
                            {"grid_nx", grid.nx}, {"grid_nxi", grid.nxi}};
  Json cells = Json::array();
  for (const auto& c : report.cells) {
    Json j;
    j["alpha"] = c.alpha;
    j["beta"] = c.beta;
    j["alpha_beta"] = c.alpha * c.beta;
    j["verdict"] = c.verdict;
    j["lower_bound"] = c.lower_bound;
    j["upper_bound"] = c.upper_bound;
    j["cell_skipped_reason"] = c.skipped_reason;
    cells.push_back(std::move(j));
  }
  data["cells"] = std::move(cells);
  return document(std::move(data));
}

DualReport verify_dual(const Window& g, const Window& gamma, const Lattice& lat) {
  DualReport rep;
  rep.window = g.describe();
  rep.gamma = gamma.describe();
  rep.lattice = lat;
  rep.wexler_raz = wexler_raz_residual(g, gamma, lat);
  if (auto r = lat.as_rect()) rep.janssen = janssen_residual(g, gamma, *r);
  rep.pass = rep.wexler_raz < rep.threshold && (!rep.janssen || *rep.janssen < rep.threshold);
  return rep;
}

std::string dual_json(const DualReport& report) {
  Json data;
  data["kind"] = "verify-dual";
  data["window"] = report.window;
  data["gamma"] = report.gamma;
  data["lattice"] = lattice_json(report.lattice);
  data["threshold"] = report.threshold;
  data["wexler_raz_residual"] = report.wexler_raz;
  data["wexler_raz_pass"] = report.wexler_raz < report.threshold;
  if (report.janssen) {
    data["janssen_residual"] = *report.janssen;
    data["janssen_pass"] = *report.janssen < report.threshold;
  } else {
    data["janssen_residual"] = nullptr;
    data["janssen_note"] = "requires a rectangular lattice";
  }
  data["pass"] = report.pass;
  return document(std::move(data));
}

unsigned worker_count() {
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("GABORKIT_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return hw;
}

}  // namespace gaborkit
