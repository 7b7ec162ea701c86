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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>
#include <string>

#include <json.hpp>

#include "gaborkit/error.hpp"
#include "gaborkit/report.hpp"

using namespace gaborkit;
using nlohmann::json;

namespace {

bool throws_code(ErrorCode code, auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code() == code;
  }
  return false;
}

const EngineRecord& record(const AnalysisReport& r, const std::string& engine) {
  for (const auto& rec : r.records) {
    if (rec.engine == engine) return rec;
  }
  FAIL("missing engine record " << engine);
  return r.records.front();
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

}  // namespace

TEST_CASE("automatic engine selection") {
  CHECK(auto_engine(Window::hat(), Lattice(RectLattice{1.0, 0.5}), 64) == "painless");
  CHECK(auto_engine(Window::gaussian(), Lattice(RectLattice{1.0, 0.5}), 64) == "zz");
  CHECK(auto_engine(Window::gaussian(), Lattice(RectLattice{1.0, std::sqrt(0.5)}), 64) == "gramian");
}

TEST_CASE("indicator on Z^2: every engine reports a tight frame with bound 1") {
  AnalyzeOptions o;
  o.engines = {"zz", "gramian", "painless", "tight"};
  const AnalysisReport r = analyze(Window::char_interval(0, 1), Lattice::integer(), o);
  CHECK(r.exit_code == 0);
  CHECK(r.agree);
  CHECK(r.verdict == Verdict::kTight);
  for (const auto& rec : r.records) {
    CAPTURE(rec.engine);
    REQUIRE(rec.ok);
    CHECK(rec.diagnosis.verdict == Verdict::kTight);
    CHECK(std::abs(rec.diagnosis.lower_bound - 1.0) < 1e-6);
    CHECK(std::abs(rec.diagnosis.upper_bound - 1.0) < 1e-6);
  }
  CHECK(r.duality.computed);
  CHECK(r.duality.consistent);
}

TEST_CASE("density guard turns a sparse lattice into NotFrame plus a Riesz diagnosis") {
  AnalyzeOptions o;
  o.engines = {"zz"};
  const AnalysisReport r = analyze(Window::gaussian(), Lattice(RectLattice{1.0, 1.5}), o);
  const EngineRecord& zz = record(r, "zz");
  CHECK(zz.diagnosis.verdict == Verdict::kNotFrame);
  CHECK(zz.error == "DensityViolation");
  REQUIRE(zz.riesz_side.has_value());
  CHECK(zz.riesz_side->verdict == Verdict::kRieszSequence);
  CHECK(zz.riesz_side->lower_bound > 0.0);
  CHECK(r.exit_code == 0);
}

TEST_CASE("engine failures are recorded and exit code 1 when none succeed") {
  AnalyzeOptions o;
  o.engines = {"painless"};
  const AnalysisReport r = analyze(Window::gaussian(), Lattice(RectLattice{1.0, 0.5}), o);
  const EngineRecord& p = record(r, "painless");
  CHECK_FALSE(p.ok);
  CHECK(p.error == "NotPainless");
  CHECK(r.exit_code == 1);

  o.engines = {"painless", "zz"};
  const AnalysisReport mixed = analyze(Window::gaussian(), Lattice(RectLattice{1.0, 0.5}), o);
  CHECK(mixed.exit_code == 0);
  CHECK(mixed.verdict == Verdict::kFrame);
}

TEST_CASE("unknown engine names are rejected") {
  AnalyzeOptions o;
  o.engines = {"zz", "bogus"};
  CHECK(throws_code(ErrorCode::kInvalidArgument,
                    [&] { analyze(Window::gaussian(), Lattice::integer(), o); }));
}

TEST_CASE("Gaussian on Z x Z/2: engines agree and duality holds") {
  AnalyzeOptions o;
  o.engines = {"zz", "gramian", "ronshen"};
  const AnalysisReport r = analyze(Window::gaussian(), Lattice(RectLattice{1.0, 0.5}), o);
  CHECK(r.verdict == Verdict::kFrame);
  CHECK(r.agree);
  CHECK(r.exit_code == 0);
  CHECK(r.duality.consistent);
  for (const auto& c : r.comparisons) {
    CAPTURE(c.first);
    CAPTURE(c.second);
    CHECK(c.lower_rel < 0.05);
    CHECK(c.upper_rel < 0.05);
  }
}

TEST_CASE("analysis JSON: schema, sections and deterministic data") {
  AnalyzeOptions o;
  o.engines = {"zz", "tight"};
  const Lattice lat(RectLattice{1.0, 0.5});
  const json a = json::parse(analysis_json(analyze(Window::gaussian(), lat, o)));
  const json b = json::parse(analysis_json(analyze(Window::gaussian(), lat, o)));
  CHECK(a["schema"] == kSchemaVersion);
  CHECK(a["metadata"]["version"] == kToolVersion);
  CHECK(a["metadata"].contains("timestamp"));
  CHECK(a["data"].dump() == b["data"].dump());
  CHECK(a["data"]["diagnoses"].size() == 2);
  CHECK(a["data"]["diagnoses"][0]["verdict"] == "Frame");
  CHECK(a["data"]["lattice"]["volume"].get<double>() == doctest::Approx(0.5));
}

TEST_CASE("analysis CSV has one row per engine") {
  AnalyzeOptions o;
  o.engines = {"zz", "painless"};
  const auto rows = lines(analysis_csv(analyze(Window::gaussian(), Lattice(RectLattice{1.0, 0.5}), o)));
  REQUIRE(rows.size() == 3);
  CHECK(rows[0] == "engine,status,verdict,lower_bound,upper_bound,error");
  CHECK(rows[1].rfind("zz,ok,Frame,", 0) == 0);
  CHECK(rows[2].rfind("painless,", 0) == 0);
  CHECK(rows[2].find("NotPainless") != std::string::npos);
}

TEST_CASE("sweep grid layout and hat row at beta = 2") {
  SweepOptions o;
  o.alpha_lo = 0.25;
  o.alpha_hi = 0.75;
  o.beta_lo = 1.0;
  o.beta_hi = 2.0;
  o.steps = 3;
  const SweepReport r = sweep(Window::hat(), o);
  REQUIRE(r.cells.size() == 9);
  for (long i = 0; i < 3; ++i) {
    for (long j = 0; j < 3; ++j) {
      const SweepCell& c = r.cells[static_cast<std::size_t>(i * 3 + j)];
      CHECK(c.alpha == doctest::Approx(axis_value(0.25, 0.75, 3, i)));
      CHECK(c.beta == doctest::Approx(axis_value(1.0, 2.0, 3, j)));
    }
    CHECK(r.cells[static_cast<std::size_t>(i * 3 + 2)].verdict == "NotFrame");
  }
  const auto rows = lines(sweep_csv(r));
  REQUIRE(rows.size() == 10);
  CHECK(rows[0] == "alpha,beta,alpha_beta,verdict,lower_bound,upper_bound,cell_skipped_reason");
}

TEST_CASE("sweep output does not depend on the worker count") {
  SweepOptions o;
  o.alpha_lo = 0.5;
  o.alpha_hi = 1.25;
  o.beta_lo = 0.5;
  o.beta_hi = 1.25;
  o.steps = 4;
  o.threads = 1;
  const std::string one = sweep_csv(sweep(Window::gaussian(), o));
  o.threads = 4;
  const std::string four = sweep_csv(sweep(Window::gaussian(), o));
  CHECK(one == four);
}

TEST_CASE("sweep cells: density guard, skipped cells and the Hermite obstruction") {
  SweepOptions o;
  o.alpha_lo = 0.5;
  o.alpha_hi = 1.0;
  o.beta_lo = 1.0;
  o.beta_hi = 1.0 / std::sqrt(0.5);
  o.steps = 2;
  o.max_q = 16;
  const SweepReport r = sweep(Window::gaussian(), o);
  REQUIRE(r.cells.size() == 4);
  // (0.5, 1) frame, (0.5, sqrt 2) irrational, (1, 1) critical, (1, sqrt 2) sparse
  CHECK(r.cells[0].verdict == "Frame");
  CHECK(r.cells[1].verdict == "Skipped");
  CHECK(r.cells[1].skipped_reason.rfind("IrrationalLattice", 0) == 0);
  CHECK(r.cells[2].verdict == "NotFrame");
  CHECK(r.cells[3].verdict == "NotFrame");

  SweepOptions h;
  h.alpha_lo = 2.0 / 3.0;
  h.alpha_hi = 2.0 / 3.0;
  h.beta_lo = 1.0;
  h.beta_hi = 1.0;
  h.steps = 1;
  const SweepReport hr = sweep(Window::hermite1(), h);
  REQUIRE(hr.cells.size() == 1);
  CHECK(hr.cells[0].verdict == "NotFrame");
}

TEST_CASE("dual verification") {
  const RectLattice r{1.0, 0.5};
  const Window hat = Window::hat();
  const DualReport ok = verify_dual(hat, painless_dual(hat, r), Lattice(r));
  CHECK(ok.pass);
  CHECK(ok.wexler_raz < 1e-6);
  REQUIRE(ok.janssen.has_value());
  CHECK(*ok.janssen < 1e-6);

  const Window g = Window::gaussian();
  const DualReport bad = verify_dual(g, g, Lattice(r));
  CHECK_FALSE(bad.pass);

  const DualReport oblique = verify_dual(g, g, Lattice(1.0, 0.25, 0.0, 0.5));
  CHECK_FALSE(oblique.janssen.has_value());

  const json j = json::parse(dual_json(ok));
  CHECK(j["data"]["pass"] == true);
}
