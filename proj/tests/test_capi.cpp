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

// Exercises the shared library through the C header only.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <cstring>
#include <string>

#include "gaborkit/gaborkit.h"

TEST_CASE("version and names") {
  CHECK(std::string(gk_version()) == "0.1.0");
  CHECK(std::string(gk_status_name(GK_DENSITY_VIOLATION)) == "DensityViolation");
  CHECK(std::string(gk_verdict_name(GK_TIGHT)) == "Tight");
}

TEST_CASE("window handles") {
  gk_window* w = nullptr;
  REQUIRE(gk_window_parse("gaussian", &w) == GK_OK);
  double re = 0.0, im = 0.0;
  CHECK(gk_window_eval(w, 0.0, &re, &im) == GK_OK);
  CHECK(re == doctest::Approx(std::pow(2.0, 0.25)));
  CHECK(im == 0.0);
  double norm = 0.0;
  CHECK(gk_window_l2_norm(w, &norm) == GK_OK);
  CHECK(norm == doctest::Approx(1.0));
  char* spec = nullptr;
  CHECK(gk_window_describe(w, &spec) == GK_OK);
  CHECK(std::string(spec) == "gaussian");
  gk_string_free(spec);
  gk_window_free(w);

  gk_window* bad = nullptr;
  CHECK(gk_window_parse("char:1,0", &bad) == GK_INVALID_ARGUMENT);
  CHECK(bad == nullptr);
  CHECK(std::strlen(gk_last_error()) > 0);
  CHECK(gk_window_parse(nullptr, &bad) == GK_INVALID_ARGUMENT);
  CHECK(gk_window_parse("csv:/nonexistent/window.csv", &bad) == GK_IO);
}

TEST_CASE("lattice handles and density guard") {
  gk_lattice* l = nullptr;
  REQUIRE(gk_lattice_rect(1.0, 0.5, &l) == GK_OK);
  double vol = 0.0;
  CHECK(gk_lattice_volume(l, &vol) == GK_OK);
  CHECK(vol == doctest::Approx(0.5));
  int frame = -1, riesz = -1;
  CHECK(gk_density_guard(l, &frame, &riesz) == GK_OK);
  CHECK(frame == 1);
  CHECK(riesz == 0);
  gk_lattice_free(l);

  gk_lattice* bad = nullptr;
  CHECK(gk_lattice_rect(-1.0, 1.0, &bad) == GK_INVALID_ARGUMENT);
  CHECK(gk_lattice_matrix(1.0, 2.0, 2.0, 4.0, &bad) == GK_SINGULAR);
  CHECK(gk_lattice_volume(nullptr, &vol) == GK_INVALID_ARGUMENT);
}

TEST_CASE("single engine diagnosis and error statuses") {
  gk_window* w = nullptr;
  gk_lattice* l = nullptr;
  REQUIRE(gk_window_parse("char:0,1", &w) == GK_OK);
  REQUIRE(gk_lattice_rect(1.0, 1.0, &l) == GK_OK);
  gk_diagnosis d{};
  CHECK(gk_diagnose(w, l, "zz", &d) == GK_OK);
  CHECK(d.verdict == GK_TIGHT);
  CHECK(d.lower_bound == doctest::Approx(1.0));
  CHECK(gk_diagnose(w, l, "nope", &d) == GK_INVALID_ARGUMENT);
  gk_lattice_free(l);

  REQUIRE(gk_lattice_rect(1.0, 1.5, &l) == GK_OK);
  CHECK(gk_diagnose(w, l, "zz", &d) == GK_DENSITY_VIOLATION);
  gk_lattice_free(l);
  gk_window_free(w);

  gk_window* g = nullptr;
  REQUIRE(gk_window_parse("gaussian", &g) == GK_OK);
  REQUIRE(gk_lattice_rect(1.0, 0.5, &l) == GK_OK);
  CHECK(gk_diagnose(g, l, "painless", &d) == GK_NOT_PAINLESS);
  gk_window* dual = nullptr;
  CHECK(gk_painless_dual(g, l, &dual) == GK_NOT_PAINLESS);
  gk_lattice_free(l);
  gk_window_free(g);
}

TEST_CASE("Zak value through the C API") {
  gk_window* w = nullptr;
  REQUIRE(gk_window_parse("gaussian", &w) == GK_OK);
  double re = 1.0, im = 1.0;
  CHECK(gk_zak(w, 1.0, 0.5, 0.5, &re, &im) == GK_OK);
  CHECK(std::hypot(re, im) < 1e-10);
  CHECK(gk_zak(w, 0.0, 0.5, 0.5, &re, &im) == GK_INVALID_ARGUMENT);
  gk_window_free(w);
}

TEST_CASE("analyze, sweep and dual verification produce documents") {
  gk_window* w = nullptr;
  gk_lattice* l = nullptr;
  REQUIRE(gk_window_parse("hat", &w) == GK_OK);
  REQUIRE(gk_lattice_rect(1.0, 0.5, &l) == GK_OK);

  gk_analyze_options o;
  gk_analyze_options_init(&o);
  o.engines = "painless,zz";
  char* out = nullptr;
  int code = -1;
  REQUIRE(gk_analyze(w, l, &o, GK_FORMAT_JSON, &out, &code) == GK_OK);
  CHECK(code == 0);
  CHECK(std::string(out).find("\"schema\": \"gaborkit/1\"") != std::string::npos);
  gk_string_free(out);

  o.engines = "zz,bogus";
  CHECK(gk_analyze(w, l, &o, GK_FORMAT_JSON, &out, &code) == GK_INVALID_ARGUMENT);

  gk_sweep_options s;
  gk_sweep_options_init(&s);
  s.alpha_lo = 0.25;
  s.alpha_hi = 0.75;
  s.beta_lo = 2.0;
  s.beta_hi = 2.0;
  s.steps = 3;
  REQUIRE(gk_sweep(w, &s, GK_FORMAT_CSV, &out) == GK_OK);
  const std::string csv(out);
  gk_string_free(out);
  CHECK(csv.rfind("alpha,beta,alpha_beta,verdict", 0) == 0);
  std::size_t rows = 0;
  for (char c : csv) rows += c == '\n';
  CHECK(rows == 10);

  gk_window* gamma = nullptr;
  REQUIRE(gk_painless_dual(w, l, &gamma) == GK_OK);
  int passed = 0;
  REQUIRE(gk_verify_dual(w, gamma, l, &out, &passed) == GK_OK);
  CHECK(passed == 1);
  gk_string_free(out);
  REQUIRE(gk_verify_dual(w, w, l, &out, &passed) == GK_OK);
  CHECK(passed == 0);
  gk_string_free(out);

  gk_window_free(gamma);
  gk_lattice_free(l);
  gk_window_free(w);
}
