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
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>

#include "gaborkit/error.hpp"
#include "gaborkit/windows.hpp"
#include "test_support.hpp"

using namespace gaborkit;
using gaborkit::testing::Gen;

namespace {

// Composite Simpson rule on each piece between consecutive breaks.
double simpson(const std::function<double(double)>& f, std::vector<double> breaks,
               int per_unit = 4000) {
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    // stay off the endpoints: half-open windows jump there
    const double a = breaks[i] + 1e-15, b = breaks[i + 1] - 1e-15;
    int n = std::max(2, static_cast<int>(std::ceil((b - a) * per_unit)));
    if (n % 2) ++n;
    const double h = (b - a) / n;
    double s = f(a) + f(b);
    for (int k = 1; k < n; ++k) s += (k % 2 ? 4.0 : 2.0) * f(a + k * h);
    total += s * h / 3.0;
  }
  return total;
}

double simpson_norm(const Window& w, std::vector<double> breaks) {
  return std::sqrt(simpson([&](double t) { return std::norm(w.eval(t)); }, std::move(breaks)));
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("gaborkit_test_" + name);
}

}  // namespace

TEST_CASE("point values") {
  CHECK(Window::hat().eval(0.0) == Complex(1.0));
  CHECK(Window::hat().eval(0.25) == Complex(0.75));
  CHECK(Window::hermite1().eval(0.0) == Complex(0.0));
  CHECK(Window::gaussian().eval(0.0).real() == doctest::Approx(std::pow(2.0, 0.25)));
  CHECK(Window::char_interval(0, 1).eval(0.0) == Complex(1.0));
  CHECK(Window::char_interval(0, 1).eval(1.0) == Complex(0.0));
  CHECK(Window::two_sided_exp(2.0).eval(-0.5).real() == doctest::Approx(std::exp(-1.0)));
  // cubic B-spline at 0: 2/3
  CHECK(Window::bspline(4).eval(0.0).real() == doctest::Approx(2.0 / 3.0));
  CHECK(Window::bspline(2).eval(0.5).real() == doctest::Approx(0.5));
}

TEST_CASE("closed-form norms") {
  CHECK(Window::gaussian().l2_norm() == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(Window::char_interval(0, 1).l2_norm() == doctest::Approx(1.0));
  CHECK(Window::hat().l2_norm() == doctest::Approx(std::sqrt(2.0 / 3.0)).epsilon(1e-14));
  CHECK(Window::hermite1().l2_norm() ==
        doctest::Approx(std::sqrt(1.0 / (4.0 * std::numbers::sqrt2 * std::numbers::pi)))
            .epsilon(1e-13));
  CHECK(Window::two_sided_exp(3.0).l2_norm() == doctest::Approx(std::sqrt(1.0 / 3.0)));
}

TEST_CASE("norms agree with an independent Simpson rule") {
  struct Case {
    Window w;
    std::vector<double> breaks;
  };
  const std::vector<Case> cases = {
      {Window::gaussian(), {-7, 7}},
      {Window::hermite1(), {-7, 7}},
      {Window::hat(), {-1, 0, 1}},
      {Window::char_interval(-0.5, 1.25), {-0.5, 1.25}},
      {Window::two_sided_exp(1.5), {-30, 0, 30}},
      {Window::bspline(1), {-0.5, 0.5}},
      {Window::bspline(3), {-1.5, -0.5, 0.5, 1.5}},
      {Window::bspline(5), {-2.5, -1.5, -0.5, 0.5, 1.5, 2.5}},
      {Window::sampled(-1, 0.5, {0, 1, 3, -2, 0}), {-1, -0.5, 0, 0.5, 1}},
  };
  for (const auto& c : cases) {
    CAPTURE(c.w.describe());
    CHECK(std::abs(c.w.l2_norm() - simpson_norm(c.w, c.breaks)) <= 1e-9);
  }
}

TEST_CASE("inner products") {
  CHECK(inner_product(Window::hat(), Window::hat()).real() == doctest::Approx(2.0 / 3.0));
  CHECK(inner_product(Window::char_interval(0, 1), Window::char_interval(2, 3)) == Complex(0.0));
  CHECK(std::abs(inner_product(Window::gaussian(), Window::gaussian()) - 1.0) < 1e-11);
  CHECK(std::abs(inner_product(Window::gaussian(), Window::hermite1())) < 1e-11);
}

TEST_CASE("shifted inner product matches the Gaussian closed form") {
  // <pi(z) g, g> = conj(V_g g(z)), V_g g(x, w) = e^{-pi (x^2 + w^2) / 2} e^{-pi i x w}
  Gen gen(21);
  const Window g = Window::gaussian();
  for (int i = 0; i < 25; ++i) {
    const PhasePoint z{gen.uniform(-3, 3), gen.uniform(-3, 3)};
    const Complex v = std::exp(-std::numbers::pi * (z.x * z.x + z.xi * z.xi) / 2.0) *
                      std::polar(1.0, -std::numbers::pi * z.x * z.xi);
    CHECK(std::abs(shifted_inner_product(g, z, g, {0, 0}) - std::conj(v)) <= 1e-11);
  }
}

TEST_CASE("Hermite1 is odd") {
  Gen gen(22);
  const Window h = Window::hermite1();
  for (int i = 0; i < 200; ++i) {
    const double t = gen.uniform(-5, 5);
    REQUIRE(h.eval(-t) == -h.eval(t));
  }
}

TEST_CASE("compact windows vanish outside their support") {
  for (const Window& w : {Window::hat(), Window::char_interval(0.25, 2.0), Window::bspline(2),
                          Window::bspline(4), Window::sampled(0.5, 0.25, {1, 2, 3})}) {
    CAPTURE(w.describe());
    const auto s = w.support();
    REQUIRE(s.has_value());
    CHECK(w.eval(s->lo - 1e-9) == Complex(0.0));
    CHECK(w.eval(s->hi + 1e-9) == Complex(0.0));
    CHECK(w.eval(s->lo - 3.0) == Complex(0.0));
    CHECK(w.eval(s->hi + 3.0) == Complex(0.0));
  }
  CHECK_FALSE(Window::gaussian().support().has_value());
}

TEST_CASE("decay envelopes dominate the ambiguity function") {
  for (const Window& w : {Window::gaussian(), Window::hermite1(), Window::hat(),
                          Window::char_interval(0, 1), Window::bspline(3),
                          Window::two_sided_exp(1.0)}) {
    CAPTURE(w.describe());
    CHECK(verify_envelope(w));
  }
}

TEST_CASE("time and frequency profiles") {
  const Window g = Window::gaussian();
  CHECK(g.time_profile(0.0) >= std::pow(2.0, 0.25));
  CHECK(g.time_profile(2.0) >= std::pow(2.0, 0.25) * std::exp(-4.0 * std::numbers::pi));
  CHECK(g.freq_decay_order() == std::numeric_limits<double>::infinity());
  CHECK(Window::char_interval(0, 1).freq_decay_order() == doctest::Approx(1.0));
  CHECK(Window::hat().freq_decay_order() == doctest::Approx(2.0));
  CHECK(Window::char_interval(0, 1).freq_l1() == std::numeric_limits<double>::infinity());
}

TEST_CASE("Wiener amalgam norm") {
  CHECK(wiener_amalgam_norm(Window::char_interval(0, 1)) == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(wiener_amalgam_norm(Window::hat()) == doctest::Approx(2.0).epsilon(1e-6));
}

TEST_CASE("lattice tail bounds") {
  const auto env = decay_envelope(Window::gaussian());
  const Lattice lat(RectLattice{1.0, 0.5});
  const double t4 = lattice_tail_bound(env, lat, 4);
  const double t8 = lattice_tail_bound(env, lat, 8);
  CHECK(t8 <= t4);
  CHECK(std::isfinite(t8));
  // dominates the true tail, from |V_g g(z)| = e^{-pi |z|^2 / 2}
  for (long n : {2L, 4L, 8L}) {
    double tail = 0.0;
    for (long k1 = -60; k1 <= 60; ++k1) {
      for (long k2 = -60; k2 <= 60; ++k2) {
        if (std::max(std::abs(k1), std::abs(k2)) <= n) continue;
        const PhasePoint z = lat.point(k1, k2);
        tail += std::exp(-std::numbers::pi * (z.x * z.x + z.xi * z.xi) / 2.0);
      }
    }
    CAPTURE(n);
    CHECK(lattice_tail_bound(env, lat, n) >= tail);
  }
  // polynomial order <= 2 is not summable in two dimensions
  const auto env_char = decay_envelope(Window::char_interval(0, 1));
  CHECK(env_char.order <= 2.0);
  CHECK(lattice_tail_bound(env_char, lat, 8) == std::numeric_limits<double>::infinity());
}

TEST_CASE("parse_window") {
  CHECK(parse_window("gaussian").kind() == WindowKind::kGaussian);
  CHECK(parse_window("h1").kind() == WindowKind::kHermite1);
  CHECK(parse_window("hermite1").kind() == WindowKind::kHermite1);
  CHECK(parse_window("bspline:3").kind() == WindowKind::kBSpline);
  CHECK(parse_window("exp:2").kind() == WindowKind::kTwoSidedExp);
  const Window c = parse_window("char:0,1");
  CHECK(c.kind() == WindowKind::kCharInterval);
  CHECK(parse_window(c.describe()).describe() == c.describe());
  for (const char* bad : {"", "gauss", "char:1", "char:1,0", "bspline:0", "bspline:2.5",
                          "exp:-1", "hat:3", "char:a,b"}) {
    CAPTURE(bad);
    try {
      parse_window(bad);
      FAIL("expected InvalidArgument");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kInvalidArgument);
    }
  }
  try {
    parse_window("csv:/nonexistent/window.csv");
    FAIL("expected Io");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kIo);
  }
}

TEST_CASE("CSV round trip and validation") {
  const auto path = temp_path("window.csv");
  const Window s = Window::sampled(-0.5, 0.125, {0, 0.25, 0.5, 1, 0.5, 0.25, 0, 0, 0});
  save_window_csv(s, path.string());
  const Window back = parse_window("csv:" + path.string());
  REQUIRE(back.samples() != nullptr);
  CHECK(*back.samples() == *s.samples());
  CHECK(back.sample_t0() == s.sample_t0());
  CHECK(back.sample_step() == doctest::Approx(s.sample_step()).epsilon(1e-15));
  CHECK(back.eval(-0.1875) == s.eval(-0.1875));
  CHECK_THROWS_AS(save_window_csv(Window::hat(), path.string()), Error);

  {
    std::ofstream out(path);
    out << "t,value\n0,1\n0.5,2\n1.25,3\n";
  }
  CHECK_THROWS_AS(load_window_csv(path.string()), Error);
  {
    std::ofstream out(path);
    out << "time,value\n0,1\n1,2\n";
  }
  CHECK_THROWS_AS(load_window_csv(path.string()), Error);
  {
    std::ofstream out(path);
    out << "t,value\r\n0,1\r\n1,2\r\n2,1\r\n";
  }
  CHECK(load_window_csv(path.string()).samples()->size() == 3);
  std::filesystem::remove(path);
}

TEST_CASE("sampled windows interpolate linearly") {
  const Window s = Window::sampled(0.0, 1.0, {0, 2, 0});
  CHECK(s.eval(0.5).real() == doctest::Approx(1.0));
  CHECK(s.eval(1.0).real() == doctest::Approx(2.0));
  CHECK(s.eval(-0.1) == Complex(0.0));
  CHECK(s.eval(2.1) == Complex(0.0));
  CHECK_THROWS_AS(Window::sampled(0.0, 1.0, {1.0}), Error);
  CHECK_THROWS_AS(Window::sampled(0.0, 0.0, {1.0, 2.0}), Error);
  CHECK_THROWS_AS(Window::sampled(0.0, 1.0, {0.0, 0.0}), Error);
}

TEST_CASE("combinations and scaling") {
  const Window g = Window::gaussian();
  const Window s = g.scaled(Complex(0.0, 2.0));
  CHECK(s.l2_norm() == doctest::Approx(2.0));
  CHECK(s.eval(0.3) == Complex(0.0, 2.0) * g.eval(0.3));
  CHECK_FALSE(s.is_real());
  const Window c = Window::combination({{1.0, Window::hat()}, {0.01, g}});
  CHECK(c.eval(0.2) == Window::hat().eval(0.2) + 0.01 * g.eval(0.2));
  CHECK_FALSE(c.support().has_value());
}
