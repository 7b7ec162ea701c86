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

// gaborkit command-line front end. Links only the C API.
//
//   gaborkit analyze --window gaussian --alpha 1 --beta 0.5 --engines zz,gramian
//   gaborkit sweep --window hat --alpha 0.25,1 --beta 2,2 --steps 4
//   gaborkit verify-dual --window hat --alpha 1 --beta 0.5 --gamma painless-dual

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gaborkit/gaborkit.h"

namespace {

constexpr int kExitError = 1;

struct UsageError {
  std::string message;
};

// Owns a C handle and releases it with the matching free function.
template <typename T, void (*Free)(T*)>
class Handle {
 public:
  Handle() = default;
  Handle(const Handle&) = delete;
  Handle& operator=(const Handle&) = delete;
  ~Handle() {
    if (p_ != nullptr) Free(p_);
  }
  T** out() { return &p_; }
  T* get() const { return p_; }

 private:
  T* p_ = nullptr;
};

using WindowHandle = Handle<gk_window, gk_window_free>;
using LatticeHandle = Handle<gk_lattice, gk_lattice_free>;

void check(gk_status s, const std::string& field) {
  if (s != GK_OK) {
    throw UsageError{field + ": " + gk_status_name(s) + ": " + gk_last_error()};
  }
}

std::string take_string(char* s) {
  std::string out = s != nullptr ? s : "";
  gk_string_free(s);
  return out;
}

std::vector<double> parse_list(const std::string& text, const std::string& field) {
  std::vector<double> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError{field + ": not a number: '" + item + "'"};
    }
  }
  return out;
}

struct LatticeArgs {
  std::string alpha;
  std::string beta;
  std::string matrix;
};

void make_lattice(const LatticeArgs& a, LatticeHandle& out) {
  if (!a.matrix.empty()) {
    if (!a.alpha.empty() || !a.beta.empty()) {
      throw UsageError{"--matrix: cannot be combined with --alpha/--beta"};
    }
    const auto m = parse_list(a.matrix, "--matrix");
    if (m.size() != 4) throw UsageError{"--matrix: expected a,b,c,d"};
    check(gk_lattice_matrix(m[0], m[1], m[2], m[3], out.out()), "--matrix");
    return;
  }
  if (a.alpha.empty()) throw UsageError{"--alpha: required (or --matrix)"};
  if (a.beta.empty()) throw UsageError{"--beta: required (or --matrix)"};
  const auto alpha = parse_list(a.alpha, "--alpha");
  const auto beta = parse_list(a.beta, "--beta");
  if (alpha.size() != 1) throw UsageError{"--alpha: expected one value"};
  if (beta.size() != 1) throw UsageError{"--beta: expected one value"};
  check(gk_lattice_rect(alpha[0], beta[0], out.out()), "--alpha/--beta");
}

gk_format parse_format(const std::string& f) {
  if (f == "json") return GK_FORMAT_JSON;
  if (f == "csv") return GK_FORMAT_CSV;
  throw UsageError{"--format: expected json or csv"};
}

void parse_grid(const std::string& text, long& nx, long& nxi) {
  if (text.empty()) return;
  const auto v = parse_list(text, "--grid");
  if (v.empty() || v.size() > 2) throw UsageError{"--grid: expected nx[,nxi]"};
  for (double x : v) {
    if (!(x >= 1.0) || x != static_cast<double>(static_cast<long>(x))) {
      throw UsageError{"--grid: values must be positive integers"};
    }
  }
  nx = static_cast<long>(v[0]);
  nxi = v.size() == 2 ? static_cast<long>(v[1]) : nx;
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError{"--out: cannot open '" + path + "'"};
  out << text;
  if (!out) throw UsageError{"--out: write failed for '" + path + "'"};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gaborkit: frame diagnostics for Gabor systems"};
  app.set_version_flag("--version", gk_version());
  app.require_subcommand(1);

  std::string window_spec;
  LatticeArgs lat_args;
  std::string engines;
  long trunc = 0;
  std::string grid;
  long max_q = 64;
  std::string out_path;
  std::string format = "json";

  auto* analyze = app.add_subcommand("analyze", "Diagnose one window/lattice pair");
  analyze->add_option("--window", window_spec, "Window spec")->required();
  analyze->add_option("--alpha", lat_args.alpha, "Time step");
  analyze->add_option("--beta", lat_args.beta, "Frequency step");
  analyze->add_option("--matrix", lat_args.matrix, "Lattice basis a,b,c,d (row-major)");
  analyze->add_option("--engines", engines,
                      "Comma list of zz,ronshen,ronshen-point,gramian,riesz,schur,painless,"
                      "tight,oracle");
  analyze->add_option("--trunc", trunc, "Truncation index box N");
  analyze->add_option("--grid", grid, "Sampling grid nx[,nxi]");
  analyze->add_option("--max-q", max_q, "Largest denominator for rational a*b");
  analyze->add_option("--out", out_path, "Output path (default stdout)");
  analyze->add_option("--format", format, "json or csv");

  std::string alpha_range;
  std::string beta_range;
  long steps = 11;
  std::string engine = "zz";
  auto* sweep = app.add_subcommand("sweep", "Frame-set sweep over a rectangle of (alpha, beta)");
  sweep->add_option("--window", window_spec, "Window spec")->required();
  sweep->add_option("--alpha", alpha_range, "Range lo,hi")->required();
  sweep->add_option("--beta", beta_range, "Range lo,hi")->required();
  sweep->add_option("--steps", steps, "Grid points per axis");
  sweep->add_option("--engines", engine, "Engine for every cell");
  sweep->add_option("--trunc", trunc, "Truncation index box N");
  sweep->add_option("--grid", grid, "Sampling grid nx[,nxi]");
  sweep->add_option("--max-q", max_q, "Largest denominator for rational a*b");
  sweep->add_option("--out", out_path, "Output path (default stdout)");
  auto* sweep_format = sweep->add_option("--format", format, "csv or json");

  std::string gamma_spec;
  std::string save_gamma;
  auto* dual = app.add_subcommand("verify-dual", "Check a candidate dual window");
  dual->add_option("--window", window_spec, "Window spec")->required();
  dual->add_option("--gamma", gamma_spec, "Dual window spec or 'painless-dual'")->required();
  dual->add_option("--alpha", lat_args.alpha, "Time step");
  dual->add_option("--beta", lat_args.beta, "Frequency step");
  dual->add_option("--matrix", lat_args.matrix, "Lattice basis a,b,c,d (row-major)");
  dual->add_option("--save-gamma", save_gamma, "Write the dual window to CSV");
  dual->add_option("--out", out_path, "Output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  }

  try {
    WindowHandle window;
    check(gk_window_parse(window_spec.c_str(), window.out()), "--window");

    if (analyze->parsed()) {
      LatticeHandle lattice;
      make_lattice(lat_args, lattice);
      gk_analyze_options opts;
      gk_analyze_options_init(&opts);
      opts.engines = engines.c_str();
      if (trunc < 0) throw UsageError{"--trunc: must be positive"};
      if (max_q < 1) throw UsageError{"--max-q: must be >= 1"};
      opts.trunc = trunc;
      opts.max_q = max_q;
      parse_grid(grid, opts.grid_nx, opts.grid_nxi);
      char* text = nullptr;
      int exit_code = kExitError;
      check(gk_analyze(window.get(), lattice.get(), &opts, parse_format(format), &text,
                       &exit_code),
            "analyze");
      emit(take_string(text), out_path);
      return exit_code;
    }

    if (sweep->parsed()) {
      gk_sweep_options opts;
      gk_sweep_options_init(&opts);
      const auto a = parse_list(alpha_range, "--alpha");
      const auto b = parse_list(beta_range, "--beta");
      if (a.size() != 2) throw UsageError{"--alpha: expected lo,hi"};
      if (b.size() != 2) throw UsageError{"--beta: expected lo,hi"};
      if (steps < 1) throw UsageError{"--steps: must be >= 1"};
      if (trunc < 0) throw UsageError{"--trunc: must be positive"};
      if (max_q < 1) throw UsageError{"--max-q: must be >= 1"};
      opts.alpha_lo = a[0];
      opts.alpha_hi = a[1];
      opts.beta_lo = b[0];
      opts.beta_hi = b[1];
      opts.steps = steps;
      opts.engine = engine.c_str();
      opts.max_q = max_q;
      opts.trunc = trunc;
      parse_grid(grid, opts.grid_nx, opts.grid_nxi);
      const gk_format fmt = sweep_format->count() > 0 ? parse_format(format) : GK_FORMAT_CSV;
      char* text = nullptr;
      check(gk_sweep(window.get(), &opts, fmt, &text), "sweep");
      emit(take_string(text), out_path);
      return 0;
    }

    LatticeHandle lattice;
    make_lattice(lat_args, lattice);
    WindowHandle gamma;
    if (gamma_spec == "painless-dual") {
      check(gk_painless_dual(window.get(), lattice.get(), gamma.out()), "--gamma");
    } else {
      check(gk_window_parse(gamma_spec.c_str(), gamma.out()), "--gamma");
    }
    if (!save_gamma.empty()) check(gk_window_save_csv(gamma.get(), save_gamma.c_str()), "--save-gamma");
    char* text = nullptr;
    int passed = 0;
    check(gk_verify_dual(window.get(), gamma.get(), lattice.get(), &text, &passed), "verify-dual");
    emit(take_string(text), out_path);
    return passed != 0 ? 0 : 2;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.message << "\n";
    return kExitError;
  }
}
