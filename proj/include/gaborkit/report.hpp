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

// Analysis, sweep and dual-verification reports built on the criterion
// engines, with deterministic JSON and CSV serialization. The "data" part of
// a JSON document depends only on the request; run metadata (timestamp, tool
// version) is kept in a separate "metadata" object.

#ifndef GABORKIT_REPORT_HPP_
#define GABORKIT_REPORT_HPP_

#include <optional>
#include <string>
#include <vector>

#include "gaborkit/criteria.hpp"
#include "gaborkit/lattice.hpp"
#include "gaborkit/oracle.hpp"
#include "gaborkit/windows.hpp"

namespace gaborkit {

inline constexpr const char* kSchemaVersion = "gaborkit/1";
inline constexpr const char* kToolVersion = "0.1.0";

/// Engine names accepted by analyze() and sweep().
const std::vector<std::string>& engine_names();

struct AnalyzeOptions {
  std::vector<std::string> engines;  // empty: automatic selection
  long trunc = 0;                    // <= 0: per-engine default
  std::optional<GridSpec> grid;      // zz and ronshen sampling grid
  long max_q = 64;
  OracleOptions oracle;
};

struct EngineRecord {
  std::string engine;
  bool ok = false;
  FrameDiagnosis diagnosis;
  /// Riesz-side diagnosis added when the density guard rules out a frame.
  std::optional<FrameDiagnosis> riesz_side;
  std::string error;    // error code name when !ok or when the guard fired
  std::string message;
};

struct BoundComparison {
  std::string first;
  std::string second;
  double lower_rel = 0.0;
  double upper_rel = 0.0;
};

struct DualityCheck {
  bool computed = false;
  std::string reference;  // engine whose frame bounds are compared
  double frame_lower = 0.0;
  double frame_upper = 0.0;
  double riesz_lower_scaled = 0.0;  // vol^{-1} * Riesz bounds on the adjoint lattice
  double riesz_upper_scaled = 0.0;
  double lower_rel = 0.0;
  double upper_rel = 0.0;
  bool consistent = false;
  std::string note;
};

struct AnalysisReport {
  std::string window;
  Lattice lattice = Lattice::integer();
  std::vector<std::string> engines;
  bool auto_selected = false;
  std::vector<EngineRecord> records;
  Verdict verdict = Verdict::kInconclusive;
  bool agree = true;
  int exit_code = 0;  // 0 agree, 2 Frame/NotFrame disagreement, 1 no engine succeeded
  std::vector<BoundComparison> comparisons;
  DualityCheck duality;
};

/// Engine chosen when none is requested: painless if its preconditions hold,
/// else zz for rational a b with q <= max_q, else gramian.
std::string auto_engine(const Window& g, const Lattice& lat, long max_q);

/// Runs one engine. Throws Error on failure; zz's DensityViolation is not
/// caught here.
FrameDiagnosis run_engine(const std::string& engine, const Window& g, const Lattice& lat,
                          const AnalyzeOptions& opts);

/// Throws Error(kInvalidArgument) for an unknown engine name.
AnalysisReport analyze(const Window& g, const Lattice& lat, const AnalyzeOptions& opts = {});

std::string analysis_json(const AnalysisReport& report);
/// One row per engine: engine, status, verdict, lower_bound, upper_bound, error.
std::string analysis_csv(const AnalysisReport& report);

struct SweepOptions {
  double alpha_lo = 0.5;
  double alpha_hi = 1.5;
  double beta_lo = 0.5;
  double beta_hi = 1.5;
  long steps = 11;
  std::string engine = "zz";
  long max_q = 64;
  long trunc = 0;
  std::optional<GridSpec> grid;
  unsigned threads = 0;  // 0: worker_count()
};

struct SweepCell {
  double alpha = 0.0;
  double beta = 0.0;
  std::string verdict;  // verdict name, or "Skipped"
  double lower_bound = 0.0;
  double upper_bound = 0.0;
  std::string skipped_reason;  // empty for evaluated cells
};

struct SweepReport {
  std::string window;
  SweepOptions options;
  std::vector<SweepCell> cells;  // row-major: alpha outer, beta inner
};

/// Axis value i of steps on [lo, hi]: lo + i (hi - lo) / (steps - 1).
double axis_value(double lo, double hi, long steps, long i);

/// Cells are evaluated on a worker pool and stored in grid order.
SweepReport sweep(const Window& g, const SweepOptions& opts);
std::string sweep_csv(const SweepReport& report);
std::string sweep_json(const SweepReport& report);

struct DualReport {
  std::string window;
  std::string gamma;
  Lattice lattice = Lattice::integer();
  double threshold = 1e-6;
  double wexler_raz = 0.0;
  std::optional<double> janssen;  // rectangular lattices only
  bool pass = false;
};

DualReport verify_dual(const Window& g, const Window& gamma, const Lattice& lat);
std::string dual_json(const DualReport& report);

/// Worker cap: GABORKIT_THREADS if set to a positive integer, else the
/// hardware concurrency (at least 1).
unsigned worker_count();

}  // namespace gaborkit

#endif  // GABORKIT_REPORT_HPP_
