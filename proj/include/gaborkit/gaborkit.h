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

/* C interface to gaborkit. All objects are opaque handles owned by the
 * caller and released with the matching *_free function. Functions return
 * GK_OK or an error status; gk_last_error() gives the message of the last
 * failure on the calling thread. Strings returned through char** are
 * released with gk_string_free. */

#ifndef GABORKIT_GABORKIT_H_
#define GABORKIT_GABORKIT_H_

#include <stddef.h>

#if defined(_WIN32)
#define GK_API __declspec(dllexport)
#else
#define GK_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Values match gaborkit::ErrorCode. */
typedef enum gk_status {
  GK_OK = 0,
  GK_INVALID_ARGUMENT = 1,
  GK_NON_HERMITIAN = 2,
  GK_NON_FINITE = 3,
  GK_NO_CONVERGENCE = 4,
  GK_SINGULAR = 5,
  GK_QUADRATURE_FAILURE = 6,
  GK_TAIL_NOT_SUMMABLE = 7,
  GK_IRRATIONAL_LATTICE = 8,
  GK_RATIONAL_LATTICE = 9,
  GK_DENSITY_VIOLATION = 10,
  GK_NOT_PAINLESS = 11,
  GK_RESOLUTION_INSUFFICIENT = 12,
  GK_DIMENSION_MISMATCH = 13,
  GK_IO = 14,
  GK_INTERNAL = 15
} gk_status;

typedef enum gk_verdict {
  GK_FRAME = 0,
  GK_NOT_FRAME = 1,
  GK_RIESZ_SEQUENCE = 2,
  GK_NOT_RIESZ = 3,
  GK_TIGHT = 4,
  GK_INCONCLUSIVE = 5
} gk_verdict;

typedef enum gk_format { GK_FORMAT_JSON = 0, GK_FORMAT_CSV = 1 } gk_format;

typedef struct gk_window gk_window;
typedef struct gk_lattice gk_lattice;

typedef struct gk_diagnosis {
  gk_verdict verdict;
  double lower_bound;
  double upper_bound;
} gk_diagnosis;

typedef struct gk_analyze_options {
  const char* engines; /* comma-separated; NULL or "" selects automatically */
  long trunc;          /* <= 0: engine defaults */
  long grid_nx;        /* <= 0: default grid */
  long grid_nxi;       /* <= 0: same as grid_nx */
  long max_q;          /* <= 0: 64 */
} gk_analyze_options;

typedef struct gk_sweep_options {
  double alpha_lo, alpha_hi;
  double beta_lo, beta_hi;
  long steps;
  const char* engine; /* NULL: "zz" */
  long max_q;         /* <= 0: 64 */
  long trunc;
  long grid_nx;
  long grid_nxi;
  unsigned threads; /* 0: GABORKIT_THREADS or hardware concurrency */
} gk_sweep_options;

GK_API const char* gk_version(void);
GK_API const char* gk_last_error(void);
GK_API const char* gk_status_name(gk_status s);
GK_API const char* gk_verdict_name(gk_verdict v);
GK_API void gk_string_free(char* s);

/* Window spec: gaussian | hermite1 | hat | bspline:N | char:a,b | exp:r | csv:PATH */
GK_API gk_status gk_window_parse(const char* spec, gk_window** out);
GK_API void gk_window_free(gk_window* w);
GK_API gk_status gk_window_eval(const gk_window* w, double t, double* re, double* im);
GK_API gk_status gk_window_l2_norm(const gk_window* w, double* out);
GK_API gk_status gk_window_describe(const gk_window* w, char** out);
GK_API gk_status gk_window_save_csv(const gk_window* w, const char* path);

GK_API gk_status gk_lattice_rect(double alpha, double beta, gk_lattice** out);
GK_API gk_status gk_lattice_matrix(double a11, double a12, double a21, double a22,
                                   gk_lattice** out);
GK_API void gk_lattice_free(gk_lattice* l);
GK_API gk_status gk_lattice_volume(const gk_lattice* l, double* out);
/* frame_possible / riesz_possible receive 0 or 1. */
GK_API gk_status gk_density_guard(const gk_lattice* l, int* frame_possible, int* riesz_possible);

GK_API gk_status gk_zak(const gk_window* w, double alpha, double x, double xi, double* re,
                        double* im);

/* Runs a single engine by name. */
GK_API gk_status gk_diagnose(const gk_window* w, const gk_lattice* l, const char* engine,
                             gk_diagnosis* out);

GK_API void gk_analyze_options_init(gk_analyze_options* o);
/* exit_code: 0 engines agree, 2 frame/not-frame disagreement, 1 no engine succeeded. */
GK_API gk_status gk_analyze(const gk_window* w, const gk_lattice* l, const gk_analyze_options* o,
                            gk_format format, char** out, int* exit_code);

GK_API void gk_sweep_options_init(gk_sweep_options* o);
GK_API gk_status gk_sweep(const gk_window* w, const gk_sweep_options* o, gk_format format,
                          char** out);

/* Sampled dual window b g / m for compactly supported g on a painless lattice. */
GK_API gk_status gk_painless_dual(const gk_window* w, const gk_lattice* l, gk_window** out);
/* passed receives 1 when both residuals are below 1e-6. */
GK_API gk_status gk_verify_dual(const gk_window* g, const gk_window* gamma, const gk_lattice* l,
                                char** json_out, int* passed);

#ifdef __cplusplus
}
#endif

#endif /* GABORKIT_GABORKIT_H_ */
