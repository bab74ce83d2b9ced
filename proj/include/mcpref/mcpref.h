/* Copyright 2026 The mcpref Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* mcpref: multi-criteria preference aggregation.
 *
 * Computes von Neumann winners of pairwise-comparison matrices and Blackwell
 * winners (worst-case-distance optimal mixtures) of preference tensors
 * against monotone polyhedral target sets, estimates both from sampled
 * comparisons, and drives the reproducibility experiment harness.
 *
 * C API conventions:
 *  - opaque handles with explicit _free functions;
 *  - every fallible call returns mcpref_status; on failure a thread-local
 *    message is available from mcpref_last_error();
 *  - returned char* buffers are owned by the caller and released with
 *    mcpref_string_free;
 *  - objects are indexed 0..d-1, criteria 0..k-1; probabilities are doubles;
 *  - the norm parameter q is the l_q exponent, with HUGE_VAL for the sup
 *    norm (mcpref_q_inf() returns it).
 */

#ifndef MCPREF_MCPREF_H_
#define MCPREF_MCPREF_H_

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mcpref_status {
  MCPREF_OK = 0,
  MCPREF_ERR_INVALID_ARGUMENT = 1,
  MCPREF_ERR_DIMENSION = 2,
  MCPREF_ERR_VALIDATION = 3,
  MCPREF_ERR_IO = 4,
  MCPREF_ERR_UNSUPPORTED = 5,
  MCPREF_ERR_SOLVER = 6,
  MCPREF_ERR_INTERNAL = 7
} mcpref_status;

typedef struct mcpref_tensor mcpref_tensor;
typedef struct mcpref_set mcpref_set;
typedef struct mcpref_report mcpref_report;

const char* mcpref_version(void);
/* Message for the most recent failure on this thread; never NULL. */
const char* mcpref_last_error(void);
void mcpref_string_free(char* s);
double mcpref_q_inf(void);

/* ---- preference tensors ---- */

/* p is laid out criterion-major: p[(j*d + i1)*d + i2]. */
mcpref_status mcpref_tensor_create(int d, int k, const double* p,
                                   mcpref_tensor** out);
mcpref_status mcpref_tensor_from_json(const char* json, int allow_invalid,
                                      mcpref_tensor** out);
mcpref_status mcpref_tensor_load(const char* path, int allow_invalid,
                                 mcpref_tensor** out);
mcpref_status mcpref_tensor_to_json(const mcpref_tensor* t, char** out);
mcpref_status mcpref_tensor_save(const mcpref_tensor* t, const char* path);
void mcpref_tensor_free(mcpref_tensor* t);

int mcpref_tensor_objects(const mcpref_tensor* t);
int mcpref_tensor_criteria(const mcpref_tensor* t);
double mcpref_tensor_entry(const mcpref_tensor* t, int j, int i1, int i2);

/* ok is 1 when all invariants hold within 1e-9; report_json (optional,
 * pass NULL to skip) lists the violations. */
mcpref_status mcpref_tensor_validate(const mcpref_tensor* t, int* ok,
                                     char** report_json);

/* score[j] = pi1' P^j pi2; the two distributions have length d. */
mcpref_status mcpref_tensor_score(const mcpref_tensor* t, const double* pi1,
                                  const double* pi2, double* score);
/* Weighted combination sum_j w[j] P^j written to matrix (d*d row-major). */
mcpref_status mcpref_tensor_weighted_matrix(const mcpref_tensor* t,
                                            const double* w, double* matrix);

/* ---- instance constructors ---- */

mcpref_status mcpref_tensor_all_half(int d, int k, mcpref_tensor** out);
mcpref_status mcpref_tensor_conflict(int d, int k, mcpref_tensor** out);
/* which = 0 for the indifferent-leading-block member, 1 for the scaled one */
mcpref_status mcpref_tensor_lecam(int d, int k, double gamma, int which,
                                  mcpref_tensor** out);
mcpref_status mcpref_tensor_alpha_beta(double alpha, double beta, int j1,
                                       int j2, int k, mcpref_tensor** out);
mcpref_status mcpref_tensor_delta_mixture(double delta, double alpha0,
                                          double beta0, int j1, int j2, int k,
                                          mcpref_tensor** out);
/* Cyclic game payoff as a k=1 tensor; d odd. */
mcpref_status mcpref_tensor_rps(int d, mcpref_tensor** out);

/* Bundled driving-study data: the 7x7x5 elicited tensor, the overall
 * comparison matrix as a k=1 tensor, and the two published target sets.
 * data_dir may be NULL for the default (compiled-in path, overridable with
 * the MCPREF_DATA_DIR environment variable); any output pointer may be NULL.
 * Files are checksummed at load. */
mcpref_status mcpref_driving_load(const char* data_dir, mcpref_tensor** tensor,
                                  mcpref_tensor** overall, mcpref_set** s1,
                                  mcpref_set** s2);

/* ---- target sets ---- */

/* lower has length k; a is n_halfspaces rows of length k (row-major). */
mcpref_status mcpref_set_create(int k, const double* lower, int n_halfspaces,
                                const double* a, const double* b,
                                mcpref_set** out);
mcpref_status mcpref_set_from_json(const char* json, mcpref_set** out);
mcpref_status mcpref_set_load(const char* path, mcpref_set** out);
mcpref_status mcpref_set_to_json(const mcpref_set* s, char** out);
mcpref_status mcpref_set_save(const mcpref_set* s, const char* path);
void mcpref_set_free(mcpref_set* s);
int mcpref_set_criteria(const mcpref_set* s);

/* S_w = { z : <w, z> >= 1/2 } for w on the k-simplex. */
mcpref_status mcpref_set_weighted(int k, const double* w, mcpref_set** out);

mcpref_status mcpref_set_contains(const mcpref_set* s, const double* z, int k,
                                  int* out);
mcpref_status mcpref_set_distance(const mcpref_set* s, const double* z, int k,
                                  double q, double* out);
/* 1 < q < inf; out has length k. */
mcpref_status mcpref_set_project(const mcpref_set* s, const double* z, int k,
                                 double q, double* out);

/* ---- objective ---- */

mcpref_status mcpref_value(const mcpref_tensor* t, const mcpref_set* s,
                           double q, const double* pi, double* out);
/* indices must hold d ints; count receives how many were written. */
mcpref_status mcpref_best_response(const mcpref_tensor* t, const mcpref_set* s,
                                   double q, const double* pi, double tol,
                                   int* indices, int* count);
mcpref_status mcpref_achievable(const mcpref_tensor* t, const mcpref_set* s,
                                double q, double tol, int* out);

/* ---- solving ---- */

typedef struct mcpref_solver_params {
  long long iterations; /* T */
  double eta;           /* 0 = method default */
  double delta;         /* 0 = method default */
  double c;             /* constant in the default step/radius */
  uint64_t seed;
  int record_trace;
} mcpref_solver_params;

void mcpref_solver_params_init(mcpref_solver_params* p);

/* payoff is d*d row-major; preference matrices give value 1/2. */
mcpref_status mcpref_solve_von_neumann(int d, const double* payoff,
                                       mcpref_report** out);
/* Exact minimizer of the worst-case distance; q must be the sup norm. */
mcpref_status mcpref_solve_blackwell_lp(const mcpref_tensor* t,
                                        const mcpref_set* s, double q,
                                        mcpref_report** out);
/* Exact solve for any norm: LPs for the sup and l1 norms, a cutting-plane
 * method with certified optimality gap (<= 1e-9) for smooth norms. */
mcpref_status mcpref_solve_exact(const mcpref_tensor* t, const mcpref_set* s,
                                 double q, mcpref_report** out);
mcpref_status mcpref_solve_first_order(const mcpref_tensor* t,
                                       const mcpref_set* s, double q,
                                       const mcpref_solver_params* p,
                                       mcpref_report** out);
mcpref_status mcpref_solve_zeroth_order(const mcpref_tensor* t,
                                        const mcpref_set* s, double q,
                                        const mcpref_solver_params* p,
                                        mcpref_report** out);

void mcpref_report_free(mcpref_report* r);
int mcpref_report_winner(const mcpref_report* r, double* out, int cap);
double mcpref_report_value(const mcpref_report* r);
long long mcpref_report_iterations(const mcpref_report* r);
const char* mcpref_report_method(const mcpref_report* r);
mcpref_status mcpref_report_to_json(const mcpref_report* r, char** out);
mcpref_status mcpref_report_trace_csv(const mcpref_report* r, char** out);

/* ---- sampling and estimation ---- */

/* Draws n comparisons from truth, solves the plug-in instance exactly, and
 * reports the winner plus its suboptimality delta_p on the true tensor. */
mcpref_status mcpref_plug_in_estimate(const mcpref_tensor* truth,
                                      const mcpref_set* s, double q,
                                      long long n, uint64_t seed, int strict,
                                      mcpref_report** out, double* delta_p);
/* Sampled batch as CSV (i1,i2,j,y) plus a JSON sidecar; either output
 * pointer may be NULL. */
mcpref_status mcpref_sample_batch_csv(const mcpref_tensor* truth, long long n,
                                      uint64_t seed, char** csv,
                                      char** meta_json);
mcpref_status mcpref_build_empirical_csv(int d, int k, const char* csv,
                                         int strict, mcpref_tensor** out);
/* Gaussian plug-in Nash: variances may be NULL for the A(1-A) default. */
mcpref_status mcpref_plug_in_nash(int d, const double* payoff,
                                  const double* variances, long long n,
                                  uint64_t seed, mcpref_report** out,
                                  double* delta_a);
mcpref_status mcpref_effective_variance(int d, const double* payoff,
                                        const double* variances,
                                        const double* pi_star, double* out);

/* ---- experiment harness ---- */

/* Config schemas are documented in the README; results come back as a JSON
 * summary and a CSV of per-cell records (either pointer may be NULL). */
mcpref_status mcpref_sweep_run(const char* config_json, int threads,
                               char** result_json, char** csv);
mcpref_status mcpref_nash_sweep_run(const char* config_json, int threads,
                                    char** result_json, char** csv);
mcpref_status mcpref_convergence_trace(const char* config_json, char** csv);
mcpref_status mcpref_value_curve(const char* config_json, char** csv);
mcpref_status mcpref_binomial_test(long long n, long long x, double p0,
                                   double* out);

/* Runs the library's invariant suite; pass = 1 when everything held. */
mcpref_status mcpref_verify(int* pass, char** report_text);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* MCPREF_MCPREF_H_ */
