// Copyright 2026 The mcpref Authors
//
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

#include "mcpref/mcpref.h"

#include <cstdlib>
#include <cstring>
#include <sstream>

#include "core/config.hpp"
#include "core/json_io.hpp"
#include "core/verify.hpp"

using namespace mcpref;

// Opaque handle definitions: thin owning wrappers over the core types.
struct mcpref_tensor {
  PreferenceTensor t;
};
struct mcpref_set {
  TargetSet s;
};
struct mcpref_report {
  SolveReport r;
};

namespace {

thread_local std::string g_last_error;

mcpref_status status_of(const Error& e) {
  switch (e.code()) {
    case ErrorCode::kInvalidArgument:
      return MCPREF_ERR_INVALID_ARGUMENT;
    case ErrorCode::kDimension:
      return MCPREF_ERR_DIMENSION;
    case ErrorCode::kValidation:
      return MCPREF_ERR_VALIDATION;
    case ErrorCode::kIo:
      return MCPREF_ERR_IO;
    case ErrorCode::kUnsupported:
      return MCPREF_ERR_UNSUPPORTED;
    case ErrorCode::kSolver:
      return MCPREF_ERR_SOLVER;
    case ErrorCode::kInternal:
      return MCPREF_ERR_INTERNAL;
  }
  return MCPREF_ERR_INTERNAL;
}

template <typename F>
mcpref_status wrap(F&& f) {
  try {
    f();
    return MCPREF_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return status_of(e);
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return MCPREF_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return MCPREF_ERR_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(bool cond, const char* what) {
  if (!cond) throw Error(ErrorCode::kInvalidArgument, what);
}

void require_dim(bool cond) {
  if (!cond) throw Error(ErrorCode::kDimension, "dimension mismatch");
}

Vec to_vec(const double* data, int n) {
  require(data != nullptr, "null array");
  return Eigen::Map<const Vec>(data, n);
}

Mat to_mat(const double* data, int rows, int cols) {
  require(data != nullptr, "null matrix");
  Mat m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m(r, c) = data[r * cols + c];
  return m;
}

NormSpec norm_of(double q) {
  return std::isinf(q) ? NormSpec::linf() : NormSpec(q);
}

ValueContext context_of(const mcpref_tensor* t, const mcpref_set* s,
                        double q) {
  require(t && s, "null handle");
  return ValueContext(t->t, s->s, norm_of(q));
}

SolverParams convert(const mcpref_solver_params* p) {
  SolverParams out;
  if (!p) return out;
  out.iterations = p->iterations;
  out.eta = p->eta;
  out.delta = p->delta;
  out.c = p->c;
  out.seed = p->seed;
  out.record_trace = p->record_trace != 0;
  return out;
}

}  // namespace

extern "C" {

const char* mcpref_version(void) { return "0.1.0"; }

const char* mcpref_last_error(void) { return g_last_error.c_str(); }

void mcpref_string_free(char* s) { std::free(s); }

double mcpref_q_inf(void) { return std::numeric_limits<double>::infinity(); }

/* ---- tensors ---- */

mcpref_status mcpref_tensor_create(int d, int k, const double* p,
                                   mcpref_tensor** out) {
  return wrap([&] {
    require(out && p, "null argument");
    require(d >= 1 && k >= 1, "need d >= 1 and k >= 1");
    std::vector<Mat> slices;
    slices.reserve(k);
    for (int j = 0; j < k; ++j)
      slices.push_back(to_mat(p + static_cast<size_t>(j) * d * d, d, d));
    *out = new mcpref_tensor{PreferenceTensor(std::move(slices))};
  });
}

mcpref_status mcpref_tensor_from_json(const char* json, int allow_invalid,
                                      mcpref_tensor** out) {
  return wrap([&] {
    require(out && json, "null argument");
    *out = new mcpref_tensor{tensor_from_json(json, allow_invalid != 0)};
  });
}

mcpref_status mcpref_tensor_load(const char* path, int allow_invalid,
                                 mcpref_tensor** out) {
  return wrap([&] {
    require(out && path, "null argument");
    *out = new mcpref_tensor{load_tensor(path, allow_invalid != 0)};
  });
}

mcpref_status mcpref_tensor_to_json(const mcpref_tensor* t, char** out) {
  return wrap([&] {
    require(t && out, "null argument");
    *out = dup_string(tensor_to_json(t->t));
  });
}

mcpref_status mcpref_tensor_save(const mcpref_tensor* t, const char* path) {
  return wrap([&] {
    require(t && path, "null argument");
    save_tensor(t->t, path);
  });
}

void mcpref_tensor_free(mcpref_tensor* t) { delete t; }

int mcpref_tensor_objects(const mcpref_tensor* t) {
  return t ? t->t.objects() : 0;
}
int mcpref_tensor_criteria(const mcpref_tensor* t) {
  return t ? t->t.criteria() : 0;
}
double mcpref_tensor_entry(const mcpref_tensor* t, int j, int i1, int i2) {
  if (!t || j < 0 || j >= t->t.criteria() || i1 < 0 || i1 >= t->t.objects() ||
      i2 < 0 || i2 >= t->t.objects())
    return std::numeric_limits<double>::quiet_NaN();
  return t->t.p(j, i1, i2);
}

mcpref_status mcpref_tensor_validate(const mcpref_tensor* t, int* ok,
                                     char** report_json) {
  return wrap([&] {
    require(t && ok, "null argument");
    ValidationResult res = validate_tensor(t->t);
    *ok = res.ok ? 1 : 0;
    if (report_json) {
      std::ostringstream os;
      os << "{\"ok\":" << (res.ok ? "true" : "false") << ",\"violations\":[";
      for (size_t i = 0; i < res.violations.size(); ++i) {
        const Violation& v = res.violations[i];
        const char* kind = v.kind == Violation::Kind::kSymmetry ? "symmetry"
                           : v.kind == Violation::Kind::kDiagonal
                               ? "diagonal"
                               : "range";
        os << (i ? "," : "") << "{\"kind\":\"" << kind << "\",\"j\":" << v.j
           << ",\"i1\":" << v.i1 << ",\"i2\":" << v.i2 << "}";
      }
      os << "]}";
      *report_json = dup_string(os.str());
    }
  });
}

mcpref_status mcpref_tensor_score(const mcpref_tensor* t, const double* pi1,
                                  const double* pi2, double* score) {
  return wrap([&] {
    require(t && score, "null argument");
    int d = t->t.objects();
    Vec s = t->t.score(Distribution(to_vec(pi1, d)),
                       Distribution(to_vec(pi2, d)));
    for (int j = 0; j < t->t.criteria(); ++j) score[j] = s[j];
  });
}

mcpref_status mcpref_tensor_weighted_matrix(const mcpref_tensor* t,
                                            const double* w, double* matrix) {
  return wrap([&] {
    require(t && matrix, "null argument");
    Mat m = t->t.weighted_matrix(to_vec(w, t->t.criteria()));
    int d = t->t.objects();
    for (int r = 0; r < d; ++r)
      for (int c = 0; c < d; ++c) matrix[r * d + c] = m(r, c);
  });
}

/* ---- constructors ---- */

mcpref_status mcpref_tensor_all_half(int d, int k, mcpref_tensor** out) {
  return wrap([&] {
    require(out, "null output");
    *out = new mcpref_tensor{all_half(d, k)};
  });
}

mcpref_status mcpref_tensor_conflict(int d, int k, mcpref_tensor** out) {
  return wrap([&] {
    require(out, "null output");
    *out = new mcpref_tensor{conflict_example(d, k)};
  });
}

mcpref_status mcpref_tensor_lecam(int d, int k, double gamma, int which,
                                  mcpref_tensor** out) {
  return wrap([&] {
    require(out, "null output");
    require(which == 0 || which == 1, "which must be 0 or 1");
    auto pair = lecam_pair(d, k, gamma);
    *out = new mcpref_tensor{which == 0 ? std::move(pair.first)
                                        : std::move(pair.second)};
  });
}

mcpref_status mcpref_tensor_alpha_beta(double alpha, double beta, int j1,
                                       int j2, int k, mcpref_tensor** out) {
  return wrap([&] {
    require(out, "null output");
    *out = new mcpref_tensor{alpha_beta_tensor(alpha, beta, j1, j2, k)};
  });
}

mcpref_status mcpref_tensor_delta_mixture(double delta, double alpha0,
                                          double beta0, int j1, int j2, int k,
                                          mcpref_tensor** out) {
  return wrap([&] {
    require(out, "null output");
    *out = new mcpref_tensor{delta_mixture(delta, alpha0, beta0, j1, j2, k)};
  });
}

mcpref_status mcpref_tensor_rps(int d, mcpref_tensor** out) {
  return wrap([&] {
    require(out, "null output");
    *out = new mcpref_tensor{PreferenceTensor({rps_matrix(d)})};
  });
}

mcpref_status mcpref_driving_load(const char* data_dir, mcpref_tensor** tensor,
                                  mcpref_tensor** overall, mcpref_set** s1,
                                  mcpref_set** s2) {
  return wrap([&] {
    DrivingData data =
        data_dir ? driving_dataset(data_dir) : driving_dataset();
    if (tensor) *tensor = new mcpref_tensor{std::move(data.tensor)};
    if (overall) *overall = new mcpref_tensor{PreferenceTensor({data.overall})};
    if (s1) *s1 = new mcpref_set{std::move(data.s1)};
    if (s2) *s2 = new mcpref_set{std::move(data.s2)};
  });
}

/* ---- sets ---- */

mcpref_status mcpref_set_create(int k, const double* lower, int n_halfspaces,
                                const double* a, const double* b,
                                mcpref_set** out) {
  return wrap([&] {
    require(out, "null output");
    require(n_halfspaces == 0 || (a && b), "half-space arrays missing");
    std::vector<HalfSpace> hs;
    for (int r = 0; r < n_halfspaces; ++r)
      hs.push_back({to_vec(a + static_cast<size_t>(r) * k, k), b[r]});
    *out = new mcpref_set{TargetSet(to_vec(lower, k), std::move(hs))};
  });
}

mcpref_status mcpref_set_from_json(const char* json, mcpref_set** out) {
  return wrap([&] {
    require(out && json, "null argument");
    *out = new mcpref_set{set_from_json(json)};
  });
}

mcpref_status mcpref_set_load(const char* path, mcpref_set** out) {
  return wrap([&] {
    require(out && path, "null argument");
    *out = new mcpref_set{load_set(path)};
  });
}

mcpref_status mcpref_set_to_json(const mcpref_set* s, char** out) {
  return wrap([&] {
    require(s && out, "null argument");
    *out = dup_string(set_to_json(s->s));
  });
}

mcpref_status mcpref_set_save(const mcpref_set* s, const char* path) {
  return wrap([&] {
    require(s && path, "null argument");
    save_set(s->s, path);
  });
}

void mcpref_set_free(mcpref_set* s) { delete s; }

int mcpref_set_criteria(const mcpref_set* s) { return s ? s->s.criteria() : 0; }

mcpref_status mcpref_set_weighted(int k, const double* w, mcpref_set** out) {
  return wrap([&] {
    require(out, "null output");
    *out = new mcpref_set{TargetSet::weighted(to_vec(w, k))};
  });
}

mcpref_status mcpref_set_contains(const mcpref_set* s, const double* z, int k,
                                  int* out) {
  return wrap([&] {
    require(s && out, "null argument");
    require_dim(k == s->s.criteria());
    *out = s->s.contains(to_vec(z, k)) ? 1 : 0;
  });
}

mcpref_status mcpref_set_distance(const mcpref_set* s, const double* z, int k,
                                  double q, double* out) {
  return wrap([&] {
    require(s && out, "null argument");
    require_dim(k == s->s.criteria());
    *out = s->s.distance(to_vec(z, k), norm_of(q));
  });
}

mcpref_status mcpref_set_project(const mcpref_set* s, const double* z, int k,
                                 double q, double* out) {
  return wrap([&] {
    require(s && out, "null argument");
    require_dim(k == s->s.criteria());
    Vec p = s->s.project(to_vec(z, k), norm_of(q));
    for (int j = 0; j < p.size(); ++j) out[j] = p[j];
  });
}

/* ---- objective ---- */

mcpref_status mcpref_value(const mcpref_tensor* t, const mcpref_set* s,
                           double q, const double* pi, double* out) {
  return wrap([&] {
    require(out, "null output");
    ValueContext ctx = context_of(t, s, q);
    *out = value(ctx, Distribution(to_vec(pi, ctx.tensor.objects())));
  });
}

mcpref_status mcpref_best_response(const mcpref_tensor* t, const mcpref_set* s,
                                   double q, const double* pi, double tol,
                                   int* indices, int* count) {
  return wrap([&] {
    require(indices && count, "null output");
    ValueContext ctx = context_of(t, s, q);
    BestResponseSet br = best_response_set(
        ctx, Distribution(to_vec(pi, ctx.tensor.objects())), tol);
    *count = static_cast<int>(br.indices.size());
    for (size_t i = 0; i < br.indices.size(); ++i) indices[i] = br.indices[i];
  });
}

mcpref_status mcpref_achievable(const mcpref_tensor* t, const mcpref_set* s,
                                double q, double tol, int* out) {
  return wrap([&] {
    require(out, "null output");
    *out = achievable(context_of(t, s, q), tol) ? 1 : 0;
  });
}

/* ---- solving ---- */

void mcpref_solver_params_init(mcpref_solver_params* p) {
  if (!p) return;
  p->iterations = 1000;
  p->eta = 0.0;
  p->delta = 0.0;
  p->c = 1.0;
  p->seed = 0;
  p->record_trace = 0;
}

mcpref_status mcpref_solve_von_neumann(int d, const double* payoff,
                                       mcpref_report** out) {
  return wrap([&] {
    require(out, "null output");
    *out = new mcpref_report{solve_von_neumann(to_mat(payoff, d, d))};
  });
}

mcpref_status mcpref_solve_blackwell_lp(const mcpref_tensor* t,
                                        const mcpref_set* s, double q,
                                        mcpref_report** out) {
  return wrap([&] {
    require(out, "null output");
    *out = new mcpref_report{solve_blackwell_lp(context_of(t, s, q))};
  });
}

mcpref_status mcpref_solve_exact(const mcpref_tensor* t, const mcpref_set* s,
                                 double q, mcpref_report** out) {
  return wrap([&] {
    require(out, "null output");
    *out = new mcpref_report{exact_solve(context_of(t, s, q))};
  });
}

mcpref_status mcpref_solve_first_order(const mcpref_tensor* t,
                                       const mcpref_set* s, double q,
                                       const mcpref_solver_params* p,
                                       mcpref_report** out) {
  return wrap([&] {
    require(out, "null output");
    *out =
        new mcpref_report{solve_first_order(context_of(t, s, q), convert(p))};
  });
}

mcpref_status mcpref_solve_zeroth_order(const mcpref_tensor* t,
                                        const mcpref_set* s, double q,
                                        const mcpref_solver_params* p,
                                        mcpref_report** out) {
  return wrap([&] {
    require(out, "null output");
    *out =
        new mcpref_report{solve_zeroth_order(context_of(t, s, q), convert(p))};
  });
}

void mcpref_report_free(mcpref_report* r) { delete r; }

int mcpref_report_winner(const mcpref_report* r, double* out, int cap) {
  if (!r || !out) return -1;
  int d = r->r.winner.size();
  if (cap < d) return -1;
  for (int i = 0; i < d; ++i) out[i] = r->r.winner[i];
  return d;
}

double mcpref_report_value(const mcpref_report* r) {
  return r ? r->r.value : std::numeric_limits<double>::quiet_NaN();
}

long long mcpref_report_iterations(const mcpref_report* r) {
  return r ? r->r.iterations : 0;
}

const char* mcpref_report_method(const mcpref_report* r) {
  return r ? r->r.method.c_str() : "";
}

mcpref_status mcpref_report_to_json(const mcpref_report* r, char** out) {
  return wrap([&] {
    require(r && out, "null argument");
    *out = dup_string(report_to_json(r->r));
  });
}

mcpref_status mcpref_report_trace_csv(const mcpref_report* r, char** out) {
  return wrap([&] {
    require(r && out, "null argument");
    *out = dup_string(report_trace_csv(r->r));
  });
}

/* ---- sampling and estimation ---- */

mcpref_status mcpref_plug_in_estimate(const mcpref_tensor* truth,
                                      const mcpref_set* s, double q,
                                      long long n, uint64_t seed, int strict,
                                      mcpref_report** out, double* delta_p) {
  return wrap([&] {
    require(truth && s && out, "null argument");
    PlugInResult res =
        plug_in_estimate(s->s, norm_of(q), truth->t, n, seed, strict != 0);
    if (delta_p) *delta_p = res.delta_p;
    *out = new mcpref_report{std::move(res.report)};
  });
}

mcpref_status mcpref_sample_batch_csv(const mcpref_tensor* truth, long long n,
                                      uint64_t seed, char** csv,
                                      char** meta_json) {
  return wrap([&] {
    require(truth, "null tensor");
    SampleBatch batch = sample_bernoulli(truth->t, n, seed);
    if (csv) *csv = dup_string(batch_to_csv(batch));
    if (meta_json) *meta_json = dup_string(batch_meta_json(batch));
  });
}

mcpref_status mcpref_build_empirical_csv(int d, int k, const char* csv,
                                         int strict, mcpref_tensor** out) {
  return wrap([&] {
    require(csv && out, "null argument");
    SampleBatch batch = batch_from_csv(csv, "bernoulli", 0);
    *out = new mcpref_tensor{build_empirical(d, k, batch, strict != 0)};
  });
}

mcpref_status mcpref_plug_in_nash(int d, const double* payoff,
                                  const double* variances, long long n,
                                  uint64_t seed, mcpref_report** out,
                                  double* delta_a) {
  return wrap([&] {
    require(out, "null output");
    Mat a = to_mat(payoff, d, d);
    GaussianModel m = variances ? GaussianModel(a, to_mat(variances, d, d))
                                : GaussianModel(a);
    PlugInNashResult res = plug_in_nash(m, n, seed);
    if (delta_a) *delta_a = res.delta_a;
    *out = new mcpref_report{std::move(res.report)};
  });
}

mcpref_status mcpref_effective_variance(int d, const double* payoff,
                                        const double* variances,
                                        const double* pi_star, double* out) {
  return wrap([&] {
    require(out, "null output");
    Mat a = to_mat(payoff, d, d);
    GaussianModel m = variances ? GaussianModel(a, to_mat(variances, d, d))
                                : GaussianModel(a);
    *out = effective_variance(m, Distribution(to_vec(pi_star, d)));
  });
}

/* ---- experiments ---- */

mcpref_status mcpref_sweep_run(const char* config_json, int threads,
                               char** result_json, char** csv) {
  return wrap([&] {
    require(config_json, "null config");
    SweepResult res =
        sweep_sample_complexity(sweep_config_from_json(config_json), threads);
    if (result_json) *result_json = dup_string(sweep_result_json(res));
    if (csv) *csv = dup_string(sweep_csv(res.records));
  });
}

mcpref_status mcpref_nash_sweep_run(const char* config_json, int threads,
                                    char** result_json, char** csv) {
  return wrap([&] {
    require(config_json, "null config");
    NashSweepResult res = sweep_nash_adaptivity(
        nash_sweep_config_from_json(config_json), threads);
    if (result_json) *result_json = dup_string(nash_sweep_result_json(res));
    if (csv) *csv = dup_string(sweep_csv(res.records, "d"));
  });
}

mcpref_status mcpref_convergence_trace(const char* config_json, char** csv) {
  return wrap([&] {
    require(config_json && csv, "null argument");
    TraceResult res = convergence_trace(trace_config_from_json(config_json));
    *csv = dup_string(trace_csv(res));
  });
}

mcpref_status mcpref_value_curve(const char* config_json, char** csv) {
  return wrap([&] {
    require(config_json && csv, "null argument");
    CurveConfig cfg = curve_config_from_json(config_json);
    *csv = dup_string(curve_csv(
        value_curve(cfg.alpha0, cfg.beta0, cfg.j1, cfg.j2, cfg.k, cfg.set,
                    cfg.grid)));
  });
}

mcpref_status mcpref_binomial_test(long long n, long long x, double p0,
                                   double* out) {
  return wrap([&] {
    require(out, "null output");
    *out = binomial_test(n, x, p0);
  });
}

mcpref_status mcpref_verify(int* pass, char** report_text) {
  return wrap([&] {
    require(pass, "null output");
    VerifyReport rep = run_verification();
    *pass = rep.all_passed ? 1 : 0;
    if (report_text) *report_text = dup_string(verify_report_text(rep));
  });
}

} /* extern "C" */
