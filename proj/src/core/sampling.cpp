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

#include "core/sampling.hpp"

#include <cstdio>
#include <sstream>

namespace mcpref {

std::vector<Query> draw_queries(int d, int k, long long n, uint64_t seed) {
  if (d < 2) throw Error(ErrorCode::kInvalidArgument, "need d >= 2 to compare");
  if (k < 1 || n < 0)
    throw Error(ErrorCode::kInvalidArgument, "need k >= 1 and n >= 0");
  const uint64_t pairs = static_cast<uint64_t>(d) * (d - 1) / 2;
  SplitMix64 rng(seed);
  std::vector<Query> out;
  out.reserve(static_cast<size_t>(n));
  for (long long s = 0; s < n; ++s) {
    uint64_t pair = rng.below(pairs);
    // Row-major walk of the strict upper triangle.
    int i1 = 0;
    uint64_t row_len = static_cast<uint64_t>(d - 1);
    while (pair >= row_len) {
      pair -= row_len;
      --row_len;
      ++i1;
    }
    int i2 = i1 + 1 + static_cast<int>(pair);
    int j = static_cast<int>(rng.below(static_cast<uint64_t>(k)));
    out.push_back({i1, i2, j});
  }
  return out;
}

int observe_bernoulli(const PreferenceTensor& t, const Query& q,
                      SplitMix64& rng) {
  if (q.j < 0 || q.j >= t.criteria() || q.i1 < 0 || q.i1 >= q.i2 ||
      q.i2 >= t.objects())
    throw Error(ErrorCode::kInvalidArgument, "query indices out of range");
  return rng.uniform() < t.p(q.j, q.i1, q.i2) ? 1 : 0;
}

SampleBatch sample_bernoulli(const PreferenceTensor& t, long long n,
                             uint64_t seed) {
  SampleBatch batch;
  batch.model = "bernoulli";
  batch.seed = seed;
  std::vector<Query> queries = draw_queries(t.objects(), t.criteria(), n, seed);
  SplitMix64 rng(derive_seed(seed, 1));  // separate stream from the queries
  batch.observations.reserve(queries.size());
  for (const Query& q : queries)
    batch.observations.emplace_back(
        q, static_cast<double>(observe_bernoulli(t, q, rng)));
  return batch;
}

PreferenceTensor build_empirical(int d, int k, const SampleBatch& batch,
                                 bool strict) {
  std::vector<Mat> sums(k, Mat::Zero(d, d));
  std::vector<Mat> counts(k, Mat::Zero(d, d));
  for (const auto& [q, y] : batch.observations) {
    if (q.j < 0 || q.j >= k || q.i1 < 0 || q.i1 >= q.i2 || q.i2 >= d)
      throw Error(ErrorCode::kInvalidArgument, "observation out of range");
    if (batch.model == "bernoulli" && y != 0.0 && y != 1.0)
      throw Error(ErrorCode::kValidation, "bernoulli outcome must be 0 or 1");
    sums[q.j](q.i1, q.i2) += y;
    counts[q.j](q.i1, q.i2) += 1.0;
  }
  std::vector<Mat> upper(k, Mat::Constant(d, d, 0.5));
  for (int j = 0; j < k; ++j)
    for (int i1 = 0; i1 < d; ++i1)
      for (int i2 = i1 + 1; i2 < d; ++i2) {
        double c = counts[j](i1, i2);
        if (c > 0.0)
          upper[j](i1, i2) = sums[j](i1, i2) / c;
        else if (strict)
          upper[j](i1, i2) = 0.0;  // the literal 1-or-count convention
      }
  return complete_upper(upper);
}

PlugInResult plug_in_estimate(const TargetSet& set, const NormSpec& norm,
                              const PreferenceTensor& truth, long long n,
                              uint64_t seed, bool strict,
                              double truth_opt_value) {
  SampleBatch batch = sample_bernoulli(truth, n, seed);
  PreferenceTensor empirical =
      build_empirical(truth.objects(), truth.criteria(), batch, strict);

  ValueContext emp_ctx(empirical, set, norm);
  ValueContext true_ctx(truth, set, norm);
  SolveReport rep = exact_solve(emp_ctx);
  if (std::isnan(truth_opt_value))
    truth_opt_value = exact_optimal_value(true_ctx);

  PlugInResult out;
  out.delta_p = suboptimality(true_ctx, rep.winner, truth_opt_value);
  out.report = std::move(rep);
  out.report.seed = seed;
  out.n = n;
  out.seed = seed;
  out.strict = strict;
  return out;
}

GaussianModel::GaussianModel(Mat a)
    : payoff(std::move(a)),
      variances(payoff.array() * (1.0 - payoff.array())) {}

GaussianModel::GaussianModel(Mat a, Mat var)
    : payoff(std::move(a)), variances(std::move(var)) {
  if (variances.rows() != payoff.rows() || variances.cols() != payoff.cols())
    throw Error(ErrorCode::kDimension, "variance shape != payoff shape");
  if ((variances.array() < 0.0).any() || (variances.array() > 1.0).any())
    throw Error(ErrorCode::kValidation, "variances must lie in [0,1]");
}

double observe_gaussian(const GaussianModel& m, int i1, int i2,
                        SplitMix64& rng) {
  if (i1 < 0 || i1 >= m.objects() || i2 < 0 || i2 >= m.objects())
    throw Error(ErrorCode::kInvalidArgument, "indices out of range");
  return m.payoff(i1, i2) + std::sqrt(m.variances(i1, i2)) * rng.gaussian();
}

PlugInNashResult plug_in_nash(const GaussianModel& m, long long n,
                              uint64_t seed, double true_value) {
  const int d = m.objects();
  Mat sums = Mat::Zero(d, d);
  Mat counts = Mat::Zero(d, d);
  SplitMix64 rng(seed);
  for (long long s = 0; s < n; ++s) {
    int i1 = static_cast<int>(rng.below(static_cast<uint64_t>(d)));
    int i2 = static_cast<int>(rng.below(static_cast<uint64_t>(d)));
    sums(i1, i2) += observe_gaussian(m, i1, i2, rng);
    counts(i1, i2) += 1.0;
  }
  Mat emp = Mat::Constant(d, d, 0.5);
  for (int i1 = 0; i1 < d; ++i1)
    for (int i2 = 0; i2 < d; ++i2)
      if (counts(i1, i2) > 0.0) emp(i1, i2) = sums(i1, i2) / counts(i1, i2);

  SolveReport rep = solve_von_neumann(emp);
  if (std::isnan(true_value)) true_value = solve_von_neumann(m.payoff).value;

  PlugInNashResult out;
  Vec against = m.payoff.transpose() * rep.winner.weights();
  out.delta_a = true_value - against.minCoeff();
  out.report = std::move(rep);
  out.report.seed = seed;
  out.n = n;
  out.seed = seed;
  return out;
}

double effective_variance(const GaussianModel& m,
                          const Distribution& pi_star) {
  if (pi_star.size() != m.objects())
    throw Error(ErrorCode::kDimension, "distribution size != payoff d");
  double worst = 0.0;
  for (int i = 0; i < m.objects(); ++i) {
    double v = 0.0;
    for (int r = 0; r < m.objects(); ++r)
      v += pi_star[r] * pi_star[r] * m.variances(r, i);
    worst = std::max(worst, v);
  }
  return worst;
}

std::string batch_to_csv(const SampleBatch& batch) {
  std::ostringstream os;
  os << "i1,i2,j,y\n";
  char buf[64];
  for (const auto& [q, y] : batch.observations) {
    std::snprintf(buf, sizeof buf, "%d,%d,%d,%.17g\n", q.i1, q.i2, q.j, y);
    os << buf;
  }
  return os.str();
}

std::string batch_meta_json(const SampleBatch& batch) {
  std::ostringstream os;
  os << "{\"model\":\"" << batch.model << "\",\"seed\":" << batch.seed
     << ",\"count\":" << batch.observations.size() << "}";
  return os.str();
}

SampleBatch batch_from_csv(const std::string& csv, const std::string& model,
                           uint64_t seed) {
  SampleBatch batch;
  batch.model = model;
  batch.seed = seed;
  std::istringstream is(csv);
  std::string line;
  bool first = true;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    if (first && line.rfind("i1,", 0) == 0) {
      first = false;
      continue;
    }
    first = false;
    Query q{};
    double y = 0.0;
    if (std::sscanf(line.c_str(), "%d,%d,%d,%lf", &q.i1, &q.i2, &q.j, &y) != 4)
      throw Error(ErrorCode::kIo, "bad sample row: " + line);
    batch.observations.emplace_back(q, y);
  }
  return batch;
}

}  // namespace mcpref
