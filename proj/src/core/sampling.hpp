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

#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "core/rng.hpp"
#include "core/solvers.hpp"

namespace mcpref {

/// One comparison query: unordered object pair (i1 < i2) and a criterion.
struct Query {
  int i1;
  int i2;
  int j;
};

/// Observations from the passive model, with the provenance needed to replay
/// them: (query, outcome) pairs, a model tag, and the seed.
struct SampleBatch {
  std::vector<std::pair<Query, double>> observations;
  std::string model;  // "bernoulli" | "gaussian"
  uint64_t seed = 0;
};

/// n i.i.d. queries: pair uniform over the d-choose-2 unordered pairs,
/// criterion uniform over [k].
std::vector<Query> draw_queries(int d, int k, long long n, uint64_t seed);

/// Bernoulli draw at the tensor's probability for the query.
int observe_bernoulli(const PreferenceTensor& t, const Query& q,
                      SplitMix64& rng);

/// draw_queries + observe_bernoulli in one pass.
SampleBatch sample_bernoulli(const PreferenceTensor& t, long long n,
                             uint64_t seed);

/// Empirical tensor: upper-triangular entries are per-cell sample means,
/// mirrored to a valid tensor. Cells with no observations default to one half
/// so the estimate stays a preference tensor; strict = true instead keeps the
/// literal zero that a 1-or-count denominator produces.
PreferenceTensor build_empirical(int d, int k, const SampleBatch& batch,
                                 bool strict = false);

struct PlugInResult {
  SolveReport report;
  double delta_p = 0.0;  // suboptimality of the estimate on the true tensor
  long long n = 0;
  uint64_t seed = 0;
  bool strict = false;
};

/// Samples n Bernoulli comparisons from truth, solves the instance built on
/// the empirical tensor, and scores the winner against the true tensor.
/// truth_opt_value, when finite, skips re-solving the true instance.
PlugInResult plug_in_estimate(
    const TargetSet& set, const NormSpec& norm, const PreferenceTensor& truth,
    long long n, uint64_t seed, bool strict = false,
    double truth_opt_value = std::numeric_limits<double>::quiet_NaN());

/// Payoff matrix observed through Gaussian noise; the default variances
/// A(1-A) match the Bernoulli model asymptotically.
struct GaussianModel {
  Mat payoff;
  Mat variances;

  explicit GaussianModel(Mat a);
  GaussianModel(Mat a, Mat var);
  int objects() const { return static_cast<int>(payoff.rows()); }
};

/// y ~ N(A_{i1,i2}, sigma^2_{i1,i2}). Unlike the Bernoulli model the pair is
/// ordered and both indices may coincide.
double observe_gaussian(const GaussianModel& m, int i1, int i2,
                        SplitMix64& rng);

struct PlugInNashResult {
  SolveReport report;
  double delta_a = 0.0;  // Nash value gap of the estimate on the true payoff
  long long n = 0;
  uint64_t seed = 0;
};

/// n ordered-pair Gaussian observations (both indices uniform), per-cell
/// means (unsampled cells one half), Nash solve of the empirical matrix,
/// gap measured on the true payoff. true_value, when finite, skips the solve
/// of the true matrix.
PlugInNashResult plug_in_nash(
    const GaussianModel& m, long long n, uint64_t seed,
    double true_value = std::numeric_limits<double>::quiet_NaN());

/// max_i (pi*)' diag(variances(., i)) pi* -- the noise level that actually
/// limits estimating the Nash value of this instance.
double effective_variance(const GaussianModel& m, const Distribution& pi_star);

/// CSV body "i1,i2,j,y" plus a JSON sidecar with model and seed.
std::string batch_to_csv(const SampleBatch& batch);
std::string batch_meta_json(const SampleBatch& batch);
SampleBatch batch_from_csv(const std::string& csv, const std::string& model,
                           uint64_t seed);

}  // namespace mcpref
