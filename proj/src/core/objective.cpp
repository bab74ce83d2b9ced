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

#include "core/objective.hpp"

#include "core/solvers.hpp"

namespace mcpref {

Vec opponent_distances(const ValueContext& ctx, const Vec& x) {
  const int d = ctx.tensor.objects();
  const int k = ctx.tensor.criteria();
  // Row vector x' P^j gives the criterion-j scores against every opponent.
  Mat scores(k, d);
  for (int j = 0; j < k; ++j)
    scores.row(j) = x.transpose() * ctx.tensor.slice(j);
  Vec out(d);
  for (int i = 0; i < d; ++i) out[i] = ctx.set.distance(scores.col(i), ctx.norm);
  return out;
}

double value_extended(const ValueContext& ctx, const Vec& x) {
  return opponent_distances(ctx, x).maxCoeff();
}

double value(const ValueContext& ctx, const Distribution& pi) {
  if (pi.size() != ctx.tensor.objects())
    throw Error(ErrorCode::kDimension, "distribution size != tensor d");
  return value_extended(ctx, pi.weights());
}

double suboptimality(const ValueContext& ctx, const Distribution& candidate,
                     double opt_value) {
  double delta = value(ctx, candidate) - opt_value;
  if (delta < -1e-8)
    throw Error(ErrorCode::kInternal,
                "candidate beats the claimed optimum by " +
                    std::to_string(-delta) + "; opt_value is wrong");
  return std::max(delta, 0.0);
}

BestResponseSet best_response_set(const ValueContext& ctx,
                                  const Distribution& pi, double tol) {
  if (tol < 0.0)
    throw Error(ErrorCode::kInvalidArgument, "tolerance must be >= 0");
  Vec dist = opponent_distances(ctx, pi.weights());
  double worst = dist.maxCoeff();
  BestResponseSet out;
  out.tol = tol;
  for (int i = 0; i < dist.size(); ++i)
    if (dist[i] >= worst - tol) out.indices.push_back(i);
  return out;
}

bool achievable(const ValueContext& ctx, double tol) {
  return exact_optimal_value(ctx, tol / 10.0) <= tol;
}

}  // namespace mcpref
