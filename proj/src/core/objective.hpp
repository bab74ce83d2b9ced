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

#include <vector>

#include "core/target_set.hpp"
#include "core/tensor.hpp"

namespace mcpref {

/// One problem instance: tensor, target set, and the norm measuring distance.
struct ValueContext {
  PreferenceTensor tensor;
  TargetSet set;
  NormSpec norm;

  ValueContext(PreferenceTensor t, TargetSet s, NormSpec n)
      : tensor(std::move(t)), set(std::move(s)), norm(n) {
    if (tensor.criteria() != set.criteria())
      throw Error(ErrorCode::kDimension, "tensor k != target set k");
  }
};

/// Worst-case distance of pi's score vector to the target set:
/// max over opponents of the distance of P(pi, i) from S. The inner max over
/// mixed opponents is attained at a pure one because the distance is convex
/// and the score map affine, so only the d pure columns are evaluated.
double value(const ValueContext& ctx, const Distribution& pi);

/// Same objective with the score map extended linearly to arbitrary vectors;
/// zeroth-order smoothing evaluates points slightly off the simplex.
double value_extended(const ValueContext& ctx, const Vec& x);

/// Per-opponent distances, in object order (the inner maximand of value()).
Vec opponent_distances(const ValueContext& ctx, const Vec& x);

/// value(candidate) - opt_value. Tiny negatives (>= -1e-8) clamp to zero;
/// anything more negative means opt_value was not the optimum and raises
/// kInternal.
double suboptimality(const ValueContext& ctx, const Distribution& candidate,
                     double opt_value);

/// Opponents within tol of the worst case for pi.
struct BestResponseSet {
  std::vector<int> indices;  // ascending; never empty
  double tol;
};
BestResponseSet best_response_set(const ValueContext& ctx,
                                  const Distribution& pi, double tol = 1e-9);

/// True iff some pi scores inside S against every opponent (min value <= tol).
/// Needs an exact solve of the instance, see solvers.hpp.
bool achievable(const ValueContext& ctx, double tol = 1e-7);

}  // namespace mcpref
