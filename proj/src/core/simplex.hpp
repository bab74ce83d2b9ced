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

#include "core/types.hpp"

namespace mcpref {

inline constexpr double kPivotTol = 1e-9;

/// minimize c.x  subject to  A_ub x <= b_ub, A_eq x = b_eq, x >= 0.
/// Either constraint block may be empty (0 rows).
struct LinearProgram {
  Mat a_ub;
  Vec b_ub;
  Mat a_eq;
  Vec b_eq;
  Vec c;
};

struct LpSolution {
  Vec x;
  double objective = 0.0;
  long long pivots = 0;
};

/// Dense two-phase tableau simplex with Bland's anti-cycling rule. Problem
/// sizes here are at most a few hundred constraints, so no factorization or
/// sparsity is attempted. Throws Error(kSolver) on infeasible or unbounded
/// input and on pivot-tolerance breakdown.
LpSolution solve_lp(const LinearProgram& lp);

}  // namespace mcpref
