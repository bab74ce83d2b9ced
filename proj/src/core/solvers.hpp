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
#include <optional>
#include <string>
#include <vector>

#include "core/objective.hpp"

namespace mcpref {

struct SolveReport {
  Distribution winner = Distribution::point_mass(1, 0);
  double value = 0.0;  // objective at winner, recomputed on emit
  std::string method;  // lp-exact | first-order | zeroth-order
  long long iterations = 0;
  std::vector<double> trace;  // per-iterate objective values when recorded
  std::optional<uint64_t> seed;
  std::optional<Distribution> last_iterate;  // iterative methods also report
  std::optional<double> last_value;          // the unaveraged final point
};

struct SolverParams {
  long long iterations = 1000;  // T
  double eta = 0.0;             // 0 = method default
  double delta = 0.0;           // 0 = method default (zeroth-order radius)
  double c = 1.0;               // step/radius constant in the defaults
  uint64_t seed = 0;
  bool record_trace = false;
};

/// Nash strategy of max_pi min_i pi' M e_i via the linear program
///   max t  s.t.  pi' M e_i >= t for all i, pi on the simplex.
/// M is a [0,1] payoff matrix; valid preference matrices give t* = 1/2.
/// Degenerate optima resolve to the vertex Bland's rule reaches.
SolveReport solve_von_neumann(const Mat& payoff);

/// Exact minimizer of value() for the sup norm over a monotone polyhedron.
/// The uniform-shift closed form makes value() a max of affine functions of
/// pi, so the minimax is one LP:
///   min t  s.t.  lower_j - pi'P^j e_i <= t                 (box pieces)
///                (b_H - sum_j a_Hj pi'P^j e_i)/sum_j a_Hj <= t  (half-spaces)
///                pi on the simplex, t >= 0.
SolveReport solve_blackwell_lp(const ValueContext& ctx);

/// Exact minimizer for the l1 norm. The distance epigraph is linear after
/// lifting one auxiliary score point per opponent (the nearest point never
/// moves a coordinate down), giving an LP in (pi, t, v^1..v^d).
SolveReport solve_blackwell_l1(const ValueContext& ctx);

/// Cutting-plane minimizer for the remaining (smooth) norms with a certified
/// optimality gap: Kelley lower bounds from an LP master over accumulated
/// subgradient cuts, incumbent upper bounds from the evaluated iterates.
struct CertifiedSolve {
  SolveReport report;
  double lower_bound = 0.0;
  double gap = 0.0;  // report.value - lower_bound
};
CertifiedSolve solve_blackwell_certified(const ValueContext& ctx,
                                         double target_gap = 1e-9,
                                         int max_cuts = 600);

/// Exact (or certified to target_gap) optimal value, dispatching on the norm:
/// q = inf and q = 1 use the LPs above, smooth q the cutting-plane solver.
double exact_optimal_value(const ValueContext& ctx, double target_gap = 1e-9);

/// Exact/certified solve dispatching the same way.
SolveReport exact_solve(const ValueContext& ctx, double target_gap = 1e-9);

/// One subgradient of value() at pi. For the sup norm this is the gradient of
/// the active affine piece of the closed form; for smooth q it is
///   P(., i*) (z - proj(z)) / ||z - proj(z)||_q with z = P(pi, i*),
/// i* the lowest-index worst-case opponent. Zero vector where value(pi) = 0.
Vec subgradient(const ValueContext& ctx, const Distribution& pi);

/// Exponentiated-gradient descent on value(): theta_{t+1,i} =
/// pi_{t,i} exp(-eta g_{t,i}), normalized; uniform start; returns the
/// averaged iterate. Default eta = (1/k^{1/q}) sqrt(2 log d / T).
SolveReport solve_first_order(const ValueContext& ctx, const SolverParams& p);

/// Two-point zeroth-order mirror descent: entropic mirror step pi_t =
/// softmax(theta_t), sphere direction u_t, gradient estimate
/// (d / 2 delta)(v(pi_t + delta u_t) - v(pi_t - delta u_t)) u_t.
/// Defaults eta = c / (k^{1/q} sqrt(d T)), delta = c log d / sqrt(T).
SolveReport solve_zeroth_order(const ValueContext& ctx, const SolverParams& p);

}  // namespace mcpref
