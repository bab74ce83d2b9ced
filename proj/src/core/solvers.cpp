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

#include "core/solvers.hpp"

#include <algorithm>
#include <cmath>

#include "core/rng.hpp"
#include "core/simplex.hpp"

namespace mcpref {
namespace {

Distribution clean_distribution(Vec w) {
  for (Eigen::Index i = 0; i < w.size(); ++i) w[i] = std::max(w[i], 0.0);
  double s = w.sum();
  if (s <= 0.0) throw Error(ErrorCode::kInternal, "degenerate solver output");
  return Distribution(w / s);
}

// LP-exact reports must agree with the direct evaluation of the objective.
void check_lp_consistency(double lp_value, double recomputed) {
  if (std::abs(lp_value - recomputed) > 1e-8)
    throw Error(ErrorCode::kInternal,
                "LP objective " + std::to_string(lp_value) +
                    " disagrees with recomputed value " +
                    std::to_string(recomputed));
}

double clamp_exp(double x) { return std::exp(std::clamp(x, -700.0, 700.0)); }

Vec softmax(const Vec& theta) {
  Vec out = theta.array() - theta.maxCoeff();
  for (Eigen::Index i = 0; i < out.size(); ++i) out[i] = clamp_exp(out[i]);
  return out / out.sum();
}

double default_eta_first_order(const ValueContext& ctx, long long T) {
  int d = ctx.tensor.objects();
  double lip = ctx.norm.dim_factor(ctx.tensor.criteria());
  return (1.0 / lip) * std::sqrt(2.0 * std::log(static_cast<double>(d)) /
                                 static_cast<double>(T));
}

}  // namespace

SolveReport solve_von_neumann(const Mat& payoff) {
  const int d = static_cast<int>(payoff.rows());
  if (payoff.cols() != d || d < 1)
    throw Error(ErrorCode::kDimension, "payoff matrix must be square");
  if (!payoff.allFinite())
    throw Error(ErrorCode::kInvalidArgument, "payoff matrix has non-finite entries");

  // The value variable is kept nonnegative by shifting the payoffs up; Nash
  // strategies are invariant under constant shifts.
  double shift = std::max(0.0, -payoff.minCoeff());
  Mat m = payoff.array() + shift;

  LinearProgram lp;
  lp.c = Vec::Zero(d + 1);
  lp.c[d] = -1.0;  // max t
  lp.a_ub = Mat::Zero(d, d + 1);
  lp.b_ub = Vec::Zero(d);
  for (int i = 0; i < d; ++i) {
    lp.a_ub.row(i).head(d) = -m.col(i).transpose();
    lp.a_ub(i, d) = 1.0;
  }
  lp.a_eq = Mat::Zero(1, d + 1);
  lp.a_eq.row(0).head(d).setOnes();
  lp.b_eq = Vec::Ones(1);

  LpSolution sol = solve_lp(lp);
  SolveReport rep{clean_distribution(sol.x.head(d)), 0.0, "lp-exact",
                  sol.pivots};
  double t_lp = sol.x[d] - shift;
  Vec against = payoff.transpose() * rep.winner.weights();
  rep.value = against.minCoeff();
  check_lp_consistency(t_lp, rep.value);
  return rep;
}

SolveReport solve_blackwell_lp(const ValueContext& ctx) {
  if (!ctx.norm.is_inf())
    throw Error(ErrorCode::kUnsupported,
                "exact LP path requires the sup norm; use solve_blackwell_l1 "
                "or an iterative solver");
  const int d = ctx.tensor.objects();
  const int k = ctx.tensor.criteria();
  const auto& hs = ctx.set.halfspaces();
  const int h = static_cast<int>(hs.size());

  LinearProgram lp;
  lp.c = Vec::Zero(d + 1);
  lp.c[d] = 1.0;  // min t
  lp.a_ub = Mat::Zero(d * (k + h), d + 1);
  lp.b_ub = Vec::Zero(d * (k + h));
  int r = 0;
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < k; ++j, ++r) {
      lp.a_ub.row(r).head(d) = -ctx.tensor.slice(j).col(i).transpose();
      lp.a_ub(r, d) = -1.0;
      lp.b_ub[r] = -ctx.set.lower()[j];
    }
    for (int c = 0; c < h; ++c, ++r) {
      double asum = hs[c].a.sum();
      Vec combined = Vec::Zero(d);
      for (int j = 0; j < k; ++j)
        combined += (hs[c].a[j] / asum) * ctx.tensor.slice(j).col(i);
      lp.a_ub.row(r).head(d) = -combined.transpose();
      lp.a_ub(r, d) = -1.0;
      lp.b_ub[r] = -hs[c].b / asum;
    }
  }
  lp.a_eq = Mat::Zero(1, d + 1);
  lp.a_eq.row(0).head(d).setOnes();
  lp.b_eq = Vec::Ones(1);

  LpSolution sol = solve_lp(lp);
  SolveReport rep{clean_distribution(sol.x.head(d)), 0.0, "lp-exact",
                  sol.pivots};
  rep.value = value(ctx, rep.winner);
  check_lp_consistency(sol.x[d], rep.value);
  return rep;
}

SolveReport solve_blackwell_l1(const ValueContext& ctx) {
  if (ctx.norm.q != 1.0)
    throw Error(ErrorCode::kUnsupported, "this path is the l1 LP");
  const int d = ctx.tensor.objects();
  const int k = ctx.tensor.criteria();
  const auto& hs = ctx.set.halfspaces();
  const int h = static_cast<int>(hs.size());

  // Variables: pi (d), t (1), then an auxiliary nearest point v^i per
  // opponent (d*k). l1 distance = sum_j (v^i_j - score_j) at the optimum.
  const int n = d + 1 + d * k;
  auto vcol = [&](int i, int j) { return d + 1 + i * k + j; };

  const int rows = d * (2 * k + h + 1);
  LinearProgram lp;
  lp.c = Vec::Zero(n);
  lp.c[d] = 1.0;
  lp.a_ub = Mat::Zero(rows, n);
  lp.b_ub = Vec::Zero(rows);
  int r = 0;
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < k; ++j, ++r) {  // v >= score
      lp.a_ub.row(r).head(d) = ctx.tensor.slice(j).col(i).transpose();
      lp.a_ub(r, vcol(i, j)) = -1.0;
    }
    for (int j = 0; j < k; ++j, ++r) {  // v >= lower
      lp.a_ub(r, vcol(i, j)) = -1.0;
      lp.b_ub[r] = -ctx.set.lower()[j];
    }
    for (int c = 0; c < h; ++c, ++r) {  // a.v >= b
      for (int j = 0; j < k; ++j) lp.a_ub(r, vcol(i, j)) = -hs[c].a[j];
      lp.b_ub[r] = -hs[c].b;
    }
    // sum_j (v_j - score_j) <= t
    for (int j = 0; j < k; ++j) {
      lp.a_ub(r, vcol(i, j)) = 1.0;
      lp.a_ub.row(r).head(d) -= ctx.tensor.slice(j).col(i).transpose();
    }
    lp.a_ub(r, d) = -1.0;
    ++r;
  }
  lp.a_eq = Mat::Zero(1, n);
  lp.a_eq.row(0).head(d).setOnes();
  lp.b_eq = Vec::Ones(1);

  LpSolution sol = solve_lp(lp);
  SolveReport rep{clean_distribution(sol.x.head(d)), 0.0, "lp-exact",
                  sol.pivots};
  rep.value = value(ctx, rep.winner);
  check_lp_consistency(sol.x[d], rep.value);
  return rep;
}

CertifiedSolve solve_blackwell_certified(const ValueContext& ctx,
                                         double target_gap, int max_cuts) {
  const int d = ctx.tensor.objects();

  struct Cut {
    double offset;  // v(pi0) - g.pi0
    Vec g;
  };
  std::vector<Cut> cuts;
  cuts.reserve(max_cuts);

  Vec best_pi;
  double best_value = std::numeric_limits<double>::infinity();

  auto eval_and_cut = [&](const Vec& w) {
    Distribution pi = clean_distribution(w);
    double v = value(ctx, pi);
    if (v < best_value) {
      best_value = v;
      best_pi = pi.weights();
    }
    Vec g = subgradient(ctx, pi);
    cuts.push_back({v - g.dot(pi.weights()), std::move(g)});
    return v;
  };

  // Warm phase: a short exponentiated-gradient run seeds the cut pool with
  // iterates near the optimum, which keeps the master LPs small.
  {
    const long long warm = 48;
    double eta = default_eta_first_order(ctx, warm);
    Vec pi = Vec::Constant(d, 1.0 / d);
    for (long long t = 0; t < warm && best_value > 0.0; ++t) {
      eval_and_cut(pi);
      const Vec& g = cuts.back().g;
      for (int i = 0; i < d; ++i) pi[i] *= clamp_exp(-eta * g[i]);
      pi /= pi.sum();
    }
  }

  double lower = 0.0;  // value() is nonnegative by construction
  while (best_value - lower > target_gap &&
         static_cast<int>(cuts.size()) < max_cuts && best_value > 0.0) {
    // Master: min t s.t. t >= offset_c + g_c.pi over the simplex.
    const int n = d + 1;
    LinearProgram lp;
    lp.c = Vec::Zero(n);
    lp.c[d] = 1.0;
    lp.a_ub = Mat::Zero(static_cast<int>(cuts.size()), n);
    lp.b_ub = Vec::Zero(static_cast<int>(cuts.size()));
    for (size_t c = 0; c < cuts.size(); ++c) {
      lp.a_ub.row(static_cast<int>(c)).head(d) = cuts[c].g.transpose();
      lp.a_ub(static_cast<int>(c), d) = -1.0;
      lp.b_ub[static_cast<int>(c)] = -cuts[c].offset;
    }
    lp.a_eq = Mat::Zero(1, n);
    lp.a_eq.row(0).head(d).setOnes();
    lp.b_eq = Vec::Ones(1);
    LpSolution sol = solve_lp(lp);
    lower = std::max(lower, sol.objective);
    if (best_value - lower <= target_gap) break;
    eval_and_cut(sol.x.head(d));
  }
  if (best_value <= 0.0) lower = best_value;

  CertifiedSolve out{
      {clean_distribution(best_pi), best_value, "cutting-plane",
       static_cast<long long>(cuts.size())},
      lower, best_value - lower};
  return out;
}

double exact_optimal_value(const ValueContext& ctx, double target_gap) {
  return exact_solve(ctx, target_gap).value;
}

SolveReport exact_solve(const ValueContext& ctx, double target_gap) {
  if (ctx.norm.is_inf()) return solve_blackwell_lp(ctx);
  if (ctx.norm.q == 1.0) return solve_blackwell_l1(ctx);
  return solve_blackwell_certified(ctx, target_gap).report;
}

Vec subgradient(const ValueContext& ctx, const Distribution& pi) {
  const int d = ctx.tensor.objects();
  const int k = ctx.tensor.criteria();
  Vec dists = opponent_distances(ctx, pi.weights());
  double worst = dists.maxCoeff();
  if (worst <= 0.0) return Vec::Zero(d);

  int istar = 0;
  while (dists[istar] < worst - 1e-9) ++istar;
  Vec z = ctx.tensor.score_vs_pure(pi, istar);

  if (ctx.norm.is_inf()) {
    // Gradient of the active affine piece of the uniform-shift closed form.
    int best_box = -1, best_hs = -1;
    double best = -std::numeric_limits<double>::infinity();
    for (int j = 0; j < k; ++j) {
      double piece = ctx.set.lower()[j] - z[j];
      if (piece > best + 1e-15) {
        best = piece;
        best_box = j;
      }
    }
    const auto& hs = ctx.set.halfspaces();
    for (size_t c = 0; c < hs.size(); ++c) {
      double piece = (hs[c].b - hs[c].a.dot(z)) / hs[c].a.sum();
      if (piece > best + 1e-15) {
        best = piece;
        best_box = -1;
        best_hs = static_cast<int>(c);
      }
    }
    if (best_box >= 0) return -ctx.tensor.slice(best_box).col(istar);
    const HalfSpace& h = hs[best_hs];
    Vec g = Vec::Zero(d);
    for (int j = 0; j < k; ++j)
      g -= (h.a[j] / h.a.sum()) * ctx.tensor.slice(j).col(istar);
    return g;
  }
  if (!ctx.norm.is_smooth())
    throw Error(ErrorCode::kUnsupported,
                "subgradients need a smooth norm or the sup norm");

  Vec proj = ctx.set.project(z, ctx.norm);
  Vec u = z - proj;
  double nrm = ctx.norm.norm(u);
  if (nrm <= 1e-14) return Vec::Zero(d);
  return ctx.tensor.column_slice(istar) * (u / nrm);
}

SolveReport solve_first_order(const ValueContext& ctx, const SolverParams& p) {
  if (p.iterations < 1)
    throw Error(ErrorCode::kInvalidArgument, "need at least 1 iteration");
  if (!ctx.norm.is_inf() && !ctx.norm.is_smooth())
    throw Error(ErrorCode::kUnsupported,
                "first-order method needs subgradients (smooth or sup norm)");
  const int d = ctx.tensor.objects();
  const long long T = p.iterations;
  if (d == 1) {
    SolveReport rep{Distribution::point_mass(1, 0), 0.0, "first-order", T};
    rep.value = value(ctx, rep.winner);
    rep.last_iterate = rep.winner;
    rep.last_value = rep.value;
    return rep;
  }
  double eta = p.eta > 0.0 ? p.eta : default_eta_first_order(ctx, T);

  Vec pi = Vec::Constant(d, 1.0 / d);  // theta_1 = ones, normalized
  Vec avg = Vec::Zero(d);
  SolveReport rep{Distribution::uniform(d), 0.0, "first-order", T};
  if (p.record_trace) rep.trace.reserve(T);

  for (long long t = 1; t <= T; ++t) {
    Distribution cur(pi);
    if (p.record_trace) rep.trace.push_back(value(ctx, cur));
    avg += pi;
    if (t == T) {
      rep.last_iterate = cur;
      rep.last_value = value(ctx, cur);
      break;
    }
    Vec g = subgradient(ctx, cur);
    for (int i = 0; i < d; ++i) pi[i] *= clamp_exp(-eta * g[i]);
    pi /= pi.sum();
  }
  rep.winner = clean_distribution(avg / static_cast<double>(T));
  rep.value = value(ctx, rep.winner);
  return rep;
}

SolveReport solve_zeroth_order(const ValueContext& ctx, const SolverParams& p) {
  if (p.iterations < 1)
    throw Error(ErrorCode::kInvalidArgument, "need at least 1 iteration");
  const int d = ctx.tensor.objects();
  const int k = ctx.tensor.criteria();
  const long long T = p.iterations;
  if (d == 1) {
    SolveReport rep{Distribution::point_mass(1, 0), 0.0, "zeroth-order", T};
    rep.value = value(ctx, rep.winner);
    rep.seed = p.seed;
    rep.last_iterate = rep.winner;
    rep.last_value = rep.value;
    return rep;
  }
  const double sqrt_t = std::sqrt(static_cast<double>(T));
  double eta = p.eta > 0.0
                   ? p.eta
                   : p.c / (ctx.norm.dim_factor(k) * std::sqrt(d) * sqrt_t);
  double delta = p.delta > 0.0 ? p.delta : p.c * std::log(d) / sqrt_t;

  SplitMix64 rng(p.seed);
  Vec theta = Vec::Zero(d);
  Vec avg = Vec::Zero(d);
  SolveReport rep{Distribution::uniform(d), 0.0, "zeroth-order", T};
  rep.seed = p.seed;
  if (p.record_trace) rep.trace.reserve(T);

  Vec pi;
  for (long long t = 1; t <= T; ++t) {
    pi = softmax(theta);
    if (p.record_trace) rep.trace.push_back(value_extended(ctx, pi));
    avg += pi;
    Vec u = sphere_sample(d, rng);
    // Two-point estimate; the query points leave the simplex, the score map
    // extends linearly.
    double vp = value_extended(ctx, pi + delta * u);
    double vm = value_extended(ctx, pi - delta * u);
    theta -= eta * (d / (2.0 * delta)) * (vp - vm) * u;
  }
  rep.last_iterate = Distribution(pi);
  rep.last_value = value_extended(ctx, pi);
  rep.winner = clean_distribution(avg / static_cast<double>(T));
  rep.value = value(ctx, rep.winner);
  return rep;
}

}  // namespace mcpref
