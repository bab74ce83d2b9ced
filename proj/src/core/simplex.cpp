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

#include "core/simplex.hpp"

#include <vector>

namespace mcpref {
namespace {

// Tableau layout: rows 0..m-1 are constraints in equality form with
// nonnegative right-hand sides, row m is the (phase-dependent) objective.
// Column order: structural variables, slacks, artificials, RHS.
struct Tableau {
  Mat t;                    // (m+1) x (n_total+1)
  std::vector<int> basis;   // basis[r] = column basic in row r
  int m;
  int n_total;
  long long pivots = 0;
  long long pivot_limit = 0;

  double& at(int r, int c) { return t(r, c); }
  double rhs(int r) const { return t(r, n_total); }

  void pivot(int row, int col) {
    double piv = t(row, col);
    t.row(row) /= piv;
    for (int r = 0; r <= m; ++r) {
      if (r == row) continue;
      double f = t(r, col);
      if (f != 0.0) t.row(r) -= f * t.row(row);
    }
    basis[row] = col;
    ++pivots;
  }

  // Bland's rule: entering = lowest-index column with reduced cost below
  // -tol; leaving = min-ratio row, ties broken by lowest basis index.
  // Returns false when optimal; throws when unbounded.
  bool step(int n_eligible) {
    int enter = -1;
    for (int c = 0; c < n_eligible; ++c) {
      if (t(m, c) < -kPivotTol) {
        enter = c;
        break;
      }
    }
    if (enter < 0) return false;
    int leave = -1;
    double best_ratio = 0.0;
    for (int r = 0; r < m; ++r) {
      double a = t(r, enter);
      if (a > kPivotTol) {
        double ratio = rhs(r) / a;
        if (leave < 0 || ratio < best_ratio - kPivotTol ||
            (std::abs(ratio - best_ratio) <= kPivotTol &&
             basis[r] < basis[leave])) {
          leave = r;
          best_ratio = ratio;
        }
      }
    }
    if (leave < 0)
      throw Error(ErrorCode::kSolver, "linear program is unbounded");
    if (pivots >= pivot_limit)
      throw Error(ErrorCode::kSolver, "pivot limit exceeded");
    pivot(leave, enter);
    return true;
  }
};

}  // namespace

LpSolution solve_lp(const LinearProgram& lp) {
  const int n = static_cast<int>(lp.c.size());
  const int m_ub = static_cast<int>(lp.b_ub.size());
  const int m_eq = static_cast<int>(lp.b_eq.size());
  const int m = m_ub + m_eq;
  if ((m_ub && lp.a_ub.cols() != n) || (m_eq && lp.a_eq.cols() != n) ||
      (m_ub && lp.a_ub.rows() != m_ub) || (m_eq && lp.a_eq.rows() != m_eq))
    throw Error(ErrorCode::kDimension, "inconsistent LP dimensions");

  // Equality form: [A_ub | I] x_s = b_ub ; rows with negative rhs are negated
  // afterwards, so slack columns are not always usable as a starting basis and
  // artificials fill the gaps.
  const int n_slack = m_ub;
  const int n_art = m;  // upper bound; unused artificial columns stay zero
  const int n_total = n + n_slack + n_art;

  Tableau tab;
  tab.m = m;
  tab.n_total = n_total;
  tab.pivot_limit = 10000 + 50LL * (m + n) * (m + n);
  tab.t = Mat::Zero(m + 1, n_total + 1);
  tab.basis.assign(m, -1);

  for (int r = 0; r < m_ub; ++r) {
    tab.t.block(r, 0, 1, n) = lp.a_ub.row(r);
    tab.t(r, n + r) = 1.0;
    tab.t(r, n_total) = lp.b_ub[r];
  }
  for (int r = 0; r < m_eq; ++r) {
    tab.t.block(m_ub + r, 0, 1, n) = lp.a_eq.row(r);
    tab.t(m_ub + r, n_total) = lp.b_eq[r];
  }
  for (int r = 0; r < m; ++r)
    if (tab.t(r, n_total) < 0.0) tab.t.row(r) = -tab.t.row(r);

  // Start from slack where the slack column survived with +1, artificial
  // otherwise.
  int art_used = 0;
  for (int r = 0; r < m; ++r) {
    if (r < m_ub && tab.t(r, n + r) == 1.0) {
      tab.basis[r] = n + r;
    } else {
      int col = n + n_slack + art_used++;
      tab.t(r, col) = 1.0;
      tab.basis[r] = col;
    }
  }

  // Phase 1: minimize the sum of artificials.
  for (int r = 0; r < m; ++r)
    if (tab.basis[r] >= n + n_slack) tab.t.row(m) -= tab.t.row(r);
  while (tab.step(n + n_slack)) {
  }
  if (tab.t(m, n_total) < -1e-7)
    throw Error(ErrorCode::kSolver, "linear program is infeasible");

  // Pivot any artificial still basic out, or drop its (redundant) row from
  // consideration by leaving it at zero.
  for (int r = 0; r < m; ++r) {
    if (tab.basis[r] >= n + n_slack) {
      int enter = -1;
      for (int c = 0; c < n + n_slack; ++c) {
        if (std::abs(tab.t(r, c)) > kPivotTol) {
          enter = c;
          break;
        }
      }
      if (enter >= 0) tab.pivot(r, enter);
    }
  }

  // Phase 2: objective row rebuilt from c taking the current basis into
  // account; artificial columns are frozen out of eligibility.
  tab.t.row(m).setZero();
  tab.t.block(m, 0, 1, n) = lp.c.transpose();
  for (int r = 0; r < m; ++r) {
    int b = tab.basis[r];
    if (b < n && tab.t(m, b) != 0.0) tab.t.row(m) -= tab.t(m, b) * tab.t.row(r);
  }
  while (tab.step(n + n_slack)) {
  }

  LpSolution sol;
  sol.x = Vec::Zero(n);
  for (int r = 0; r < m; ++r)
    if (tab.basis[r] < n) sol.x[tab.basis[r]] = tab.rhs(r);
  sol.objective = lp.c.dot(sol.x);
  sol.pivots = tab.pivots;
  return sol;
}

}  // namespace mcpref
