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

#include "core/target_set.hpp"

#include <string>

#include "core/simplex.hpp"

namespace mcpref {

TargetSet::TargetSet(Vec lower, std::vector<HalfSpace> halfspaces)
    : lower_(std::move(lower)), halfspaces_(std::move(halfspaces)) {
  const auto k = lower_.size();
  if (k < 1) throw Error(ErrorCode::kInvalidArgument, "target set needs k >= 1");
  for (Eigen::Index j = 0; j < k; ++j)
    if (!(lower_[j] >= 0.0 && lower_[j] <= 1.0))
      throw Error(ErrorCode::kValidation, "box lower bounds must lie in [0,1]");
  for (const HalfSpace& h : halfspaces_) {
    if (h.a.size() != k)
      throw Error(ErrorCode::kDimension, "half-space normal length != k");
    double sum = 0.0;
    for (Eigen::Index j = 0; j < k; ++j) {
      if (!(h.a[j] >= 0.0))
        throw Error(ErrorCode::kValidation,
                    "half-space normals must be nonnegative");
      sum += h.a[j];
    }
    if (sum <= 0.0)
      throw Error(ErrorCode::kValidation, "half-space normal must be nonzero");
    // Monotone nonemptiness: the all-ones vector satisfies every constraint.
    if (h.b > sum + kContainsTol)
      throw Error(ErrorCode::kValidation,
                  "half-space excludes the all-ones vector; set would be empty");
  }
}

TargetSet TargetSet::weighted(const Vec& w) {
  Distribution check(w);  // w must lie on the k-simplex
  return TargetSet(Vec::Zero(w.size()), {HalfSpace{w, 0.5}});
}

void TargetSet::check_dim(const Vec& z) const {
  if (z.size() != lower_.size())
    throw Error(ErrorCode::kDimension, "score vector length != set dimension");
}

bool TargetSet::contains(const Vec& z, double tol) const {
  check_dim(z);
  for (Eigen::Index j = 0; j < z.size(); ++j)
    if (z[j] < lower_[j] - tol) return false;
  for (const HalfSpace& h : halfspaces_)
    if (h.a.dot(z) < h.b - tol) return false;
  return true;
}

double TargetSet::distance(const Vec& z, const NormSpec& n) const {
  check_dim(z);
  if (n.is_inf()) {
    // Least zeta >= 0 with z + zeta * ones in the set: each constraint is
    // monotone, so the worst per-constraint shift fixes all of them at once.
    double zeta = 0.0;
    for (Eigen::Index j = 0; j < z.size(); ++j)
      zeta = std::max(zeta, lower_[j] - z[j]);
    for (const HalfSpace& h : halfspaces_)
      zeta = std::max(zeta, (h.b - h.a.dot(z)) / h.a.sum());
    return zeta;
  }
  if (is_box()) {
    Vec deficit = (lower_ - z).cwiseMax(0.0);
    return n.norm(deficit);
  }
  if (n.q == 1.0) return distance_l1_lp(z);
  Vec p = project(z, n);
  return n.norm(z - p);
}

// l1 distance to a monotone polyhedron: the nearest point never moves any
// coordinate down, so with m = max(z, lower) and v = m + u, u >= 0, the
// distance is sum(m - z) plus the optimum of
//   min 1.u  s.t.  -A u <= A m - b,  u >= 0.
double TargetSet::distance_l1_lp(const Vec& z) const {
  const int k = criteria();
  const int h = static_cast<int>(halfspaces_.size());
  Vec m = z.cwiseMax(lower_);
  double base = (m - z).sum();

  LinearProgram lp;
  lp.c = Vec::Ones(k);
  lp.a_ub = Mat::Zero(h, k);
  lp.b_ub = Vec::Zero(h);
  for (int r = 0; r < h; ++r) {
    lp.a_ub.row(r) = -halfspaces_[r].a.transpose();
    lp.b_ub[r] = halfspaces_[r].a.dot(m) - halfspaces_[r].b;
  }
  LpSolution sol = solve_lp(lp);
  return base + sol.objective;
}

namespace {

// Nearest point of { v : a.v >= b } under l_q, 1 < q < inf, for a >= 0.
// Stationarity gives v_j = z_j + s * a_j^{1/(q-1)} with s set by a.v = b.
Vec project_halfspace(const Vec& z, const HalfSpace& h, double q) {
  double slack = h.b - h.a.dot(z);
  if (slack <= 0.0) return z;
  double qs = 1.0 / (q - 1.0);
  Vec dir(z.size());
  double denom = 0.0;
  for (Eigen::Index j = 0; j < z.size(); ++j) {
    dir[j] = std::pow(h.a[j], qs);
    denom += h.a[j] * dir[j];
  }
  return z + (slack / denom) * dir;
}

}  // namespace

Vec TargetSet::project(const Vec& z, const NormSpec& n) const {
  check_dim(z);
  if (!n.is_smooth())
    throw Error(ErrorCode::kUnsupported,
                "projection not unique for q in {1, inf}; use distance()");
  if (is_box()) return z.cwiseMax(lower_);
  return project_iterative(z, n);
}

Vec TargetSet::project_iterative(const Vec& z, const NormSpec& n) const {
  const bool dykstra = (n.q == 2.0);
  const size_t sets = halfspaces_.size() + 1;
  Vec x = z;
  std::vector<Vec> corr;
  if (dykstra) corr.assign(sets, Vec::Zero(z.size()));

  double residual = 0.0;
  for (int sweep = 0; sweep < kMaxProjectionSweeps; ++sweep) {
    Vec before = x;
    // The iterate can stall for a sweep while the correction vectors keep
    // moving, so convergence must watch both.
    double corr_change = 0.0;
    for (size_t s = 0; s < sets; ++s) {
      Vec y = dykstra ? Vec(x + corr[s]) : x;
      Vec px = (s == 0) ? Vec(y.cwiseMax(lower_))
                        : project_halfspace(y, halfspaces_[s - 1], n.q);
      if (dykstra) {
        Vec next = y - px;
        corr_change = std::max(corr_change, (next - corr[s]).cwiseAbs().maxCoeff());
        corr[s] = std::move(next);
      }
      x = px;
    }
    residual = std::max((x - before).cwiseAbs().maxCoeff(), corr_change);
    if (residual < kProjectionTol && contains(x, kProjectionTol * 10)) return x;
  }
  throw Error(ErrorCode::kSolver,
              "projection did not converge; residual " +
                  std::to_string(residual));
}

}  // namespace mcpref
