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

#include "core/types.hpp"

namespace mcpref {

/// One constraint a . z >= b with a >= 0 componentwise and a != 0.
struct HalfSpace {
  Vec a;
  double b;
};

inline constexpr double kContainsTol = 1e-12;
inline constexpr double kProjectionTol = 1e-10;
inline constexpr int kMaxProjectionSweeps = 10000;

/// A monotone polyhedron of acceptable score vectors: box constraints
/// z >= lower together with half-spaces with nonnegative normals. Every such
/// set is closed upward under the coordinatewise order and contains the
/// all-ones vector (checked at construction). Score vectors live in [0,1]^k;
/// distance and projection treat the set as unbounded from above, which is
/// where the sup-norm closed form comes from: the least zeta >= 0 with
/// z + zeta * ones inside the set.
class TargetSet {
 public:
  explicit TargetSet(Vec lower, std::vector<HalfSpace> halfspaces = {});

  static TargetSet box(Vec lower) { return TargetSet(std::move(lower)); }

  /// S_w = { z : <w, z> >= 1/2 } for w on the k-simplex. Composing with a
  /// weighted preference matrix reduces the multi-criteria problem to the
  /// single-criterion one.
  static TargetSet weighted(const Vec& w);

  int criteria() const { return static_cast<int>(lower_.size()); }
  const Vec& lower() const { return lower_; }
  const std::vector<HalfSpace>& halfspaces() const { return halfspaces_; }
  bool is_box() const { return halfspaces_.empty(); }

  bool contains(const Vec& z, double tol = kContainsTol) const;

  /// inf over the set of the l_q distance from z.
  ///  - q = inf: exact closed form, max over constraints of the uniform shift
  ///    that lands the point on the constraint.
  ///  - pure box, any q: norm of the componentwise deficits.
  ///  - q = 1 with half-spaces: exact via a small linear program.
  ///  - 1 < q < inf with half-spaces: || z - project(z) ||_q.
  double distance(const Vec& z, const NormSpec& n) const;

  /// Nearest point of the set under the l_q norm, 1 < q < inf. A pure box
  /// projects by componentwise clipping. With half-spaces, q = 2 runs
  /// Dykstra's alternating projections (exact in the limit); other smooth q
  /// run plain cyclic projections, which return a feasible point that is
  /// exact for a single half-space but only approximately nearest in general.
  /// q = 1 and q = inf are rejected: their projections are not unique, use
  /// distance() instead.
  Vec project(const Vec& z, const NormSpec& n) const;

 private:
  void check_dim(const Vec& z) const;
  double distance_l1_lp(const Vec& z) const;
  Vec project_iterative(const Vec& z, const NormSpec& n) const;

  Vec lower_;
  std::vector<HalfSpace> halfspaces_;
};

}  // namespace mcpref
