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

#include <string>
#include <vector>

#include "core/types.hpp"

namespace mcpref {

/// Entries further than this from their invariant are reported as violations;
/// loose enough to absorb 64-bit text round-trips.
inline constexpr double kValidationTol = 1e-9;

/// A d x d x k array of pairwise comparison probabilities, stored as k
/// criterion slices. Entry (j, i1, i2) is the probability that object i1 beats
/// object i2 on criterion j. Immutable after construction; construction checks
/// shapes only, validate() checks the probabilistic invariants.
class PreferenceTensor {
 public:
  explicit PreferenceTensor(std::vector<Mat> slices,
                            std::vector<std::string> criteria_names = {});

  int objects() const { return d_; }
  int criteria() const { return k_; }
  double p(int j, int i1, int i2) const { return slices_[j](i1, i2); }
  const Mat& slice(int j) const { return slices_[j]; }
  const std::vector<Mat>& slices() const { return slices_; }
  const std::vector<std::string>& criteria_names() const { return names_; }

  /// Score vector P(pi1, pi2): component j is pi1' P^j pi2.
  Vec score(const Distribution& pi1, const Distribution& pi2) const;

  /// Score vector against the point mass at object i2.
  Vec score_vs_pure(const Distribution& pi1, int i2) const;

  /// The bilinear map extended to arbitrary real vectors x: component j is
  /// x' P^j e_{i2}. Zeroth-order smoothing queries points just off the
  /// simplex, which land here.
  Vec score_linear(const Vec& x, int i2) const;

  /// The d x k matrix P(., i2) whose column j is P^j(., i2).
  Mat column_slice(int i2) const;

  /// Weighted combination sum_j w_j P^j for w on the k-simplex.
  Mat weighted_matrix(const Vec& w) const;

 private:
  void check_object(int i) const;
  int d_;
  int k_;
  std::vector<Mat> slices_;
  std::vector<std::string> names_;
};

struct Violation {
  enum class Kind { kSymmetry, kDiagonal, kRange };
  Kind kind;
  int j;
  int i1;
  int i2;
  double amount;  // distance from the invariant
};

struct ValidationResult {
  bool ok = true;
  std::vector<Violation> violations;
};

/// Checks, within kValidationTol: p(j,i1,i2) + p(j,i2,i1) = 1, diagonals are
/// exactly one half, and every entry lies in [0,1]. Diagnostic only; never
/// throws. Symmetry violations are reported once per unordered pair (i1 < i2).
ValidationResult validate_tensor(const PreferenceTensor& t);

/// Builds the full tensor from entries given on the strict upper triangle
/// (i1 < i2) of each slice: mirrors p(j,i2,i1) = 1 - p(j,i1,i2) and fixes
/// diagonals to one half. Entries outside the strict upper triangle are
/// ignored; NaN above the diagonal marks a missing entry and is an error.
PreferenceTensor complete_upper(const std::vector<Mat>& upper,
                                std::vector<std::string> criteria_names = {});

}  // namespace mcpref
