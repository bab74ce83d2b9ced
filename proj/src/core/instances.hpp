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

#include <optional>
#include <string>
#include <vector>

#include "core/solvers.hpp"

namespace mcpref {

/// Every entry one half: the fully indifferent tensor.
PreferenceTensor all_half(int d, int k);

/// Opposed 2x2 blocks on the first two criteria (object 2r beats 2r+1 for
/// sure on criterion 0 and loses for sure on criterion 1), one half
/// everywhere else. These instances have no distribution scoring at least one
/// half on both criteria simultaneously. d even, k >= 2.
PreferenceTensor conflict_example(int d, int k);

/// Pair of tensors differing only in the leading 2x2x2 block: both carry
/// gamma-strength conflict blocks down the diagonal of criteria 0-1, the
/// first has an indifferent leading block, the second a gamma/d-strength one.
/// Against the box [1/2,1]^k under the sup norm, the first has optimal value
/// 0 and the second gamma/(3d-2), attained at [p/2, p/2, (1-p)/(d-2), ...]
/// with p = 2d/(3d-2). Odd d replaces the trailing block with a 3x3 variant.
/// d >= 4, k >= 2, gamma in (0, 1/2].
std::pair<PreferenceTensor, PreferenceTensor> lecam_pair(int d, int k,
                                                         double gamma);

/// 2x2xk tensor with strengths alpha on criterion j1 and beta on criterion
/// j2 (entry (j1,0,1) = 1/2 + alpha), indifferent elsewhere.
/// alpha, beta in [-1/2, 1/2].
PreferenceTensor alpha_beta_tensor(double alpha, double beta, int j1, int j2,
                                   int k);

/// Convex mixture (1-delta) * all-half + delta * alpha_beta_tensor(a0, b0).
PreferenceTensor delta_mixture(double delta, double alpha0, double beta0,
                               int j1, int j2, int k);

/// Cyclic rock-paper-scissors payoff for odd d: each object beats the d/2
/// objects cyclically after it with probability 3/4 and loses to the rest.
/// Unique Nash is uniform; the effective variance decays like 1/d.
Mat rps_matrix(int d);

struct InstanceBundle {
  PreferenceTensor tensor;
  TargetSet set;
  NormSpec norm;
  std::optional<double> known_value;
  std::optional<Distribution> known_winner;
  std::string provenance;
};

/// The canonical conflict between linear weighting and the worst-case-
/// distance winner: 2 objects, conflict on criteria 0-1, box [1/2,1]^k, sup
/// norm. The distance-optimal mixture is [1/2, 1/2] while every weighted
/// matrix has a pure (or fully degenerate) Nash winner.
InstanceBundle proposition1b_instance(int k);

/// First m objects of a tensor.
PreferenceTensor restrict_leading(const PreferenceTensor& t, int m);

/// The bundled driving-study comparison data: a 7x7x5 tensor over policies
/// A-E and the two randomized policies R1, R2 (the R1-R2 pair was never
/// compared and is recorded as one half), the 7x7 overall comparison matrix,
/// the two published target sets, and the elicited/oblivious weight vectors.
struct DrivingData {
  PreferenceTensor tensor;
  Mat overall;
  TargetSet s1;
  TargetSet s2;
  std::vector<std::optional<Vec>> weights;  // index 0 = w1 .. 8 = w9
  std::vector<std::string> policies;
};

std::string default_data_dir();

/// Loads and checksums the bundled files under <data_dir>/driving. The data
/// was transcribed once and is never re-derived; a checksum mismatch throws
/// kIo.
DrivingData driving_dataset(const std::string& data_dir = default_data_dir());

}  // namespace mcpref
