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

#include <doctest.h>

#include "core/instances.hpp"
#include "core/objective.hpp"
#include "core/solvers.hpp"
#include "oracles.hpp"

using namespace mcpref;

TEST_CASE("constructor outputs validate") {
  for (int d : {2, 4, 6})
    for (int k : {1, 2, 3}) CHECK(validate_tensor(all_half(d, k)).ok);
  for (int d : {2, 4, 6})
    for (int k : {2, 3}) CHECK(validate_tensor(conflict_example(d, k)).ok);
  for (int d : {4, 5, 6, 7, 8}) {
    auto [p0, p1] = lecam_pair(d, 3, 0.2);
    CHECK(validate_tensor(p0).ok);
    CHECK(validate_tensor(p1).ok);
  }
  CHECK(validate_tensor(alpha_beta_tensor(0.5, -0.5, 0, 1, 3)).ok);
  CHECK(validate_tensor(delta_mixture(0.4, 0.5, -0.5, 0, 1, 2)).ok);
  for (int d : {3, 5, 15}) CHECK(validate_tensor(PreferenceTensor({rps_matrix(d)})).ok);

  CHECK_THROWS_AS(conflict_example(3, 2), Error);
  CHECK_THROWS_AS(conflict_example(4, 1), Error);
  CHECK_THROWS_AS(lecam_pair(3, 2, 0.25), Error);
  CHECK_THROWS_AS(lecam_pair(4, 2, 0.6), Error);
  CHECK_THROWS_AS(rps_matrix(4), Error);
  CHECK_THROWS_AS(alpha_beta_tensor(0.7, 0.0, 0, 1, 2), Error);
  CHECK_THROWS_AS(delta_mixture(1.3, 0.5, -0.5, 0, 1, 2), Error);
}

TEST_CASE("block structure of the scaled-up conflict example") {
  PreferenceTensor t = conflict_example(4, 2);
  CHECK(t.p(0, 2, 3) == 1.0);
  CHECK(t.p(1, 2, 3) == 0.0);
  CHECK(t.p(0, 0, 2) == 0.5);  // cross-block entries are indifferent

  // d = 2 is exactly the canonical 2x2 conflict pair
  PreferenceTensor base = conflict_example(2, 2);
  CHECK(base.p(0, 0, 1) == 1.0);
  CHECK(base.p(1, 0, 1) == 0.0);

  for (int d : {2, 4, 6})
    for (int k : {2, 3}) {
      ValueContext ctx(conflict_example(d, k),
                       TargetSet::box(Vec::Constant(k, 0.5)),
                       NormSpec::linf());
      CHECK_FALSE(achievable(ctx));
    }
}

TEST_CASE("mixture family endpoints and entries") {
  PreferenceTensor flat = delta_mixture(0.0, 0.5, -0.5, 0, 1, 2);
  CHECK((flat.slice(0).array() - 0.5).abs().maxCoeff() == 0.0);

  PreferenceTensor strong = delta_mixture(1.0, 0.5, -0.5, 0, 1, 2);
  CHECK(strong.p(0, 0, 1) == 1.0);
  CHECK(strong.p(1, 0, 1) == 0.0);

  PreferenceTensor ab = alpha_beta_tensor(0.5, -0.5, 0, 1, 2);
  CHECK(ab.p(0, 0, 1) == 1.0);
  CHECK(ab.p(1, 0, 1) == 0.0);
  // off the named criteria everything is indifferent
  PreferenceTensor wide = alpha_beta_tensor(0.3, 0.1, 0, 2, 4);
  CHECK(wide.p(1, 0, 1) == 0.5);
  CHECK(wide.p(3, 0, 1) == 0.5);
}

TEST_CASE("cyclic payoff rows have the banded structure") {
  Mat a3 = rps_matrix(3);
  Mat expect(3, 3);
  expect << 0.50, 0.25, 0.75, 0.75, 0.50, 0.25, 0.25, 0.75, 0.50;
  CHECK((a3 - expect).cwiseAbs().maxCoeff() == 0.0);

  for (int d : {3, 7, 11}) {
    Mat a = rps_matrix(d);
    for (int i = 0; i < d; ++i)
      CHECK(a.row(i).sum() == doctest::Approx(d / 2.0));
    SolveReport nash = solve_von_neumann(a);
    for (int i = 0; i < d; ++i)
      CHECK(nash.winner[i] == doctest::Approx(1.0 / d).epsilon(1e-8));
  }
}

TEST_CASE("the weighted-winner degeneracy of the canonical conflict") {
  InstanceBundle b = proposition1b_instance(2);
  ValueContext ctx(b.tensor, b.set, b.norm);
  SolveReport rep = solve_blackwell_lp(ctx);
  REQUIRE(b.known_winner.has_value());
  CHECK((rep.winner.weights() - b.known_winner->weights()).cwiseAbs().maxCoeff() <=
        1e-9);
  CHECK(rep.value == doctest::Approx(*b.known_value).epsilon(1e-9));

  // weighted von Neumann winners collapse to a pure strategy or degenerate
  auto weighted_winner = [&](double w0) {
    Vec w(2);
    w << w0, 1.0 - w0;
    return solve_von_neumann(b.tensor.weighted_matrix(w));
  };
  SolveReport heavy = weighted_winner(0.7);
  CHECK(heavy.winner[0] == doctest::Approx(1.0).epsilon(1e-9));
  SolveReport light = weighted_winner(0.3);
  CHECK(light.winner[1] == doctest::Approx(1.0).epsilon(1e-9));
  // balanced weights: every distribution is optimal at value one half
  Vec w(2);
  w << 0.5, 0.5;
  Mat flat = b.tensor.weighted_matrix(w);
  SplitMix64 rng(61);
  for (int rep_ = 0; rep_ < 5; ++rep_) {
    Vec pi = testing::random_distribution(2, rng).weights();
    CHECK((flat.transpose() * pi).minCoeff() == doctest::Approx(0.5));
  }
}

TEST_CASE("weighted target sets reduce to the weighted game") {
  // For any weights, the von Neumann winner of the weighted matrix achieves
  // the weighted target set against every opponent, for every norm; linear
  // aggregation is a special case of the distance formulation.
  SplitMix64 rng(71);
  for (int rep = 0; rep < 30; ++rep) {
    int d = 2 + static_cast<int>(rng.below(4));
    int k = 2 + static_cast<int>(rng.below(2));
    PreferenceTensor t = testing::random_tensor(d, k, rng);
    Vec w = testing::random_distribution(k, rng).weights();
    TargetSet sw = TargetSet::weighted(w);
    SolveReport vn = solve_von_neumann(t.weighted_matrix(w));
    for (NormSpec n : {NormSpec::linf(), NormSpec::l1(), NormSpec::l2()}) {
      ValueContext ctx(t, sw, n);
      CHECK(value(ctx, vn.winner) <= 1e-9);
    }
    // and the optimum itself is zero (exact LP paths)
    CHECK(exact_optimal_value(ValueContext(t, sw, NormSpec::linf())) <= 1e-9);
    CHECK(exact_optimal_value(ValueContext(t, sw, NormSpec::l1())) <= 1e-9);
  }
}

TEST_CASE("mixing toward the conflict never helps") {
  TargetSet s0 = TargetSet::box(Vec::Constant(2, 0.5));
  double base = solve_blackwell_lp(ValueContext(delta_mixture(0.0, 0.5, -0.5, 0, 1, 2),
                                                s0, NormSpec::linf()))
                    .value;
  for (double alpha : {-0.5, -0.25, 0.1, 0.4, 0.5})
    for (double beta : {-0.5, -0.1, 0.0, 0.3, 0.5}) {
      ValueContext ctx(alpha_beta_tensor(alpha, beta, 0, 1, 2), s0,
                       NormSpec::linf());
      CHECK(solve_blackwell_lp(ctx).value >= base - 1e-12);
    }
}

TEST_CASE("restriction keeps the leading block") {
  PreferenceTensor t = conflict_example(4, 2);
  PreferenceTensor r = restrict_leading(t, 2);
  CHECK(r.objects() == 2);
  CHECK(r.p(0, 0, 1) == 1.0);
  CHECK_THROWS_AS(restrict_leading(t, 5), Error);
}

TEST_CASE("bundled driving data loads, checksums, and validates") {
  DrivingData data = driving_dataset();
  CHECK(data.tensor.objects() == 7);
  CHECK(data.tensor.criteria() == 5);
  CHECK(validate_tensor(data.tensor).ok);

  // spot values from the elicitation tables
  CHECK(data.tensor.p(0, 5, 1) == 0.80);   // aggressiveness, R1 vs B
  CHECK(data.overall(6, 2) == 0.66);       // overall, R2 vs C
  CHECK(data.overall(2, 6) == doctest::Approx(0.34));
  CHECK(data.tensor.p(2, 1, 2) == 0.89);   // quickness, B vs C

  // the R1-R2 pair was never compared
  CHECK(data.tensor.p(0, 5, 6) == 0.5);

  CHECK(validate_tensor(PreferenceTensor({data.overall})).ok);

  REQUIRE(data.weights.size() == 9);
  REQUIRE(data.weights[0].has_value());
  Vec w1 = *data.weights[0];
  CHECK(w1[0] == 0.21);
  CHECK(w1[4] == 0.22);
  CHECK_FALSE(data.weights[1].has_value());  // regression weights not bundled
  CHECK_FALSE(data.weights[2].has_value());
  for (int i = 3; i < 9; ++i) {
    REQUIRE(data.weights[i].has_value());
    CHECK(std::abs(data.weights[i]->sum() - 1.0) <= 1e-12);
  }

  CHECK(data.s1.halfspaces().empty());
  CHECK(data.s1.lower()[4] == 0.4);
  REQUIRE(data.s2.halfspaces().size() == 1);
  CHECK(data.s2.halfspaces()[0].b == 0.9);

  CHECK_THROWS_AS(driving_dataset("/nonexistent"), Error);
}
