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
#include "core/json_io.hpp"
#include "core/tensor.hpp"
#include "oracles.hpp"

using namespace mcpref;

namespace {

PreferenceTensor two_criterion_conflict() { return conflict_example(2, 2); }

}  // namespace

TEST_CASE("validation accepts the indifferent and conflict tensors") {
  CHECK(validate_tensor(all_half(3, 2)).ok);
  CHECK(validate_tensor(two_criterion_conflict()).ok);
}

TEST_CASE("validation pinpoints a symmetry violation") {
  Mat m(2, 2);
  m << 0.5, 0.7, 0.4, 0.5;  // 0.7 + 0.4 != 1
  ValidationResult res = validate_tensor(PreferenceTensor({m}));
  REQUIRE_FALSE(res.ok);
  REQUIRE(res.violations.size() == 1);
  CHECK(res.violations[0].kind == Violation::Kind::kSymmetry);
  CHECK(res.violations[0].j == 0);
  CHECK(res.violations[0].i1 == 0);
  CHECK(res.violations[0].i2 == 1);
}

TEST_CASE("validation rejects off-half diagonals and out-of-range entries") {
  Mat m(2, 2);
  m << 0.6, 1.0, 0.0, 0.5;
  ValidationResult res = validate_tensor(PreferenceTensor({m}));
  REQUIRE_FALSE(res.ok);
  CHECK(res.violations[0].kind == Violation::Kind::kDiagonal);

  Mat r(2, 2);
  r << 0.5, 1.2, -0.2, 0.5;
  res = validate_tensor(PreferenceTensor({r}));
  CHECK_FALSE(res.ok);
  bool saw_range = false;
  for (const auto& v : res.violations)
    saw_range = saw_range || v.kind == Violation::Kind::kRange;
  CHECK(saw_range);
}

TEST_CASE("scores against a constant tensor are one half") {
  PreferenceTensor t = all_half(3, 2);
  SplitMix64 rng(7);
  for (int rep = 0; rep < 10; ++rep) {
    Vec s = t.score(testing::random_distribution(3, rng),
                    testing::random_distribution(3, rng));
    for (int j = 0; j < 2; ++j) CHECK(s[j] == doctest::Approx(0.5).epsilon(1e-12));
  }
}

TEST_CASE("conflict-tensor scores against pure opponents") {
  PreferenceTensor t = two_criterion_conflict();
  for (double p : {0.0, 0.3, 0.5, 0.8, 1.0}) {
    Distribution pi((Vec(2) << p, 1.0 - p).finished());
    Vec s0 = t.score_vs_pure(pi, 0);
    CHECK(s0[0] == doctest::Approx(p / 2).epsilon(1e-12));
    CHECK(s0[1] == doctest::Approx(1.0 - p / 2).epsilon(1e-12));
    Vec s1 = t.score_vs_pure(pi, 1);
    CHECK(s1[0] == doctest::Approx(0.5 + p / 2).epsilon(1e-12));
    CHECK(s1[1] == doctest::Approx(0.5 - p / 2).epsilon(1e-12));
  }
}

TEST_CASE("weighted matrix combines slices") {
  PreferenceTensor t = two_criterion_conflict();
  Mat sel = t.weighted_matrix((Vec(2) << 1.0, 0.0).finished());
  CHECK(sel(0, 1) == 1.0);
  CHECK(sel(1, 0) == 0.0);

  Mat mixed = t.weighted_matrix((Vec(2) << 0.5, 0.5).finished());
  CHECK((mixed.array() - 0.5).abs().maxCoeff() == doctest::Approx(0.0));

  Mat w37 = t.weighted_matrix((Vec(2) << 0.3, 0.7).finished());
  CHECK(w37(0, 1) == doctest::Approx(0.3).epsilon(1e-12));

  CHECK_THROWS_AS(t.weighted_matrix((Vec(2) << 0.3, 0.3).finished()), Error);
}

TEST_CASE("completing the upper triangle") {
  Mat u = Mat::Constant(2, 2, 0.5);
  u(0, 1) = 0.8;
  PreferenceTensor t = complete_upper({u});
  CHECK(t.p(0, 1, 0) == doctest::Approx(0.2));
  CHECK(t.p(0, 0, 0) == 0.5);

  PreferenceTensor single = complete_upper({Mat::Constant(1, 1, 0.0)});
  CHECK(single.p(0, 0, 0) == 0.5);

  // round-trips the conflict tensor
  PreferenceTensor c = two_criterion_conflict();
  std::vector<Mat> upper;
  for (int j = 0; j < 2; ++j) upper.push_back(c.slice(j));
  PreferenceTensor back = complete_upper(upper);
  for (int j = 0; j < 2; ++j)
    CHECK((back.slice(j) - c.slice(j)).cwiseAbs().maxCoeff() == 0.0);

  Mat missing = Mat::Constant(2, 2, 0.5);
  missing(0, 1) = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(complete_upper({missing}), Error);
}

TEST_CASE("score is bilinear and symmetric-dual") {
  SplitMix64 rng(21);
  for (int rep = 0; rep < 100; ++rep) {
    int d = 2 + static_cast<int>(rng.below(5));
    int k = 1 + static_cast<int>(rng.below(3));
    PreferenceTensor t = testing::random_tensor(d, k, rng);
    Distribution a = testing::random_distribution(d, rng);
    Distribution b = testing::random_distribution(d, rng);
    Distribution p2 = testing::random_distribution(d, rng);
    double alpha = rng.uniform();
    Vec lhs = t.score(Distribution(alpha * a.weights() + (1 - alpha) * b.weights()), p2);
    Vec rhs = alpha * t.score(a, p2) + (1 - alpha) * t.score(b, p2);
    CHECK((lhs - rhs).cwiseAbs().maxCoeff() <= 1e-12);

    Vec dual = t.score(a, p2) + t.score(p2, a);
    CHECK((dual.array() - 1.0).abs().maxCoeff() <= 1e-12);
  }
}

TEST_CASE("weighted matrices stay valid preference matrices") {
  SplitMix64 rng(22);
  for (int rep = 0; rep < 50; ++rep) {
    int d = 2 + static_cast<int>(rng.below(5));
    int k = 2 + static_cast<int>(rng.below(3));
    PreferenceTensor t = testing::random_tensor(d, k, rng);
    Vec w = testing::random_distribution(k, rng).weights();
    CHECK(validate_tensor(PreferenceTensor({t.weighted_matrix(w)})).ok);
  }
}

TEST_CASE("tensor JSON round-trip and invalid-file refusal") {
  PreferenceTensor t = two_criterion_conflict();
  PreferenceTensor back = tensor_from_json(tensor_to_json(t));
  CHECK(back.objects() == 2);
  CHECK(back.criteria() == 2);
  for (int j = 0; j < 2; ++j)
    CHECK((back.slice(j) - t.slice(j)).cwiseAbs().maxCoeff() == 0.0);

  std::string bad =
      R"({"d":2,"k":1,"p":[[[0.5,0.7],[0.4,0.5]]]})";
  CHECK_THROWS_AS(tensor_from_json(bad), Error);
  PreferenceTensor tolerated = tensor_from_json(bad, /*allow_invalid=*/true);
  CHECK_FALSE(validate_tensor(tolerated).ok);
}
