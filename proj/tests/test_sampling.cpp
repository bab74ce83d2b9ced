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

#include <map>

#include "core/instances.hpp"
#include "core/sampling.hpp"
#include "oracles.hpp"

using namespace mcpref;

TEST_CASE("query draws are uniform over pair-criterion cells") {
  CHECK(draw_queries(4, 2, 0, 1).empty());
  CHECK_THROWS_AS(draw_queries(1, 2, 5, 1), Error);

  const long long n = 1000000;
  std::vector<Query> qs = draw_queries(4, 2, n, 17);
  REQUIRE(qs.size() == n);
  std::map<std::tuple<int, int, int>, long long> counts;
  for (const Query& q : qs) {
    CHECK(q.i1 < q.i2);
    ++counts[{q.i1, q.i2, q.j}];
  }
  REQUIRE(counts.size() == 12);
  const double p = 1.0 / 12.0;
  const double sigma = std::sqrt(p * (1 - p) / n);
  // 4 sigma: 12 cells are tested simultaneously
  for (const auto& [cell, c] : counts)
    CHECK(std::abs(static_cast<double>(c) / n - p) <= 4.0 * sigma);

  // fixed seed reproduces the sequence exactly
  std::vector<Query> qs2 = draw_queries(4, 2, 1000, 17);
  for (int i = 0; i < 1000; ++i) {
    CHECK(qs2[i].i1 == qs[i].i1);
    CHECK(qs2[i].i2 == qs[i].i2);
    CHECK(qs2[i].j == qs[i].j);
  }
}

TEST_CASE("comparison outcomes follow the tensor's probabilities") {
  Mat sure = Mat::Constant(2, 2, 0.5);
  sure(0, 1) = 1.0;
  sure(1, 0) = 0.0;
  PreferenceTensor t({sure});
  SplitMix64 rng(5);
  for (int i = 0; i < 50; ++i) CHECK(observe_bernoulli(t, {0, 1, 0}, rng) == 1);

  Mat never = Mat::Constant(2, 2, 0.5);
  never(0, 1) = 0.0;
  never(1, 0) = 1.0;
  PreferenceTensor t0({never});
  for (int i = 0; i < 50; ++i) CHECK(observe_bernoulli(t0, {0, 1, 0}, rng) == 0);

  Mat biased = Mat::Constant(2, 2, 0.5);
  biased(0, 1) = 0.6;
  biased(1, 0) = 0.4;
  PreferenceTensor tb({biased});
  const long long n = 100000;
  long long hits = 0;
  for (long long i = 0; i < n; ++i) hits += observe_bernoulli(tb, {0, 1, 0}, rng);
  double mean = static_cast<double>(hits) / n;
  CHECK(std::abs(mean - 0.6) <= 3.0 * std::sqrt(0.24 / n));
}

TEST_CASE("empirical tensor from explicit observations") {
  SampleBatch batch;
  batch.model = "bernoulli";
  batch.observations = {{{0, 1, 0}, 1.0}, {{0, 1, 0}, 1.0}, {{0, 1, 0}, 0.0}};
  PreferenceTensor t = build_empirical(2, 1, batch);
  CHECK(t.p(0, 0, 1) == doctest::Approx(2.0 / 3.0));
  CHECK(t.p(0, 1, 0) == doctest::Approx(1.0 / 3.0));
  CHECK(validate_tensor(t).ok);

  SampleBatch empty;
  empty.model = "bernoulli";
  PreferenceTensor half = build_empirical(3, 2, empty);
  for (int j = 0; j < 2; ++j)
    CHECK((half.slice(j).array() - 0.5).abs().maxCoeff() == 0.0);

  // strict mode keeps the literal zero for unsampled cells
  PreferenceTensor strict = build_empirical(2, 1, empty, /*strict=*/true);
  CHECK(strict.p(0, 0, 1) == 0.0);
  CHECK(strict.p(0, 1, 0) == 1.0);
  CHECK(validate_tensor(strict).ok);
}

TEST_CASE("a heavy sample pins down the conflict tensor") {
  PreferenceTensor truth = conflict_example(2, 2);
  SampleBatch batch = sample_bernoulli(truth, 1000000, 23);
  PreferenceTensor emp = build_empirical(2, 2, batch);
  double worst = 0.0;
  for (int j = 0; j < 2; ++j)
    worst = std::max(worst,
                     (emp.slice(j) - truth.slice(j)).cwiseAbs().maxCoeff());
  CHECK(worst <= 0.01);
}

TEST_CASE("empirical means are unbiased across seeded batches") {
  SplitMix64 seed_rng(29);
  PreferenceTensor truth = testing::random_tensor(3, 2, seed_rng);
  const int batches = 200;
  const long long n = 600;
  Mat sum = Mat::Zero(3, 3);
  for (int b = 0; b < batches; ++b) {
    PreferenceTensor emp =
        build_empirical(3, 2, sample_bernoulli(truth, n, derive_seed(1000, b)));
    sum += emp.slice(0);
  }
  Mat mean = sum / batches;
  // each upper cell sees ~n/(3 pairs * 2 criteria) = 100 draws per batch
  double se = std::sqrt(0.25 / (100.0 * batches));
  for (int i1 = 0; i1 < 3; ++i1)
    for (int i2 = i1 + 1; i2 < 3; ++i2)
      CHECK(std::abs(mean(i1, i2) - truth.p(0, i1, i2)) <= 3.0 * se);
}

TEST_CASE("plug-in estimation converges and replays deterministically") {
  PreferenceTensor truth = conflict_example(2, 2);
  TargetSet set = TargetSet::box(Vec::Constant(2, 0.5));

  PlugInResult big =
      plug_in_estimate(set, NormSpec::linf(), truth, 10000000, 3);
  CHECK(big.delta_p <= 0.02);

  PlugInResult none = plug_in_estimate(set, NormSpec::linf(), truth, 0, 3);
  // empty sample: the estimate comes from the indifferent tensor
  CHECK(none.report.winner.size() == 2);

  PlugInResult a = plug_in_estimate(set, NormSpec::linf(), truth, 5000, 11);
  PlugInResult b = plug_in_estimate(set, NormSpec::linf(), truth, 5000, 11);
  CHECK(a.delta_p == b.delta_p);
  CHECK((a.report.winner.weights() - b.report.winner.weights())
            .cwiseAbs()
            .maxCoeff() == 0.0);
}

TEST_CASE("estimation error decays with the sample budget") {
  PreferenceTensor truth = lecam_pair(4, 2, 0.25).second;
  TargetSet set = TargetSet::box(Vec::Constant(2, 0.5));
  auto median_delta = [&](long long n) {
    std::vector<double> deltas;
    for (int trial = 0; trial < 50; ++trial)
      deltas.push_back(plug_in_estimate(set, NormSpec::linf(), truth, n,
                                        derive_seed(77, trial))
                           .delta_p);
    std::sort(deltas.begin(), deltas.end());
    return deltas[deltas.size() / 2];
  };
  double at = median_delta(4096);
  double at4 = median_delta(4 * 4096);
  CHECK(at4 <= 0.75 * at);
}

TEST_CASE("gaussian observations have the advertised moments") {
  GaussianModel rps(rps_matrix(3));
  CHECK(rps.variances(0, 1) == doctest::Approx(0.25 * 0.75));
  CHECK(rps.variances(0, 0) == doctest::Approx(0.25));

  GaussianModel exact(rps_matrix(3), Mat::Zero(3, 3));
  SplitMix64 rng(31);
  CHECK(observe_gaussian(exact, 0, 2, rng) == doctest::Approx(0.75));

  const long long n = 100000;
  double mean = 0.0, m2 = 0.0;
  for (long long i = 0; i < n; ++i) {
    double y = observe_gaussian(rps, 0, 1, rng);
    double d = y - mean;
    mean += d / (i + 1);
    m2 += d * (y - mean);
  }
  double var = m2 / (n - 1);
  CHECK(std::abs(var - 0.1875) / 0.1875 <= 0.05);
}

TEST_CASE("plug-in Nash estimation is consistent") {
  GaussianModel rps(rps_matrix(3));
  PlugInNashResult big = plug_in_nash(rps, 2000000, 13);
  CHECK(big.delta_a <= 0.01);

  GaussianModel noiseless(rps_matrix(3), Mat::Zero(3, 3));
  PlugInNashResult exact = plug_in_nash(noiseless, 10000, 13);
  CHECK(exact.delta_a == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("effective variance closed forms") {
  for (int d : {3, 5, 9, 15}) {
    GaussianModel m(rps_matrix(d));
    double v = effective_variance(m, Distribution::uniform(d));
    CHECK(v <= 1.0 / (d * d) + 3.0 / (16.0 * d) + 1e-12);
    double exact = 0.25 / (d * d) + 0.1875 * (d - 1.0) / (d * d);
    CHECK(v == doctest::Approx(exact).epsilon(1e-12));
  }

  // deterministic off-diagonal entries leave only the diagonal variance
  int d = 4;
  Mat det = Mat::Constant(d, d, 0.5);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      if (i != j) det(i, j) = (i + j) % 2 == 0 ? 1.0 : 0.0;
  GaussianModel dm(det);
  CHECK(effective_variance(dm, Distribution::uniform(d)) ==
        doctest::Approx(0.25 / (d * d)));

  GaussianModel unit(Mat::Constant(3, 3, 0.5), Mat::Ones(3, 3));
  SplitMix64 rng(33);
  Distribution pi = testing::random_distribution(3, rng);
  CHECK(effective_variance(unit, pi) ==
        doctest::Approx(pi.weights().squaredNorm()));
}

TEST_CASE("batch CSV round-trip with sidecar") {
  PreferenceTensor truth = conflict_example(2, 2);
  SampleBatch batch = sample_bernoulli(truth, 100, 3);
  std::string csv = batch_to_csv(batch);
  SampleBatch back = batch_from_csv(csv, batch.model, batch.seed);
  REQUIRE(back.observations.size() == batch.observations.size());
  for (size_t i = 0; i < back.observations.size(); ++i) {
    CHECK(back.observations[i].first.i1 == batch.observations[i].first.i1);
    CHECK(back.observations[i].second == batch.observations[i].second);
  }
  CHECK(batch_meta_json(batch).find("bernoulli") != std::string::npos);
}
