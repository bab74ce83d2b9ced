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

#include "core/verify.hpp"

#include <functional>
#include <sstream>

#include "core/experiments.hpp"

namespace mcpref {
namespace {

PreferenceTensor random_tensor(int d, int k, SplitMix64& rng) {
  std::vector<Mat> upper(k, Mat::Constant(d, d, 0.5));
  for (int j = 0; j < k; ++j)
    for (int i1 = 0; i1 < d; ++i1)
      for (int i2 = i1 + 1; i2 < d; ++i2) upper[j](i1, i2) = rng.uniform();
  return complete_upper(upper);
}

Distribution random_distribution(int d, SplitMix64& rng) {
  Vec w(d);
  for (int i = 0; i < d; ++i) w[i] = -std::log(1.0 - rng.uniform());
  return Distribution(w / w.sum());
}

TargetSet random_monotone_set(int k, SplitMix64& rng, int max_halfspaces = 2) {
  Vec lower(k);
  for (int j = 0; j < k; ++j) lower[j] = 0.7 * rng.uniform();
  std::vector<HalfSpace> hs;
  int count = static_cast<int>(rng.below(max_halfspaces + 1));
  for (int c = 0; c < count; ++c) {
    Vec a(k);
    double sum = 0.0;
    for (int j = 0; j < k; ++j) {
      a[j] = rng.uniform();
      sum += a[j];
    }
    if (sum < 0.1) {
      a.setConstant(1.0);
      sum = k;
    }
    hs.push_back({a, (0.2 + 0.7 * rng.uniform()) * sum});
  }
  return TargetSet(lower, hs);
}

struct Runner {
  VerifyReport report;

  void check(const std::string& name, const std::function<bool(std::string&)>& f) {
    VerifyCheck c;
    c.name = name;
    try {
      c.passed = f(c.detail);
    } catch (const std::exception& e) {
      c.passed = false;
      c.detail = e.what();
    }
    report.all_passed = report.all_passed && c.passed;
    report.checks.push_back(std::move(c));
  }
};

}  // namespace

VerifyReport run_verification() {
  Runner r;

  r.check("tensor/bilinearity-and-duality", [](std::string& detail) {
    SplitMix64 rng(11);
    for (int rep = 0; rep < 200; ++rep) {
      int d = 2 + static_cast<int>(rng.below(5));
      int k = 1 + static_cast<int>(rng.below(3));
      PreferenceTensor t = random_tensor(d, k, rng);
      Distribution a = random_distribution(d, rng);
      Distribution b = random_distribution(d, rng);
      Distribution p2 = random_distribution(d, rng);
      double alpha = rng.uniform();
      Vec mixw = alpha * a.weights() + (1 - alpha) * b.weights();
      Vec lhs = t.score(Distribution(mixw), p2);
      Vec rhs = alpha * t.score(a, p2) + (1 - alpha) * t.score(b, p2);
      if ((lhs - rhs).cwiseAbs().maxCoeff() > 1e-12) {
        detail = "bilinearity violated";
        return false;
      }
      Vec dual = t.score(a, p2) + t.score(p2, a);
      if ((dual.array() - 1.0).abs().maxCoeff() > 1e-12) {
        detail = "symmetry duality violated";
        return false;
      }
    }
    return true;
  });

  r.check("tensor/weighted-matrix-is-valid", [](std::string& detail) {
    SplitMix64 rng(12);
    for (int rep = 0; rep < 100; ++rep) {
      int d = 2 + static_cast<int>(rng.below(5));
      int k = 2 + static_cast<int>(rng.below(3));
      PreferenceTensor t = random_tensor(d, k, rng);
      Vec w = random_distribution(k, rng).weights();
      PreferenceTensor single({t.weighted_matrix(w)});
      if (!validate_tensor(single).ok) {
        detail = "weighted matrix failed single-criterion validation";
        return false;
      }
    }
    return true;
  });

  r.check("geometry/distance-contains-lipschitz", [](std::string& detail) {
    SplitMix64 rng(13);
    for (int rep = 0; rep < 300; ++rep) {
      int k = 1 + static_cast<int>(rng.below(3));
      TargetSet s = random_monotone_set(k, rng);
      NormSpec n = rep % 3 == 0 ? NormSpec::linf()
                   : rep % 3 == 1 ? NormSpec::l1()
                                  : NormSpec::l2();
      Vec z1(k), z2(k);
      for (int j = 0; j < k; ++j) {
        z1[j] = rng.uniform();
        z2[j] = rng.uniform();
      }
      double d1 = s.distance(z1, n), d2 = s.distance(z2, n);
      if ((d1 <= 1e-12) != s.contains(z1, 1e-9)) {
        detail = "distance zero iff contains failed";
        return false;
      }
      if (std::abs(d1 - d2) > n.norm(z1 - z2) + 1e-9) {
        detail = "distance is not 1-Lipschitz";
        return false;
      }
      Vec hi = z1.cwiseMax(z2), lo = z1.cwiseMin(z2);
      if (s.distance(hi, n) > s.distance(lo, n) + 1e-12) {
        detail = "distance not monotone";
        return false;
      }
    }
    return true;
  });

  r.check("geometry/projection-feasible-and-optimal-l2",
          [](std::string& detail) {
            SplitMix64 rng(14);
            for (int rep = 0; rep < 200; ++rep) {
              int k = 1 + static_cast<int>(rng.below(3));
              TargetSet s = random_monotone_set(k, rng);
              Vec z(k);
              for (int j = 0; j < k; ++j) z[j] = rng.uniform();
              Vec p = s.project(z, NormSpec::l2());
              if (!s.contains(p, 1e-8)) {
                detail = "projection left the set";
                return false;
              }
              if (std::abs((z - p).norm() - s.distance(z, NormSpec::l2())) >
                  1e-8) {
                detail = "projection distance mismatch";
                return false;
              }
            }
            return true;
          });

  r.check("objective/convexity-and-lipschitz", [](std::string& detail) {
    SplitMix64 rng(15);
    for (int rep = 0; rep < 200; ++rep) {
      int d = 2 + static_cast<int>(rng.below(4));
      int k = 1 + static_cast<int>(rng.below(3));
      NormSpec n = rep % 3 == 0 ? NormSpec::linf()
                   : rep % 3 == 1 ? NormSpec::l1()
                                  : NormSpec::l2();
      ValueContext ctx(random_tensor(d, k, rng), random_monotone_set(k, rng),
                       n);
      Distribution p1 = random_distribution(d, rng);
      Distribution p2 = random_distribution(d, rng);
      double alpha = rng.uniform();
      Distribution mix(alpha * p1.weights() + (1 - alpha) * p2.weights());
      if (value(ctx, mix) >
          alpha * value(ctx, p1) + (1 - alpha) * value(ctx, p2) + 1e-9) {
        detail = "convexity violated";
        return false;
      }
      double lip = n.dim_factor(k) * (p1.weights() - p2.weights()).lpNorm<1>();
      if (std::abs(value(ctx, p1) - value(ctx, p2)) > lip + 1e-9) {
        detail = "Lipschitz bound violated";
        return false;
      }
    }
    return true;
  });

  r.check("solvers/von-neumann-value-half", [](std::string& detail) {
    SplitMix64 rng(16);
    for (int rep = 0; rep < 60; ++rep) {
      int d = 2 + static_cast<int>(rng.below(9));
      PreferenceTensor t = random_tensor(d, 1, rng);
      if (std::abs(solve_von_neumann(t.slice(0)).value - 0.5) > 1e-8) {
        detail = "game value != 1/2 on a valid preference matrix";
        return false;
      }
    }
    return true;
  });

  r.check("solvers/lp-matches-brute-force", [](std::string& detail) {
    SplitMix64 rng(17);
    for (int rep = 0; rep < 20; ++rep) {
      int d = 2 + static_cast<int>(rng.below(3));
      int k = 1 + static_cast<int>(rng.below(3));
      ValueContext ctx(random_tensor(d, k, rng), random_monotone_set(k, rng),
                       NormSpec::linf());
      double lp = solve_blackwell_lp(ctx).value;
      // coarse simplex grid
      double best = std::numeric_limits<double>::infinity();
      int steps = 20;
      std::function<void(Vec&, int, int)> enumerate = [&](Vec& acc, int pos,
                                                          int left) {
        if (pos == d - 1) {
          acc[pos] = static_cast<double>(left) / steps;
          best = std::min(best, value_extended(ctx, acc));
          return;
        }
        for (int take = 0; take <= left; ++take) {
          acc[pos] = static_cast<double>(take) / steps;
          enumerate(acc, pos + 1, left - take);
        }
      };
      Vec acc(d);
      enumerate(acc, 0, steps);
      if (lp > best + 1e-9 || best > lp + 1.0 * d * (1.0 / steps)) {
        detail = "LP value inconsistent with grid minimum";
        return false;
      }
    }
    return true;
  });

  r.check("solvers/deterministic-replay", [](std::string& detail) {
    InstanceBundle b = proposition1b_instance(2);
    ValueContext ctx(b.tensor, b.set, b.norm);
    SolverParams p;
    p.iterations = 500;
    p.seed = 99;
    SolveReport a1 = solve_zeroth_order(ctx, p);
    SolveReport a2 = solve_zeroth_order(ctx, p);
    if ((a1.winner.weights() - a2.winner.weights()).cwiseAbs().maxCoeff() !=
        0.0) {
      detail = "same seed produced different output";
      return false;
    }
    return true;
  });

  r.check("sampling/empirical-tensors-valid", [](std::string& detail) {
    SplitMix64 rng(18);
    for (int rep = 0; rep < 30; ++rep) {
      int d = 2 + static_cast<int>(rng.below(4));
      int k = 1 + static_cast<int>(rng.below(3));
      PreferenceTensor truth = random_tensor(d, k, rng);
      SampleBatch batch = sample_bernoulli(truth, 200, rng.next());
      if (!validate_tensor(build_empirical(d, k, batch)).ok) {
        detail = "empirical tensor failed validation";
        return false;
      }
    }
    return true;
  });

  r.check("instances/constructors-valid", [](std::string& detail) {
    for (int d : {2, 4, 6}) {
      if (!validate_tensor(all_half(d, 2)).ok ||
          !validate_tensor(conflict_example(d, 3)).ok) {
        detail = "constructor output failed validation";
        return false;
      }
    }
    for (int d : {4, 5, 6, 8}) {
      auto [p0, p1] = lecam_pair(d, 2, 0.25);
      if (!validate_tensor(p0).ok || !validate_tensor(p1).ok) {
        detail = "lecam tensors failed validation";
        return false;
      }
    }
    for (int d : {3, 5, 7}) {
      if (!validate_tensor(PreferenceTensor({rps_matrix(d)})).ok) {
        detail = "cyclic payoff matrix failed validation";
        return false;
      }
    }
    return true;
  });

  r.check("instances/indifferent-tensor-is-floor", [](std::string& detail) {
    TargetSet s0 = TargetSet::box(Vec::Constant(2, 0.5));
    double base = solve_blackwell_lp(
                      ValueContext(all_half(2, 2), s0, NormSpec::linf()))
                      .value;
    for (double alpha : {-0.4, -0.2, 0.2, 0.4}) {
      for (double beta : {-0.4, 0.0, 0.4}) {
        ValueContext ctx(alpha_beta_tensor(alpha, beta, 0, 1, 2), s0,
                         NormSpec::linf());
        if (solve_blackwell_lp(ctx).value < base - 1e-9) {
          detail = "indifferent tensor not the minimum of the family";
          return false;
        }
      }
    }
    return true;
  });

  r.check("experiments/binomial-test-knowns", [](std::string& detail) {
    if (std::abs(binomial_test(41, 14, 0.5) - 0.0298) > 0.0005) {
      detail = "tail probability off at (41, 14, 0.5)";
      return false;
    }
    if (binomial_test(5, 5, 0.5) != 1.0 ||
        std::abs(binomial_test(1, 0, 0.5) - 0.5) > 1e-15) {
      detail = "edge cases wrong";
      return false;
    }
    return true;
  });

  return r.report;
}

std::string verify_report_text(const VerifyReport& rep) {
  std::ostringstream os;
  for (const VerifyCheck& c : rep.checks) {
    os << (c.passed ? "PASS" : "FAIL") << "  " << c.name;
    if (!c.passed && !c.detail.empty()) os << "  (" << c.detail << ")";
    os << "\n";
  }
  os << (rep.all_passed ? "all checks passed" : "SOME CHECKS FAILED") << "\n";
  return os.str();
}

}  // namespace mcpref
