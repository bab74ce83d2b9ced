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

#include "core/instances.hpp"
#include "core/sampling.hpp"

namespace mcpref {

/// Sample-complexity sweep: plug-in estimation error across a grid of sample
/// sizes, several trials per size, with per-cell derived seeds so any cell
/// replays independently of scheduling.
struct SweepConfig {
  PreferenceTensor tensor;
  TargetSet set;
  NormSpec norm;
  std::vector<long long> n_grid;  // strictly increasing
  int trials = 1;
  uint64_t seed = 0;
  bool strict_empirical = false;

  SweepConfig(PreferenceTensor t, TargetSet s, NormSpec n)
      : tensor(std::move(t)), set(std::move(s)), norm(n) {}
};

struct SweepRecord {
  long long n = 0;  // doubles as the dimension d in the Nash sweep
  int trial = 0;
  uint64_t seed = 0;
  double delta = std::numeric_limits<double>::quiet_NaN();
  double solve_ms = 0.0;
  bool ok = false;
  std::string error;
};

struct GridStats {
  long long n = 0;
  double mean = 0.0;
  double median = 0.0;
  double q25 = 0.0;
  double q75 = 0.0;
  int failures = 0;
};

struct SlopeFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r2 = 0.0;
  double residual = 0.0;  // rms residual of the least-squares fit
  int points = 0;
  bool low_r2_warning = false;
};

struct SweepResult {
  std::vector<SweepRecord> records;  // |n_grid| x trials, cell order
  std::vector<GridStats> per_n;
  SlopeFit fit;  // log median delta vs log n, two smallest n excluded
};

SweepResult sweep_sample_complexity(const SweepConfig& cfg, int threads = 1);

/// Nash adaptivity sweep over the cyclic-game family: plug-in Nash error as
/// the dimension grows at fixed sample budget. The fit is log median error
/// vs log d over all grid points.
struct NashSweepConfig {
  std::vector<int> d_grid;  // odd, increasing
  long long n = 1000000;
  int trials = 1;
  uint64_t seed = 0;
};
struct NashSweepResult {
  std::vector<SweepRecord> records;  // n field holds d
  std::vector<GridStats> per_d;
  std::vector<double> effective_variances;  // at the uniform Nash, per d
  SlopeFit fit;
};
NashSweepResult sweep_nash_adaptivity(const NashSweepConfig& cfg,
                                      int threads = 1);

/// Convergence of the iterative solvers against the exact optimum: each grid
/// T is a fresh run with that horizon's default step sizes. gap is measured
/// at the averaged iterate, gap_last at the final one; with several trials
/// the reported gaps are per-T medians over derived seeds.
struct TraceConfig {
  PreferenceTensor tensor;
  TargetSet set;
  NormSpec norm;
  std::string solver = "first-order";  // or "zeroth-order"
  std::vector<long long> t_grid;
  int trials = 1;
  uint64_t seed = 0;
  double c = 1.0;

  TraceConfig(PreferenceTensor t, TargetSet s, NormSpec n)
      : tensor(std::move(t)), set(std::move(s)), norm(n) {}
};
struct TracePoint {
  long long t = 0;
  double gap = 0.0;
  double gap_last = 0.0;
};
struct TraceResult {
  std::vector<TracePoint> points;
  double optimum = 0.0;
};
TraceResult convergence_trace(const TraceConfig& cfg);

/// Exact optimal value of the delta-mixture family along a delta grid.
struct CurvePoint {
  double delta = 0.0;
  double value = 0.0;
};
std::vector<CurvePoint> value_curve(double alpha0, double beta0, int j1,
                                    int j2, int k, const TargetSet& set,
                                    int grid_points);

/// One-sided binomial tail P(X <= x) for X ~ Bin(n, p0), exact summation in
/// the log domain.
double binomial_test(long long n, long long x, double p0);

std::string sweep_csv(const std::vector<SweepRecord>& records,
                      const std::string& n_column = "n");
std::string sweep_result_json(const SweepResult& result);
std::string nash_sweep_result_json(const NashSweepResult& result);
std::string trace_csv(const TraceResult& result);
std::string curve_csv(const std::vector<CurvePoint>& points);

}  // namespace mcpref
