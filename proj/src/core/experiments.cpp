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

#include "core/experiments.hpp"

#include <atomic>
#include <functional>
#include <chrono>
#include <cstdio>
#include <sstream>
#include <thread>

#include <json.hpp>

namespace mcpref {

namespace {

double quantile_sorted(const std::vector<double>& sorted, double q) {
  if (sorted.empty()) return std::numeric_limits<double>::quiet_NaN();
  double pos = q * (sorted.size() - 1);
  size_t lo = static_cast<size_t>(pos);
  size_t hi = std::min(lo + 1, sorted.size() - 1);
  double frac = pos - lo;
  return sorted[lo] * (1.0 - frac) + sorted[hi] * frac;
}

GridStats stats_for(long long n, const std::vector<SweepRecord>& records,
                    size_t begin, size_t count) {
  GridStats st;
  st.n = n;
  std::vector<double> vals;
  vals.reserve(count);
  for (size_t i = begin; i < begin + count; ++i) {
    if (records[i].ok)
      vals.push_back(records[i].delta);
    else
      ++st.failures;
  }
  std::sort(vals.begin(), vals.end());
  if (!vals.empty()) {
    double sum = 0.0;
    for (double v : vals) sum += v;
    st.mean = sum / vals.size();
    st.median = quantile_sorted(vals, 0.5);
    st.q25 = quantile_sorted(vals, 0.25);
    st.q75 = quantile_sorted(vals, 0.75);
  }
  return st;
}

// Least squares of log(median) on log(x); medians at or below zero cannot be
// fitted and are skipped.
SlopeFit fit_loglog(const std::vector<GridStats>& stats, size_t skip_front) {
  SlopeFit fit;
  std::vector<double> xs, ys;
  for (size_t i = skip_front; i < stats.size(); ++i) {
    if (stats[i].median > 0.0) {
      xs.push_back(std::log(static_cast<double>(stats[i].n)));
      ys.push_back(std::log(stats[i].median));
    }
  }
  fit.points = static_cast<int>(xs.size());
  if (xs.size() < 2) return fit;
  double mx = 0.0, my = 0.0;
  for (size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= xs.size();
  my /= ys.size();
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
    syy += (ys[i] - my) * (ys[i] - my);
  }
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double ss_res = 0.0;
  for (size_t i = 0; i < xs.size(); ++i) {
    double e = ys[i] - (fit.intercept + fit.slope * xs[i]);
    ss_res += e * e;
  }
  fit.residual = std::sqrt(ss_res / xs.size());
  fit.r2 = syy > 0.0 ? 1.0 - ss_res / syy : 1.0;
  fit.low_r2_warning = fit.r2 < 0.9;
  return fit;
}

// Work-stealing over independent cells: results keyed by cell index, so the
// output is schedule-independent.
void parallel_cells(size_t cells, int threads,
                    const std::function<void(size_t)>& work) {
  threads = std::max(1, threads);
  if (threads == 1 || cells <= 1) {
    for (size_t c = 0; c < cells; ++c) work(c);
    return;
  }
  std::atomic<size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (;;) {
        size_t c = next.fetch_add(1);
        if (c >= cells) return;
        work(c);
      }
    });
  }
  for (auto& th : pool) th.join();
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - start)
      .count();
}

}  // namespace

SweepResult sweep_sample_complexity(const SweepConfig& cfg, int threads) {
  if (cfg.n_grid.empty() || cfg.trials < 1)
    throw Error(ErrorCode::kInvalidArgument, "empty grid or trials < 1");
  for (size_t i = 1; i < cfg.n_grid.size(); ++i)
    if (cfg.n_grid[i] <= cfg.n_grid[i - 1])
      throw Error(ErrorCode::kInvalidArgument,
                  "n grid must be strictly increasing");

  ValueContext true_ctx(cfg.tensor, cfg.set, cfg.norm);
  const double truth_opt = exact_optimal_value(true_ctx);

  SweepResult out;
  out.records.resize(cfg.n_grid.size() * cfg.trials);
  parallel_cells(out.records.size(), threads, [&](size_t cell) {
    size_t gi = cell / cfg.trials;
    int trial = static_cast<int>(cell % cfg.trials);
    SweepRecord& rec = out.records[cell];
    rec.n = cfg.n_grid[gi];
    rec.trial = trial;
    rec.seed = derive_seed(cfg.seed, cell);
    auto start = std::chrono::steady_clock::now();
    try {
      PlugInResult r = plug_in_estimate(cfg.set, cfg.norm, cfg.tensor, rec.n,
                                        rec.seed, cfg.strict_empirical,
                                        truth_opt);
      rec.delta = r.delta_p;
      rec.ok = true;
    } catch (const std::exception& e) {
      rec.error = e.what();
    }
    rec.solve_ms = elapsed_ms(start);
  });

  for (size_t gi = 0; gi < cfg.n_grid.size(); ++gi)
    out.per_n.push_back(stats_for(cfg.n_grid[gi], out.records,
                                  gi * cfg.trials, cfg.trials));
  // The smallest sizes sit outside the regime where the plug-in rate is
  // clean; they are excluded from the fit window.
  size_t skip = cfg.n_grid.size() > 4 ? 2 : 0;
  out.fit = fit_loglog(out.per_n, skip);
  return out;
}

NashSweepResult sweep_nash_adaptivity(const NashSweepConfig& cfg,
                                      int threads) {
  if (cfg.d_grid.empty() || cfg.trials < 1)
    throw Error(ErrorCode::kInvalidArgument, "empty grid or trials < 1");

  std::vector<GaussianModel> models;
  std::vector<double> true_values;
  NashSweepResult out;
  for (int d : cfg.d_grid) {
    models.emplace_back(rps_matrix(d));
    true_values.push_back(solve_von_neumann(models.back().payoff).value);
    out.effective_variances.push_back(
        effective_variance(models.back(), Distribution::uniform(d)));
  }

  out.records.resize(cfg.d_grid.size() * cfg.trials);
  parallel_cells(out.records.size(), threads, [&](size_t cell) {
    size_t gi = cell / cfg.trials;
    int trial = static_cast<int>(cell % cfg.trials);
    SweepRecord& rec = out.records[cell];
    rec.n = cfg.d_grid[gi];
    rec.trial = trial;
    rec.seed = derive_seed(cfg.seed, cell);
    auto start = std::chrono::steady_clock::now();
    try {
      PlugInNashResult r =
          plug_in_nash(models[gi], cfg.n, rec.seed, true_values[gi]);
      rec.delta = r.delta_a;
      rec.ok = true;
    } catch (const std::exception& e) {
      rec.error = e.what();
    }
    rec.solve_ms = elapsed_ms(start);
  });

  for (size_t gi = 0; gi < cfg.d_grid.size(); ++gi)
    out.per_d.push_back(stats_for(cfg.d_grid[gi], out.records,
                                  gi * cfg.trials, cfg.trials));
  out.fit = fit_loglog(out.per_d, 0);
  return out;
}

TraceResult convergence_trace(const TraceConfig& cfg) {
  if (cfg.t_grid.empty())
    throw Error(ErrorCode::kInvalidArgument, "empty T grid");
  const bool fo = cfg.solver == "first-order" || cfg.solver == "fo";
  if (!fo && cfg.solver != "zeroth-order" && cfg.solver != "zo")
    throw Error(ErrorCode::kInvalidArgument,
                "solver must be first-order or zeroth-order");

  ValueContext ctx(cfg.tensor, cfg.set, cfg.norm);
  TraceResult out;
  out.optimum = exact_optimal_value(ctx);

  for (long long T : cfg.t_grid) {
    std::vector<double> gaps, gaps_last;
    int trials = fo ? 1 : std::max(1, cfg.trials);
    for (int trial = 0; trial < trials; ++trial) {
      SolverParams p;
      p.iterations = T;
      p.c = cfg.c;
      p.seed = derive_seed(cfg.seed, static_cast<uint64_t>(trial));
      SolveReport rep = fo ? solve_first_order(ctx, p)
                           : solve_zeroth_order(ctx, p);
      gaps.push_back(rep.value - out.optimum);
      gaps_last.push_back(rep.last_value.value_or(rep.value) - out.optimum);
    }
    std::sort(gaps.begin(), gaps.end());
    std::sort(gaps_last.begin(), gaps_last.end());
    out.points.push_back(
        {T, quantile_sorted(gaps, 0.5), quantile_sorted(gaps_last, 0.5)});
  }
  return out;
}

std::vector<CurvePoint> value_curve(double alpha0, double beta0, int j1,
                                    int j2, int k, const TargetSet& set,
                                    int grid_points) {
  if (grid_points < 2)
    throw Error(ErrorCode::kInvalidArgument, "need at least 2 grid points");
  std::vector<CurvePoint> out;
  out.reserve(grid_points);
  for (int g = 0; g < grid_points; ++g) {
    double delta = static_cast<double>(g) / (grid_points - 1);
    ValueContext ctx(delta_mixture(delta, alpha0, beta0, j1, j2, k), set,
                     NormSpec::linf());
    out.push_back({delta, solve_blackwell_lp(ctx).value});
  }
  return out;
}

double binomial_test(long long n, long long x, double p0) {
  if (n < 0 || x < 0 || x > n)
    throw Error(ErrorCode::kInvalidArgument, "need 0 <= x <= n");
  if (!(p0 >= 0.0 && p0 <= 1.0))
    throw Error(ErrorCode::kInvalidArgument, "p0 must lie in [0, 1]");
  if (p0 == 0.0) return 1.0;  // X is identically 0 <= x
  if (p0 == 1.0) return x == n ? 1.0 : 0.0;
  double lp = std::log(p0), lq = std::log1p(-p0);
  double total = 0.0;
  for (long long i = 0; i <= x; ++i) {
    double lc = std::lgamma(n + 1.0) - std::lgamma(i + 1.0) -
                std::lgamma(n - i + 1.0);
    total += std::exp(lc + i * lp + (n - i) * lq);
  }
  return std::min(total, 1.0);
}

std::string sweep_csv(const std::vector<SweepRecord>& records,
                      const std::string& n_column) {
  std::ostringstream os;
  os << n_column << ",trial,seed,delta_p,solve_ms\n";
  char buf[160];
  for (const SweepRecord& r : records) {
    std::snprintf(buf, sizeof buf, "%lld,%d,%llu,%.17g,%.3f\n", r.n, r.trial,
                  static_cast<unsigned long long>(r.seed), r.delta,
                  r.solve_ms);
    os << buf;
  }
  return os.str();
}

namespace {

nlohmann::json stats_json(const std::vector<GridStats>& stats,
                          const char* key) {
  nlohmann::json arr = nlohmann::json::array();
  for (const GridStats& s : stats) {
    arr.push_back({{key, s.n},
                   {"mean", s.mean},
                   {"median", s.median},
                   {"q25", s.q25},
                   {"q75", s.q75},
                   {"failures", s.failures}});
  }
  return arr;
}

nlohmann::json fit_json(const SlopeFit& fit) {
  return {{"slope", fit.slope},         {"intercept", fit.intercept},
          {"r2", fit.r2},               {"residual", fit.residual},
          {"points", fit.points},       {"low_r2_warning", fit.low_r2_warning}};
}

}  // namespace

std::string sweep_result_json(const SweepResult& result) {
  nlohmann::json j;
  j["per_n"] = stats_json(result.per_n, "n");
  j["fit"] = fit_json(result.fit);
  j["records"] = result.records.size();
  return j.dump(2) + "\n";
}

std::string nash_sweep_result_json(const NashSweepResult& result) {
  nlohmann::json j;
  j["per_d"] = stats_json(result.per_d, "d");
  j["fit"] = fit_json(result.fit);
  j["effective_variances"] = result.effective_variances;
  j["records"] = result.records.size();
  return j.dump(2) + "\n";
}

std::string trace_csv(const TraceResult& result) {
  std::ostringstream os;
  os << "T,gap,gap_last\n";
  char buf[128];
  for (const TracePoint& p : result.points) {
    std::snprintf(buf, sizeof buf, "%lld,%.17g,%.17g\n", p.t, p.gap,
                  p.gap_last);
    os << buf;
  }
  return os.str();
}

std::string curve_csv(const std::vector<CurvePoint>& points) {
  std::ostringstream os;
  os << "delta,value\n";
  char buf[96];
  for (const CurvePoint& p : points) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", p.delta, p.value);
    os << buf;
  }
  return os.str();
}

}  // namespace mcpref
