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
//
// Command-line front end. Everything goes through the public C API in
// mcpref/mcpref.h; this binary holds no algorithm code.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "mcpref/mcpref.h"

namespace {

// Exit codes: 0 success, 1 usage, 2 data error, 3 solver failure.
int exit_code_for(mcpref_status st) {
  switch (st) {
    case MCPREF_OK:
      return 0;
    case MCPREF_ERR_INVALID_ARGUMENT:
    case MCPREF_ERR_DIMENSION:
    case MCPREF_ERR_UNSUPPORTED:
      return 1;
    case MCPREF_ERR_VALIDATION:
    case MCPREF_ERR_IO:
      return 2;
    default:
      return 3;
  }
}

[[noreturn]] void fail(mcpref_status st) {
  std::cerr << "error: " << mcpref_last_error() << "\n";
  std::exit(exit_code_for(st));
}

void check(mcpref_status st) {
  if (st != MCPREF_OK) fail(st);
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
  if (!out) {
    std::cerr << "error: cannot write " << out_path << "\n";
    std::exit(2);
  }
  out << text;
}

std::string take(char* owned) {
  std::string s = owned ? owned : "";
  mcpref_string_free(owned);
  return s;
}

std::string read_file_or_die(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot open " << path << "\n";
    std::exit(2);
  }
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

double parse_norm(const std::string& s) {
  if (s == "inf" || s == "linf" || s == "infinity") return mcpref_q_inf();
  try {
    return std::stod(s);
  } catch (...) {
    std::cerr << "error: bad norm '" << s << "'\n";
    std::exit(1);
  }
}

struct Handles {
  mcpref_tensor* tensor = nullptr;
  mcpref_set* set = nullptr;
  ~Handles() {
    mcpref_tensor_free(tensor);
    mcpref_set_free(set);
  }
};

void load_instance(Handles& h, const std::string& tensor_path,
                   const std::string& set_path, bool allow_invalid) {
  check(mcpref_tensor_load(tensor_path.c_str(), allow_invalid ? 1 : 0,
                           &h.tensor));
  check(mcpref_set_load(set_path.c_str(), &h.set));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"multi-criteria preference aggregation toolkit"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string out_path, format = "json";
  uint64_t seed = 0;
  int threads = 1;
  app.add_option("--out", out_path, "write output to this file");
  app.add_option("--format", format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--seed", seed, "global random seed");
  app.add_option("--threads", threads, "worker threads for sweeps");

  // solve
  auto* solve = app.add_subcommand("solve", "compute a winner for an instance");
  solve->fallthrough();
  std::string s_tensor, s_set, s_norm = "inf", s_method = "lp", s_trace_out;
  long long s_T = 10000;
  double s_eta = 0.0, s_delta = 0.0, s_c = 1.0;
  bool s_allow_invalid = false;
  solve->add_option("--tensor", s_tensor, "tensor JSON file")->required();
  solve->add_option("--set", s_set, "target set JSON file")->required();
  solve->add_option("--norm", s_norm, "lq exponent or inf");
  solve->add_option("--method", s_method,
                    "lp (exact; certified for smooth norms), fo, or zo")
      ->check(CLI::IsMember({"lp", "fo", "zo"}));
  solve->add_option("--T", s_T, "iterations for fo/zo");
  solve->add_option("--eta", s_eta, "step size (0 = default)");
  solve->add_option("--delta", s_delta, "smoothing radius (0 = default)");
  solve->add_option("--c", s_c, "step/radius constant");
  solve->add_option("--trace-out", s_trace_out, "write per-iterate CSV here");
  solve->add_flag("--allow-invalid", s_allow_invalid,
                  "accept tensors that fail validation");

  // estimate
  auto* estimate =
      app.add_subcommand("estimate", "plug-in estimation from sampled data");
  estimate->fallthrough();
  std::string e_tensor, e_set, e_norm = "inf";
  long long e_n = 10000;
  int e_trials = 1;
  bool e_strict = false;
  estimate->add_option("--tensor", e_tensor, "true tensor JSON file")
      ->required();
  estimate->add_option("--set", e_set, "target set JSON file")->required();
  estimate->add_option("--norm", e_norm, "lq exponent or inf");
  estimate->add_option("--n", e_n, "samples per trial")->required();
  estimate->add_option("--trials", e_trials, "independent trials");
  estimate->add_flag("--strict", e_strict,
                     "literal zero for unsampled cells");

  // sweep
  auto* sweep = app.add_subcommand("sweep", "run a sweep from a config file");
  sweep->fallthrough();
  std::string sw_config;
  sweep->add_option("config", sw_config, "sweep config JSON")->required();

  // trace
  auto* trace =
      app.add_subcommand("trace", "solver convergence trace from a config");
  trace->fallthrough();
  std::string tr_config;
  trace->add_option("config", tr_config, "trace config JSON")->required();

  // curve
  auto* curve = app.add_subcommand("curve", "value curve of the mixture family");
  curve->fallthrough();
  std::string cu_config;
  curve->add_option("config", cu_config, "curve config JSON")->required();

  // instance
  auto* instance =
      app.add_subcommand("instance", "write a named instance to files");
  instance->fallthrough();
  std::string in_name, in_dir = ".";
  int in_d = 4, in_k = 2;
  double in_gamma = 0.25, in_alpha = 0.5, in_beta = -0.5, in_delta_mix = 1.0;
  instance->add_option("name", in_name,
                       "all-half | conflict | two-ex | lecam-p0 | lecam-p1 | "
                       "alpha-beta | delta-mixture | rps | driving")
      ->required();
  instance->add_option("--d", in_d, "objects");
  instance->add_option("--k", in_k, "criteria");
  instance->add_option("--gamma", in_gamma, "conflict strength");
  instance->add_option("--alpha", in_alpha, "first-criterion strength");
  instance->add_option("--beta", in_beta, "second-criterion strength");
  instance->add_option("--delta", in_delta_mix, "mixture weight");
  instance->add_option("--out-dir", in_dir, "output directory");

  // verify
  auto* verify = app.add_subcommand("verify", "run the invariant suite");
  verify->fallthrough();

  // binom-test
  auto* binom = app.add_subcommand("binom-test", "one-sided binomial tail");
  binom->fallthrough();
  long long b_n = 0, b_x = 0;
  double b_p0 = 0.5;
  binom->add_option("n", b_n, "trial count")->required();
  binom->add_option("x", b_x, "success count")->required();
  binom->add_option("p0", b_p0, "null probability")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;  // all usage problems exit 1, --help exits 0
  }

  if (*solve) {
    Handles h;
    load_instance(h, s_tensor, s_set, s_allow_invalid);
    double q = parse_norm(s_norm);
    mcpref_report* rep = nullptr;
    if (s_method == "lp") {
      check(mcpref_solve_exact(h.tensor, h.set, q, &rep));
    } else {
      mcpref_solver_params p;
      mcpref_solver_params_init(&p);
      p.iterations = s_T;
      p.eta = s_eta;
      p.delta = s_delta;
      p.c = s_c;
      p.seed = seed;
      p.record_trace = s_trace_out.empty() ? 0 : 1;
      check(s_method == "fo"
                ? mcpref_solve_first_order(h.tensor, h.set, q, &p, &rep)
                : mcpref_solve_zeroth_order(h.tensor, h.set, q, &p, &rep));
    }
    char* json = nullptr;
    check(mcpref_report_to_json(rep, &json));
    emit(take(json), out_path);
    if (!s_trace_out.empty()) {
      char* csv = nullptr;
      check(mcpref_report_trace_csv(rep, &csv));
      emit(take(csv), s_trace_out);
    }
    mcpref_report_free(rep);
    return 0;
  }

  if (*estimate) {
    Handles h;
    load_instance(h, e_tensor, e_set, false);
    double q = parse_norm(e_norm);
    std::ostringstream csv;
    csv << "n,trial,seed,delta_p,solve_ms\n";
    std::ostringstream json;
    json << "{\"results\":[";
    for (int trial = 0; trial < e_trials; ++trial) {
      uint64_t trial_seed = seed ^ (0x9E3779B97F4A7C15ULL * (trial + 1));
      mcpref_report* rep = nullptr;
      double delta = 0.0;
      auto t0 = std::chrono::steady_clock::now();
      check(mcpref_plug_in_estimate(h.tensor, h.set, q, e_n, trial_seed,
                                    e_strict ? 1 : 0, &rep, &delta));
      double ms = std::chrono::duration<double, std::milli>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
      char buf[128];
      std::snprintf(buf, sizeof buf, "%lld,%d,%llu,%.17g,%.3f\n", e_n, trial,
                    static_cast<unsigned long long>(trial_seed), delta, ms);
      csv << buf;
      char* rep_json = nullptr;
      check(mcpref_report_to_json(rep, &rep_json));
      std::string body = take(rep_json);
      while (!body.empty() && body.back() == '\n') body.pop_back();
      std::snprintf(buf, sizeof buf, "{\"trial\":%d,\"delta_p\":%.17g,", trial,
                    delta);
      json << (trial ? "," : "") << buf << "\"report\":" << body << "}";
      mcpref_report_free(rep);
    }
    json << "]}\n";
    emit(format == "csv" ? csv.str() : json.str(), out_path);
    return 0;
  }

  if (*sweep) {
    std::string cfg = read_file_or_die(sw_config);
    char* json = nullptr;
    char* csv = nullptr;
    // configs with a d_grid drive the Nash adaptivity sweep
    mcpref_status st =
        cfg.find("\"d_grid\"") != std::string::npos
            ? mcpref_nash_sweep_run(cfg.c_str(), threads, &json, &csv)
            : mcpref_sweep_run(cfg.c_str(), threads, &json, &csv);
    check(st);
    std::string json_s = take(json), csv_s = take(csv);
    emit(format == "csv" ? csv_s : json_s, out_path);
    if (format == "csv") std::cerr << json_s;  // summary still visible
    return 0;
  }

  if (*trace) {
    char* csv = nullptr;
    check(mcpref_convergence_trace(read_file_or_die(tr_config).c_str(), &csv));
    emit(take(csv), out_path);
    return 0;
  }

  if (*curve) {
    char* csv = nullptr;
    check(mcpref_value_curve(read_file_or_die(cu_config).c_str(), &csv));
    emit(take(csv), out_path);
    return 0;
  }

  if (*instance) {
    mcpref_tensor* t = nullptr;
    int set_k = in_k;
    if (in_name == "all-half") {
      check(mcpref_tensor_all_half(in_d, in_k, &t));
    } else if (in_name == "conflict") {
      check(mcpref_tensor_conflict(in_d, in_k, &t));
    } else if (in_name == "two-ex") {
      check(mcpref_tensor_conflict(2, 2, &t));
      set_k = 2;
    } else if (in_name == "lecam-p0" || in_name == "lecam-p1") {
      check(mcpref_tensor_lecam(in_d, in_k, in_gamma,
                                in_name == "lecam-p1" ? 1 : 0, &t));
    } else if (in_name == "alpha-beta") {
      check(mcpref_tensor_alpha_beta(in_alpha, in_beta, 0, 1, in_k, &t));
    } else if (in_name == "delta-mixture") {
      check(mcpref_tensor_delta_mixture(in_delta_mix, in_alpha, in_beta, 0, 1,
                                        in_k, &t));
    } else if (in_name == "rps") {
      check(mcpref_tensor_rps(in_d % 2 == 0 ? in_d + 1 : in_d, &t));
      set_k = 1;
    } else if (in_name == "driving") {
      mcpref_tensor* overall = nullptr;
      mcpref_set* s1 = nullptr;
      mcpref_set* s2 = nullptr;
      check(mcpref_driving_load(nullptr, &t, &overall, &s1, &s2));
      check(mcpref_tensor_save(t, (in_dir + "/driving-tensor.json").c_str()));
      check(mcpref_tensor_save(overall,
                               (in_dir + "/driving-overall.json").c_str()));
      check(mcpref_set_save(s1, (in_dir + "/driving-s1.json").c_str()));
      check(mcpref_set_save(s2, (in_dir + "/driving-s2.json").c_str()));
      mcpref_tensor_free(t);
      mcpref_tensor_free(overall);
      mcpref_set_free(s1);
      mcpref_set_free(s2);
      std::cout << in_dir << "/driving-{tensor,overall,s1,s2}.json\n";
      return 0;
    } else {
      std::cerr << "error: unknown instance '" << in_name << "'\n";
      return 1;
    }
    std::string tensor_path = in_dir + "/" + in_name + "-tensor.json";
    check(mcpref_tensor_save(t, tensor_path.c_str()));
    mcpref_tensor_free(t);

    std::vector<double> lower(set_k, 0.5);
    mcpref_set* s = nullptr;
    check(mcpref_set_create(set_k, lower.data(), 0, nullptr, nullptr, &s));
    std::string set_path = in_dir + "/" + in_name + "-set.json";
    check(mcpref_set_save(s, set_path.c_str()));
    mcpref_set_free(s);
    std::cout << tensor_path << "\n" << set_path << "\n";
    return 0;
  }

  if (*verify) {
    int pass = 0;
    char* text = nullptr;
    check(mcpref_verify(&pass, &text));
    std::cout << take(text);
    return pass ? 0 : 3;
  }

  if (*binom) {
    double p = 0.0;
    check(mcpref_binomial_test(b_n, b_x, b_p0, &p));
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g\n", p);
    emit(buf, out_path);
    return 0;
  }

  return 1;
}
