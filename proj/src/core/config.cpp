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

#include "core/config.hpp"

#include <json.hpp>

#include "core/json_io.hpp"

namespace mcpref {

using nlohmann::json;

namespace {

json parse(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw Error(ErrorCode::kIo, "malformed JSON config");
  return j;
}

int geti(const json& j, const char* key, int fallback) {
  return j.contains(key) ? j[key].get<int>() : fallback;
}
double getd(const json& j, const char* key, double fallback) {
  return j.contains(key) ? j[key].get<double>() : fallback;
}

PreferenceTensor instance_from_spec(const json& spec) {
  if (spec.contains("tensor_file"))
    return load_tensor(spec["tensor_file"].get<std::string>());
  if (!spec.contains("name"))
    throw Error(ErrorCode::kIo, "instance needs a name or tensor_file");
  std::string name = spec["name"].get<std::string>();
  int d = geti(spec, "d", 2);
  int k = geti(spec, "k", 2);
  double gamma = getd(spec, "gamma", 0.25);
  if (name == "all-half") return all_half(d, k);
  if (name == "conflict") return conflict_example(d, k);
  if (name == "two-ex" || name == "prop1b")
    return proposition1b_instance(k).tensor;
  if (name == "lecam-p0") return lecam_pair(d, k, gamma).first;
  if (name == "lecam-p1") return lecam_pair(d, k, gamma).second;
  if (name == "alpha-beta")
    return alpha_beta_tensor(getd(spec, "alpha", 0.5), getd(spec, "beta", -0.5),
                             geti(spec, "j1", 0), geti(spec, "j2", 1), k);
  if (name == "delta-mixture")
    return delta_mixture(getd(spec, "delta", 1.0), getd(spec, "alpha0", 0.5),
                         getd(spec, "beta0", -0.5), geti(spec, "j1", 0),
                         geti(spec, "j2", 1), k);
  if (name == "rps") return PreferenceTensor({rps_matrix(geti(spec, "d", 3))});
  if (name == "driving") return driving_dataset().tensor;
  if (name == "driving-base")
    return restrict_leading(driving_dataset().tensor, 5);
  throw Error(ErrorCode::kInvalidArgument, "unknown instance name: " + name);
}

TargetSet set_from_spec(const json& spec, int k) {
  if (spec.is_string()) {
    std::string name = spec.get<std::string>();
    if (name == "s0") return TargetSet::box(Vec::Constant(k, 0.5));
    if (name == "s1") return driving_dataset().s1;
    if (name == "s2") return driving_dataset().s2;
    return load_set(name);
  }
  if (spec.contains("file")) return load_set(spec["file"].get<std::string>());
  if (spec.contains("name")) return set_from_spec(spec["name"], k);
  if (spec.contains("lower")) return set_from_json(spec.dump());
  throw Error(ErrorCode::kIo, "set needs a name, file, or lower bounds");
}

NormSpec norm_from_spec(const json& spec) {
  if (spec.is_number()) return NormSpec(spec.get<double>());
  std::string s = spec.get<std::string>();
  if (s == "inf" || s == "linf" || s == "infinity") return NormSpec::linf();
  return NormSpec(std::stod(s));
}

NormSpec norm_or_default(const json& j) {
  return j.contains("norm") ? norm_from_spec(j["norm"]) : NormSpec::linf();
}

}  // namespace

PreferenceTensor instance_from_json(const std::string& spec_json) {
  return instance_from_spec(parse(spec_json));
}

TargetSet set_from_config(const std::string& spec_json, int k) {
  return set_from_spec(parse(spec_json), k);
}

NormSpec norm_from_config(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) j = json(text);  // bare string such as inf
  return norm_from_spec(j);
}

SweepConfig sweep_config_from_json(const std::string& config_json) {
  json j = parse(config_json);
  if (!j.contains("instance") || !j.contains("n_grid"))
    throw Error(ErrorCode::kIo, "sweep config needs instance and n_grid");
  PreferenceTensor tensor = instance_from_spec(j["instance"]);
  TargetSet set = j.contains("set")
                      ? set_from_spec(j["set"], tensor.criteria())
                      : TargetSet::box(Vec::Constant(tensor.criteria(), 0.5));
  SweepConfig cfg(std::move(tensor), std::move(set), norm_or_default(j));
  for (const auto& n : j["n_grid"]) cfg.n_grid.push_back(n.get<long long>());
  cfg.trials = geti(j, "trials", 1);
  cfg.seed = j.contains("seed") ? j["seed"].get<uint64_t>() : 0;
  cfg.strict_empirical =
      j.contains("strict_empirical") && j["strict_empirical"].get<bool>();
  return cfg;
}

NashSweepConfig nash_sweep_config_from_json(const std::string& config_json) {
  json j = parse(config_json);
  NashSweepConfig cfg;
  if (!j.contains("d_grid"))
    throw Error(ErrorCode::kIo, "nash sweep config needs d_grid");
  for (const auto& d : j["d_grid"]) cfg.d_grid.push_back(d.get<int>());
  cfg.n = j.contains("n") ? j["n"].get<long long>() : 1000000;
  cfg.trials = geti(j, "trials", 1);
  cfg.seed = j.contains("seed") ? j["seed"].get<uint64_t>() : 0;
  return cfg;
}

TraceConfig trace_config_from_json(const std::string& config_json) {
  json j = parse(config_json);
  if (!j.contains("instance") || !j.contains("t_grid"))
    throw Error(ErrorCode::kIo, "trace config needs instance and t_grid");
  PreferenceTensor tensor = instance_from_spec(j["instance"]);
  TargetSet set = j.contains("set")
                      ? set_from_spec(j["set"], tensor.criteria())
                      : TargetSet::box(Vec::Constant(tensor.criteria(), 0.5));
  TraceConfig cfg(std::move(tensor), std::move(set), norm_or_default(j));
  for (const auto& t : j["t_grid"]) cfg.t_grid.push_back(t.get<long long>());
  cfg.solver = j.contains("solver") ? j["solver"].get<std::string>()
                                    : std::string("first-order");
  cfg.trials = geti(j, "trials", 1);
  cfg.seed = j.contains("seed") ? j["seed"].get<uint64_t>() : 0;
  cfg.c = getd(j, "c", 1.0);
  return cfg;
}

CurveConfig curve_config_from_json(const std::string& config_json) {
  json j = parse(config_json);
  int k = geti(j, "k", 2);
  CurveConfig cfg{getd(j, "alpha0", 0.5),
                  getd(j, "beta0", -0.5),
                  geti(j, "j1", 0),
                  geti(j, "j2", 1),
                  k,
                  j.contains("set") ? set_from_spec(j["set"], k)
                                    : TargetSet::box(Vec::Constant(k, 0.5)),
                  geti(j, "grid", 1001)};
  return cfg;
}

}  // namespace mcpref
