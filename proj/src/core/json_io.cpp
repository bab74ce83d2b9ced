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

#include "core/json_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace mcpref {

using nlohmann::json;

namespace {

json parse(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw Error(ErrorCode::kIo, "malformed JSON");
  return j;
}

std::string describe_violation(const Violation& v) {
  const char* kind = v.kind == Violation::Kind::kSymmetry    ? "symmetry"
                     : v.kind == Violation::Kind::kDiagonal ? "diagonal"
                                                            : "range";
  std::ostringstream os;
  os << kind << " at (" << v.j << "," << v.i1 << "," << v.i2 << ")";
  return os.str();
}

}  // namespace

PreferenceTensor tensor_from_json(const std::string& text, bool allow_invalid) {
  json j = parse(text);
  if (!j.contains("d") || !j.contains("k") || !j.contains("p"))
    throw Error(ErrorCode::kIo, "tensor JSON needs d, k, p");
  int d = j["d"].get<int>();
  int k = j["k"].get<int>();
  const json& p = j["p"];
  if (static_cast<int>(p.size()) != k)
    throw Error(ErrorCode::kIo, "p must have k slices");
  std::vector<Mat> slices;
  slices.reserve(k);
  for (int jj = 0; jj < k; ++jj) {
    const json& pj = p[jj];
    if (static_cast<int>(pj.size()) != d)
      throw Error(ErrorCode::kIo, "each slice must have d rows");
    Mat m(d, d);
    for (int i1 = 0; i1 < d; ++i1) {
      if (static_cast<int>(pj[i1].size()) != d)
        throw Error(ErrorCode::kIo, "each row must have d entries");
      for (int i2 = 0; i2 < d; ++i2) m(i1, i2) = pj[i1][i2].get<double>();
    }
    slices.push_back(std::move(m));
  }
  std::vector<std::string> names;
  if (j.contains("criteria") && j["criteria"].is_array())
    for (const auto& n : j["criteria"]) names.push_back(n.get<std::string>());
  PreferenceTensor t(std::move(slices), std::move(names));
  if (!allow_invalid) {
    ValidationResult res = validate_tensor(t);
    if (!res.ok)
      throw Error(ErrorCode::kValidation,
                  "invalid tensor: " + describe_violation(res.violations[0]) +
                      " and " + std::to_string(res.violations.size() - 1) +
                      " more");
  }
  return t;
}

std::string tensor_to_json(const PreferenceTensor& t) {
  json j;
  j["d"] = t.objects();
  j["k"] = t.criteria();
  if (!t.criteria_names().empty()) j["criteria"] = t.criteria_names();
  json p = json::array();
  for (int jj = 0; jj < t.criteria(); ++jj) {
    json slice = json::array();
    for (int i1 = 0; i1 < t.objects(); ++i1) {
      json row = json::array();
      for (int i2 = 0; i2 < t.objects(); ++i2) row.push_back(t.p(jj, i1, i2));
      slice.push_back(std::move(row));
    }
    p.push_back(std::move(slice));
  }
  j["p"] = std::move(p);
  return j.dump(2) + "\n";
}

TargetSet set_from_json(const std::string& text) {
  json j = parse(text);
  if (!j.contains("lower")) throw Error(ErrorCode::kIo, "set JSON needs lower");
  const json& lo = j["lower"];
  Vec lower(lo.size());
  for (size_t i = 0; i < lo.size(); ++i) lower[i] = lo[i].get<double>();
  std::vector<HalfSpace> hs;
  if (j.contains("halfspaces")) {
    for (const auto& h : j["halfspaces"]) {
      Vec a(h["a"].size());
      for (size_t i = 0; i < h["a"].size(); ++i) a[i] = h["a"][i].get<double>();
      hs.push_back({std::move(a), h["b"].get<double>()});
    }
  }
  return TargetSet(std::move(lower), std::move(hs));
}

std::string set_to_json(const TargetSet& s) {
  json j;
  j["lower"] = std::vector<double>(s.lower().begin(), s.lower().end());
  json hs = json::array();
  for (const HalfSpace& h : s.halfspaces()) {
    json one;
    one["a"] = std::vector<double>(h.a.begin(), h.a.end());
    one["b"] = h.b;
    hs.push_back(std::move(one));
  }
  j["halfspaces"] = std::move(hs);
  return j.dump(2) + "\n";
}

std::string report_to_json(const SolveReport& rep) {
  json j;
  j["winner"] =
      std::vector<double>(rep.winner.weights().begin(), rep.winner.weights().end());
  j["value"] = rep.value;
  j["method"] = rep.method;
  j["iterations"] = rep.iterations;
  if (rep.seed) j["seed"] = *rep.seed;
  if (rep.last_iterate)
    j["last_iterate"] = std::vector<double>(rep.last_iterate->weights().begin(),
                                            rep.last_iterate->weights().end());
  if (rep.last_value) j["last_value"] = *rep.last_value;
  return j.dump(2) + "\n";
}

std::string report_trace_csv(const SolveReport& rep) {
  std::ostringstream os;
  os << "iteration,value\n";
  char buf[64];
  for (size_t i = 0; i < rep.trace.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%zu,%.17g\n", i + 1, rep.trace[i]);
    os << buf;
  }
  return os.str();
}

PreferenceTensor load_tensor(const std::string& path, bool allow_invalid) {
  return tensor_from_json(read_file(path), allow_invalid);
}
void save_tensor(const PreferenceTensor& t, const std::string& path) {
  write_file(path, tensor_to_json(t));
}
TargetSet load_set(const std::string& path) {
  return set_from_json(read_file(path));
}
void save_set(const TargetSet& s, const std::string& path) {
  write_file(path, set_to_json(s));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path);
  out << content;
  if (!out) throw Error(ErrorCode::kIo, "short write to " + path);
}

uint64_t fnv1a64(const std::string& bytes) {
  uint64_t h = 0xCBF29CE484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001B3ULL;
  }
  return h;
}

}  // namespace mcpref
