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

#include "core/instances.hpp"

#include <cstdlib>

#include <json.hpp>

#include "core/json_io.hpp"

namespace mcpref {

namespace {

// The two opposed 2x2 criterion blocks: object 0 beats object 1 for sure on
// the first, loses for sure on the second.
Mat conflict_block_first() {
  Mat m(2, 2);
  m << 0.5, 1.0, 0.0, 0.5;
  return m;
}
Mat conflict_block_second() {
  Mat m(2, 2);
  m << 0.5, 0.0, 1.0, 0.5;
  return m;
}

Mat cr_block(double gamma, int sign) {
  Mat m(2, 2);
  m << 0.5, 0.5 + sign * gamma, 0.5 - sign * gamma, 0.5;
  return m;
}

// 3x3 variant used as the trailing diagonal block when d is odd.
Mat cr3_block(double gamma, int sign) {
  double g = sign * gamma;
  Mat m(3, 3);
  m << 0.5, 0.5 + g, 0.5 - g,
       0.5 - g, 0.5, 0.5 - g,
       0.5 + g, 0.5 + g, 0.5;
  return m;
}

void place_block(Mat& slice, int at, const Mat& block) {
  slice.block(at, at, block.rows(), block.cols()) = block;
}

}  // namespace

PreferenceTensor all_half(int d, int k) {
  if (d < 1 || k < 1)
    throw Error(ErrorCode::kInvalidArgument, "need d >= 1 and k >= 1");
  return PreferenceTensor(std::vector<Mat>(k, Mat::Constant(d, d, 0.5)));
}

PreferenceTensor conflict_example(int d, int k) {
  if (d < 2 || d % 2 != 0)
    throw Error(ErrorCode::kInvalidArgument, "conflict_example needs even d");
  if (k < 2)
    throw Error(ErrorCode::kInvalidArgument, "conflict_example needs k >= 2");
  std::vector<Mat> slices(k, Mat::Constant(d, d, 0.5));
  for (int at = 0; at < d; at += 2) {
    place_block(slices[0], at, conflict_block_first());
    place_block(slices[1], at, conflict_block_second());
  }
  return PreferenceTensor(std::move(slices));
}

std::pair<PreferenceTensor, PreferenceTensor> lecam_pair(int d, int k,
                                                         double gamma) {
  if (d < 4) throw Error(ErrorCode::kInvalidArgument, "lecam_pair needs d >= 4");
  if (k < 2) throw Error(ErrorCode::kInvalidArgument, "lecam_pair needs k >= 2");
  if (!(gamma > 0.0 && gamma <= 0.5))
    throw Error(ErrorCode::kInvalidArgument, "gamma must lie in (0, 1/2]");

  auto build = [&](bool leading_scaled) {
    std::vector<Mat> slices(k, Mat::Constant(d, d, 0.5));
    if (leading_scaled) {
      place_block(slices[0], 0, cr_block(gamma / d, +1));
      place_block(slices[1], 0, cr_block(gamma / d, -1));
    }
    int at = 2;
    while (d - at >= 2) {
      if (d - at == 3) {  // odd d: finish with the 3x3 block
        place_block(slices[0], at, cr3_block(gamma, +1));
        place_block(slices[1], at, cr3_block(gamma, -1));
        at += 3;
      } else {
        place_block(slices[0], at, cr_block(gamma, +1));
        place_block(slices[1], at, cr_block(gamma, -1));
        at += 2;
      }
    }
    return PreferenceTensor(std::move(slices));
  };
  return {build(false), build(true)};
}

PreferenceTensor alpha_beta_tensor(double alpha, double beta, int j1, int j2,
                                   int k) {
  if (k < 1 || j1 < 0 || j2 < 0 || j1 >= k || j2 >= k || j1 == j2)
    throw Error(ErrorCode::kInvalidArgument, "need distinct criteria j1, j2 < k");
  if (std::abs(alpha) > 0.5 || std::abs(beta) > 0.5)
    throw Error(ErrorCode::kInvalidArgument,
                "alpha and beta must lie in [-1/2, 1/2]");
  std::vector<Mat> slices(k, Mat::Constant(2, 2, 0.5));
  slices[j1] = cr_block(alpha, +1);
  slices[j2] = cr_block(beta, +1);
  return PreferenceTensor(std::move(slices));
}

PreferenceTensor delta_mixture(double delta, double alpha0, double beta0,
                               int j1, int j2, int k) {
  if (delta < 0.0 || delta > 1.0)
    throw Error(ErrorCode::kInvalidArgument, "delta must lie in [0, 1]");
  PreferenceTensor strong = alpha_beta_tensor(alpha0, beta0, j1, j2, k);
  std::vector<Mat> slices;
  slices.reserve(k);
  for (int j = 0; j < k; ++j)
    slices.push_back((1.0 - delta) * Mat::Constant(2, 2, 0.5) +
                     delta * strong.slice(j));
  return PreferenceTensor(std::move(slices));
}

Mat rps_matrix(int d) {
  if (d < 3 || d % 2 == 0)
    throw Error(ErrorCode::kInvalidArgument, "rps_matrix needs odd d >= 3");
  const int half = (d - 1) / 2;
  Mat m(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      int off = ((j - i) % d + d) % d;
      m(i, j) = off == 0 ? 0.5 : (off <= half ? 0.25 : 0.75);
    }
  }
  return m;
}

InstanceBundle proposition1b_instance(int k) {
  if (k < 2)
    throw Error(ErrorCode::kInvalidArgument, "need k >= 2 criteria");
  InstanceBundle b{conflict_example(2, k), TargetSet::box(Vec::Constant(k, 0.5)),
                   NormSpec::linf(),       std::nullopt,
                   std::nullopt,           "conflict"};
  b.known_winner = Distribution(Vec::Constant(2, 0.5));
  b.known_value = 0.25;
  return b;
}

PreferenceTensor restrict_leading(const PreferenceTensor& t, int m) {
  if (m < 1 || m > t.objects())
    throw Error(ErrorCode::kInvalidArgument, "bad restriction size");
  std::vector<Mat> slices;
  slices.reserve(t.criteria());
  for (int j = 0; j < t.criteria(); ++j)
    slices.push_back(t.slice(j).topLeftCorner(m, m));
  return PreferenceTensor(std::move(slices), t.criteria_names());
}

std::string default_data_dir() {
  if (const char* env = std::getenv("MCPREF_DATA_DIR")) return env;
#ifdef MCPREF_DEFAULT_DATA_DIR
  return MCPREF_DEFAULT_DATA_DIR;
#else
  return "data";
#endif
}

DrivingData driving_dataset(const std::string& data_dir) {
  struct Entry {
    const char* rel;
    uint64_t sum;
  };
  static const Entry kChecksums[] = {
      {"driving/tensor.json", 0xF720CA56A68E7302ULL},
      {"driving/overall.json", 0xFC9A94B43BF7CD02ULL},
      {"driving/weights.json", 0xD813AE7BB2859870ULL},
      {"sets/s1.json", 0x4B07B998D2F7A92BULL},
      {"sets/s2.json", 0x22268638FEA6754BULL},
  };
  std::vector<std::string> contents;
  for (const Entry& e : kChecksums) {
    std::string bytes = read_file(data_dir + "/" + e.rel);
    if (fnv1a64(bytes) != e.sum)
      throw Error(ErrorCode::kIo, std::string("checksum mismatch for ") +
                                      e.rel + "; data bundle is corrupted");
    contents.push_back(std::move(bytes));
  }

  DrivingData out{tensor_from_json(contents[0]),
                  tensor_from_json(contents[1]).slice(0),
                  set_from_json(contents[3]),
                  set_from_json(contents[4]),
                  {},
                  {"A", "B", "C", "D", "E", "R1", "R2"}};
  auto wj = nlohmann::json::parse(contents[2]);
  for (int i = 1; i <= 9; ++i) {
    std::string key = "w" + std::to_string(i);
    if (!wj.contains(key) || wj[key].is_null()) {
      out.weights.emplace_back(std::nullopt);
      continue;
    }
    Vec w(wj[key].size());
    for (size_t r = 0; r < wj[key].size(); ++r) w[r] = wj[key][r].get<double>();
    out.weights.emplace_back(std::move(w));
  }
  return out;
}

}  // namespace mcpref
