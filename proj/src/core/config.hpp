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

#include <string>

#include "core/experiments.hpp"

namespace mcpref {

// JSON experiment configs. The instance block is either a named constructor
//   {"name":"lecam-p1","d":4,"k":2,"gamma":0.25}
// (names: all-half, conflict, two-ex, prop1b, lecam-p0, lecam-p1,
//  alpha-beta, delta-mixture, rps, driving, driving-base)
// or a file reference {"tensor_file":"path"}. The set block is
//   {"name":"s0"} / {"name":"s1"} / {"name":"s2"} / {"file":"path"}
// or inline {"lower":[...],"halfspaces":[...]}; s0 takes its dimension from
// the instance. The norm is "inf", "1", "2", or a number.

PreferenceTensor instance_from_json(const std::string& spec_json);
TargetSet set_from_config(const std::string& spec_json, int k);
NormSpec norm_from_config(const std::string& text);

SweepConfig sweep_config_from_json(const std::string& config_json);
NashSweepConfig nash_sweep_config_from_json(const std::string& config_json);
TraceConfig trace_config_from_json(const std::string& config_json);

struct CurveConfig {
  double alpha0 = 0.5;
  double beta0 = -0.5;
  int j1 = 0;
  int j2 = 1;
  int k = 2;
  TargetSet set;
  int grid = 1001;
};
CurveConfig curve_config_from_json(const std::string& config_json);

}  // namespace mcpref
