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

#include "core/solvers.hpp"

namespace mcpref {

// Tensor files: {"d":int,"k":int,"criteria":[str],"p":[[[float]]]} with
// p[j][i1][i2]. Loading validates the tensor and refuses invalid files unless
// allow_invalid is set.
PreferenceTensor tensor_from_json(const std::string& text,
                                  bool allow_invalid = false);
std::string tensor_to_json(const PreferenceTensor& t);
PreferenceTensor load_tensor(const std::string& path,
                             bool allow_invalid = false);
void save_tensor(const PreferenceTensor& t, const std::string& path);

// Set files: {"lower":[float],"halfspaces":[{"a":[float],"b":float}]}.
TargetSet set_from_json(const std::string& text);
std::string set_to_json(const TargetSet& s);
TargetSet load_set(const std::string& path);
void save_set(const TargetSet& s, const std::string& path);

std::string report_to_json(const SolveReport& rep);
std::string report_trace_csv(const SolveReport& rep);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

/// FNV-1a 64-bit hash; guards the bundled data files against corruption.
uint64_t fnv1a64(const std::string& bytes);

}  // namespace mcpref
