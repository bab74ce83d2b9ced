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
#include <vector>

namespace mcpref {

struct VerifyCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyReport {
  std::vector<VerifyCheck> checks;
  bool all_passed = true;
};

/// Runs the full invariant suite across the library at fixed internal seeds:
/// tensor algebra identities, geometry oracles, objective regularity, solver
/// exactness and determinism, sampling statistics, and the instance
/// constructors. Used by the `verify` CLI subcommand.
VerifyReport run_verification();

std::string verify_report_text(const VerifyReport& rep);

}  // namespace mcpref
