// Copyright 2026 The mhqmo Authors
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

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace mhqmo::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitVerifyFailed = 1,
  kExitUsage = 2,
  kExitValidation = 3,
};

struct RunConfig {
  std::string command;
  std::optional<std::string> scenario;
  std::optional<std::string> observables_path;
  std::optional<std::string> state_path;
  double eta = 1.0;
  double eta_min = 0.0;
  double eta_max = 1.0;
  std::size_t steps = 101;
  bool per_element = false;
  std::optional<std::size_t> marginal;
  std::string format = "json";
  std::optional<std::string> out_path;
  /// Positivity slack; MHQMO_TOL overrides the library default.
  double slack = 1e-10;
};

/// Parses argv and dispatches. Never throws; returns an ExitCode.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Convenience for tests: args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int cmd_build(const RunConfig& config, std::ostream& out);
int cmd_threshold(const RunConfig& config, std::ostream& out);
int cmd_scan(const RunConfig& config, std::ostream& out);
int cmd_quasiprob(const RunConfig& config, std::ostream& out);
int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err);

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// The invariant suite behind `mhqmo verify`.
std::vector<CheckResult> run_verification(double slack);

}  // namespace mhqmo::cli
