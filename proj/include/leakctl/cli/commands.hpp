// Copyright 2026 The leakctl Authors
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

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "leakctl/cli/config.hpp"

namespace leakctl::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitRuntime = 3;

struct CommandResult {
  nlohmann::json summary;
  std::vector<std::string> files;  // paths written, in order
};

// Each command writes its CSV files and <stem>_summary.json under c.output.
CommandResult cmd_run(const ExperimentConfig& c);  // dispatches on c.scenario
CommandResult cmd_gate(const ExperimentConfig& c);
CommandResult cmd_sweep(const ExperimentConfig& c);
CommandResult cmd_optimize(const ExperimentConfig& c);
CommandResult cmd_robustness(const ExperimentConfig& c);
CommandResult cmd_gtc(const ExperimentConfig& c);
CommandResult cmd_drag(const ExperimentConfig& c);
CommandResult cmd_framework(const ExperimentConfig& c);

ScenarioKind gate_kind(const std::string& gate);
// Default sweep half-range per axis, in physical units.
double default_sweep_half_range(Axis a);

// Parses argv, runs the subcommand and maps errors to exit codes.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace leakctl::cli
