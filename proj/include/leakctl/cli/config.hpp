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

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "leakctl/tuneup.hpp"

namespace leakctl::cli {

// Parses a scalar: plain numbers ("0.003", "-1e-3"), multiples of pi
// ("-0.15pi", "1.5*pi") and angular frequencies written with an explicit
// 2 pi factor ("2pi*30MHz", "2*pi*0.5 MHz", "2pi*2kHz"). A frequency unit
// without the 2 pi factor is rejected.
double parse_quantity(const std::string& text);
double parse_quantity(const nlohmann::json& value, const std::string& key);

struct SweepConfig {
  std::string param = "amp";
  std::optional<double> lo;
  std::optional<double> hi;
  int n = 41;
  std::optional<std::string> param2;
  std::optional<double> lo2;
  std::optional<double> hi2;
  int n2 = 21;
  std::string measure = "averaged_closed";
};

struct ExperimentConfig {
  std::string scenario = "not";
  std::string gate = "not";  // drag, robustness and framework runs
  PhysicalParams params;
  GtcParams gtc;
  double zeta_max = kTwoPi * 2e6;
  int zeta_points = 41;
  bool optimize = true;
  OffsetSet offsets;
  bool decoherence = true;
  IntegratorConfig integrator;
  int seed_grid = 7;
  OffsetBounds bounds;
  SweepConfig sweep;
  std::optional<CalibrationRanges> robustness;
  std::vector<int> magnus_segments{1, 2, 4, 8};
  int samples = 200;
  int threads = 0;  // 0: LEAKCTL_THREADS or hardware concurrency
  std::string output = ".";

  void validate() const;
  int resolved_threads() const;
};

// Builds a config from JSON; unknown keys raise ConfigError.
ExperimentConfig config_from_json(const nlohmann::json& j);
ExperimentConfig load_config(const std::string& path);
// Fully resolved config with every field present (frequencies in rad/s).
nlohmann::json config_to_json(const ExperimentConfig& c);

ScenarioOptions scenario_options(const ExperimentConfig& c);
Measure parse_measure(const std::string& name);

}  // namespace leakctl::cli
