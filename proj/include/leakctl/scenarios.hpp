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

#include <functional>
#include <string>
#include <vector>

#include "leakctl/metrics.hpp"
#include "leakctl/models.hpp"
#include "leakctl/propagation.hpp"

namespace leakctl {

enum class ScenarioKind { Not, Hadamard, Iswap, Stirap, Gtc, GtcCrosstalk, RabiCrosstalk };

ScenarioKind parse_scenario_kind(const std::string& name);
const char* to_string(ScenarioKind k);

// How a run is scored.
enum class Measure {
  Trace,           // trace gate fidelity, closed system
  AveragedClosed,  // averaged fidelity, closed system
  AveragedOpen,    // averaged fidelity with decoherence
  StateClosed,     // transfer-state fidelity, closed system
  StateOpen,       // transfer-state fidelity with decoherence
};

const char* to_string(Measure m);

// Hamiltonian of a scenario for given offsets and leak switch.
using ScenarioHamiltonian = std::function<Operator(const OffsetSet&, double, bool)>;

// A fully parameterized simulation target: dynamics, target operation,
// scoring subspaces and decoherence.
struct Scenario {
  ScenarioKind kind = ScenarioKind::Not;
  std::string name;
  double duration = 0.0;
  Labels labels;
  // Each entry is one computational subspace; scores average over entries
  // (crosstalk scenarios use one entry per spectator state).
  std::vector<std::vector<std::string>> comp_variants;
  Matrix target;                   // gate on the computational subspace
  std::string transfer_from;       // state-transfer scenarios only
  std::string transfer_to;
  ScenarioHamiltonian hamiltonian;
  std::vector<CollapseTerm> collapse;
  IntegratorConfig integrator;
  double kappa1 = 0.0;
  double kappa_phi = 0.0;
  // Closed and open-system scores used for headline numbers.
  Measure leak_only_measure = Measure::Trace;
  Measure decoherent_measure = Measure::AveragedOpen;
  int avg_points = 1001;  // 1q trapezoid points or 2q grid size

  bool is_transfer() const { return !transfer_from.empty(); }
  bool is_two_qubit() const { return kind == ScenarioKind::Iswap; }
  Hamiltonian bind(const OffsetSet& off, bool include_leak = true) const;
};

struct ScenarioOptions {
  PhysicalParams params;
  IntegratorConfig integrator;
  GtcParams gtc;
  double zeta = 0.0;
  bool drag = false;  // NOT and Hadamard only
};

Scenario make_scenario(ScenarioKind kind, const ScenarioOptions& opt = {});

// Ideal targets.
Matrix not_target();
Matrix hadamard_target();
Matrix iswap_target();

Operator scenario_unitary(const Scenario& s, const OffsetSet& off, bool include_leak = true);

// Score of a scenario at the given offsets.
double evaluate(const Scenario& s, const OffsetSet& off, Measure m);

// Leakage population at the end of a closed or open run, averaged over the
// computational inputs (gates) or taken from the transfer state.
double final_leakage(const Scenario& s, const OffsetSet& off, bool decoherent);

// Population trajectory from the scenario's initial state.
struct PopulationSample {
  double t;
  std::vector<double> populations;  // ordered as Scenario::labels
};
std::vector<PopulationSample> population_trajectory(const Scenario& s, const OffsetSet& off,
                                                    bool decoherent, const std::string& initial,
                                                    int n_samples = 200,
                                                    bool include_leak = true);

}  // namespace leakctl
