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
#include <optional>
#include <string>
#include <vector>

#include "leakctl/models.hpp"
#include "leakctl/scenarios.hpp"

namespace leakctl {

// Fidelity as a function of the applied offsets.
using Objective = std::function<double(const OffsetSet&)>;

Objective make_objective(const Scenario& s, Measure m);

// Worker count: LEAKCTL_THREADS if set, else the hardware concurrency.
int default_threads();

enum class Axis { Amp, Det, Phase };
Axis parse_axis(const std::string& name);
const char* to_string(Axis a);

// Normalized fit variables: amp as is, det in units of 2 pi MHz, phase in
// units of pi.
double to_normalized(Axis a, double physical);
double to_physical(Axis a, double normalized);
void set_axis(OffsetSet& off, Axis a, double physical);
double get_axis(const OffsetSet& off, Axis a);

// Axis ranges are in physical units (rad/s for det, rad for phase).
struct SweepSpec {
  Axis axis = Axis::Amp;
  double lo = 0.0;
  double hi = 0.0;
  int n_points = 41;
  std::optional<Axis> axis2;
  double lo2 = 0.0;
  double hi2 = 0.0;
  int n_points2 = 0;
  OffsetSet fixed_offsets;

  void validate() const;
};

struct SweepRow {
  int i = 0;
  int j = 0;
  OffsetSet offsets;
  double x = 0.0;  // normalized first-axis value
  double y = 0.0;  // normalized second-axis value (2-D sweeps)
  double fidelity = 0.0;
  bool ok = true;
  std::string error;
};

struct SweepTable {
  SweepSpec spec;
  std::vector<SweepRow> rows;  // first axis slowest
};

// Evaluates the objective on the grid; failures are flagged per row.
SweepTable sweep(const Objective& f, const SweepSpec& spec, int threads = 1);

struct QuadFit {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double rms = 0.0;
  int n = 0;
};

QuadFit fit_quadratic(const std::vector<double>& x, const std::vector<double>& y);
// Fits F(x) over the ok rows of a 1-D sweep in normalized units.
QuadFit fit_quadratic(const SweepTable& table);

struct NelderMeadOptions {
  double reflection = 1.0;
  double expansion = 2.0;
  double contraction = 0.5;
  double shrink = 0.5;
  double f_spread_tol = 1e-7;
  double x_tol = 1e-10;
  int max_evals = 2000;
};

struct NelderMeadResult {
  std::vector<double> x;
  double fx = 0.0;
  int evaluations = 0;
  bool converged = false;
};

// Minimizes f from x0 with an axis-aligned initial simplex of sizes `step`.
NelderMeadResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                             const std::vector<double>& x0, const std::vector<double>& step,
                             const NelderMeadOptions& opt = {});

struct OffsetBounds {
  double amp = 0.15;
  double det = kTwoPi * 10e6;
  double phase = 0.2 * kPi;
};

struct OptimizeResult {
  OffsetSet offsets;
  double fidelity = 0.0;
  double baseline = 0.0;  // zero-offset fidelity
  int evaluations = 0;
};

// Coarse seed_grid^3 grid over the bounds (odd sizes include the origin),
// then Nelder-Mead refinement inside the box from the best grid point.
OptimizeResult optimize_offsets(const Objective& f, const OffsetBounds& bounds = {},
                                int seed_grid = 7, int threads = 1,
                                const NelderMeadOptions& nm = {});

// Calibration errors added on top of the applied offsets.
struct CalibrationRanges {
  double amp = 0.02;
  double det = kTwoPi * 0.2e6;
  double phase = 0.02 * kPi;
  int n = 9;
};

CalibrationRanges single_qubit_calibration();
CalibrationRanges two_qubit_calibration();

struct RobustnessRow {
  std::string panel;  // "phase_det" or "amp_det"
  OffsetSet error;
  double fidelity = 0.0;
};

struct RobustnessTable {
  std::vector<RobustnessRow> rows;
  double min_fidelity() const;
  double center_fidelity() const;
};

// Fidelity over the two calibration-error panels (phase x det, amp x det)
// with off_opt held fixed.
RobustnessTable robustness_grid(const Objective& f, const OffsetSet& off_opt,
                                const CalibrationRanges& ranges, int threads = 1);

// Rounds each component to the nearest multiple of its resolution.
OffsetSet quantize_offsets(const OffsetSet& off, double amp_res, double det_res,
                           double phase_res);

struct DragComparison {
  double uncorrected = 0.0;
  double drag = 0.0;
  double sso = 0.0;
  OffsetSet sso_offsets;
};

// Decoherent averaged fidelities of the bare, DRAG-corrected and SSO-corrected
// gate with identical envelopes and durations. The SSO offsets maximize the
// closed-system trace fidelity.
DragComparison drag_compare(ScenarioKind gate, const ScenarioOptions& opt, int seed_grid = 7,
                            int threads = 1);

struct CrosstalkRow {
  double zeta = 0.0;
  double gtc = 0.0;
  double rabi = 0.0;
};

// Spectator-averaged decoherent averaged fidelity of the GTC and Rabi
// Hadamard schemes, each with its own SSO offsets, over the given zeta values.
std::vector<CrosstalkRow> gtc_crosstalk_study(const std::vector<double>& zetas,
                                              const ScenarioOptions& opt,
                                              const OffsetSet& off_gtc,
                                              const OffsetSet& off_rabi, int threads = 1);

std::vector<double> linspace(double lo, double hi, int n);

}  // namespace leakctl
