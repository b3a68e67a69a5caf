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

#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "leakctl/operators.hpp"
#include "leakctl/pulses.hpp"

namespace leakctl {

inline constexpr double kMHz = kTwoPi * 1e6;  // rad/s per MHz
inline constexpr double kKHz = kTwoPi * 1e3;  // rad/s per kHz

// Static offsets on drive amplitude (fractional), detuning (rad/s) and
// phase (rad).
struct OffsetSet {
  double amp = 0.0;
  double det = 0.0;
  double phase = 0.0;

  bool is_zero() const { return amp == 0.0 && det == 0.0 && phase == 0.0; }
  bool is_finite() const {
    return std::isfinite(amp) && std::isfinite(det) && std::isfinite(phase);
  }
  OffsetSet operator+(const OffsetSet& o) const {
    return {amp + o.amp, det + o.det, phase + o.phase};
  }
  bool operator==(const OffsetSet&) const = default;
};

// Default parameter values for every scenario.
struct PhysicalParams {
  double omega_m = kTwoPi * 30e6;
  double alpha = kTwoPi * 220e6;
  double kappa1 = kTwoPi * 2e3;
  double kappa_phi = kTwoPi * 2e3;
  double lambda = std::sqrt(2.0);
  double g12 = kTwoPi * 10e6;
  double alpha1 = kTwoPi * 220e6;
  double alpha2 = kTwoPi * 200e6;
  double delta1 = kTwoPi * 500e6;
  double delta_t = 0.0;  // nu1 - delta1
  double beta1 = 1.2;
  double phi1 = 1.5 * kPi;
  double stirap_theta = kPi / 2;
};

// Three-level transmon in the drive frame,
//   H = (1/2) B.S - alpha |2><2|,  B = (Omega cos phi, Omega sin phi, -Delta),
// so that <0|H|1> = (Omega/2) e^{-i phi} and <1|H|2> = lambda (Omega/2) e^{-i phi}.
// Omega(t), phi(t) and Delta(t) come from `drive`, with static `detuning` and
// `phase` added on top.
struct SingleQubitModel {
  double omega_m = kTwoPi * 30e6;
  double duration = 0.0;
  double detuning = 0.0;
  double phase = 0.0;
  double alpha = kTwoPi * 220e6;
  double lambda = std::sqrt(2.0);
  int levels = 3;
  PulseSchedule drive;
  // Nonzero enables first-order DRAG fields with this coefficient.
  double drag_alpha = 0.0;

  void validate() const;
};

// Resonant sine pulse of area pi on the 0-1 transition.
SingleQubitModel not_model(const PhysicalParams& p = {});
// Ry(pi/2) sine pulse (phase pi/2, area pi/2) followed by an X pulse (area pi).
SingleQubitModel hadamard_model(const PhysicalParams& p = {});
// Five-segment geometric trajectory.
SingleQubitModel gtc_model(const GtcParams& g, const PhysicalParams& p = {});

// Two parametrically coupled transmons in the interaction picture, basis
// {00, 01, 10, 02, 11, 20}.
struct TwoQubitModel {
  double g12 = kTwoPi * 10e6;
  double alpha1 = kTwoPi * 220e6;
  double alpha2 = kTwoPi * 200e6;
  double delta1 = kTwoPi * 500e6;
  double nu1 = kTwoPi * 500e6;
  double beta1 = 1.2;
  double phi1 = 1.5 * kPi;
  double duration = 0.0;

  double epsilon1() const { return beta1 * nu1; }
  double delta_t() const { return nu1 - delta1; }
  void validate() const;
};

TwoQubitModel iswap_model(const PhysicalParams& p = {});
const Labels& two_qubit_labels();
const std::vector<std::string>& two_qubit_comp_labels();

// Four-level ladder driven on 0-1 (pump) and 1-2 (Stokes) with a common sine
// envelope Omega(t) of peak omega_m, split by theta. Omega is a Rabi
// frequency: matrix elements carry Omega/2.
struct LadderModel {
  double omega_m = kTwoPi * 30e6;
  double tau = 0.0;
  double alpha = kTwoPi * 220e6;
  double delta01 = 0.0;
  double delta12 = 0.0;
  double phi01 = 0.0;
  double phi12 = 0.0;
  double theta = kPi / 2;
  int levels = 4;

  void validate() const;
};

LadderModel stirap_model(const PhysicalParams& p = {});

// Three-level target coupled to a two-level spectator through
// (zeta/2) diag(1,-1,0) x sigma_z. Basis labels are target+spectator.
struct CrosstalkModel {
  SingleQubitModel base;
  double zeta = 0.0;
  std::string spectator_init = "0";

  void validate() const;
};

Operator h_single(const SingleQubitModel& m, const OffsetSet& off, double t, bool include_leak);
Operator h_two(const TwoQubitModel& m, const OffsetSet& off, double t, bool include_leak);
Operator h_ladder(const LadderModel& m, const OffsetSet& off, double t, bool include_leak);
Operator h_crosstalk(const CrosstalkModel& m, const OffsetSet& off, double t, bool include_leak);

// (1/2) B.S - alpha|2><2| for explicit field components; the |1>-|2>
// coupling is scaled by lambda and dropped when include_leak is false.
Matrix h_from_fields(double bx, double by, double bz, double alpha, double lambda,
                     bool include_leak);

// Crosstalk term (zeta/2) diag(1,-1,0) x sigma_z on the 6-dim joint basis.
Operator crosstalk_term(double zeta);

// Generators of the diagnostic frame transformations.
Operator generator_x1(double dx, double dy, double dz, double lambda = std::sqrt(2.0));
Operator generator_x2(double dx, double dy, double dz);
Operator transform_a1(double dx, double dy, double dz, double lambda = std::sqrt(2.0));
Operator transform_a2(double dx, double dy, double dz);

// Offsets implied by a pure dz rotation: amp = sqrt(1+dz^2)-1,
// phase = arccos(1/sqrt(1+dz^2)).
OffsetSet offsets_from_rotation(double dz);

// A1 H A1^dagger (static A1, so the iA'A^dagger term vanishes).
Operator rotated_h1(const SingleQubitModel& m, double dx, double dy, double dz, double t);
// First-order expansion H + i[X1, H] of the same rotation.
Operator rotated_h1_first_order(const SingleQubitModel& m, double dx, double dy, double dz,
                                double t);

using Hamiltonian = std::function<Operator(double)>;

// Per-window first-order Magnus residuals ||P_K int A^dag H_leak A dt||_F
// with composite Simpson quadrature on `samples` points per window.
std::vector<double> first_order_residuals(const Hamiltonian& h_leak, double total_time,
                                          const Operator& a, int n_seg,
                                          const std::vector<std::string>& comp_labels,
                                          int samples = 2000);

// Leakage part of the single-qubit Hamiltonian.
Hamiltonian single_qubit_leak(const SingleQubitModel& m, const OffsetSet& off = {});

// Largest first-order residual over n_seg equal windows.
double leakage_defect(const Operator& a, const SingleQubitModel& m, int n_seg);

// tau = (pi/2) / (J1(beta1) g12).
double iswap_duration(double g12, double beta1);

}  // namespace leakctl
