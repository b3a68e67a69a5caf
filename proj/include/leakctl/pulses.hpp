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
#include <utility>
#include <vector>

#include "leakctl/operators.hpp"

namespace leakctl {

// Map from local segment time (s) to a control value.
using Waveform = std::function<double(double)>;

Waveform constant_waveform(double value);

// One piece of a control record. Times are local to the segment.
struct Segment {
  double duration = 0.0;
  Waveform envelope = constant_waveform(0.0);      // rad/s
  Waveform phase_law = constant_waveform(0.0);     // rad
  Waveform detuning_law = constant_waveform(0.0);  // rad/s
  std::string name;
};

// Instantaneous control values of a schedule.
struct ControlSample {
  double envelope = 0.0;
  double phase = 0.0;
  double detuning = 0.0;
  int segment = -1;
  double local_time = 0.0;
};

class PulseSchedule {
 public:
  PulseSchedule() = default;
  explicit PulseSchedule(std::vector<Segment> segments);

  const std::vector<Segment>& segments() const { return segments_; }
  double total_time() const { return total_; }
  // Start time of segment k.
  double segment_start(int k) const { return starts_.at(k); }

  // Locates the segment containing global time t. Interior boundaries belong
  // to the later segment; t = T belongs to the last nonzero segment.
  ControlSample at(double t) const;

 private:
  std::vector<Segment> segments_;
  std::vector<double> starts_;
  double total_ = 0.0;
};

// Omega(t) = omega_m sin(pi t / T), zero phase and detuning.
Segment sine_envelope(double omega_m, double duration);
// Duration of a sine pulse of peak omega_m enclosing `area`.
double sine_duration_for_area(double omega_m, double area);

// Area enclosed by a STIRAP drive pair: a 2 pi Rabi rotation of the bright
// state.
inline constexpr double kStirapArea = kTwoPi;

// Pump (0-1) and Stokes (1-2) drives sharing one sine envelope, split by a
// fixed mixing angle theta.
std::pair<Segment, Segment> stirap_pair(double theta, double omega_m, double tau);
// Duration giving kStirapArea for a sine envelope of peak omega_m.
double stirap_duration(double omega_m);

struct GtcParams {
  double chi0 = kPi / 4;
  double xi0 = 0.0;
  double gamma = 1.5 * kPi;
  double chi1 = 0.0;
  double chi3 = 0.7 * kPi;

  double xi2() const;
};

// Five-segment geometric trajectory. Each segment is a sine pulse of peak
// omega_m; zero-area segments have zero duration.
PulseSchedule gtc_schedule(const GtcParams& p, double omega_m);
// Required area of each of the five segments.
std::vector<double> gtc_segment_areas(const GtcParams& p);
// Ideal two-level gate of the cyclic trajectory.
Matrix gtc_target(const GtcParams& p);
// Geometric phase recovered from chi1, chi3 and the azimuthal span.
double gtc_geometric_phase(double chi1, double chi3, double xi0, double xi2);

struct DragFields {
  Waveform bx, by, bz;
  Waveform bdx, bdy, bdz;

  // Corrected field B0 + Bd at time t.
  double total_x(double t) const { return bx(t) + bdx(t); }
  double total_y(double t) const { return by(t) + bdy(t); }
  double total_z(double t) const { return bz(t) + bdz(t); }
};

// B0 = (Omega cos phi, Omega sin phi, -Delta) and the first-order DRAG field
// Bd = -(1/(2 alpha)) (-dBy/dt + Bz Bx, dBx/dt + Bz By, 0). Derivatives use
// central differences with step duration/1e4.
DragFields drag_fields(const Segment& seg, double alpha);

// Adaptive Gauss-Kronrod integral of the envelope over the segment.
double pulse_area(const Segment& seg);

}  // namespace leakctl
