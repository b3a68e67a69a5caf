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

#include <cmath>

#include <gtest/gtest.h>

#include "leakctl/pulses.hpp"

namespace leakctl {
namespace {

constexpr double kOmega = kTwoPi * 30e6;
constexpr double kAlpha = kTwoPi * 220e6;

// Composite Simpson on [0, T]; independent of the library quadrature.
double simpson(const Waveform& f, double t_end, int n = 20000) {
  const double h = t_end / n;
  double s = f(0.0) + f(t_end);
  for (int i = 1; i < n; ++i) s += (i % 2 ? 4.0 : 2.0) * f(i * h);
  return s * h / 3.0;
}

TEST(SineEnvelope, QuarterAreaDuration) {
  const double t = kPi * kPi / (4.0 * kOmega);
  EXPECT_NEAR(t, 13.09e-9, 0.005e-9);
  const Segment s = sine_envelope(kOmega, t);
  EXPECT_NEAR(pulse_area(s), kPi / 2, 1e-6);
  EXPECT_NEAR(simpson(s.envelope, t), kPi / 2, 1e-9);
  EXPECT_NEAR(sine_duration_for_area(kOmega, kPi / 2), t, 1e-20);
}

TEST(SineEnvelope, PeakAndEndpoints) {
  const double t = 20e-9;
  const Segment s = sine_envelope(kOmega, t);
  EXPECT_NEAR(s.envelope(t / 2), kOmega, 1e-6);
  EXPECT_EQ(s.envelope(0.0), 0.0);
  EXPECT_NEAR(s.envelope(t), 0.0, 1e-6);
  EXPECT_NEAR(pulse_area(s), 2.0 * kOmega * t / kPi, 1e-8 * 2.0 * kOmega * t / kPi);
}

TEST(SineEnvelope, RejectsNonpositiveInputs) {
  EXPECT_THROW(sine_envelope(kOmega, 0.0), ConfigError);
  EXPECT_THROW(sine_envelope(kOmega, -1e-9), ConfigError);
  EXPECT_THROW(sine_envelope(0.0, 1e-9), ConfigError);
}

TEST(PulseArea, ZeroDurationSegment) {
  Segment s;
  s.duration = 0.0;
  EXPECT_EQ(pulse_area(s), 0.0);
}

TEST(Stirap, DurationFromCyclicCondition) {
  // 2 Omega_m tau / pi = 2 pi for a sine envelope.
  const double tau = stirap_duration(kOmega);
  EXPECT_NEAR(tau, kPi * kPi / kOmega, 1e-20);
  EXPECT_NEAR(tau, 16.6667e-9 * kPi, 0.01e-9);
  const auto [pump, stokes] = stirap_pair(kPi / 2, kOmega, tau);
  EXPECT_NEAR(simpson([&](double t) { return std::hypot(pump.envelope(t), stokes.envelope(t)); },
                      tau),
              kStirapArea, 1e-8);
}

TEST(Stirap, EqualSplitAndZeroAngle) {
  const double tau = stirap_duration(kOmega);
  const auto [p, s] = stirap_pair(kPi / 2, kOmega, tau);
  const auto [p0, s0] = stirap_pair(0.0, kOmega, tau);
  const Segment common = sine_envelope(kOmega, tau);
  for (int k = 0; k <= 50; ++k) {
    const double t = tau * k / 50.0;
    EXPECT_NEAR(p.envelope(t), s.envelope(t), 1e-6);
    EXPECT_EQ(p0.envelope(t), 0.0);
    const double om = common.envelope(t);
    EXPECT_NEAR(p.envelope(t) * p.envelope(t) + s.envelope(t) * s.envelope(t), om * om,
                1e-12 * kOmega * kOmega);
  }
}

TEST(Stirap, WrongAreaRejected) {
  EXPECT_THROW(stirap_pair(kPi / 2, kOmega, 0.5 * stirap_duration(kOmega)), ConfigError);
}

TEST(Gtc, TriangularTrajectoryForOptimalParameters) {
  const GtcParams p;
  const PulseSchedule s = gtc_schedule(p, kOmega);
  ASSERT_EQ(s.segments().size(), 5u);
  EXPECT_EQ(s.segments()[1].duration, 0.0);
  const double area135 = pulse_area(s.segments()[0]) + pulse_area(s.segments()[2]) +
                         pulse_area(s.segments()[4]);
  // |chi0 - chi1| + |chi3 - chi1| + |chi3 - chi0| = 0.25 pi + 0.7 pi + 0.45 pi.
  EXPECT_NEAR(area135, 1.4 * kPi, 1e-8);
  double total = 0.0;
  for (const auto& seg : s.segments()) total += seg.duration;
  EXPECT_NEAR(s.total_time(), total, 1e-22);
}

TEST(Gtc, SegmentFourArea) {
  const GtcParams p;
  const double span = 2.0 * p.gamma / (std::cos(p.chi1) - std::cos(p.chi3));
  const double expected = std::abs(span * std::sin(p.chi3) * std::cos(p.chi3));
  const PulseSchedule s = gtc_schedule(p, kOmega);
  EXPECT_NEAR(gtc_segment_areas(p)[3], expected, 1e-12);
  EXPECT_NEAR(pulse_area(s.segments()[3]), expected, 1e-8 * expected);
  EXPECT_NEAR(simpson(s.segments()[3].envelope, s.segments()[3].duration), expected, 1e-8);
}

TEST(Gtc, GeometricPhaseRoundTrip) {
  const GtcParams fixed[] = {GtcParams{}, GtcParams{kPi / 4, 0.3, 0.7 * kPi, 0.1, 0.9 * kPi},
                             GtcParams{0.3, -0.2, -kPi / 3, 0.2, 2.5}};
  for (const auto& p : fixed) {
    EXPECT_NEAR(gtc_geometric_phase(p.chi1, p.chi3, p.xi0, p.xi2()), p.gamma, 1e-12);
  }
}

TEST(Gtc, DetuningAndPhaseLaws) {
  GtcParams p;
  p.chi1 = 0.2;
  const PulseSchedule s = gtc_schedule(p, kOmega);
  const Segment& s2 = s.segments()[1];
  const Segment& s4 = s.segments()[3];
  const double t2 = 0.3 * s2.duration;
  const double t4 = 0.6 * s4.duration;
  EXPECT_NEAR(s2.detuning_law(t2), -s2.envelope(t2) * std::tan(p.chi1), 1e-3);
  EXPECT_NEAR(s4.detuning_law(t4), -s4.envelope(t4) * std::tan(p.chi3), 1e-3);
  EXPECT_NEAR(s.segments()[0].phase_law(0.0), p.xi0 - kPi / 2, 1e-15);
  EXPECT_NEAR(s.segments()[2].phase_law(0.0), p.xi2() + kPi / 2, 1e-12);
  // The phase law winds through the azimuthal span by the segment end.
  const double sc1 = std::sin(p.chi1) * std::cos(p.chi1);
  EXPECT_NEAR(s2.phase_law(s2.duration) - s2.phase_law(0.0), gtc_segment_areas(p)[1] / sc1, 1e-9);
}

TEST(Gtc, EquatorArcIsDegenerate) {
  GtcParams p;
  p.chi3 = kPi / 2;
  EXPECT_THROW(gtc_schedule(p, kOmega), DegenerateTrajectory);
}

TEST(Schedule, BoundaryBelongsToLaterSegment) {
  const PulseSchedule s({sine_envelope(kOmega, 10e-9), sine_envelope(kOmega, 5e-9)});
  EXPECT_EQ(s.at(10e-9).segment, 1);
  EXPECT_EQ(s.at(15e-9).segment, 1);
  EXPECT_EQ(s.at(3e-9).segment, 0);
  EXPECT_NEAR(s.segment_start(1), 10e-9, 1e-24);
}

TEST(Drag, ZeroPhaseZeroDetuningField) {
  const double t_end = 26e-9;
  const Segment seg = sine_envelope(kOmega, t_end);
  const DragFields d = drag_fields(seg, kAlpha);
  for (double t : {0.1 * t_end, 0.37 * t_end, 0.8 * t_end}) {
    const double omega_dot = kOmega * kPi / t_end * std::cos(kPi * t / t_end);
    EXPECT_NEAR(d.bdx(t), 0.0, 1e-9 * kOmega);
    EXPECT_NEAR(d.bdy(t), -omega_dot / (2.0 * kAlpha), 1e-6 * kOmega);
    EXPECT_EQ(d.bdz(t), 0.0);
  }
  EXPECT_NEAR(std::abs(d.bdy(0.0)), kOmega * kPi / (2.0 * kAlpha * t_end), 1e-4 * kOmega);
}

TEST(Drag, ConstantEnvelopeHasNoCorrection) {
  Segment seg;
  seg.duration = 10e-9;
  seg.envelope = constant_waveform(kOmega);
  const DragFields d = drag_fields(seg, kAlpha);
  EXPECT_NEAR(d.bdx(5e-9), 0.0, 1e-12 * kOmega);
  EXPECT_NEAR(d.bdy(5e-9), 0.0, 1e-6 * kOmega);
  EXPECT_NEAR(d.total_x(5e-9), kOmega, 1e-6 * kOmega);
}

TEST(Drag, LinearInAmplitude) {
  const double t_end = 26e-9;
  const DragFields a = drag_fields(sine_envelope(kOmega, t_end), kAlpha);
  const DragFields b = drag_fields(sine_envelope(3.0 * kOmega, t_end), kAlpha);
  for (double t : {0.2 * t_end, 0.7 * t_end}) {
    EXPECT_NEAR(b.bdy(t), 3.0 * a.bdy(t), 1e-9 * std::abs(b.bdy(t)));
    EXPECT_NEAR(b.bx(t), 3.0 * a.bx(t), 1e-6);
  }
}

TEST(Drag, SingularAnharmonicity) {
  EXPECT_THROW(drag_fields(sine_envelope(kOmega, 10e-9), 0.0), SingularAnharmonicity);
}

}  // namespace
}  // namespace leakctl
