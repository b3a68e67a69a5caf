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

#include "leakctl/pulses.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace leakctl {

Waveform constant_waveform(double value) {
  return [value](double) { return value; };
}

PulseSchedule::PulseSchedule(std::vector<Segment> segments) : segments_(std::move(segments)) {
  starts_.reserve(segments_.size());
  for (const auto& s : segments_) {
    if (!(s.duration >= 0.0) || !std::isfinite(s.duration)) {
      throw ConfigError("segment duration must be finite and nonnegative");
    }
    starts_.push_back(total_);
    total_ += s.duration;
  }
}

ControlSample PulseSchedule::at(double t) const {
  int k = -1;
  for (int i = 0; i < static_cast<int>(segments_.size()); ++i) {
    if (segments_[i].duration <= 0.0) continue;
    k = i;
    if (t < starts_[i] + segments_[i].duration) break;
  }
  ControlSample out;
  if (k < 0) return out;
  const auto& s = segments_[k];
  const double local = std::clamp(t - starts_[k], 0.0, s.duration);
  out.envelope = s.envelope(local);
  out.phase = s.phase_law(local);
  out.detuning = s.detuning_law(local);
  out.segment = k;
  out.local_time = local;
  return out;
}

Segment sine_envelope(double omega_m, double duration) {
  if (!(duration > 0.0)) throw ConfigError("sine_envelope: duration must be positive");
  if (!(omega_m > 0.0)) throw ConfigError("sine_envelope: peak amplitude must be positive");
  Segment s;
  s.duration = duration;
  s.envelope = [omega_m, duration](double t) { return omega_m * std::sin(kPi * t / duration); };
  s.name = "sine";
  return s;
}

double sine_duration_for_area(double omega_m, double area) {
  if (!(omega_m > 0.0)) throw ConfigError("peak amplitude must be positive");
  return kPi * area / (2.0 * omega_m);
}

double stirap_duration(double omega_m) { return sine_duration_for_area(omega_m, kStirapArea); }

std::pair<Segment, Segment> stirap_pair(double theta, double omega_m, double tau) {
  const Segment common = sine_envelope(omega_m, tau);
  const double area = pulse_area(common);
  if (std::abs(area - kStirapArea) > 1e-6 * kStirapArea) {
    throw ConfigError("stirap_pair: envelope area " + std::to_string(area) +
                      " does not match the cyclic condition");
  }
  const double s = std::sin(theta / 2.0);
  const double c = std::cos(theta / 2.0);
  Segment pump = common;
  Segment stokes = common;
  pump.envelope = [env = common.envelope, s](double t) { return s * env(t); };
  stokes.envelope = [env = common.envelope, c](double t) { return c * env(t); };
  pump.name = "pump";
  stokes.name = "stokes";
  return {pump, stokes};
}

double GtcParams::xi2() const {
  const double denom = std::cos(chi1) - std::cos(chi3);
  if (denom == 0.0) throw DegenerateTrajectory("cos(chi1) == cos(chi3): azimuthal span undefined");
  return xi0 + 2.0 * gamma / denom;
}

double gtc_geometric_phase(double chi1, double chi3, double xi0, double xi2) {
  return (xi2 - xi0) * (std::cos(chi1) - std::cos(chi3)) / 2.0;
}

std::vector<double> gtc_segment_areas(const GtcParams& p) {
  const double xi2 = p.xi2();
  const double sc1 = std::sin(p.chi1) * std::cos(p.chi1);
  const double sc3 = std::sin(p.chi3) * std::cos(p.chi3);
  return {std::abs(p.chi0 - p.chi1), std::abs(xi2 - p.xi0) * std::abs(sc1),
          std::abs(p.chi3 - p.chi1), std::abs(p.xi0 - xi2) * std::abs(sc3),
          std::abs(p.chi3 - p.chi0)};
}

namespace {

// Cumulative area of a sine pulse up to local time t.
Waveform sine_cumulative(double omega_m, double duration) {
  return [omega_m, duration](double t) {
    return omega_m * duration / kPi * (1.0 - std::cos(kPi * t / duration));
  };
}

// An azimuthal arc at a pole is a point (zero area); on the equator it needs
// an infinite detuning.
void check_azimuthal(double span, double chi, const char* which) {
  if (span == 0.0) return;
  const double sc = std::sin(chi) * std::cos(chi);
  if (std::abs(std::cos(chi)) < 1e-12) {
    throw DegenerateTrajectory(std::string(which) + ": azimuthal arc on the equator");
  }
  if (std::abs(std::sin(chi)) < 1e-12) return;
  if (span / sc < 0.0) {
    throw DegenerateTrajectory(std::string(which) + ": azimuthal span runs against the drive");
  }
}

}  // namespace

PulseSchedule gtc_schedule(const GtcParams& p, double omega_m) {
  if (!(omega_m > 0.0)) throw ConfigError("gtc_schedule: peak amplitude must be positive");
  if (p.chi0 < p.chi1 || p.chi3 < p.chi1 || p.chi3 < p.chi0) {
    throw DegenerateTrajectory("gtc_schedule: polar angles must satisfy chi1 <= chi0 <= chi3");
  }
  const double xi2 = p.xi2();
  const double sc1 = std::sin(p.chi1) * std::cos(p.chi1);
  const double sc3 = std::sin(p.chi3) * std::cos(p.chi3);
  check_azimuthal(xi2 - p.xi0, p.chi1, "segment 2");
  check_azimuthal(p.xi0 - xi2, p.chi3, "segment 4");

  const auto areas = gtc_segment_areas(p);
  const double tan1 = std::tan(p.chi1);
  const double tan3 = std::tan(p.chi3);
  std::vector<Segment> segs;
  for (int k = 0; k < 5; ++k) {
    const double dur = sine_duration_for_area(omega_m, areas[k]);
    Segment s;
    s.duration = dur;
    s.name = "gtc" + std::to_string(k + 1);
    if (dur > 0.0) {
      s.envelope = sine_envelope(omega_m, dur).envelope;
    }
    const Waveform env = s.envelope;
    switch (k) {
      case 0:
      case 4:
        s.phase_law = constant_waveform(p.xi0 - kPi / 2);
        break;
      case 1: {
        const Waveform cum = dur > 0.0 ? sine_cumulative(omega_m, dur) : constant_waveform(0.0);
        const double base = p.xi0 + kPi;
        s.phase_law = [cum, base, sc1](double t) { return sc1 == 0.0 ? base : base + cum(t) / sc1; };
        s.detuning_law = [env, tan1](double t) { return -env(t) * tan1; };
        break;
      }
      case 2:
        s.phase_law = constant_waveform(xi2 + kPi / 2);
        break;
      case 3: {
        const Waveform cum = dur > 0.0 ? sine_cumulative(omega_m, dur) : constant_waveform(0.0);
        const double base = xi2 + kPi;
        s.phase_law = [cum, base, sc3](double t) { return sc3 == 0.0 ? base : base + cum(t) / sc3; };
        s.detuning_law = [env, tan3](double t) { return -env(t) * tan3; };
        break;
      }
    }
    segs.push_back(std::move(s));
  }
  return PulseSchedule(std::move(segs));
}

Matrix gtc_target(const GtcParams& p) {
  const double cg = std::cos(p.gamma);
  const double sg = std::sin(p.gamma);
  Matrix u(2, 2);
  u(0, 0) = Complex(cg, sg * std::cos(p.chi0));
  u(0, 1) = kI * sg * std::sin(p.chi0) * std::exp(-kI * p.xi0);
  u(1, 0) = kI * sg * std::sin(p.chi0) * std::exp(kI * p.xi0);
  u(1, 1) = Complex(cg, -sg * std::cos(p.chi0));
  return u;
}

DragFields drag_fields(const Segment& seg, double alpha) {
  if (alpha == 0.0) throw SingularAnharmonicity("drag_fields: alpha must be nonzero");
  const double h = seg.duration > 0.0 ? seg.duration / 1e4 : 1e-15;
  const Waveform env = seg.envelope;
  const Waveform ph = seg.phase_law;
  const Waveform det = seg.detuning_law;

  DragFields f;
  f.bx = [env, ph](double t) { return env(t) * std::cos(ph(t)); };
  f.by = [env, ph](double t) { return env(t) * std::sin(ph(t)); };
  f.bz = [det](double t) { return -det(t); };
  const Waveform bx = f.bx;
  const Waveform by = f.by;
  const Waveform bz = f.bz;
  f.bdx = [=](double t) {
    const double dby = (by(t + h) - by(t - h)) / (2.0 * h);
    return -(1.0 / (2.0 * alpha)) * (-dby + bz(t) * bx(t));
  };
  f.bdy = [=](double t) {
    const double dbx = (bx(t + h) - bx(t - h)) / (2.0 * h);
    return -(1.0 / (2.0 * alpha)) * (dbx + bz(t) * by(t));
  };
  f.bdz = constant_waveform(0.0);
  return f;
}

double pulse_area(const Segment& seg) {
  if (seg.duration <= 0.0) return 0.0;
  using boost::math::quadrature::gauss_kronrod;
  const double scale = seg.duration;
  // Integrate in units of the duration to keep the tolerance meaningful.
  auto f = [&](double u) { return seg.envelope(u * scale); };
  const double v = gauss_kronrod<double, 31>::integrate(f, 0.0, 1.0, 15, 1e-12);
  return v * scale;
}

}  // namespace leakctl
