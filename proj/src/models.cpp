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

#include "leakctl/models.hpp"

#include <cmath>
#include <memory>
#include <string>

namespace leakctl {

namespace {

const std::shared_ptr<const Labels>& labels3() {
  static const auto l = std::make_shared<const Labels>(default_labels(3));
  return l;
}

const std::shared_ptr<const Labels>& labels4() {
  static const auto l = std::make_shared<const Labels>(default_labels(4));
  return l;
}

const std::shared_ptr<const Labels>& labels2q() {
  static const auto l =
      std::make_shared<const Labels>(Labels{"00", "01", "10", "02", "11", "20"});
  return l;
}

const std::shared_ptr<const Labels>& labels_xt() {
  static const auto l =
      std::make_shared<const Labels>(Labels{"00", "01", "10", "11", "20", "21"});
  return l;
}

void hermitize_upper(Matrix& h) {
  for (Eigen::Index i = 0; i < h.rows(); ++i) {
    h(i, i) = h(i, i).real();
    for (Eigen::Index j = i + 1; j < h.cols(); ++j) h(j, i) = std::conj(h(i, j));
  }
}

}  // namespace

void SingleQubitModel::validate() const {
  if (!(alpha > 0.0)) throw ConfigError("single-qubit model: alpha must be positive");
  if (!(lambda > 0.0)) throw ConfigError("single-qubit model: lambda must be positive");
  if (levels != 3) throw ConfigError("single-qubit model: levels must be 3");
  if (!(duration > 0.0)) throw ConfigError("single-qubit model: duration must be positive");
  if (std::abs(drive.total_time() - duration) > 1e-12 * duration) {
    throw ConfigError("single-qubit model: schedule length differs from duration");
  }
}

SingleQubitModel not_model(const PhysicalParams& p) {
  SingleQubitModel m;
  m.omega_m = p.omega_m;
  m.alpha = p.alpha;
  m.lambda = p.lambda;
  m.duration = sine_duration_for_area(p.omega_m, kPi);
  Segment x = sine_envelope(p.omega_m, m.duration);
  x.name = "x";
  m.drive = PulseSchedule({x});
  return m;
}

SingleQubitModel hadamard_model(const PhysicalParams& p) {
  SingleQubitModel m;
  m.omega_m = p.omega_m;
  m.alpha = p.alpha;
  m.lambda = p.lambda;
  Segment ry = sine_envelope(p.omega_m, sine_duration_for_area(p.omega_m, kPi / 2));
  ry.phase_law = constant_waveform(kPi / 2);
  ry.name = "ry90";
  Segment x = sine_envelope(p.omega_m, sine_duration_for_area(p.omega_m, kPi));
  x.name = "x";
  m.drive = PulseSchedule({ry, x});
  m.duration = m.drive.total_time();
  return m;
}

SingleQubitModel gtc_model(const GtcParams& g, const PhysicalParams& p) {
  SingleQubitModel m;
  m.omega_m = p.omega_m;
  m.alpha = p.alpha;
  m.lambda = p.lambda;
  m.drive = gtc_schedule(g, p.omega_m);
  m.duration = m.drive.total_time();
  return m;
}

void TwoQubitModel::validate() const {
  if (!(g12 > 0.0)) throw ConfigError("two-qubit model: g12 must be positive");
  if (!(beta1 > 0.0)) throw ConfigError("two-qubit model: beta1 must be positive");
  if (!(duration > 0.0)) throw ConfigError("two-qubit model: duration must be positive");
  const double scale = std::min(std::abs(nu1), std::abs(delta1));
  if (!(scale > 0.0) || std::abs(delta_t()) / scale >= 0.05) {
    throw ConfigError("two-qubit model: |delta1 - nu1| must be small against nu1 and delta1");
  }
}

TwoQubitModel iswap_model(const PhysicalParams& p) {
  TwoQubitModel m;
  m.g12 = p.g12;
  m.alpha1 = p.alpha1;
  m.alpha2 = p.alpha2;
  m.delta1 = p.delta1;
  m.nu1 = p.delta1 + p.delta_t;
  m.beta1 = p.beta1;
  m.phi1 = p.phi1;
  m.duration = iswap_duration(p.g12, p.beta1);
  return m;
}

const Labels& two_qubit_labels() { return *labels2q(); }

const std::vector<std::string>& two_qubit_comp_labels() {
  static const std::vector<std::string> l{"00", "01", "10", "11"};
  return l;
}

void LadderModel::validate() const {
  if (levels != 4) throw ConfigError("ladder model: levels must be 4");
  if (!(tau > 0.0)) throw ConfigError("ladder model: tau must be positive");
  if (!(omega_m > 0.0)) throw ConfigError("ladder model: omega_m must be positive");
}

LadderModel stirap_model(const PhysicalParams& p) {
  LadderModel m;
  m.omega_m = p.omega_m;
  m.alpha = p.alpha;
  m.theta = p.stirap_theta;
  m.tau = stirap_duration(p.omega_m);
  return m;
}

void CrosstalkModel::validate() const {
  base.validate();
  if (spectator_init != "0" && spectator_init != "1") {
    throw ConfigError("crosstalk model: spectator_init must be \"0\" or \"1\"");
  }
}

Matrix h_from_fields(double bx, double by, double bz, double alpha, double lambda,
                     bool include_leak) {
  Matrix h = Matrix::Zero(3, 3);
  const Complex w(0.5 * bx, -0.5 * by);
  h(0, 0) = 0.5 * bz;
  h(1, 1) = -0.5 * bz;
  h(2, 2) = -1.5 * bz - alpha;
  h(0, 1) = w;
  if (include_leak) h(1, 2) = lambda * w;
  hermitize_upper(h);
  return h;
}

Operator h_single(const SingleQubitModel& m, const OffsetSet& off, double t, bool include_leak) {
  const ControlSample c = m.drive.at(t);
  const double scale = 1.0 + off.amp;
  const double delta = m.detuning + c.detuning + off.det;
  const double phi = m.phase + c.phase + off.phase;
  const double omega = scale * c.envelope;
  double bx = omega * std::cos(phi);
  double by = omega * std::sin(phi);
  const double bz = -delta;
  if (m.drag_alpha != 0.0 && c.segment >= 0) {
    const Segment& seg = m.drive.segments()[c.segment];
    const double h = seg.duration / 1e4;
    auto field = [&](double tl, double& fx, double& fy) {
      const double e = scale * seg.envelope(tl);
      const double ph = m.phase + seg.phase_law(tl) + off.phase;
      fx = e * std::cos(ph);
      fy = e * std::sin(ph);
    };
    double xp, yp, xm, ym;
    field(c.local_time + h, xp, yp);
    field(c.local_time - h, xm, ym);
    const double dbx = (xp - xm) / (2.0 * h);
    const double dby = (yp - ym) / (2.0 * h);
    const double k = -1.0 / (2.0 * m.drag_alpha);
    const double bdx = k * (-dby + bz * bx);
    const double bdy = k * (dbx + bz * by);
    bx += bdx;
    by += bdy;
  }
  return Operator(h_from_fields(bx, by, bz, m.alpha, m.lambda, include_leak), labels3());
}

Operator h_two(const TwoQubitModel& m, const OffsetSet& off, double t, bool include_leak) {
  const double g = (1.0 + off.amp) * m.g12;
  const double nu = m.nu1 + off.det;
  const double phi = m.phi1 + off.phase;
  const Complex mod = std::exp(kI * (m.beta1 * std::cos(nu * t + phi)));
  const double r2 = std::sqrt(2.0);
  Matrix h = Matrix::Zero(6, 6);
  // basis order: 00, 01, 10, 02, 11, 20
  h(1, 2) = g * std::exp(kI * (m.delta1 * t)) * mod;
  if (include_leak) {
    h(3, 4) = r2 * g * std::exp(kI * ((m.delta1 - m.alpha2) * t)) * mod;
    h(4, 5) = r2 * g * std::exp(kI * ((m.delta1 + m.alpha1) * t)) * mod;
  }
  hermitize_upper(h);
  return Operator(std::move(h), labels2q());
}

Operator h_ladder(const LadderModel& m, const OffsetSet& off, double t, bool include_leak) {
  const double omega = (1.0 + off.amp) * m.omega_m * std::sin(kPi * t / m.tau);
  const double w01 = 0.5 * omega * std::sin(m.theta / 2.0);
  const double w12 = 0.5 * omega * std::cos(m.theta / 2.0);
  const double d01 = m.delta01 + off.det;
  const double d12 = m.delta12 + off.det;
  const double p01 = m.phi01 + off.phase;
  const double p12 = m.phi12;
  Matrix h = Matrix::Zero(4, 4);
  h(0, 1) = w01 * std::exp(kI * (p01 - d01 * t));
  h(1, 2) = w12 * std::exp(kI * (p12 - d12 * t));
  if (include_leak) {
    const double a = m.alpha;
    h(1, 2) += std::sqrt(2.0) * w01 * std::exp(kI * (p01 - (d01 - a) * t));
    h(2, 3) += std::sqrt(3.0) * w01 * std::exp(kI * (p01 - (d01 - 2.0 * a) * t));
    h(0, 1) += w12 / std::sqrt(2.0) * std::exp(kI * (p12 - (d12 - a) * t));
    h(2, 3) += std::sqrt(1.5) * w12 * std::exp(kI * (p12 - (d12 - 2.0 * a) * t));
  }
  hermitize_upper(h);
  return Operator(std::move(h), labels4());
}

Operator crosstalk_term(double zeta) {
  Matrix v = Matrix::Zero(6, 6);
  // basis order: 00, 01, 10, 11, 20, 21 (target, spectator)
  v(0, 0) = 0.5 * zeta;
  v(1, 1) = -0.5 * zeta;
  v(2, 2) = -0.5 * zeta;
  v(3, 3) = 0.5 * zeta;
  return Operator(std::move(v), labels_xt());
}

Operator h_crosstalk(const CrosstalkModel& m, const OffsetSet& off, double t, bool include_leak) {
  const Matrix h1 = h_single(m.base, off, t, include_leak).entries();
  Matrix h = Matrix::Zero(6, 6);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      h(2 * i, 2 * j) = h1(i, j);
      h(2 * i + 1, 2 * j + 1) = h1(i, j);
    }
  }
  if (m.zeta != 0.0) h += crosstalk_term(m.zeta).entries();
  return Operator(std::move(h), labels_xt());
}

Operator generator_x1(double dx, double dy, double dz, double lambda) {
  Matrix x = Matrix::Zero(3, 3);
  x(0, 0) = -0.5 * dz;
  x(1, 1) = 0.5 * dz;
  x(2, 2) = 1.5 * dz;
  const Complex c(dx, dy);
  x(0, 1) = c;
  x(1, 2) = lambda * c;
  hermitize_upper(x);
  return Operator(std::move(x), labels3());
}

Operator generator_x2(double dx, double dy, double dz) {
  Matrix x = Matrix::Zero(6, 6);
  // basis order: 00, 01, 10, 02, 11, 20
  x(3, 3) = -dz;
  x(4, 4) = dz;
  x(5, 5) = 3.0 * dz;
  const Complex c(dx, dy);
  x(3, 4) = c;
  x(4, 5) = c;
  hermitize_upper(x);
  return Operator(std::move(x), labels2q());
}

Operator transform_a1(double dx, double dy, double dz, double lambda) {
  return matexp(generator_x1(dx, dy, dz, lambda), kI);
}

Operator transform_a2(double dx, double dy, double dz) {
  return matexp(generator_x2(dx, dy, dz), kI);
}

OffsetSet offsets_from_rotation(double dz) {
  const double r = std::sqrt(1.0 + dz * dz);
  return {r - 1.0, 0.0, std::acos(1.0 / r)};
}

Operator rotated_h1(const SingleQubitModel& m, double dx, double dy, double dz, double t) {
  const Operator h = h_single(m, {}, t, true);
  if (dx == 0.0 && dy == 0.0 && dz == 0.0) return h;
  const Operator a = transform_a1(dx, dy, dz, m.lambda);
  return a * h * dagger(a);
}

Operator rotated_h1_first_order(const SingleQubitModel& m, double dx, double dy, double dz,
                                double t) {
  const Operator h = h_single(m, {}, t, true);
  return h + kI * commutator(generator_x1(dx, dy, dz, m.lambda), h);
}

std::vector<double> first_order_residuals(const Hamiltonian& h_leak, double total_time,
                                          const Operator& a, int n_seg,
                                          const std::vector<std::string>& comp_labels,
                                          int samples) {
  if (n_seg < 1) throw ConfigError("n_seg must be at least 1");
  if (samples < 3) samples = 3;
  if (samples % 2 == 0) ++samples;  // Simpson needs an odd point count
  const auto comp = label_indices(comp_labels, a.labels());
  const Matrix& am = a.entries();
  const Matrix ad = am.adjoint();
  const double width = total_time / n_seg;
  const double dt = width / (samples - 1);
  std::vector<double> out;
  out.reserve(n_seg);
  for (int k = 0; k < n_seg; ++k) {
    Matrix acc = Matrix::Zero(am.rows(), am.cols());
    for (int j = 0; j < samples; ++j) {
      const double w = (j == 0 || j == samples - 1) ? 1.0 : (j % 2 == 1 ? 4.0 : 2.0);
      const double t = k * width + j * dt;
      acc += w * (ad * h_leak(t).entries() * am);
    }
    acc *= dt / 3.0;
    double s = 0.0;
    for (int i : comp) s += acc.row(i).squaredNorm();
    out.push_back(std::sqrt(s));
  }
  return out;
}

Hamiltonian single_qubit_leak(const SingleQubitModel& m, const OffsetSet& off) {
  return [m, off](double t) {
    return h_single(m, off, t, true) - h_single(m, off, t, false);
  };
}

double leakage_defect(const Operator& a, const SingleQubitModel& m, int n_seg) {
  const auto r = first_order_residuals(single_qubit_leak(m), m.duration, a, n_seg, {"0", "1"});
  double mx = 0.0;
  for (double v : r) mx = std::max(mx, v);
  return mx;
}

double iswap_duration(double g12, double beta1) {
  if (beta1 == 0.0) throw DivergentDuration("iswap_duration: J1(0) = 0, duration diverges");
  if (!(g12 > 0.0) || !(beta1 > 0.0)) {
    throw ConfigError("iswap_duration: g12 and beta1 must be positive");
  }
  const double j1 = std::cyl_bessel_j(1.0, beta1);
  if (!(j1 > 0.0)) throw DivergentDuration("iswap_duration: J1(beta1) is not positive");
  return (kPi / 2.0) / (j1 * g12);
}

}  // namespace leakctl
