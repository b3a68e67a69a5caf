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

#include "leakctl/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace leakctl {

double trace_gate_fidelity(const Operator& u_final, const Matrix& u0,
                           const std::vector<std::string>& comp_labels, TraceMode mode) {
  const auto idx = label_indices(comp_labels, u_final.labels());
  const auto k = static_cast<Eigen::Index>(idx.size());
  if (u0.rows() != k || u0.cols() != k) {
    throw DimError("trace_gate_fidelity: target is " + std::to_string(u0.rows()) + "x" +
                   std::to_string(u0.cols()) + ", computational subspace has " +
                   std::to_string(k) + " levels");
  }
  const Matrix uk = restrict(u_final.entries(), idx);
  const Complex tr = (uk * u0.adjoint()).trace();
  const double norm = (u0 * u0.adjoint()).trace().real();
  return (mode == TraceMode::Modulus ? std::abs(tr) : tr.real()) / norm;
}

Channel::Channel(const std::vector<int>& comp_idx, std::vector<Matrix> images) : comp_(comp_idx) {
  const auto k = comp_.size();
  if (images.size() != k * k) throw DimError("channel needs K^2 basis images");
  std::size_t p = 0;
  for (std::size_t i = 0; i < k; ++i) diag_.push_back(std::move(images[p++]));
  re_.assign(k, std::vector<Matrix>(k));
  im_.assign(k, std::vector<Matrix>(k));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      re_[i][j] = std::move(images[p++]);
      im_[i][j] = std::move(images[p++]);
    }
  }
}

std::vector<Matrix> Channel::basis_inputs(int full_dim, const std::vector<int>& comp_idx) {
  const auto k = comp_idx.size();
  std::vector<Matrix> out;
  out.reserve(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    Matrix m = Matrix::Zero(full_dim, full_dim);
    m(comp_idx[i], comp_idx[i]) = 1.0;
    out.push_back(std::move(m));
  }
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      const int a = comp_idx[i];
      const int b = comp_idx[j];
      Matrix re = Matrix::Zero(full_dim, full_dim);
      re(a, b) = 0.5;
      re(b, a) = 0.5;
      Matrix im = Matrix::Zero(full_dim, full_dim);
      im(a, b) = Complex(0.0, 0.5);
      im(b, a) = Complex(0.0, -0.5);
      out.push_back(std::move(re));
      out.push_back(std::move(im));
    }
  }
  return out;
}

Channel Channel::from_evolver(const Evolver& evolve, int full_dim,
                              const std::vector<int>& comp_idx) {
  auto inputs = basis_inputs(full_dim, comp_idx);
  std::vector<Matrix> images;
  images.reserve(inputs.size());
  for (const auto& m : inputs) images.push_back(evolve(m));
  return Channel(comp_idx, std::move(images));
}

Channel Channel::from_batch(
    const std::function<std::vector<Matrix>(const std::vector<Matrix>&)>& evolve_all,
    int full_dim, const std::vector<int>& comp_idx) {
  return Channel(comp_idx, evolve_all(basis_inputs(full_dim, comp_idx)));
}

Channel Channel::from_unitary(const Matrix& u, const std::vector<int>& comp_idx) {
  return from_evolver([&u](const Matrix& r) -> Matrix { return u * r * u.adjoint(); },
                      static_cast<int>(u.rows()), comp_idx);
}

Matrix Channel::apply_pure(const Vector& psi) const {
  const auto k = comp_.size();
  Matrix out = Matrix::Zero(full_dim(), full_dim());
  for (std::size_t i = 0; i < k; ++i) out += std::norm(psi(i)) * diag_[i];
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      const Complex c = psi(i) * std::conj(psi(j));
      if (c == Complex(0.0)) continue;
      out += (2.0 * c.real()) * re_[i][j] + (2.0 * c.imag()) * im_[i][j];
    }
  }
  return out;
}

namespace {

double trapezoid_weight(int i, int n) { return (i == 0 || i == n - 1) ? 0.5 : 1.0; }

double expectation(const Matrix& rho, const Vector& v) {
  return (v.adjoint() * rho * v)(0, 0).real();
}

Vector embed(const Vector& comp, int full_dim, const std::vector<int>& idx) {
  Vector v = Vector::Zero(full_dim);
  for (std::size_t i = 0; i < idx.size(); ++i) v(idx[i]) = comp(i);
  return v;
}

}  // namespace

double averaged_fidelity_1q(const Channel& ch, const Matrix& u0, int n) {
  if (n < 3) throw ConfigError("averaged_fidelity_1q: n must be at least 3");
  if (ch.comp_idx().size() != 2 || u0.rows() != 2) throw DimError("1q fidelity needs K = 2");
  double acc = 0.0;
  double wsum = 0.0;
  for (int i = 0; i < n; ++i) {
    const double th = kTwoPi * i / (n - 1);
    Vector phi(2);
    phi << std::cos(th), std::sin(th);
    const Vector target = embed(u0 * phi, ch.full_dim(), ch.comp_idx());
    const double w = trapezoid_weight(i, n);
    acc += w * expectation(ch.apply_pure(phi), target);
    wsum += w;
  }
  return acc / wsum;
}

double averaged_fidelity_1q(const Evolver& evolve, int full_dim,
                            const std::vector<int>& comp_idx, const Matrix& u0, int n) {
  return averaged_fidelity_1q(Channel::from_evolver(evolve, full_dim, comp_idx), u0, n);
}

double averaged_fidelity_2q(const Channel& ch, const Matrix& u0, int n_grid) {
  if (n_grid < 11) throw ConfigError("averaged_fidelity_2q: n_grid must be at least 11");
  if (ch.comp_idx().size() != 4 || u0.rows() != 4) throw DimError("2q fidelity needs K = 4");
  double acc = 0.0;
  double wsum = 0.0;
  for (int i = 0; i < n_grid; ++i) {
    const double t1 = kTwoPi * i / (n_grid - 1);
    for (int j = 0; j < n_grid; ++j) {
      const double t2 = kTwoPi * j / (n_grid - 1);
      const double c1 = std::cos(t1), s1 = std::sin(t1), c2 = std::cos(t2), s2 = std::sin(t2);
      Vector phi(4);
      phi << c1 * c2, c1 * s2, s1 * c2, s1 * s2;
      const Vector target = embed(u0 * phi, ch.full_dim(), ch.comp_idx());
      const double w = trapezoid_weight(i, n_grid) * trapezoid_weight(j, n_grid);
      acc += w * expectation(ch.apply_pure(phi), target);
      wsum += w;
    }
  }
  return acc / wsum;
}

double averaged_fidelity_2q(const Evolver& evolve, int full_dim,
                            const std::vector<int>& comp_idx, const Matrix& u0, int n_grid) {
  return averaged_fidelity_2q(Channel::from_evolver(evolve, full_dim, comp_idx), u0, n_grid);
}

double state_fidelity(const Matrix& rho, const Vector& psi) {
  if (rho.rows() != psi.size()) throw DimError("state_fidelity: dimension mismatch");
  const Complex v = (psi.adjoint() * rho * psi)(0, 0);
  return std::clamp(v.real(), 0.0, 1.0);
}

double state_fidelity(const DensityMatrix& rho, const StateVector& psi) {
  return state_fidelity(rho.entries(), psi.amplitudes());
}

std::map<std::string, double> populations(const StateVector& psi, const Labels& labels) {
  std::map<std::string, double> out;
  for (int i : label_indices(labels, psi.labels())) {
    out[psi.labels()[i]] = std::norm(psi.amplitudes()(i));
  }
  return out;
}

std::map<std::string, double> populations(const DensityMatrix& rho, const Labels& labels) {
  std::map<std::string, double> out;
  for (int i : label_indices(labels, rho.labels())) out[rho.labels()[i]] = rho.entries()(i, i).real();
  return out;
}

double leakage_population(const StateVector& psi, const std::vector<std::string>& comp_labels) {
  double s = 0.0;
  for (int i : label_indices(comp_labels, psi.labels())) s += std::norm(psi.amplitudes()(i));
  return std::clamp(1.0 - s, 0.0, 1.0);
}

double leakage_population(const DensityMatrix& rho, const std::vector<std::string>& comp_labels) {
  double s = 0.0;
  double total = 0.0;
  for (int i = 0; i < rho.dim(); ++i) total += rho.entries()(i, i).real();
  for (int i : label_indices(comp_labels, rho.labels())) s += rho.entries()(i, i).real();
  return std::clamp(total - s, 0.0, 1.0);
}

const char* to_string(FidelityKind k) {
  switch (k) {
    case FidelityKind::TraceGate:
      return "trace-gate";
    case FidelityKind::Averaged1q:
      return "averaged-1q";
    case FidelityKind::Averaged2q:
      return "averaged-2q";
    case FidelityKind::State:
      return "state";
  }
  return "unknown";
}

void FidelityReport::validate() const {
  if (!(value >= 0.0 && value <= 1.0 + 1e-9)) throw InvalidState("fidelity outside [0, 1]");
  if (leakage_pop < -1e-9) throw InvalidState("negative leakage population");
}

}  // namespace leakctl
