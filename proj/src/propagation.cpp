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

#include "leakctl/propagation.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <string>

#include <Eigen/Eigenvalues>

namespace leakctl {

namespace {

double spectral_norm_hermitian(const Matrix& h) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (h + h.adjoint()), Eigen::EigenvaluesOnly);
  return es.eigenvalues().cwiseAbs().maxCoeff();
}

Matrix step_exponential(const Matrix& h, double dt) {
  const double scale = h.cwiseAbs().maxCoeff();
  const double defect = scale == 0.0 ? 0.0 : (h - h.adjoint()).cwiseAbs().maxCoeff() / scale;
  if (defect < 1e-12) return expm_hermitian(h, Complex(0.0, -dt));
  return expm_pade(Complex(0.0, -dt) * h);
}

struct SparseEntry {
  int row;
  int col;
  Complex value;
};

// Collapse operator stored by its nonzeros, with its dissipator weight.
struct SparseJump {
  std::vector<SparseEntry> entries;
  double weight;
};

double dissipator_weight(double rate, DissipatorNorm norm) {
  return norm == DissipatorNorm::AsPrinted ? rate / 4.0 : rate / 2.0;
}

// Master-equation right-hand side for Hermitian rho:
//   L(rho) = -i (K rho - (K rho)^dag) + sum_k w_k A_k rho A_k^dag,
// with K = H - (i/2) sum_k w_k A_k^dag A_k.
class LindbladRhs {
 public:
  LindbladRhs(const std::vector<CollapseTerm>& terms, DissipatorNorm norm, Eigen::Index dim)
      : damping_(Matrix::Zero(dim, dim)) {
    for (const auto& t : terms) {
      const double w = dissipator_weight(t.rate, norm);
      if (w == 0.0) continue;
      const Matrix& a = t.op.entries();
      if (a.rows() != dim) throw DimError("collapse operator dimension mismatch");
      SparseJump j{{}, w};
      for (Eigen::Index r = 0; r < a.rows(); ++r) {
        for (Eigen::Index c = 0; c < a.cols(); ++c) {
          if (a(r, c) != Complex(0.0)) j.entries.push_back({int(r), int(c), a(r, c)});
        }
      }
      damping_ += w * (a.adjoint() * a);
      jumps_.push_back(std::move(j));
    }
  }

  Matrix effective(const Matrix& h) const { return h - Complex(0.0, 0.5) * damping_; }

  void apply(const Matrix& k_eff, const Matrix& rho, Matrix& out, Matrix& work) const {
    work.noalias() = k_eff * rho;
    out = Complex(0.0, -1.0) * (work - work.adjoint());
    for (const auto& j : jumps_) {
      for (const auto& a : j.entries) {
        for (const auto& b : j.entries) {
          out(a.row, b.row) += j.weight * a.value * std::conj(b.value) * rho(a.col, b.col);
        }
      }
    }
  }

 private:
  Matrix damping_;
  std::vector<SparseJump> jumps_;
};

void check_finite(const Matrix& m, double t) {
  if (!m.allFinite()) {
    throw IntegrationError("integration diverged at t = " + std::to_string(t));
  }
}

}  // namespace

void IntegratorConfig::validate() const {
  if (n_steps != 0 && n_steps < 100) throw ConfigError("n_steps must be 0 (auto) or >= 100");
  if (sample_stride < 0) throw ConfigError("sample_stride must be nonnegative");
}

int auto_steps(const Hamiltonian& h, double total_time) {
  double mx = 0.0;
  constexpr int probes = 64;
  for (int k = 0; k < probes; ++k) {
    const double t = (k + 0.5) * total_time / probes;
    mx = std::max(mx, spectral_norm_hermitian(h(t).entries()));
  }
  const double n = std::ceil(20.0 * total_time * mx / kTwoPi);
  return std::max(2000, static_cast<int>(std::min(n, 1e8)));
}

int resolve_steps(const IntegratorConfig& cfg, const Hamiltonian& h, double total_time) {
  cfg.validate();
  return cfg.n_steps > 0 ? cfg.n_steps : auto_steps(h, total_time);
}

EvolutionResult propagate_unitary(const Hamiltonian& h, double total_time,
                                  const IntegratorConfig& cfg) {
  if (!(total_time >= 0.0)) throw ConfigError("total time must be nonnegative");
  const Operator h0 = h(0.0);
  const auto labels = h0.labels_ptr();
  const auto dim = h0.dim();
  EvolutionResult res;
  Matrix u = Matrix::Identity(dim, dim);
  if (total_time == 0.0) {
    res.final_unitary = Operator(u, labels);
    return res;
  }
  const int n = resolve_steps(cfg, h, total_time);
  const double dt = total_time / n;
  if (cfg.sample_stride > 0) res.unitary_samples.emplace_back(0.0, Operator(u, labels));

  if (cfg.method == IntegratorMethod::PiecewiseExponential) {
    for (int k = 0; k < n; ++k) {
      const double tm = (k + 0.5) * dt;
      const Matrix hm = h(tm).entries();
      check_finite(hm, tm);
      u = step_exponential(hm, dt) * u;
      check_finite(u, tm);
      if (cfg.sample_stride > 0 && ((k + 1) % cfg.sample_stride == 0 || k + 1 == n)) {
        res.unitary_samples.emplace_back((k + 1) * dt, Operator(u, labels));
      }
    }
  } else {
    Matrix k1, k2, k3, k4;
    const Complex mi(0.0, -1.0);
    for (int k = 0; k < n; ++k) {
      const double t = k * dt;
      const Matrix ha = h(t).entries();
      const Matrix hb = h(t + 0.5 * dt).entries();
      const Matrix hc = h(t + dt).entries();
      k1 = mi * ha * u;
      k2 = mi * hb * (u + 0.5 * dt * k1);
      k3 = mi * hb * (u + 0.5 * dt * k2);
      k4 = mi * hc * (u + dt * k3);
      u += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
      check_finite(u, t);
      if (cfg.sample_stride > 0 && ((k + 1) % cfg.sample_stride == 0 || k + 1 == n)) {
        res.unitary_samples.emplace_back((k + 1) * dt, Operator(u, labels));
      }
    }
  }
  res.diagnostics.n_steps = n;
  res.diagnostics.unitarity_defect = (u.adjoint() * u - Matrix::Identity(dim, dim)).norm();
  res.final_unitary = Operator(std::move(u), labels);
  return res;
}

std::pair<Operator, Operator> collapse_ops(int dim) {
  if (dim < 2) throw ConfigError("collapse_ops: dim must be at least 2");
  Matrix x1 = Matrix::Zero(dim, dim);
  Matrix xp = Matrix::Zero(dim, dim);
  for (int j = 0; j + 1 < dim; ++j) x1(j, j + 1) = std::sqrt(double(j + 1));
  for (int j = 0; j < dim; ++j) xp(j, j) = j;
  const Labels l = default_labels(dim);
  return {Operator(std::move(x1), l), Operator(std::move(xp), l)};
}

std::vector<Operator> two_qubit_collapse_ops() {
  // Build on the full 3x3 product space, then keep the working levels.
  const auto [x1, xp] = collapse_ops(3);
  const Operator i3 = Operator::identity(3);
  const std::vector<Operator> full{tensor_product(x1, i3), tensor_product(xp, i3),
                                   tensor_product(i3, x1), tensor_product(i3, xp)};
  const auto idx = label_indices(two_qubit_labels(), full[0].labels());
  std::vector<Operator> out;
  for (const auto& op : full) out.emplace_back(restrict(op.entries(), idx), two_qubit_labels());
  return out;
}

std::vector<CollapseTerm> single_transmon_terms(int dim, double kappa1, double kappa_phi) {
  auto [x1, xp] = collapse_ops(dim);
  return {{x1, kappa1}, {xp, kappa_phi}};
}

std::vector<CollapseTerm> two_qubit_terms(double kappa1, double kappa_phi) {
  const auto ops = two_qubit_collapse_ops();
  return {{ops[0], kappa1}, {ops[1], kappa_phi}, {ops[2], kappa1}, {ops[3], kappa_phi}};
}

std::vector<CollapseTerm> crosstalk_terms(double kappa1, double kappa_phi) {
  const auto [x1, xp] = collapse_ops(3);
  const Operator i2 = Operator::identity(2);
  return {{tensor_product(x1, i2), kappa1}, {tensor_product(xp, i2), kappa_phi}};
}

std::vector<Matrix> lindblad_evolve_batch(const Hamiltonian& h, const std::vector<Matrix>& rho0,
                                          const std::vector<CollapseTerm>& terms,
                                          double total_time, const IntegratorConfig& cfg,
                                          EvolutionDiagnostics* diag) {
  if (rho0.empty()) return {};
  const auto dim = rho0.front().rows();
  const LindbladRhs rhs(terms, cfg.dissipator, dim);
  const int n = resolve_steps(cfg, h, total_time);
  const double dt = total_time / n;
  std::vector<Matrix> rho = rho0;
  std::vector<Complex> tr0;
  for (const auto& r : rho0) tr0.push_back(r.trace());

  Matrix k1(dim, dim), k2(dim, dim), k3(dim, dim), k4(dim, dim), tmp(dim, dim), work(dim, dim);
  for (int k = 0; k < n; ++k) {
    const double t = k * dt;
    const Matrix ka = rhs.effective(h(t).entries());
    const Matrix kb = rhs.effective(h(t + 0.5 * dt).entries());
    const Matrix kc = rhs.effective(h(t + dt).entries());
    for (auto& r : rho) {
      rhs.apply(ka, r, k1, work);
      tmp = r + 0.5 * dt * k1;
      rhs.apply(kb, tmp, k2, work);
      tmp = r + 0.5 * dt * k2;
      rhs.apply(kb, tmp, k3, work);
      tmp = r + dt * k3;
      rhs.apply(kc, tmp, k4, work);
      r += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
      tmp = 0.5 * (r + r.adjoint());
      r = tmp;
    }
    check_finite(rho.front(), t);
  }

  double tdef = 0.0;
  for (std::size_t i = 0; i < rho.size(); ++i) {
    check_finite(rho[i], total_time);
    tdef = std::max(tdef, std::abs(rho[i].trace() - tr0[i]));
  }
  if (tdef > 1e-5) throw IntegrationError("trace drift " + std::to_string(tdef) + " exceeds 1e-5");
  if (diag) {
    diag->n_steps = n;
    diag->trace_defect = tdef;
  }
  return rho;
}

EvolutionResult lindblad_evolve(const Hamiltonian& h, const DensityMatrix& rho0,
                                const std::vector<CollapseTerm>& terms, double total_time,
                                const IntegratorConfig& cfg) {
  const auto labels = rho0.labels_ptr();
  const auto dim = rho0.dim();
  const LindbladRhs rhs(terms, cfg.dissipator, dim);
  const int n = resolve_steps(cfg, h, total_time);
  const double dt = total_time / n;
  EvolutionResult res;
  Matrix r = rho0.entries();
  Matrix k1(dim, dim), k2(dim, dim), k3(dim, dim), k4(dim, dim), tmp(dim, dim), work(dim, dim);
  double tdef = 0.0;
  if (cfg.sample_stride > 0) res.density_samples.emplace_back(0.0, rho0);
  for (int k = 0; k < n; ++k) {
    const double t = k * dt;
    const Matrix ka = rhs.effective(h(t).entries());
    const Matrix kb = rhs.effective(h(t + 0.5 * dt).entries());
    const Matrix kc = rhs.effective(h(t + dt).entries());
    rhs.apply(ka, r, k1, work);
    tmp = r + 0.5 * dt * k1;
    rhs.apply(kb, tmp, k2, work);
    tmp = r + 0.5 * dt * k2;
    rhs.apply(kb, tmp, k3, work);
    tmp = r + dt * k3;
    rhs.apply(kc, tmp, k4, work);
    r += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    tmp = 0.5 * (r + r.adjoint());
    r = tmp;
    check_finite(r, t);
    tdef = std::max(tdef, std::abs(r.trace() - Complex(1.0)));
    if (tdef > 1e-5) {
      throw IntegrationError("trace drift " + std::to_string(tdef) + " exceeds 1e-5");
    }
    if (cfg.sample_stride > 0 && ((k + 1) % cfg.sample_stride == 0 || k + 1 == n)) {
      res.density_samples.emplace_back((k + 1) * dt, DensityMatrix::unchecked(r, labels));
    }
  }
  res.diagnostics.n_steps = n;
  res.diagnostics.trace_defect = tdef;
  res.diagnostics.hermiticity_defect = (r - r.adjoint()).cwiseAbs().maxCoeff();
  res.final_density = DensityMatrix::unchecked(std::move(r), labels);
  res.diagnostics.min_eigenvalue = res.final_density->min_eigenvalue();
  return res;
}

EvolutionResult lindblad_evolve(const Hamiltonian& h, const DensityMatrix& rho0, double kappa1,
                                double kappa_phi, double total_time,
                                const IntegratorConfig& cfg) {
  return lindblad_evolve(h, rho0, single_transmon_terms(rho0.dim(), kappa1, kappa_phi),
                         total_time, cfg);
}

}  // namespace leakctl
