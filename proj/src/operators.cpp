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

#include "leakctl/operators.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

namespace leakctl {

namespace {

std::shared_ptr<const Labels> share(Labels labels) {
  return std::make_shared<const Labels>(std::move(labels));
}

void require_same_dim(const Operator& a, const Operator& b, const char* what) {
  if (a.dim() != b.dim()) {
    throw DimError(std::string(what) + ": dimension mismatch " + std::to_string(a.dim()) +
                   " vs " + std::to_string(b.dim()));
  }
}

double max_abs(const Matrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

}  // namespace

Labels default_labels(int dim) {
  Labels out;
  out.reserve(dim);
  for (int i = 0; i < dim; ++i) out.push_back(std::to_string(i));
  return out;
}

Operator::Operator(Matrix entries, Labels labels)
    : Operator(std::move(entries), share(std::move(labels))) {}

Operator::Operator(Matrix entries, std::shared_ptr<const Labels> labels)
    : m_(std::move(entries)), labels_(std::move(labels)) {
  if (m_.rows() != m_.cols() || m_.rows() == 0) {
    throw DimError("operator must be square and nonempty");
  }
  if (!labels_ || static_cast<Eigen::Index>(labels_->size()) != m_.rows()) {
    throw DimError("basis label count does not match operator dimension");
  }
}

Operator Operator::identity(const Labels& labels) {
  const auto n = static_cast<Eigen::Index>(labels.size());
  return Operator(Matrix::Identity(n, n), labels);
}

Operator Operator::identity(int dim) { return identity(default_labels(dim)); }

Operator Operator::zero(const Labels& labels) {
  const auto n = static_cast<Eigen::Index>(labels.size());
  return Operator(Matrix::Zero(n, n), labels);
}

int Operator::index_of(std::string_view label) const {
  const auto it = std::find(labels_->begin(), labels_->end(), label);
  if (it == labels_->end()) throw LabelError("unknown basis label '" + std::string(label) + "'");
  return static_cast<int>(it - labels_->begin());
}

Complex Operator::at(std::string_view row, std::string_view col) const {
  return m_(index_of(row), index_of(col));
}

double Operator::hermiticity_defect() const {
  const double scale = max_abs(m_);
  if (scale == 0.0) return 0.0;
  return max_abs(m_ - m_.adjoint()) / scale;
}

bool Operator::is_hermitian(double rel_tol) const { return hermiticity_defect() < rel_tol; }

bool Operator::is_finite() const { return m_.allFinite(); }

Operator Operator::operator+(const Operator& o) const {
  require_same_dim(*this, o, "operator+");
  return Operator(m_ + o.m_, labels_);
}

Operator Operator::operator-(const Operator& o) const {
  require_same_dim(*this, o, "operator-");
  return Operator(m_ - o.m_, labels_);
}

Operator Operator::operator*(const Operator& o) const {
  require_same_dim(*this, o, "operator*");
  return Operator(m_ * o.m_, labels_);
}

Operator Operator::operator*(Complex s) const { return Operator(m_ * s, labels_); }

Operator operator*(Complex s, const Operator& op) { return op * s; }

StateVector::StateVector(Vector amplitudes, Labels labels)
    : StateVector(std::move(amplitudes), share(std::move(labels))) {}

StateVector::StateVector(Vector amplitudes, std::shared_ptr<const Labels> labels)
    : v_(std::move(amplitudes)), labels_(std::move(labels)) {
  if (v_.size() == 0 || !labels_ || static_cast<Eigen::Index>(labels_->size()) != v_.size()) {
    throw DimError("state vector length does not match basis labels");
  }
  if (!v_.allFinite()) throw InvalidState("state vector has non-finite amplitudes");
  const double n = v_.norm();
  if (n == 0.0) throw InvalidState("state vector has zero norm");
  v_ /= n;
}

StateVector StateVector::basis(const Labels& labels, std::string_view label) {
  const auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) throw LabelError("unknown basis label '" + std::string(label) + "'");
  Vector v = Vector::Zero(static_cast<Eigen::Index>(labels.size()));
  v(it - labels.begin()) = 1.0;
  return StateVector(std::move(v), labels);
}

DensityMatrix::DensityMatrix(Matrix entries, Labels labels)
    : DensityMatrix(std::move(entries), share(std::move(labels))) {}

DensityMatrix::DensityMatrix(Matrix entries, std::shared_ptr<const Labels> labels)
    : DensityMatrix(std::move(entries), std::move(labels), NoCheck{}) {
  if (!m_.allFinite()) throw InvalidState("density matrix has non-finite entries");
  if (max_abs(m_ - m_.adjoint()) > 1e-10) throw InvalidState("density matrix is not Hermitian");
  if (std::abs(m_.trace() - Complex(1.0)) > 1e-8) throw InvalidState("density matrix trace is not 1");
  if (min_eigenvalue() < -1e-8) throw InvalidState("density matrix has a negative eigenvalue");
}

DensityMatrix::DensityMatrix(Matrix entries, std::shared_ptr<const Labels> labels, NoCheck)
    : m_(std::move(entries)), labels_(std::move(labels)) {
  if (m_.rows() != m_.cols() || m_.rows() == 0) throw DimError("density matrix must be square");
  if (!labels_ || static_cast<Eigen::Index>(labels_->size()) != m_.rows()) {
    throw DimError("basis label count does not match density matrix dimension");
  }
}

DensityMatrix DensityMatrix::pure(const StateVector& psi) {
  return DensityMatrix(psi.amplitudes() * psi.amplitudes().adjoint(), psi.labels_ptr(), NoCheck{});
}

DensityMatrix DensityMatrix::unchecked(Matrix entries, std::shared_ptr<const Labels> labels) {
  return DensityMatrix(std::move(entries), std::move(labels), NoCheck{});
}

double DensityMatrix::min_eigenvalue() const {
  const Matrix herm = 0.5 * (m_ + m_.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> es(herm, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

Operator tensor_product(const Operator& a, const Operator& b) {
  const auto na = a.dim();
  const auto nb = b.dim();
  Matrix k(na * nb, na * nb);
  for (int i = 0; i < na; ++i) {
    for (int j = 0; j < na; ++j) {
      k.block(i * nb, j * nb, nb, nb) = a(i, j) * b.entries();
    }
  }
  Labels labels;
  labels.reserve(na * nb);
  for (const auto& la : a.labels()) {
    for (const auto& lb : b.labels()) labels.push_back(la + lb);
  }
  return Operator(std::move(k), std::move(labels));
}

Matrix expm_hermitian(const Matrix& h, Complex s) {
  const Matrix herm = 0.5 * (h + h.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> es(herm);
  const Vector phases = (s * es.eigenvalues().cast<Complex>()).array().exp();
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

// Pade-13 scaling and squaring (Higham 2005).
Matrix expm_pade(const Matrix& a) {
  static constexpr double b[] = {64764752532480000.0,
                                 32382376266240000.0,
                                 7771770303897600.0,
                                 1187353796428800.0,
                                 129060195264000.0,
                                 10559470521600.0,
                                 670442572800.0,
                                 33522128640.0,
                                 1323241920.0,
                                 40840800.0,
                                 960960.0,
                                 16380.0,
                                 182.0,
                                 1.0};
  constexpr double theta13 = 5.371920351148152;

  const auto n = a.rows();
  const double norm1 = a.cwiseAbs().colwise().sum().maxCoeff();
  int s = 0;
  if (norm1 > theta13) s = static_cast<int>(std::ceil(std::log2(norm1 / theta13)));
  const Matrix as = a / std::ldexp(1.0, s);

  const Matrix ident = Matrix::Identity(n, n);
  const Matrix a2 = as * as;
  const Matrix a4 = a2 * a2;
  const Matrix a6 = a4 * a2;
  const Matrix u_inner = b[13] * a6 + b[11] * a4 + b[9] * a2;
  const Matrix u = as * (a6 * u_inner + b[7] * a6 + b[5] * a4 + b[3] * a2 + b[1] * ident);
  const Matrix v_inner = b[12] * a6 + b[10] * a4 + b[8] * a2;
  const Matrix v = a6 * v_inner + b[6] * a6 + b[4] * a4 + b[2] * a2 + b[0] * ident;

  Matrix r = (v - u).partialPivLu().solve(v + u);
  for (int k = 0; k < s; ++k) r = r * r;
  return r;
}

Operator matexp(const Operator& h, Complex s) {
  if (!h.is_finite() || !std::isfinite(s.real()) || !std::isfinite(s.imag())) {
    throw InvalidOperator("matexp: non-finite input");
  }
  Matrix out = h.is_hermitian() ? expm_hermitian(h.entries(), s) : expm_pade(s * h.entries());
  if (!out.allFinite()) throw InvalidOperator("matexp: non-finite result");
  return Operator(std::move(out), h.labels_ptr());
}

std::vector<int> label_indices(const std::vector<std::string>& selected, const Labels& basis) {
  std::vector<int> idx;
  idx.reserve(selected.size());
  for (const auto& l : selected) {
    const auto it = std::find(basis.begin(), basis.end(), l);
    if (it == basis.end()) throw LabelError("unknown basis label '" + l + "'");
    idx.push_back(static_cast<int>(it - basis.begin()));
  }
  return idx;
}

Matrix restrict(const Matrix& m, const std::vector<int>& idx) {
  const auto k = static_cast<Eigen::Index>(idx.size());
  Matrix out(k, k);
  for (Eigen::Index i = 0; i < k; ++i) {
    for (Eigen::Index j = 0; j < k; ++j) out(i, j) = m(idx[i], idx[j]);
  }
  return out;
}

Operator projector(const std::vector<std::string>& selected, const Labels& basis) {
  Operator p = Operator::zero(basis);
  Matrix m = p.entries();
  for (int i : label_indices(selected, basis)) m(i, i) = 1.0;
  return Operator(std::move(m), basis);
}

Operator projector(const std::vector<std::string>& selected, int dim) {
  return projector(selected, default_labels(dim));
}

Operator dagger(const Operator& a) { return Operator(a.entries().adjoint(), a.labels_ptr()); }

Operator commutator(const Operator& a, const Operator& b) {
  require_same_dim(a, b, "commutator");
  return Operator(a.entries() * b.entries() - b.entries() * a.entries(), a.labels_ptr());
}

Complex trace(const Operator& a) { return a.entries().trace(); }

double fro_norm(const Operator& a) { return a.entries().norm(); }

}  // namespace leakctl
