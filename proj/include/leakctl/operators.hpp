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

#include <complex>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "leakctl/errors.hpp"

namespace leakctl {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using Labels = std::vector<std::string>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;
inline constexpr Complex kI{0.0, 1.0};

// Labels "0", "1", ..., "dim-1".
Labels default_labels(int dim);

// Dense square complex matrix tied to a labeled basis.
class Operator {
 public:
  Operator(Matrix entries, Labels labels);
  Operator(Matrix entries, std::shared_ptr<const Labels> labels);

  static Operator identity(const Labels& labels);
  static Operator identity(int dim);
  static Operator zero(const Labels& labels);

  int dim() const { return static_cast<int>(m_.rows()); }
  const Matrix& entries() const { return m_; }
  const Labels& labels() const { return *labels_; }
  const std::shared_ptr<const Labels>& labels_ptr() const { return labels_; }

  Complex operator()(int i, int j) const { return m_(i, j); }
  Complex at(std::string_view row, std::string_view col) const;
  int index_of(std::string_view label) const;

  // Maximum entrywise deviation from Hermiticity relative to the largest
  // entry; zero matrices report 0.
  double hermiticity_defect() const;
  bool is_hermitian(double rel_tol = 1e-12) const;
  bool is_finite() const;

  Operator operator+(const Operator& o) const;
  Operator operator-(const Operator& o) const;
  Operator operator*(const Operator& o) const;
  Operator operator*(Complex s) const;

 private:
  Matrix m_;
  std::shared_ptr<const Labels> labels_;
};

Operator operator*(Complex s, const Operator& op);

// Normalized pure state on a labeled basis.
class StateVector {
 public:
  StateVector(Vector amplitudes, Labels labels);
  StateVector(Vector amplitudes, std::shared_ptr<const Labels> labels);

  // Unit vector on the level named `label`.
  static StateVector basis(const Labels& labels, std::string_view label);

  int dim() const { return static_cast<int>(v_.size()); }
  const Vector& amplitudes() const { return v_; }
  const Labels& labels() const { return *labels_; }
  const std::shared_ptr<const Labels>& labels_ptr() const { return labels_; }

 private:
  Vector v_;
  std::shared_ptr<const Labels> labels_;
};

// Density matrix. The public constructor validates Hermiticity (1e-10),
// unit trace (1e-8) and positivity (eigenvalues >= -1e-8).
class DensityMatrix {
 public:
  DensityMatrix(Matrix entries, Labels labels);
  DensityMatrix(Matrix entries, std::shared_ptr<const Labels> labels);

  static DensityMatrix pure(const StateVector& psi);
  // Skips validation; used for linear-map basis elements and integrator
  // intermediates.
  static DensityMatrix unchecked(Matrix entries, std::shared_ptr<const Labels> labels);

  int dim() const { return static_cast<int>(m_.rows()); }
  const Matrix& entries() const { return m_; }
  const Labels& labels() const { return *labels_; }
  const std::shared_ptr<const Labels>& labels_ptr() const { return labels_; }

  double min_eigenvalue() const;

 private:
  struct NoCheck {};
  DensityMatrix(Matrix entries, std::shared_ptr<const Labels> labels, NoCheck);
  Matrix m_;
  std::shared_ptr<const Labels> labels_;
};

// Kronecker product; `a` varies slowest and labels concatenate.
Operator tensor_product(const Operator& a, const Operator& b);

// exp(s*h). Hermitian h uses an eigendecomposition, anything else uses
// Pade-13 scaling and squaring.
Operator matexp(const Operator& h, Complex s);
Matrix expm_pade(const Matrix& a);
Matrix expm_hermitian(const Matrix& h, Complex s);

Operator projector(const std::vector<std::string>& selected, const Labels& basis);
Operator projector(const std::vector<std::string>& selected, int dim);

Operator dagger(const Operator& a);
Operator commutator(const Operator& a, const Operator& b);
Complex trace(const Operator& a);
double fro_norm(const Operator& a);

// Indices of `selected` inside `basis`; throws LabelError on a miss.
std::vector<int> label_indices(const std::vector<std::string>& selected, const Labels& basis);

// Submatrix on the given rows/columns.
Matrix restrict(const Matrix& m, const std::vector<int>& idx);

}  // namespace leakctl
