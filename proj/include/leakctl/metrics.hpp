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
#include <map>
#include <string>
#include <vector>

#include "leakctl/models.hpp"
#include "leakctl/operators.hpp"

namespace leakctl {

enum class TraceMode { Modulus, RealPart };

// |Tr(P U_f P U0^dag)| / K with P the computational projector.
double trace_gate_fidelity(const Operator& u_final, const Matrix& u0,
                           const std::vector<std::string>& comp_labels,
                           TraceMode mode = TraceMode::Modulus);

// Maps an initial density matrix to the final one.
using Evolver = std::function<Matrix(const Matrix&)>;

// Linear map on density matrices, stored as the images of the Hermitian
// basis {|i><i|, (|i><j|+|j><i|)/2, i(|i><j|-|j><i|)/2} of the computational
// block, embedded in the full space.
class Channel {
 public:
  Channel(const std::vector<int>& comp_idx, std::vector<Matrix> images);

  // Builds the channel by applying `evolve` to each basis element.
  static Channel from_evolver(const Evolver& evolve, int full_dim,
                              const std::vector<int>& comp_idx);
  // Batched form: `evolve_all` maps the list of basis elements at once.
  static Channel from_batch(const std::function<std::vector<Matrix>(const std::vector<Matrix>&)>&
                                evolve_all,
                            int full_dim, const std::vector<int>& comp_idx);
  static Channel from_unitary(const Matrix& u, const std::vector<int>& comp_idx);
  // Basis elements, in the order expected for images.
  static std::vector<Matrix> basis_inputs(int full_dim, const std::vector<int>& comp_idx);

  // Image of rho = psi psi^dag, psi given on the computational block.
  Matrix apply_pure(const Vector& psi_comp) const;
  const std::vector<int>& comp_idx() const { return comp_; }
  int full_dim() const { return static_cast<int>(diag_.front().rows()); }

 private:
  std::vector<int> comp_;
  std::vector<Matrix> diag_;
  std::vector<std::vector<Matrix>> re_;  // (|i><j| + |j><i|)/2, i < j
  std::vector<std::vector<Matrix>> im_;  // i(|i><j| - |j><i|)/2, i < j
};

// (1/2pi) int <U0 phi|rho(phi)|U0 phi> dtheta over phi = cos th|0> + sin th|1>,
// trapezoidal rule on n points.
double averaged_fidelity_1q(const Channel& ch, const Matrix& u0, int n = 1001);
double averaged_fidelity_1q(const Evolver& evolve, int full_dim,
                            const std::vector<int>& comp_idx, const Matrix& u0, int n = 1001);

// Double trapezoidal average over product states
// (cos t1|0> + sin t1|1>)(cos t2|0> + sin t2|1>) on an n_grid^2 grid. The
// computational order is 00, 01, 10, 11.
double averaged_fidelity_2q(const Channel& ch, const Matrix& u0, int n_grid = 33);
double averaged_fidelity_2q(const Evolver& evolve, int full_dim,
                            const std::vector<int>& comp_idx, const Matrix& u0,
                            int n_grid = 33);

// <psi|rho|psi>, clipped to [0, 1].
double state_fidelity(const DensityMatrix& rho, const StateVector& psi);
double state_fidelity(const Matrix& rho, const Vector& psi);

std::map<std::string, double> populations(const StateVector& psi, const Labels& labels);
std::map<std::string, double> populations(const DensityMatrix& rho, const Labels& labels);

double leakage_population(const StateVector& psi, const std::vector<std::string>& comp_labels);
double leakage_population(const DensityMatrix& rho, const std::vector<std::string>& comp_labels);

enum class FidelityKind { TraceGate, Averaged1q, Averaged2q, State };
const char* to_string(FidelityKind k);

struct FidelityReport {
  double value = 0.0;
  FidelityKind kind = FidelityKind::TraceGate;
  double leakage_pop = 0.0;
  OffsetSet offsets;
  std::map<std::string, std::string> metadata;

  void validate() const;
};

}  // namespace leakctl
