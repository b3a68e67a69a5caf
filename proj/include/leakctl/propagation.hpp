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

#include <optional>
#include <utility>
#include <vector>

#include "leakctl/models.hpp"
#include "leakctl/operators.hpp"

namespace leakctl {

enum class IntegratorMethod { PiecewiseExponential, Rk4 };

// Weight multiplying each dissipator D[A] = A rho A^dag - {A^dag A, rho}/2.
// AsPrinted: kappa/4. Conventional: kappa/2.
enum class DissipatorNorm { AsPrinted, Conventional };

struct IntegratorConfig {
  int n_steps = 0;  // 0 selects the automatic grid
  IntegratorMethod method = IntegratorMethod::PiecewiseExponential;
  int sample_stride = 0;  // 0 disables trajectory samples
  DissipatorNorm dissipator = DissipatorNorm::AsPrinted;

  void validate() const;
};

// max(2000, ceil(20 T max||H|| / 2 pi)), with ||H|| the spectral norm
// estimated on 64 sample times.
int auto_steps(const Hamiltonian& h, double total_time);
int resolve_steps(const IntegratorConfig& cfg, const Hamiltonian& h, double total_time);

struct EvolutionDiagnostics {
  int n_steps = 0;
  double unitarity_defect = 0.0;   // ||U^dag U - I||_F
  double trace_defect = 0.0;       // max |tr rho - 1|
  double hermiticity_defect = 0.0;
  double min_eigenvalue = 0.0;
};

struct EvolutionResult {
  std::optional<Operator> final_unitary;
  std::optional<DensityMatrix> final_density;
  std::vector<std::pair<double, Operator>> unitary_samples;
  std::vector<std::pair<double, DensityMatrix>> density_samples;
  EvolutionDiagnostics diagnostics;
};

// Ordered product of exp(-i H(t_mid) dt) (or RK4 on the Schrodinger equation
// for the propagator when cfg.method is Rk4).
EvolutionResult propagate_unitary(const Hamiltonian& h, double total_time,
                                  const IntegratorConfig& cfg = {});

// Collapse operator with its rate kappa.
struct CollapseTerm {
  Operator op;
  double rate;
};

// X1 = sum sqrt(j+1)|j><j+1| and X_phi = sum j|j><j| truncated at dim.
std::pair<Operator, Operator> collapse_ops(int dim);
// Per-transmon X1, X_phi embedded on the {00, 01, 10, 02, 11, 20} basis.
std::vector<Operator> two_qubit_collapse_ops();
// Decay and dephasing on one transmon.
std::vector<CollapseTerm> single_transmon_terms(int dim, double kappa1, double kappa_phi);
std::vector<CollapseTerm> two_qubit_terms(double kappa1, double kappa_phi);
// Target-only terms for the 3-level target times 2-level spectator basis.
std::vector<CollapseTerm> crosstalk_terms(double kappa1, double kappa_phi);

// RK4 integration of drho/dt = -i[H, rho] + sum_u w(kappa_u) D[X_u] rho.
EvolutionResult lindblad_evolve(const Hamiltonian& h, const DensityMatrix& rho0,
                                const std::vector<CollapseTerm>& terms, double total_time,
                                const IntegratorConfig& cfg = {});
// Same with collapse_ops(dim) at rates kappa1 and kappa_phi.
EvolutionResult lindblad_evolve(const Hamiltonian& h, const DensityMatrix& rho0, double kappa1,
                                double kappa_phi, double total_time,
                                const IntegratorConfig& cfg = {});

// Evolves several initial operators under one master equation. Inputs need
// only be Hermitian (unit trace is not required); this is the linear map
// used to build channels. No samples are recorded.
std::vector<Matrix> lindblad_evolve_batch(const Hamiltonian& h, const std::vector<Matrix>& rho0,
                                          const std::vector<CollapseTerm>& terms,
                                          double total_time, const IntegratorConfig& cfg,
                                          EvolutionDiagnostics* diag = nullptr);

}  // namespace leakctl
