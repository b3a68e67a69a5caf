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

#include <string>
#include <vector>

#include "leakctl/models.hpp"
#include "leakctl/propagation.hpp"

namespace leakctl {

// U_err(T) = U_targ(T)^dag U_all(T), with U_targ the leak-free propagator.
Operator error_propagator(const Hamiltonian& h_all, const Hamiltonian& h_targ, double total_time,
                          const IntegratorConfig& cfg = {});
Operator error_propagator(const SingleQubitModel& m, const OffsetSet& off,
                          const IntegratorConfig& cfg = {});

// ||P U_err P - I_K||_F on the computational block.
double error_identity_defect(const Operator& u_err, const std::vector<std::string>& comp_labels);

struct MagnusReport {
  int n_seg = 0;
  std::vector<double> residuals;
  double max_residual = 0.0;
};

// Per-segment first-order Magnus residuals of the leak Hamiltonian in the
// frame A, 2000 quadrature samples per segment.
MagnusReport magnus_residual(const Hamiltonian& h_leak, double total_time, const Operator& a,
                             int n_seg, const std::vector<std::string>& comp_labels);
MagnusReport magnus_residual(const SingleQubitModel& m, const Operator& a, int n_seg,
                             const OffsetSet& off = {});

}  // namespace leakctl
