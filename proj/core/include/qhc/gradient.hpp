// Copyright 2026 The qhc authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "qhc/circuit.hpp"

namespace qhc {

/// d<Z_o>/d(theta_p) for every output qubit o and trainable angle p,
/// row-major [n_outputs][n_params]. Entries are bounded by 1 in
/// magnitude. Only variational angles appear; the embedding angles are
/// inputs, not parameters.
struct QuantumJacobian {
  std::size_t n_outputs = 0;
  std::size_t n_params = 0;
  std::vector<double> entries;

  double at(std::size_t output, std::size_t param) const {
    return entries[output * n_params + param];
  }
  double& at(std::size_t output, std::size_t param) {
    return entries[output * n_params + param];
  }
};

/// Exact jacobian via the two-point rule
///   d<Z_o>/d(theta) = (f_o(theta + pi/2) - f_o(theta - pi/2)) / 2,
/// exact for Pauli rotations. Each shifted run yields all outputs at
/// once, so the cost is exactly 2 * n_params circuit evaluations.
QuantumJacobian parameter_shift_jacobian(std::span<const double> features,
                                         const VariationalParams& params,
                                         const CircuitOptions& options = {});

/// Central-difference oracle, (f(theta + h) - f(theta - h)) / 2h per
/// parameter. `step` must lie in (0, 1e-2]; throws config_error
/// otherwise. Kept deliberately independent of the shift-rule path.
QuantumJacobian finite_difference_jacobian(std::span<const double> features,
                                           const VariationalParams& params, double step,
                                           const CircuitOptions& options = {});

}  // namespace qhc
