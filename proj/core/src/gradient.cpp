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
#include "qhc/gradient.hpp"

#include <numbers>

#include "qhc/errors.hpp"

namespace qhc {

QuantumJacobian parameter_shift_jacobian(std::span<const double> features,
                                         const VariationalParams& params,
                                         const CircuitOptions& options) {
  const auto n_outputs = static_cast<std::size_t>(params.n_qubits);
  const auto n_params = static_cast<std::size_t>(params.count());
  QuantumJacobian jac{n_outputs, n_params, std::vector<double>(n_outputs * n_params, 0.0)};

  // Build once, then nudge the trainable rotation in place for each
  // shifted evaluation.
  QuantumCircuit circuit = build_circuit(features, params, options);
  constexpr double kShift = std::numbers::pi / 2.0;
  for (std::size_t p = 0; p < n_params; ++p) {
    GateOp& gate = circuit.gates[circuit.param_slots[p]];
    const double original = gate.angle;

    gate.angle = original + kShift;
    const std::vector<double> plus = measure_all_z(run_circuit(circuit));
    gate.angle = original - kShift;
    const std::vector<double> minus = measure_all_z(run_circuit(circuit));
    gate.angle = original;

    for (std::size_t o = 0; o < n_outputs; ++o) {
      jac.at(o, p) = (plus[o] - minus[o]) / 2.0;
    }
  }
  return jac;
}

QuantumJacobian finite_difference_jacobian(std::span<const double> features,
                                           const VariationalParams& params, double step,
                                           const CircuitOptions& options) {
  if (!(step > 0.0) || step > 1e-2) {
    throw config_error("finite-difference step must lie in (0, 1e-2]");
  }
  const auto n_outputs = static_cast<std::size_t>(params.n_qubits);
  const auto n_params = static_cast<std::size_t>(params.count());
  QuantumJacobian jac{n_outputs, n_params, std::vector<double>(n_outputs * n_params, 0.0)};

  // Perturbs the angle tensor directly and rebuilds the circuit every
  // time, so this path shares no slot bookkeeping with the shift rule.
  VariationalParams shifted = params;
  for (std::size_t p = 0; p < n_params; ++p) {
    const double original = params.angles[p];
    shifted.angles[p] = original + step;
    const std::vector<double> plus = evaluate(features, shifted, options);
    shifted.angles[p] = original - step;
    const std::vector<double> minus = evaluate(features, shifted, options);
    shifted.angles[p] = original;

    for (std::size_t o = 0; o < n_outputs; ++o) {
      jac.at(o, p) = (plus[o] - minus[o]) / (2.0 * step);
    }
  }
  return jac;
}

}  // namespace qhc
