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
#include "qhc/statevector.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "qhc/errors.hpp"

namespace qhc {
namespace {

constexpr int kMaxQubits = 20;

void check_qubit(const StateVector& state, int qubit, const char* role) {
  if (qubit < 0 || qubit >= state.n_qubits) {
    throw std::out_of_range(std::string(role) + " qubit " + std::to_string(qubit) +
                            " out of range for a " + std::to_string(state.n_qubits) +
                            "-qubit state");
  }
}

// 2x2 unitary on `target`: amplitudes are updated in pairs that differ
// only in the target bit.
void apply_single_qubit(StateVector& state, int target, std::complex<double> u00,
                        std::complex<double> u01, std::complex<double> u10,
                        std::complex<double> u11) {
  const std::size_t mask = std::size_t{1} << target;
  auto& amp = state.amplitudes;
  for (std::size_t i = 0; i < amp.size(); ++i) {
    if ((i & mask) == 0) {
      const std::complex<double> a0 = amp[i];
      const std::complex<double> a1 = amp[i | mask];
      amp[i] = u00 * a0 + u01 * a1;
      amp[i | mask] = u10 * a0 + u11 * a1;
    }
  }
}

}  // namespace

StateVector new_zero_state(int n_qubits) {
  if (n_qubits < 1 || n_qubits > kMaxQubits) {
    throw config_error("n_qubits must be in [1, " + std::to_string(kMaxQubits) +
                       "], got " + std::to_string(n_qubits));
  }
  StateVector state;
  state.n_qubits = n_qubits;
  state.amplitudes.assign(std::size_t{1} << n_qubits, {0.0, 0.0});
  state.amplitudes[0] = {1.0, 0.0};
  return state;
}

void apply_gate_in_place(StateVector& state, const GateOp& gate) {
  check_qubit(state, gate.target, "target");
  if (gate.kind == GateKind::CZ) {
    check_qubit(state, gate.control, "control");
    if (gate.control == gate.target) {
      throw std::out_of_range("CZ control and target must differ");
    }
    const std::size_t both =
        (std::size_t{1} << gate.control) | (std::size_t{1} << gate.target);
    for (std::size_t i = 0; i < state.amplitudes.size(); ++i) {
      if ((i & both) == both) state.amplitudes[i] = -state.amplitudes[i];
    }
    return;
  }

  if (!std::isfinite(gate.angle)) {
    throw data_error("rotation angle is not finite");
  }
  const double c = std::cos(gate.angle / 2.0);
  const double s = std::sin(gate.angle / 2.0);
  switch (gate.kind) {
    case GateKind::RX:
      apply_single_qubit(state, gate.target, {c, 0.0}, {0.0, -s}, {0.0, -s}, {c, 0.0});
      break;
    case GateKind::RY:
      apply_single_qubit(state, gate.target, {c, 0.0}, {-s, 0.0}, {s, 0.0}, {c, 0.0});
      break;
    case GateKind::RZ:
      apply_single_qubit(state, gate.target, {c, -s}, {0.0, 0.0}, {0.0, 0.0}, {c, s});
      break;
    case GateKind::CZ:
      break;  // handled above
  }
}

StateVector apply_gate(const StateVector& state, const GateOp& gate) {
  StateVector result = state;
  apply_gate_in_place(result, gate);
  return result;
}

double expectation_z(const StateVector& state, int qubit) {
  check_qubit(state, qubit, "measured");
  const std::size_t mask = std::size_t{1} << qubit;
  double value = 0.0;
  for (std::size_t i = 0; i < state.amplitudes.size(); ++i) {
    const double p = std::norm(state.amplitudes[i]);
    value += (i & mask) ? -p : p;
  }
  return std::clamp(value, -1.0, 1.0);
}

double norm_squared(const StateVector& state) {
  double total = 0.0;
  for (const auto& a : state.amplitudes) total += std::norm(a);
  return total;
}

}  // namespace qhc
