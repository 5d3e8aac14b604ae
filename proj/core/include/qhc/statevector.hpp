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

#include <complex>
#include <cstddef>
#include <vector>

namespace qhc {

/// Supported gate set: single-qubit Pauli rotations plus controlled-Z.
enum class GateKind { RX, RY, RZ, CZ };

/// One gate in a circuit. Rotations use `target` and `angle`; CZ uses
/// `control` and `target` (it is symmetric, both indices are kept).
///
/// Rotation conventions, with c = cos(angle/2) and s = sin(angle/2):
///   RX = [[c, -i s], [-i s, c]]
///   RY = [[c, -s], [s, c]]
///   RZ = diag(e^{-i angle/2}, e^{+i angle/2})
///   CZ = diag(1, 1, 1, -1) on the control/target subspace
struct GateOp {
  GateKind kind = GateKind::RX;
  int target = 0;
  int control = -1;
  double angle = 0.0;

  static GateOp rx(int target, double angle) { return {GateKind::RX, target, -1, angle}; }
  static GateOp ry(int target, double angle) { return {GateKind::RY, target, -1, angle}; }
  static GateOp rz(int target, double angle) { return {GateKind::RZ, target, -1, angle}; }
  static GateOp cz(int control, int target) { return {GateKind::CZ, target, control, 0.0}; }
};

/// Full statevector of an n-qubit register, 2^n complex amplitudes.
/// Qubit k is bit k of the amplitude index (qubit 0 = least significant
/// bit), so |q3 q2 q1 q0> = |0110> lives at index 6.
struct StateVector {
  int n_qubits = 0;
  std::vector<std::complex<double>> amplitudes;

  std::size_t dim() const { return amplitudes.size(); }
};

/// |0...0> on `n_qubits` qubits. Throws config_error outside [1, 20].
StateVector new_zero_state(int n_qubits);

/// Applies `gate` and returns the new state; the input is untouched.
/// Throws std::out_of_range for bad qubit indices, data_error for a
/// non-finite rotation angle.
StateVector apply_gate(const StateVector& state, const GateOp& gate);

/// In-place variant used by the circuit evaluator.
void apply_gate_in_place(StateVector& state, const GateOp& gate);

/// Pauli-Z expectation of one qubit: sum of +-|amplitude|^2 with sign
/// +1 where the qubit's bit is 0. Clamped to [-1, 1].
double expectation_z(const StateVector& state, int qubit);

/// Sum of |amplitude|^2; stays within 1e-12 of 1 under any gate sequence.
double norm_squared(const StateVector& state);

}  // namespace qhc
