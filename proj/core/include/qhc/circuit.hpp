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

#include <span>
#include <string>
#include <vector>

#include "qhc/statevector.hpp"

namespace qhc {

/// Entanglement topology of a variational layer. `ring` (the default)
/// chains CZ over adjacent qubits and adds a wraparound CZ from the
/// last qubit back to the first; `chain` drops the wraparound; `none`
/// drops all entanglers.
enum class Entanglement { ring, chain, none };

/// Per-qubit rotation order in the feature-embedding block. `xyz`
/// applies RX(x) then RY(x) then RZ(x); `zyx` reverses it. The two are
/// observably different states, so the convention is explicit.
enum class EmbeddingOrder { xyz, zyx };

struct CircuitOptions {
  Entanglement entanglement = Entanglement::ring;
  EmbeddingOrder embedding_order = EmbeddingOrder::xyz;
};

/// Trainable rotation angles, logically [n_layers][n_qubits][3] with
/// axis order RX, RY, RZ. Stored flat, layer-major.
struct VariationalParams {
  int n_layers = 0;
  int n_qubits = 0;
  std::vector<double> angles;

  int count() const { return n_layers * n_qubits * 3; }
  std::size_t index(int layer, int qubit, int axis) const {
    return static_cast<std::size_t>((layer * n_qubits + qubit) * 3 + axis);
  }
  double angle(int layer, int qubit, int axis) const { return angles[index(layer, qubit, axis)]; }
  double& angle(int layer, int qubit, int axis) { return angles[index(layer, qubit, axis)]; }
};

/// All-zero angle tensor for the given shape.
VariationalParams zero_params(int n_layers, int n_qubits);

/// A built circuit: the ordered gate list plus the positions of the
/// trainable rotations. `param_slots[p]` indexes into `gates`; the
/// embedding rotations carry no slot.
struct QuantumCircuit {
  int n_qubits = 0;
  std::vector<GateOp> gates;
  std::vector<std::size_t> param_slots;
};

/// Embedding block (RX/RY/RZ of each feature on its qubit), then per
/// layer a block of trainable rotations followed by the entanglers.
/// Features must already be scaled to rotation angles.
QuantumCircuit build_circuit(std::span<const double> features, const VariationalParams& params,
                             const CircuitOptions& options = {});

/// Runs the circuit on |0...0>.
StateVector run_circuit(const QuantumCircuit& circuit);

/// (<Z_0>, ..., <Z_{n-1}>) of a state.
std::vector<double> measure_all_z(const StateVector& state);

/// build_circuit + run_circuit + measure_all_z in one call.
std::vector<double> evaluate(std::span<const double> features, const VariationalParams& params,
                             const CircuitOptions& options = {});

/// Fixed-width text diagram, one wire row per qubit. Trainable
/// rotations are labelled w<param index>, embedding rotations
/// x<qubit>, CZ endpoints 'o' with '|' on crossed wires. Deterministic
/// for a given circuit.
std::string render_ascii(const QuantumCircuit& circuit);

}  // namespace qhc
