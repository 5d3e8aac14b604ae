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
#include "qhc/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "qhc/errors.hpp"

namespace qhc {

VariationalParams zero_params(int n_layers, int n_qubits) {
  if (n_layers < 0) throw config_error("layer count must be >= 0");
  if (n_qubits < 1) throw config_error("qubit count must be >= 1");
  VariationalParams params;
  params.n_layers = n_layers;
  params.n_qubits = n_qubits;
  params.angles.assign(static_cast<std::size_t>(params.count()), 0.0);
  return params;
}

QuantumCircuit build_circuit(std::span<const double> features, const VariationalParams& params,
                             const CircuitOptions& options) {
  if (params.n_qubits < 1) throw config_error("circuit needs at least one qubit");
  if (params.n_layers < 0) throw config_error("layer count must be >= 0");
  if (static_cast<int>(features.size()) != params.n_qubits) {
    throw data_error("expected " + std::to_string(params.n_qubits) + " features, got " +
                     std::to_string(features.size()));
  }
  if (static_cast<int>(params.angles.size()) != params.count()) {
    throw data_error("angle tensor has " + std::to_string(params.angles.size()) +
                     " entries, expected " + std::to_string(params.count()));
  }
  for (double x : features) {
    if (!std::isfinite(x)) throw data_error("non-finite feature value");
  }
  for (double a : params.angles) {
    if (!std::isfinite(a)) throw data_error("non-finite variational angle");
  }

  const int n = params.n_qubits;
  QuantumCircuit circuit;
  circuit.n_qubits = n;
  circuit.gates.reserve(static_cast<std::size_t>(3 * n + params.n_layers * (3 * n + n)));
  circuit.param_slots.reserve(static_cast<std::size_t>(params.count()));

  for (int q = 0; q < n; ++q) {
    const double x = features[static_cast<std::size_t>(q)];
    if (options.embedding_order == EmbeddingOrder::xyz) {
      circuit.gates.push_back(GateOp::rx(q, x));
      circuit.gates.push_back(GateOp::ry(q, x));
      circuit.gates.push_back(GateOp::rz(q, x));
    } else {
      circuit.gates.push_back(GateOp::rz(q, x));
      circuit.gates.push_back(GateOp::ry(q, x));
      circuit.gates.push_back(GateOp::rx(q, x));
    }
  }

  for (int layer = 0; layer < params.n_layers; ++layer) {
    for (int q = 0; q < n; ++q) {
      circuit.param_slots.push_back(circuit.gates.size());
      circuit.gates.push_back(GateOp::rx(q, params.angle(layer, q, 0)));
      circuit.param_slots.push_back(circuit.gates.size());
      circuit.gates.push_back(GateOp::ry(q, params.angle(layer, q, 1)));
      circuit.param_slots.push_back(circuit.gates.size());
      circuit.gates.push_back(GateOp::rz(q, params.angle(layer, q, 2)));
    }
    if (options.entanglement != Entanglement::none && n >= 2) {
      for (int q = 0; q + 1 < n; ++q) {
        circuit.gates.push_back(GateOp::cz(q, q + 1));
      }
      // The wraparound entangler closes the ring; for n == 2 it would
      // duplicate (and cancel) CZ(0,1), so the ring degenerates to the
      // chain there.
      if (options.entanglement == Entanglement::ring && n > 2) {
        circuit.gates.push_back(GateOp::cz(n - 1, 0));
      }
    }
  }
  return circuit;
}

StateVector run_circuit(const QuantumCircuit& circuit) {
  StateVector state = new_zero_state(circuit.n_qubits);
  for (const GateOp& gate : circuit.gates) {
    apply_gate_in_place(state, gate);
  }
  return state;
}

std::vector<double> measure_all_z(const StateVector& state) {
  std::vector<double> values(static_cast<std::size_t>(state.n_qubits));
  for (int q = 0; q < state.n_qubits; ++q) {
    values[static_cast<std::size_t>(q)] = expectation_z(state, q);
  }
  return values;
}

std::vector<double> evaluate(std::span<const double> features, const VariationalParams& params,
                             const CircuitOptions& options) {
  return measure_all_z(run_circuit(build_circuit(features, params, options)));
}

namespace {

const char* rotation_name(GateKind kind) {
  switch (kind) {
    case GateKind::RX: return "RX";
    case GateKind::RY: return "RY";
    case GateKind::RZ: return "RZ";
    case GateKind::CZ: break;
  }
  return "??";
}

}  // namespace

std::string render_ascii(const QuantumCircuit& circuit) {
  const int n = circuit.n_qubits;

  std::vector<int> param_of(circuit.gates.size(), -1);
  for (std::size_t p = 0; p < circuit.param_slots.size(); ++p) {
    param_of[circuit.param_slots[p]] = static_cast<int>(p);
  }

  // Greedy moment packing: each gate lands in the earliest column that
  // is free on every wire it touches (a CZ touches everything between
  // its endpoints, since the connector crosses those wires).
  std::vector<std::vector<std::string>> columns;  // columns[c][wire]
  std::vector<std::size_t> next_free(static_cast<std::size_t>(n), 0);

  auto place = [&](int lo, int hi) {
    std::size_t col = 0;
    for (int w = lo; w <= hi; ++w) col = std::max(col, next_free[static_cast<std::size_t>(w)]);
    while (columns.size() <= col) columns.emplace_back(static_cast<std::size_t>(n));
    for (int w = lo; w <= hi; ++w) next_free[static_cast<std::size_t>(w)] = col + 1;
    return col;
  };

  for (std::size_t g = 0; g < circuit.gates.size(); ++g) {
    const GateOp& gate = circuit.gates[g];
    if (gate.kind == GateKind::CZ) {
      const int lo = std::min(gate.control, gate.target);
      const int hi = std::max(gate.control, gate.target);
      const std::size_t col = place(lo, hi);
      columns[col][static_cast<std::size_t>(gate.control)] = "o";
      columns[col][static_cast<std::size_t>(gate.target)] = "o";
      for (int w = lo + 1; w < hi; ++w) {
        columns[col][static_cast<std::size_t>(w)] = "|";
      }
    } else {
      std::string label = rotation_name(gate.kind);
      label += param_of[g] >= 0 ? "(w" + std::to_string(param_of[g]) + ")"
                                : "(x" + std::to_string(gate.target) + ")";
      const std::size_t col = place(gate.target, gate.target);
      columns[col][static_cast<std::size_t>(gate.target)] = std::move(label);
    }
  }

  std::vector<std::size_t> widths(columns.size(), 1);
  for (std::size_t c = 0; c < columns.size(); ++c) {
    for (int w = 0; w < n; ++w) {
      widths[c] = std::max(widths[c], columns[c][static_cast<std::size_t>(w)].size());
    }
  }

  const std::size_t name_width = std::to_string(n - 1).size();
  std::string out;
  for (int w = 0; w < n; ++w) {
    std::string index = std::to_string(w);
    std::string line = "q" + index + ":" + std::string(name_width - index.size() + 1, ' ');
    line += '-';
    for (std::size_t c = 0; c < columns.size(); ++c) {
      const std::string& cell = columns[c][static_cast<std::size_t>(w)];
      const std::size_t pad = widths[c] - cell.size();
      line += std::string(pad / 2, '-');
      line += cell;
      line += std::string(pad - pad / 2, '-');
      line += '-';
    }
    out += line;
    out += '\n';
  }
  return out;
}

}  // namespace qhc
