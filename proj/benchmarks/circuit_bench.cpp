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
#include <benchmark/benchmark.h>

#include <numbers>
#include <random>
#include <vector>

#include "qhc/circuit.hpp"
#include "qhc/gradient.hpp"
#include "qhc/statevector.hpp"

namespace {

using namespace qhc;

constexpr double kPi = std::numbers::pi;

VariationalParams random_params(std::mt19937_64& rng, int n_layers, int n_qubits) {
  VariationalParams params = zero_params(n_layers, n_qubits);
  std::uniform_real_distribution<double> dist(-kPi, kPi);
  for (double& a : params.angles) a = dist(rng);
  return params;
}

void BM_SingleQubitGate(benchmark::State& state) {
  const int n_qubits = static_cast<int>(state.range(0));
  StateVector psi = new_zero_state(n_qubits);
  const GateOp gate = GateOp::ry(n_qubits / 2, 0.37);
  for (auto _ : state) {
    apply_gate_in_place(psi, gate);
    benchmark::DoNotOptimize(psi.amplitudes.data());
  }
  state.SetItemsProcessed(int64_t(state.iterations()) * int64_t(psi.dim()));
}
BENCHMARK(BM_SingleQubitGate)->DenseRange(4, 16, 4);

void BM_CzGate(benchmark::State& state) {
  const int n_qubits = static_cast<int>(state.range(0));
  StateVector psi = new_zero_state(n_qubits);
  const GateOp gate = GateOp::cz(0, n_qubits - 1);
  for (auto _ : state) {
    apply_gate_in_place(psi, gate);
    benchmark::DoNotOptimize(psi.amplitudes.data());
  }
  state.SetItemsProcessed(int64_t(state.iterations()) * int64_t(psi.dim()));
}
BENCHMARK(BM_CzGate)->DenseRange(4, 16, 4);

void BM_EvaluateCircuit(benchmark::State& state) {
  const int n_layers = static_cast<int>(state.range(0));
  std::mt19937_64 rng(1);
  const auto params = random_params(rng, n_layers, 4);
  const std::vector<double> features = {0.4, -1.2, 2.2, 0.9};
  for (auto _ : state) {
    benchmark::DoNotOptimize(evaluate(features, params));
  }
}
BENCHMARK(BM_EvaluateCircuit)->Arg(1)->Arg(2)->Arg(4)->Arg(8);

void BM_ParameterShiftJacobian(benchmark::State& state) {
  const int n_layers = static_cast<int>(state.range(0));
  std::mt19937_64 rng(2);
  const auto params = random_params(rng, n_layers, 4);
  const std::vector<double> features = {0.4, -1.2, 2.2, 0.9};
  for (auto _ : state) {
    benchmark::DoNotOptimize(parameter_shift_jacobian(features, params));
  }
  state.SetItemsProcessed(int64_t(state.iterations()) * 2 * params.count());
}
BENCHMARK(BM_ParameterShiftJacobian)->Arg(2)->Arg(4);

}  // namespace

BENCHMARK_MAIN();
