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
//
// Acceptance suite: every gate below prints one [PASS]/[FAIL] line and
// the process exits nonzero if any gate fails.
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qhc/circuit.hpp"
#include "qhc/dataset.hpp"
#include "qhc/gradient.hpp"
#include "qhc/model.hpp"
#include "qhc/model_io.hpp"
#include "qhc/network.hpp"
#include "qhc/statevector.hpp"
#include "support/dense_oracle.hpp"

using namespace qhc;
namespace fs = std::filesystem;

namespace {

constexpr double kPi = std::numbers::pi;

VariationalParams random_params(std::mt19937_64& rng, int n_layers, int n_qubits) {
  VariationalParams params = zero_params(n_layers, n_qubits);
  std::uniform_real_distribution<double> dist(-kPi, kPi);
  for (double& a : params.angles) a = dist(rng);
  return params;
}

std::vector<double> random_features(std::mt19937_64& rng, int n) {
  std::uniform_real_distribution<double> dist(-kPi, kPi);
  std::vector<double> out(static_cast<std::size_t>(n));
  for (double& x : out) x = dist(rng);
  return out;
}

// --- 1: simulator vs dense kron-product oracle -------------------------

bool simulator_oracle_equivalence() {
  std::mt19937_64 rng(20240501);
  std::uniform_int_distribution<int> gate_count_dist(1, 100);
  double worst = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    const auto gates = testing::random_circuit(rng, 4, gate_count_dist(rng));
    StateVector state = new_zero_state(4);
    for (const GateOp& gate : gates) apply_gate_in_place(state, gate);
    const auto reference = testing::run_dense(gates, 4);
    for (std::size_t i = 0; i < state.amplitudes.size(); ++i) {
      worst = std::max(worst, std::abs(state.amplitudes[i] - reference[i]));
    }
    for (int q = 0; q < 4; ++q) {
      worst = std::max(worst, std::abs(expectation_z(state, q) -
                                       testing::dense_expectation_z(reference, q, 4)));
    }
  }
  std::printf("       200 random circuits, max |deviation| = %.3e\n", worst);
  return worst < 1e-10;
}

// --- 2: gradient exactness ---------------------------------------------

bool gradient_exactness() {
  std::mt19937_64 rng(777);
  double worst_jac = 0.0;
  for (int draw = 0; draw < 100; ++draw) {
    const auto params = random_params(rng, 2, 4);
    const auto features = random_features(rng, 4);
    const QuantumJacobian shift = parameter_shift_jacobian(features, params);
    const QuantumJacobian fd = finite_difference_jacobian(features, params, 1e-5);
    for (std::size_t i = 0; i < shift.entries.size(); ++i) {
      worst_jac = std::max(worst_jac, std::abs(shift.entries[i] - fd.entries[i]));
    }
  }
  std::printf("       shift vs central differences over 100 draws: max |diff| = %.3e\n",
              worst_jac);
  if (worst_jac >= 1e-6) return false;

  bool end_to_end_ok = true;
  double worst_ratio = 0.0;  // |analytic - fd| / allowed tolerance; <= 1 passes
  const double h = 1e-5;
  std::uniform_real_distribution<double> feature_dist(-3.0, 3.0);
  std::uniform_int_distribution<int> label_dist(0, 2);
  for (int draw = 0; draw < 20; ++draw) {
    std::mt19937_64 model_rng(1000 + static_cast<std::uint64_t>(draw));
    HybridModel model = init_model(4, 2, model_rng);
    Sample sample;
    for (double& x : sample.features) x = feature_dist(rng);
    sample.label = label_dist(rng);
    const LossKind kind = draw % 2 ? LossKind::mse : LossKind::cross_entropy;

    const auto [loss, grad] = loss_and_gradients(model, sample, kind);
    const auto params = flatten_parameters(model);
    HybridModel probe = model;
    for (std::size_t p = 0; p < params.size(); ++p) {
      auto shifted = params;
      shifted[p] = params[p] + h;
      set_parameters(probe, shifted);
      const double up = loss_value(kind, predict(probe, sample.features), sample.label);
      shifted[p] = params[p] - h;
      set_parameters(probe, shifted);
      const double down = loss_value(kind, predict(probe, sample.features), sample.label);
      const double fd = (up - down) / (2 * h);
      const double scale = std::max(std::abs(grad[p]), std::abs(fd));
      const double tolerance = std::max(1e-7, 1e-5 * scale);
      if (std::abs(grad[p] - fd) > tolerance) end_to_end_ok = false;
      worst_ratio = std::max(worst_ratio, std::abs(grad[p] - fd) / tolerance);
    }
  }
  std::printf(
      "       155-parameter end-to-end gradient over 20 draws: worst diff = %.3f of the "
      "1e-5 rel / 1e-7 abs budget\n",
      worst_ratio);
  return end_to_end_ok;
}

// --- 3: closed forms ----------------------------------------------------

bool closed_form_checks() {
  double worst = 0.0;
  for (int i = 0; i <= 100; ++i) {
    const double x = -kPi + 2.0 * kPi * i / 100.0;
    const std::vector<double> features = {x};
    const double z = evaluate(features, zero_params(0, 1))[0];
    // dense oracle first, then the closed form
    const auto dense = testing::run_dense(build_circuit(features, zero_params(0, 1)).gates, 1);
    const double oracle = testing::dense_expectation_z(dense, 0, 1);
    worst = std::max(worst, std::abs(z - oracle));
    worst = std::max(worst, std::abs(z - std::cos(x) * std::cos(x)));
  }
  std::printf("       embedding <Z> vs cos^2(x) over 101 grid points: max |diff| = %.3e\n",
              worst);
  if (worst >= 1e-12) return false;

  double worst_rx = 0.0;
  for (int i = 0; i <= 100; ++i) {
    const double theta = -kPi + 2.0 * kPi * i / 100.0;
    const StateVector state = apply_gate(new_zero_state(1), GateOp::rx(0, theta));
    worst_rx = std::max(worst_rx, std::abs(expectation_z(state, 0) - std::cos(theta)));
  }
  std::printf("       RX(theta)|0> <Z> vs cos(theta): max |diff| = %.3e\n", worst_rx);
  return worst_rx < 1e-12;
}

// --- 4: the Iris experiment ---------------------------------------------

bool iris_experiment() {
  const auto samples = load_iris(QHC_IRIS_CSV);
  const double target_29 = 100.0 * 29 / 30 - 1e-9;
  const double target_30 = 100.0 * 30 / 30 - 1e-9;
  int reached_29 = 0;
  int reached_30 = 0;
  for (std::uint64_t seed = 31; seed <= 40; ++seed) {
    const SplitDataset split = stratified_split(samples, 0.2, seed);
    std::mt19937_64 rng(seed);
    HybridModel model = init_model(kNumFeatures, 2, rng);
    TrainConfig config;  // defaults: adam, lr 0.02, mse, per-sample
    config.epochs = 100;
    config.seed = seed;
    const auto metrics = train(model, split, config);
    double best = 0.0;
    int best_epoch = 0;
    for (const auto& row : metrics) {
      if (row.test_accuracy > best) {
        best = row.test_accuracy;
        best_epoch = row.epoch;
      }
    }
    if (best >= target_29) ++reached_29;
    if (best >= target_30) ++reached_30;
    std::printf("       seed %llu: peak accuracy %.2f%% (epoch %d), final %.2f%%\n",
                static_cast<unsigned long long>(seed), best, best_epoch,
                metrics.back().test_accuracy);
  }
  std::printf("       seeds reaching >= 96.67%%: %d/10 (need >= 6); reaching 100.00%%: %d (need >= 1)\n",
              reached_29, reached_30);
  return reached_29 >= 6 && reached_30 >= 1;
}

// --- 5: invariant suites --------------------------------------------------

bool invariant_suites() {
  bool ok = true;
  std::mt19937_64 rng(5150);

  // norm preservation + unitarity round-trips
  for (int trial = 0; trial < 25; ++trial) {
    StateVector state = new_zero_state(4);
    const auto gates = testing::random_circuit(rng, 4, 80);
    for (const GateOp& gate : gates) apply_gate_in_place(state, gate);
    if (std::abs(norm_squared(state) - 1.0) >= 1e-12) ok = false;

    StateVector undone = state;
    for (auto it = gates.rbegin(); it != gates.rend(); ++it) {
      const GateOp inverse =
          it->kind == GateKind::CZ ? *it : GateOp{it->kind, it->target, -1, -it->angle};
      apply_gate_in_place(undone, inverse);
    }
    for (std::size_t i = 0; i < undone.amplitudes.size(); ++i) {
      const std::complex<double> expected = i == 0 ? std::complex<double>{1, 0}
                                                   : std::complex<double>{0, 0};
      if (std::abs(undone.amplitudes[i] - expected) >= 1e-10) ok = false;
    }
  }
  std::printf("       norm preservation + inverse round-trips: %s\n", ok ? "ok" : "violated");

  // softmax validity through the full model
  bool softmax_ok = true;
  for (int trial = 0; trial < 20; ++trial) {
    std::mt19937_64 model_rng(900 + static_cast<std::uint64_t>(trial));
    const HybridModel model = init_model(4, 2, model_rng);
    std::uniform_real_distribution<double> dist(-3.0, 3.0);
    std::array<double, 4> x{};
    for (double& v : x) v = dist(rng);
    const auto probs = predict(model, x);
    double total = 0.0;
    for (const double p : probs) {
      if (p < 0.0) softmax_ok = false;
      total += p;
    }
    if (std::abs(total - 1.0) >= 1e-12) softmax_ok = false;
  }
  std::printf("       softmax outputs are distributions: %s\n", softmax_ok ? "ok" : "violated");
  ok = ok && softmax_ok;

  // split determinism + disjointness + class balance
  const auto samples = load_iris(QHC_IRIS_CSV);
  bool split_ok = true;
  for (std::uint64_t seed : {1ULL, 9ULL, 31ULL}) {
    const SplitDataset a = stratified_split(samples, 0.2, seed);
    const SplitDataset b = stratified_split(samples, 0.2, seed);
    if (a.train.size() != 120 || a.test.size() != 30) split_ok = false;
    for (std::size_t i = 0; i < a.test.size(); ++i) {
      if (a.test[i].features != b.test[i].features) split_ok = false;
    }
    std::array<int, 3> counts{};
    for (const Sample& s : a.test) ++counts[static_cast<std::size_t>(s.label)];
    if (counts != std::array<int, 3>{10, 10, 10}) split_ok = false;
  }
  std::printf("       split determinism, sizes and balance: %s\n", split_ok ? "ok" : "violated");
  ok = ok && split_ok;

  // scaler endpoint mapping
  bool scaler_ok = true;
  const SplitDataset split = stratified_split(samples, 0.2, 3);
  for (int f = 0; f < kNumFeatures; ++f) {
    std::array<double, 4> probe = split.scaler.min;
    probe[static_cast<std::size_t>(f)] = split.scaler.min[static_cast<std::size_t>(f)];
    auto lo = scale(split.scaler, split.scaler.min);
    auto hi = scale(split.scaler, split.scaler.max);
    if (lo[static_cast<std::size_t>(f)] != -kPi) scaler_ok = false;
    if (hi[static_cast<std::size_t>(f)] != kPi) scaler_ok = false;
  }
  std::printf("       scaler endpoints map exactly to +-pi: %s\n", scaler_ok ? "ok" : "violated");
  ok = ok && scaler_ok;

  // save/load bit-exact round-trip
  std::mt19937_64 model_rng(404);
  const HybridModel model = init_model(4, 2, model_rng);
  const fs::path path = fs::temp_directory_path() / "qhc_acceptance_model.json";
  save_model({model, split.scaler, 3}, path);
  const SavedModel loaded = load_model(path);
  const bool roundtrip_ok = flatten_parameters(loaded.model) == flatten_parameters(model) &&
                            loaded.scaler.min == split.scaler.min &&
                            loaded.scaler.max == split.scaler.max && loaded.seed == 3;
  fs::remove(path);
  std::printf("       model save/load round-trip bit-exact: %s\n",
              roundtrip_ok ? "ok" : "violated");
  return ok && roundtrip_ok;
}

// --- 6: metrics CSV through the real CLI ---------------------------------

bool metrics_csv_contract() {
  const fs::path dir = fs::temp_directory_path() / "qhc_acceptance_cli";
  fs::create_directories(dir);
  const int epochs = 5;
  const auto run = [&](const fs::path& metrics) {
    const std::string command = std::string(QHC_CLI_PATH) + " train --data " + QHC_IRIS_CSV +
                                " --seed 42 --epochs " + std::to_string(epochs) +
                                " --metrics-out " + metrics.string() + " --model-out " +
                                (dir / "model.json").string() + " > " +
                                (dir / "run.log").string() + " 2>&1";
    return std::system(command.c_str()) == 0;
  };

  const fs::path first = dir / "metrics_a.csv";
  const fs::path second = dir / "metrics_b.csv";
  if (!run(first) || !run(second)) {
    std::printf("       CLI train run failed\n");
    return false;
  }

  const auto read = [](const fs::path& p) {
    std::ifstream in(p);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
  };
  const std::string text = read(first);
  if (text != read(second)) {
    std::printf("       reruns are not byte-identical\n");
    return false;
  }

  std::vector<std::string> rows;
  std::istringstream stream(text);
  for (std::string line; std::getline(stream, line);) rows.push_back(line);
  if (rows.size() != static_cast<std::size_t>(epochs) + 1 ||
      rows[0] != "epoch,test_loss,test_accuracy") {
    std::printf("       header/row-count contract violated\n");
    return false;
  }

  // accuracy column must be one of the 31 values k/30, as formatted
  std::vector<std::string> valid;
  for (int k = 0; k <= 30; ++k) valid.push_back(format_accuracy(100.0 * k / 30.0));
  for (std::size_t r = 1; r < rows.size(); ++r) {
    std::istringstream row(rows[r]);
    std::string epoch, loss, accuracy;
    std::getline(row, epoch, ',');
    std::getline(row, loss, ',');
    std::getline(row, accuracy, ',');
    if (epoch != std::to_string(r)) {
      std::printf("       epoch column mismatch on row %zu\n", r);
      return false;
    }
    if (std::find(valid.begin(), valid.end(), accuracy) == valid.end()) {
      std::printf("       accuracy %s is not a multiple of 100/30\n", accuracy.c_str());
      return false;
    }
  }
  std::printf("       %d rows, exact header, accuracies on the 100/30 grid, reruns identical\n",
              epochs);
  return true;
}

struct Criterion {
  const char* name;
  bool (*check)();
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {"1. simulator matches the dense kron oracle (200 circuits, 1e-10)",
       simulator_oracle_equivalence},
      {"2. parameter-shift and end-to-end gradients are exact", gradient_exactness},
      {"3. closed-form checks (cos^2 embedding, RX cosine)", closed_form_checks},
      {"4. Iris experiment: >=6/10 seeds reach 96.67%, >=1 reaches 100%", iris_experiment},
      {"5. invariant suites (norm, unitarity, softmax, split, scaler, persistence)",
       invariant_suites},
      {"6. metrics CSV contract through the CLI", metrics_csv_contract},
  };

  int failures = 0;
  for (const Criterion& criterion : criteria) {
    std::printf("----- %s\n", criterion.name);
    bool ok = false;
    try {
      ok = criterion.check();
    } catch (const std::exception& e) {
      std::printf("       exception: %s\n", e.what());
    }
    std::printf("%s %s\n", ok ? "[PASS]" : "[FAIL]", criterion.name);
    if (!ok) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
