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

#include <array>
#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <utility>
#include <vector>

#include "qhc/circuit.hpp"
#include "qhc/dataset.hpp"
#include "qhc/network.hpp"
#include "qhc/optimizer.hpp"

namespace qhc {

inline constexpr int kHiddenUnits = 16;

/// Quantum feature extractor plus the dense classification head.
/// The default configuration (4 qubits, 2 layers) carries
/// 24 quantum angles + 131 classical weights = 155 parameters.
struct HybridModel {
  VariationalParams quantum;
  DenseLayer layer1;  // kHiddenUnits x n_qubits, ReLU
  DenseLayer layer2;  // kNumClasses x kHiddenUnits, softmax
};

enum class BatchMode { full_batch, per_sample };

struct TrainConfig {
  int epochs = 20;
  double learning_rate = 0.02;
  OptimizerKind optimizer = OptimizerKind::adam;
  LossKind loss = LossKind::mse;
  std::uint64_t seed = 0;
  BatchMode batch = BatchMode::per_sample;
};

struct EpochMetrics {
  int epoch = 0;         // 1-based
  double test_loss = 0.0;
  double test_accuracy = 0.0;  // percent
  double train_loss = 0.0;     // mean loss seen during the epoch's updates
};

/// Fresh model: quantum angles uniform in (-pi, pi), weights uniform in
/// +-sqrt(1/fan_in), biases zero. Draw order is fixed (angles, layer1,
/// layer2) so a seeded generator reproduces the model exactly.
HybridModel init_model(int n_qubits, int n_layers, std::mt19937_64& rng);

std::size_t parameter_count(const HybridModel& model);

/// Parameter vector layout, used by the optimizer, persistence and the
/// gradient: quantum angles layer-major, then layer1 weights row-major,
/// layer1 biases, layer2 weights, layer2 biases.
std::vector<double> flatten_parameters(const HybridModel& model);
void set_parameters(HybridModel& model, std::span<const double> flat);

/// Class probabilities for one already-scaled feature vector.
std::vector<double> predict(const HybridModel& model,
                            const std::array<double, kNumFeatures>& scaled_features);

/// Loss plus the full gradient in flatten_parameters order. Classical
/// entries come from backprop; quantum entries chain the network's
/// input gradient through the parameter-shift jacobian.
std::pair<double, std::vector<double>> loss_and_gradients(const HybridModel& model,
                                                          const Sample& scaled_sample,
                                                          LossKind loss = LossKind::cross_entropy);

/// Mean loss and accuracy (percent) over already-scaled samples.
/// Argmax ties break toward the lowest class index.
std::pair<double, double> evaluate(const HybridModel& model, std::span<const Sample> samples,
                                   LossKind loss = LossKind::cross_entropy);

using EpochCallback = std::function<void(const EpochMetrics&)>;

/// Trains in place and returns one EpochMetrics per epoch. Scaling uses
/// data.scaler; gradients are averaged (not summed) in full-batch mode;
/// per-sample mode reshuffles the training order each epoch from
/// config.seed. Throws numeric_error the moment a loss or gradient
/// goes non-finite, naming the epoch and parameter norm.
std::vector<EpochMetrics> train(HybridModel& model, const SplitDataset& data,
                                const TrainConfig& config, const EpochCallback& on_epoch = {});

}  // namespace qhc
