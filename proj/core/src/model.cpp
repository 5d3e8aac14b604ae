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
#include "qhc/model.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "qhc/errors.hpp"
#include "qhc/gradient.hpp"

namespace qhc {
namespace {

DenseLayer init_layer(int in_dim, int out_dim, std::mt19937_64& rng) {
  DenseLayer layer;
  layer.in_dim = in_dim;
  layer.out_dim = out_dim;
  layer.weights.resize(static_cast<std::size_t>(in_dim * out_dim));
  layer.biases.assign(static_cast<std::size_t>(out_dim), 0.0);
  const double bound = std::sqrt(1.0 / in_dim);
  std::uniform_real_distribution<double> dist(-bound, bound);
  for (double& w : layer.weights) w = dist(rng);
  return layer;
}

double l2_norm(std::span<const double> values) {
  double total = 0.0;
  for (double v : values) total += v * v;
  return std::sqrt(total);
}

}  // namespace

HybridModel init_model(int n_qubits, int n_layers, std::mt19937_64& rng) {
  HybridModel model;
  model.quantum = zero_params(n_layers, n_qubits);
  std::uniform_real_distribution<double> angle_dist(-std::numbers::pi, std::numbers::pi);
  for (double& a : model.quantum.angles) a = angle_dist(rng);
  model.layer1 = init_layer(n_qubits, kHiddenUnits, rng);
  model.layer2 = init_layer(kHiddenUnits, kNumClasses, rng);
  return model;
}

std::size_t parameter_count(const HybridModel& model) {
  return model.quantum.angles.size() + model.layer1.weights.size() +
         model.layer1.biases.size() + model.layer2.weights.size() + model.layer2.biases.size();
}

std::vector<double> flatten_parameters(const HybridModel& model) {
  std::vector<double> flat;
  flat.reserve(parameter_count(model));
  for (const auto* part : {&model.quantum.angles, &model.layer1.weights, &model.layer1.biases,
                           &model.layer2.weights, &model.layer2.biases}) {
    flat.insert(flat.end(), part->begin(), part->end());
  }
  return flat;
}

void set_parameters(HybridModel& model, std::span<const double> flat) {
  if (flat.size() != parameter_count(model)) {
    throw data_error("parameter vector has " + std::to_string(flat.size()) +
                     " entries, expected " + std::to_string(parameter_count(model)));
  }
  auto cursor = flat.begin();
  for (auto* part : {&model.quantum.angles, &model.layer1.weights, &model.layer1.biases,
                     &model.layer2.weights, &model.layer2.biases}) {
    std::copy(cursor, cursor + static_cast<std::ptrdiff_t>(part->size()), part->begin());
    cursor += static_cast<std::ptrdiff_t>(part->size());
  }
}

std::vector<double> predict(const HybridModel& model,
                            const std::array<double, kNumFeatures>& scaled_features) {
  const std::vector<double> quantum_features =
      evaluate(std::span<const double>(scaled_features), model.quantum);
  return forward(model.layer1, model.layer2, quantum_features).probs;
}

std::pair<double, std::vector<double>> loss_and_gradients(const HybridModel& model,
                                                          const Sample& scaled_sample,
                                                          LossKind loss) {
  const std::span<const double> features(scaled_sample.features);
  const std::vector<double> quantum_features = evaluate(features, model.quantum);
  const ForwardTrace trace = forward(model.layer1, model.layer2, quantum_features);
  const double value = loss_value(loss, trace.probs, scaled_sample.label);
  const NetworkGrads net = backward(model.layer1, model.layer2, trace, scaled_sample.label, loss);
  const QuantumJacobian jac = parameter_shift_jacobian(features, model.quantum);

  std::vector<double> grad;
  grad.reserve(parameter_count(model));
  for (std::size_t p = 0; p < jac.n_params; ++p) {
    double g = 0.0;
    for (std::size_t o = 0; o < jac.n_outputs; ++o) {
      g += net.input[o] * jac.at(o, p);
    }
    grad.push_back(g);
  }
  for (const auto* part :
       {&net.layer1.weights, &net.layer1.biases, &net.layer2.weights, &net.layer2.biases}) {
    grad.insert(grad.end(), part->begin(), part->end());
  }
  return {value, std::move(grad)};
}

std::pair<double, double> evaluate(const HybridModel& model, std::span<const Sample> samples,
                                   LossKind loss) {
  if (samples.empty()) {
    throw data_error("cannot evaluate on an empty sample list");
  }
  double total_loss = 0.0;
  int correct = 0;
  for (const Sample& sample : samples) {
    const std::vector<double> probs = predict(model, sample.features);
    total_loss += loss_value(loss, probs, sample.label);
    int best = 0;
    for (int c = 1; c < static_cast<int>(probs.size()); ++c) {
      if (probs[static_cast<std::size_t>(c)] > probs[static_cast<std::size_t>(best)]) best = c;
    }
    correct += best == sample.label ? 1 : 0;
  }
  const auto n = static_cast<double>(samples.size());
  return {total_loss / n, 100.0 * correct / n};
}

std::vector<EpochMetrics> train(HybridModel& model, const SplitDataset& data,
                                const TrainConfig& config, const EpochCallback& on_epoch) {
  if (config.epochs < 1) {
    throw config_error("epochs must be >= 1, got " + std::to_string(config.epochs));
  }
  if (!(config.learning_rate >= 0.0)) {
    throw config_error("learning rate must be >= 0");
  }
  if (data.train.empty() || data.test.empty()) {
    throw data_error("training needs nonempty train and test partitions");
  }

  const std::vector<Sample> train_set = scale_samples(data.scaler, data.train);
  const std::vector<Sample> test_set = scale_samples(data.scaler, data.test);

  std::vector<double> params = flatten_parameters(model);
  AdamState adam = make_adam_state(params.size());
  AdamConfig adam_config;
  adam_config.learning_rate = config.learning_rate;
  std::mt19937_64 shuffle_rng(config.seed);
  std::vector<std::size_t> order(train_set.size());
  std::iota(order.begin(), order.end(), std::size_t{0});

  const auto abort_if_not_finite = [&](double loss, std::span<const double> grad, int epoch) {
    bool finite = std::isfinite(loss);
    for (const double g : grad) finite = finite && std::isfinite(g);
    if (!finite) {
      throw numeric_error("non-finite training loss or gradient at epoch " +
                          std::to_string(epoch) + " (parameter norm " +
                          std::to_string(l2_norm(params)) + ")");
    }
  };
  const auto step = [&](std::span<const double> grad) {
    if (config.optimizer == OptimizerKind::adam) {
      adam_step(params, grad, adam, adam_config);
    } else {
      sgd_step(params, grad, config.learning_rate);
    }
    set_parameters(model, params);
  };

  std::vector<EpochMetrics> metrics;
  metrics.reserve(static_cast<std::size_t>(config.epochs));
  for (int epoch = 1; epoch <= config.epochs; ++epoch) {
    double train_loss = 0.0;
    if (config.batch == BatchMode::full_batch) {
      std::vector<double> grad(params.size(), 0.0);
      for (const Sample& sample : train_set) {
        const auto [loss, g] = loss_and_gradients(model, sample, config.loss);
        train_loss += loss;
        for (std::size_t i = 0; i < grad.size(); ++i) grad[i] += g[i];
      }
      const double inv = 1.0 / static_cast<double>(train_set.size());
      for (double& g : grad) g *= inv;
      train_loss *= inv;
      abort_if_not_finite(train_loss, grad, epoch);
      step(grad);
    } else {
      std::shuffle(order.begin(), order.end(), shuffle_rng);
      for (const std::size_t i : order) {
        const auto [loss, g] = loss_and_gradients(model, train_set[i], config.loss);
        abort_if_not_finite(loss, g, epoch);
        train_loss += loss;
        step(g);
      }
      train_loss /= static_cast<double>(train_set.size());
    }

    const auto [test_loss, test_accuracy] = evaluate(model, test_set, config.loss);
    const EpochMetrics row{epoch, test_loss, test_accuracy, train_loss};
    metrics.push_back(row);
    if (on_epoch) on_epoch(row);
  }
  return metrics;
}

}  // namespace qhc
