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
// Command-line entry point: `train`, `eval` and `draw-circuit`
// subcommands over the hybrid classifier. Every run prints its full
// effective configuration first, and all randomness flows from --seed.
#include <cstdint>
#include <iostream>
#include <map>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qhc/circuit.hpp"
#include "qhc/dataset.hpp"
#include "qhc/model.hpp"
#include "qhc/model_io.hpp"

namespace {

struct RunConfig {
  std::string data_path;
  std::uint64_t seed = 42;
  int epochs = 20;
  double learning_rate = 0.02;
  std::string optimizer = "adam";
  std::string loss = "mse";
  int n_layers = 2;
  double test_fraction = 0.2;
  std::string metrics_out = "metrics.csv";
  std::string model_out = "model.json";
  std::string model_in;
  std::string batch = "per-sample";
  bool with_train_loss = false;
};

qhc::OptimizerKind parse_optimizer(const std::string& name) {
  return name == "sgd" ? qhc::OptimizerKind::sgd : qhc::OptimizerKind::adam;
}

qhc::LossKind parse_loss(const std::string& name) {
  return name == "mse" ? qhc::LossKind::mse : qhc::LossKind::cross_entropy;
}

qhc::BatchMode parse_batch(const std::string& name) {
  return name == "full" ? qhc::BatchMode::full_batch : qhc::BatchMode::per_sample;
}

int run_train(const RunConfig& config) {
  std::cout << "config: command=train"
            << " data=" << config.data_path << " seed=" << config.seed
            << " epochs=" << config.epochs << " learning_rate=" << config.learning_rate
            << " optimizer=" << config.optimizer << " loss=" << config.loss
            << " layers=" << config.n_layers << " test_fraction=" << config.test_fraction
            << " batch=" << config.batch << " metrics_out=" << config.metrics_out
            << " model_out=" << config.model_out << "\n";

  const std::vector<qhc::Sample> samples = qhc::load_iris(config.data_path);
  const qhc::SplitDataset split =
      qhc::stratified_split(samples, config.test_fraction, config.seed);

  std::mt19937_64 rng(config.seed);
  qhc::HybridModel model = qhc::init_model(qhc::kNumFeatures, config.n_layers, rng);

  qhc::TrainConfig train_config;
  train_config.epochs = config.epochs;
  train_config.learning_rate = config.learning_rate;
  train_config.optimizer = parse_optimizer(config.optimizer);
  train_config.loss = parse_loss(config.loss);
  train_config.seed = config.seed;
  train_config.batch = parse_batch(config.batch);

  const auto metrics = qhc::train(model, split, train_config, [](const qhc::EpochMetrics& row) {
    std::cout << "epoch " << row.epoch << ": test_loss=" << qhc::format_loss(row.test_loss)
              << " accuracy=" << qhc::format_accuracy(row.test_accuracy) << "%\n";
  });

  qhc::write_metrics_csv(config.metrics_out, metrics, config.with_train_loss);
  qhc::save_model({model, split.scaler, config.seed}, config.model_out);
  std::cout << "wrote " << config.metrics_out << " and " << config.model_out << "\n";
  return 0;
}

int run_eval(const RunConfig& config, bool seed_given) {
  const qhc::SavedModel saved = qhc::load_model(config.model_in);
  // The split seed defaults to the one the model was trained with; the
  // embedded scaler is always used, never refit.
  const std::uint64_t seed = seed_given ? config.seed : saved.seed;
  std::cout << "config: command=eval data=" << config.data_path << " model=" << config.model_in
            << " seed=" << seed << " loss=" << config.loss
            << " test_fraction=" << config.test_fraction << "\n";

  const std::vector<qhc::Sample> samples = qhc::load_iris(config.data_path);
  const qhc::SplitDataset split = qhc::stratified_split(samples, config.test_fraction, seed);
  const std::vector<qhc::Sample> test = qhc::scale_samples(saved.scaler, split.test);
  const auto [loss, accuracy] = qhc::evaluate(saved.model, test, parse_loss(config.loss));
  std::cout << "test_loss=" << qhc::format_loss(loss)
            << " accuracy=" << qhc::format_accuracy(accuracy) << "%\n";
  return 0;
}

int run_draw(const RunConfig& config) {
  std::cout << "config: command=draw-circuit layers=" << config.n_layers << "\n";
  const qhc::VariationalParams params = qhc::zero_params(config.n_layers, qhc::kNumFeatures);
  const std::vector<double> placeholder(qhc::kNumFeatures, 0.0);
  std::cout << qhc::render_ascii(qhc::build_circuit(placeholder, params));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qhc - hybrid quantum-classical Iris classifier"};
  app.require_subcommand(1);
  RunConfig config;

  auto* train_cmd = app.add_subcommand("train", "Train a model; write metrics CSV + model file");
  train_cmd->add_option("--data", config.data_path, "Iris CSV path")->required();
  train_cmd->add_option("--seed", config.seed, "Run seed (split, init, shuffles)")
      ->capture_default_str();
  train_cmd->add_option("--epochs", config.epochs, "Training epochs")->capture_default_str();
  train_cmd->add_option("--learning-rate", config.learning_rate, "Optimizer step size")
      ->capture_default_str();
  train_cmd->add_option("--optimizer", config.optimizer, "Optimizer")
      ->check(CLI::IsMember({"adam", "sgd"}))
      ->capture_default_str();
  train_cmd->add_option("--loss", config.loss, "Loss function")
      ->check(CLI::IsMember({"cross-entropy", "mse"}))
      ->capture_default_str();
  train_cmd->add_option("--layers", config.n_layers, "Variational layers")
      ->capture_default_str();
  train_cmd->add_option("--test-fraction", config.test_fraction, "Held-out fraction per class")
      ->capture_default_str();
  train_cmd->add_option("--metrics-out", config.metrics_out, "Metrics CSV path")
      ->capture_default_str();
  train_cmd->add_option("--model-out", config.model_out, "Model file path")
      ->capture_default_str();
  train_cmd->add_option("--batch", config.batch, "Update granularity")
      ->check(CLI::IsMember({"full", "per-sample"}))
      ->capture_default_str();
  train_cmd->add_flag("--train-loss", config.with_train_loss,
                      "Add a train_loss column to the metrics CSV");

  auto* eval_cmd = app.add_subcommand("eval", "Evaluate a saved model on the seeded test split");
  eval_cmd->add_option("--data", config.data_path, "Iris CSV path")->required();
  eval_cmd->add_option("--model", config.model_in, "Model file path")->required();
  auto* eval_seed =
      eval_cmd->add_option("--seed", config.seed, "Split seed (default: the model's seed)");
  eval_cmd->add_option("--test-fraction", config.test_fraction, "Held-out fraction per class")
      ->capture_default_str();
  eval_cmd->add_option("--loss", config.loss, "Loss function")
      ->check(CLI::IsMember({"cross-entropy", "mse"}))
      ->capture_default_str();

  auto* draw_cmd = app.add_subcommand("draw-circuit", "Print the circuit diagram");
  draw_cmd->add_option("--layers", config.n_layers, "Variational layers")
      ->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (train_cmd->parsed()) return run_train(config);
    if (eval_cmd->parsed()) return run_eval(config, eval_seed->count() > 0);
    if (draw_cmd->parsed()) return run_draw(config);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
