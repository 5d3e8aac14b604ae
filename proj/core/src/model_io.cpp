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
#include "qhc/model_io.hpp"

#include <cstdio>
#include <fstream>
#include <vector>

#include <json.hpp>

#include "qhc/errors.hpp"

namespace qhc {
namespace {

using nlohmann::json;

json matrix_to_json(const DenseLayer& layer) {
  json rows = json::array();
  for (int r = 0; r < layer.out_dim; ++r) {
    json row = json::array();
    for (int c = 0; c < layer.in_dim; ++c) {
      row.push_back(layer.weight(r, c));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<double> read_vector(const json& node, std::size_t expected, const char* field) {
  if (!node.is_array() || node.size() != expected) {
    throw persistence_error(std::string(field) + " must be an array of " +
                            std::to_string(expected) + " numbers");
  }
  std::vector<double> out;
  out.reserve(expected);
  for (const auto& entry : node) {
    if (!entry.is_number()) {
      throw persistence_error(std::string(field) + " holds a non-numeric entry");
    }
    out.push_back(entry.get<double>());
  }
  return out;
}

DenseLayer read_layer(const json& weights, const json& biases, int out_dim, int in_dim,
                      const char* name) {
  if (!weights.is_array() || static_cast<int>(weights.size()) != out_dim) {
    throw persistence_error(std::string(name) + "_weights must have " + std::to_string(out_dim) +
                            " rows");
  }
  DenseLayer layer;
  layer.in_dim = in_dim;
  layer.out_dim = out_dim;
  layer.weights.reserve(static_cast<std::size_t>(out_dim * in_dim));
  for (const auto& row : weights) {
    const auto values =
        read_vector(row, static_cast<std::size_t>(in_dim), (std::string(name) + "_weights row").c_str());
    layer.weights.insert(layer.weights.end(), values.begin(), values.end());
  }
  layer.biases =
      read_vector(biases, static_cast<std::size_t>(out_dim), (std::string(name) + "_biases").c_str());
  return layer;
}

}  // namespace

void save_model(const SavedModel& saved, const std::filesystem::path& path) {
  const HybridModel& model = saved.model;
  json doc;
  doc["format_version"] = kModelFormatVersion;
  doc["n_qubits"] = model.quantum.n_qubits;
  doc["n_layers"] = model.quantum.n_layers;
  doc["quantum_angles"] = model.quantum.angles;
  doc["layer1_weights"] = matrix_to_json(model.layer1);
  doc["layer1_biases"] = model.layer1.biases;
  doc["layer2_weights"] = matrix_to_json(model.layer2);
  doc["layer2_biases"] = model.layer2.biases;
  doc["scaler"] = {{"min", saved.scaler.min}, {"max", saved.scaler.max}};
  doc["seed"] = saved.seed;

  std::ofstream out(path);
  if (!out) {
    throw persistence_error("cannot write '" + path.string() + "'");
  }
  out << doc.dump(2) << '\n';
  if (!out) {
    throw persistence_error("failed while writing '" + path.string() + "'");
  }
}

SavedModel load_model(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw persistence_error("cannot open '" + path.string() + "'");
  }
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw persistence_error("'" + path.string() + "' is not valid JSON: " + e.what());
  }

  try {
    const int version = doc.at("format_version").get<int>();
    if (version != kModelFormatVersion) {
      throw persistence_error("unsupported model format version " + std::to_string(version) +
                              " (expected " + std::to_string(kModelFormatVersion) + ")");
    }
    const int n_qubits = doc.at("n_qubits").get<int>();
    const int n_layers = doc.at("n_layers").get<int>();
    if (n_qubits != kNumFeatures) {
      throw persistence_error("model has " + std::to_string(n_qubits) + " qubits, expected " +
                              std::to_string(kNumFeatures));
    }
    if (n_layers < 0) {
      throw persistence_error("model has a negative layer count");
    }

    SavedModel saved;
    saved.model.quantum = zero_params(n_layers, n_qubits);
    saved.model.quantum.angles =
        read_vector(doc.at("quantum_angles"),
                    static_cast<std::size_t>(saved.model.quantum.count()), "quantum_angles");
    saved.model.layer1 = read_layer(doc.at("layer1_weights"), doc.at("layer1_biases"),
                                    kHiddenUnits, n_qubits, "layer1");
    saved.model.layer2 = read_layer(doc.at("layer2_weights"), doc.at("layer2_biases"),
                                    kNumClasses, kHiddenUnits, "layer2");

    const json& scaler = doc.at("scaler");
    const auto mins = read_vector(scaler.at("min"), kNumFeatures, "scaler.min");
    const auto maxs = read_vector(scaler.at("max"), kNumFeatures, "scaler.max");
    for (std::size_t i = 0; i < kNumFeatures; ++i) {
      saved.scaler.min[i] = mins[i];
      saved.scaler.max[i] = maxs[i];
    }
    saved.seed = doc.at("seed").get<std::uint64_t>();
    return saved;
  } catch (const json::exception& e) {
    throw persistence_error("'" + path.string() + "' is malformed: " + e.what());
  }
}

std::string format_loss(double loss) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.4f", loss);
  return buffer;
}

std::string format_accuracy(double accuracy) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.2f", accuracy);
  return buffer;
}

void write_metrics_csv(const std::filesystem::path& path, std::span<const EpochMetrics> metrics,
                       bool with_train_loss) {
  std::ofstream out(path);
  if (!out) {
    throw persistence_error("cannot write '" + path.string() + "'");
  }
  out << "epoch,test_loss,test_accuracy";
  if (with_train_loss) out << ",train_loss";
  out << '\n';
  for (const EpochMetrics& row : metrics) {
    out << row.epoch << ',' << format_loss(row.test_loss) << ','
        << format_accuracy(row.test_accuracy);
    if (with_train_loss) out << ',' << format_loss(row.train_loss);
    out << '\n';
  }
  if (!out) {
    throw persistence_error("failed while writing '" + path.string() + "'");
  }
}

}  // namespace qhc
