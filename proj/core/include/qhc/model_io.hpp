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

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>

#include "qhc/dataset.hpp"
#include "qhc/model.hpp"

namespace qhc {

inline constexpr int kModelFormatVersion = 1;

/// Everything a later run needs to reproduce predictions: trained
/// parameters, the scaler fitted at training time and the run seed.
struct SavedModel {
  HybridModel model;
  ScalerParams scaler;
  std::uint64_t seed = 0;
};

/// Writes a versioned JSON document with fields format_version,
/// n_qubits, n_layers, quantum_angles, layer1_weights, layer1_biases,
/// layer2_weights, layer2_biases, scaler{min,max}, seed. Doubles
/// round-trip bit-exactly.
void save_model(const SavedModel& saved, const std::filesystem::path& path);

/// Throws persistence_error for unreadable files, unknown versions or
/// wrong shapes.
SavedModel load_model(const std::filesystem::path& path);

/// Loss with 4 decimals, accuracy with 2 — the metrics formats.
std::string format_loss(double loss);
std::string format_accuracy(double accuracy);

/// CSV with header `epoch,test_loss,test_accuracy` (plus `train_loss`
/// when requested), one row per epoch, formatted as above.
void write_metrics_csv(const std::filesystem::path& path, std::span<const EpochMetrics> metrics,
                       bool with_train_loss = false);

}  // namespace qhc
