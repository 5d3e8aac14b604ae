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
#include <filesystem>
#include <span>
#include <string_view>
#include <vector>

namespace qhc {

inline constexpr int kNumFeatures = 4;
inline constexpr int kNumClasses = 3;

/// Class names in label order.
inline constexpr std::array<std::string_view, kNumClasses> kClassNames = {
    "setosa", "versicolor", "virginica"};

/// One Iris row: sepal length/width, petal length/width (centimeters
/// raw, radians once scaled) and the species label.
struct Sample {
  std::array<double, kNumFeatures> features{};
  int label = 0;
};

/// Per-feature min/max observed on the training split.
struct ScalerParams {
  std::array<double, kNumFeatures> min{};
  std::array<double, kNumFeatures> max{};
};

struct SplitDataset {
  std::vector<Sample> train;
  std::vector<Sample> test;
  std::uint64_t seed = 0;
  ScalerParams scaler;  // fitted on `train` only
};

/// Reads a CSV with header
///   sepal_length,sepal_width,petal_length,petal_width,species
/// where species is one of kClassNames. Throws data_error with the
/// offending row number on any malformed content.
std::vector<Sample> load_iris(const std::filesystem::path& path);

/// Records per-feature min/max. Throws data_error if any feature has a
/// degenerate range (max == min), e.g. for a single-sample input.
ScalerParams fit_scaler(std::span<const Sample> train);

/// Maps each feature linearly so the fitted range lands on [-pi, pi]:
///   out = -pi + 2 pi (x - min) / (max - min).
/// Values outside the fitted range extrapolate; nothing is clamped.
std::array<double, kNumFeatures> scale(const ScalerParams& scaler,
                                       const std::array<double, kNumFeatures>& features);

/// `scale` applied to every sample, labels untouched.
std::vector<Sample> scale_samples(const ScalerParams& scaler, std::span<const Sample> samples);

/// Seeded per-class shuffle; the first fraction*count rows of each
/// class go to test, the rest to train, so class balance is exact in
/// both partitions. The fraction must give an integer, nonzero,
/// non-total test count for every class. The returned scaler is fitted
/// on the train partition alone.
SplitDataset stratified_split(std::span<const Sample> samples, double test_fraction,
                              std::uint64_t seed);

}  // namespace qhc
