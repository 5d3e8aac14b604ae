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
#include "qhc/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <numbers>
#include <random>
#include <string>

#include "qhc/errors.hpp"

namespace qhc {
namespace {

constexpr std::string_view kHeader = "sepal_length,sepal_width,petal_length,petal_width,species";

std::string_view strip(std::string_view text) {
  while (!text.empty() && (text.back() == '\r' || text.back() == '\n' || text.back() == ' ' ||
                           text.back() == '\t')) {
    text.remove_suffix(1);
  }
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) {
    text.remove_prefix(1);
  }
  return text;
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  while (true) {
    const std::size_t comma = line.find(',');
    if (comma == std::string_view::npos) {
      fields.push_back(strip(line));
      return fields;
    }
    fields.push_back(strip(line.substr(0, comma)));
    line.remove_prefix(comma + 1);
  }
}

double parse_feature(std::string_view text, int row) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || !std::isfinite(value)) {
    throw data_error("row " + std::to_string(row) + ": non-numeric feature value '" +
                     std::string(text) + "'");
  }
  return value;
}

int species_label(std::string_view name) {
  for (int c = 0; c < kNumClasses; ++c) {
    if (name == kClassNames[static_cast<std::size_t>(c)]) return c;
  }
  return -1;
}

}  // namespace

std::vector<Sample> load_iris(const std::filesystem::path& path) {
  std::ifstream file(path);
  if (!file) {
    throw data_error("cannot open '" + path.string() + "'");
  }

  std::string line;
  if (!std::getline(file, line)) {
    throw data_error("'" + path.string() + "' is empty");
  }
  if (strip(line) != kHeader) {
    throw data_error("'" + path.string() + "': expected header '" + std::string(kHeader) + "'");
  }

  std::vector<Sample> samples;
  int row = 1;  // the header is row 1
  while (std::getline(file, line)) {
    ++row;
    if (strip(line).empty()) continue;
    const auto fields = split_fields(line);
    if (fields.size() != kNumFeatures + 1) {
      throw data_error("row " + std::to_string(row) + ": expected " +
                       std::to_string(kNumFeatures + 1) + " fields, got " +
                       std::to_string(fields.size()));
    }
    Sample sample;
    for (int f = 0; f < kNumFeatures; ++f) {
      sample.features[static_cast<std::size_t>(f)] =
          parse_feature(fields[static_cast<std::size_t>(f)], row);
    }
    sample.label = species_label(fields[kNumFeatures]);
    if (sample.label < 0) {
      throw data_error("row " + std::to_string(row) + ": unknown species '" +
                       std::string(fields[kNumFeatures]) + "'");
    }
    samples.push_back(sample);
  }
  if (samples.empty()) {
    throw data_error("'" + path.string() + "' has no data rows");
  }
  return samples;
}

ScalerParams fit_scaler(std::span<const Sample> train) {
  if (train.empty()) {
    throw data_error("cannot fit a scaler on an empty training set");
  }
  ScalerParams scaler;
  scaler.min.fill(std::numeric_limits<double>::infinity());
  scaler.max.fill(-std::numeric_limits<double>::infinity());
  for (const Sample& sample : train) {
    for (int f = 0; f < kNumFeatures; ++f) {
      const auto i = static_cast<std::size_t>(f);
      scaler.min[i] = std::min(scaler.min[i], sample.features[i]);
      scaler.max[i] = std::max(scaler.max[i], sample.features[i]);
    }
  }
  for (int f = 0; f < kNumFeatures; ++f) {
    const auto i = static_cast<std::size_t>(f);
    if (!(scaler.max[i] > scaler.min[i])) {
      throw data_error("feature " + std::to_string(f) + " has a degenerate range [" +
                       std::to_string(scaler.min[i]) + ", " + std::to_string(scaler.max[i]) +
                       "]");
    }
  }
  return scaler;
}

std::array<double, kNumFeatures> scale(const ScalerParams& scaler,
                                       const std::array<double, kNumFeatures>& features) {
  constexpr double pi = std::numbers::pi;
  std::array<double, kNumFeatures> out{};
  for (std::size_t i = 0; i < kNumFeatures; ++i) {
    out[i] = -pi + 2.0 * pi * (features[i] - scaler.min[i]) / (scaler.max[i] - scaler.min[i]);
  }
  return out;
}

std::vector<Sample> scale_samples(const ScalerParams& scaler, std::span<const Sample> samples) {
  std::vector<Sample> out;
  out.reserve(samples.size());
  for (const Sample& sample : samples) {
    out.push_back({scale(scaler, sample.features), sample.label});
  }
  return out;
}

SplitDataset stratified_split(std::span<const Sample> samples, double test_fraction,
                              std::uint64_t seed) {
  if (!(test_fraction > 0.0) || test_fraction >= 1.0) {
    throw config_error("test fraction must lie in (0, 1), got " + std::to_string(test_fraction));
  }

  std::array<std::vector<std::size_t>, kNumClasses> by_class;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const int label = samples[i].label;
    if (label < 0 || label >= kNumClasses) {
      throw data_error("sample " + std::to_string(i) + " has label " + std::to_string(label));
    }
    by_class[static_cast<std::size_t>(label)].push_back(i);
  }

  SplitDataset split;
  split.seed = seed;
  std::mt19937_64 rng(seed);
  for (auto& indices : by_class) {
    if (indices.empty()) continue;
    const double exact = test_fraction * static_cast<double>(indices.size());
    const auto test_count = static_cast<std::size_t>(std::llround(exact));
    if (std::abs(exact - static_cast<double>(test_count)) > 1e-9) {
      throw config_error("test fraction " + std::to_string(test_fraction) +
                         " does not give an integer test count for a class of " +
                         std::to_string(indices.size()));
    }
    if (test_count == 0 || test_count == indices.size()) {
      throw config_error("test fraction " + std::to_string(test_fraction) +
                         " leaves a class without train or test rows");
    }
    std::shuffle(indices.begin(), indices.end(), rng);
    for (std::size_t k = 0; k < indices.size(); ++k) {
      (k < test_count ? split.test : split.train).push_back(samples[indices[k]]);
    }
  }

  split.scaler = fit_scaler(split.train);
  return split;
}

}  // namespace qhc
