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
#include "qhc/network.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qhc/errors.hpp"

namespace qhc {
namespace {

constexpr double kProbFloor = 1e-12;

void check_label(std::size_t n_classes, int label) {
  if (label < 0 || static_cast<std::size_t>(label) >= n_classes) {
    throw data_error("label " + std::to_string(label) + " out of range for " +
                     std::to_string(n_classes) + " classes");
  }
}

std::vector<double> affine(const DenseLayer& layer, std::span<const double> input) {
  std::vector<double> out(static_cast<std::size_t>(layer.out_dim));
  for (int r = 0; r < layer.out_dim; ++r) {
    double acc = layer.biases[static_cast<std::size_t>(r)];
    for (int c = 0; c < layer.in_dim; ++c) {
      acc += layer.weight(r, c) * input[static_cast<std::size_t>(c)];
    }
    out[static_cast<std::size_t>(r)] = acc;
  }
  return out;
}

std::vector<double> softmax(const std::vector<double>& logits) {
  const double peak = *std::max_element(logits.begin(), logits.end());
  std::vector<double> probs(logits.size());
  double total = 0.0;
  for (std::size_t i = 0; i < logits.size(); ++i) {
    probs[i] = std::exp(logits[i] - peak);
    total += probs[i];
  }
  for (double& p : probs) p /= total;
  return probs;
}

}  // namespace

ForwardTrace forward(const DenseLayer& layer1, const DenseLayer& layer2,
                     std::span<const double> input) {
  if (static_cast<int>(input.size()) != layer1.in_dim) {
    throw data_error("network input has " + std::to_string(input.size()) +
                     " entries, expected " + std::to_string(layer1.in_dim));
  }
  for (double x : input) {
    if (!std::isfinite(x)) throw data_error("non-finite network input");
  }

  ForwardTrace trace;
  trace.input.assign(input.begin(), input.end());
  trace.hidden_pre = affine(layer1, input);
  trace.hidden.resize(trace.hidden_pre.size());
  std::transform(trace.hidden_pre.begin(), trace.hidden_pre.end(), trace.hidden.begin(),
                 [](double v) { return v > 0.0 ? v : 0.0; });
  trace.logits = affine(layer2, trace.hidden);
  trace.probs = softmax(trace.logits);
  return trace;
}

double cross_entropy(std::span<const double> probs, int label) {
  check_label(probs.size(), label);
  return -std::log(std::max(probs[static_cast<std::size_t>(label)], kProbFloor));
}

double mse_loss(std::span<const double> probs, int label) {
  check_label(probs.size(), label);
  double total = 0.0;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    const double diff = probs[i] - (static_cast<int>(i) == label ? 1.0 : 0.0);
    total += diff * diff;
  }
  return total / static_cast<double>(probs.size());
}

double loss_value(LossKind kind, std::span<const double> probs, int label) {
  return kind == LossKind::cross_entropy ? cross_entropy(probs, label) : mse_loss(probs, label);
}

NetworkGrads backward(const DenseLayer& layer1, const DenseLayer& layer2,
                      const ForwardTrace& trace, int label, LossKind kind) {
  const int n_in = layer1.in_dim;
  const int n_hidden = layer1.out_dim;
  const int n_out = layer2.out_dim;
  check_label(static_cast<std::size_t>(n_out), label);

  std::vector<double> dlogits(static_cast<std::size_t>(n_out));
  if (kind == LossKind::cross_entropy) {
    for (int k = 0; k < n_out; ++k) {
      dlogits[static_cast<std::size_t>(k)] =
          trace.probs[static_cast<std::size_t>(k)] - (k == label ? 1.0 : 0.0);
    }
  } else {
    // MSE through the softmax jacobian: dL/dz_k = p_k (dL/dp_k - sum_i dL/dp_i p_i)
    std::vector<double> dprobs(static_cast<std::size_t>(n_out));
    double dot = 0.0;
    for (int i = 0; i < n_out; ++i) {
      dprobs[static_cast<std::size_t>(i)] =
          2.0 * (trace.probs[static_cast<std::size_t>(i)] - (i == label ? 1.0 : 0.0)) / n_out;
      dot += dprobs[static_cast<std::size_t>(i)] * trace.probs[static_cast<std::size_t>(i)];
    }
    for (int k = 0; k < n_out; ++k) {
      dlogits[static_cast<std::size_t>(k)] =
          trace.probs[static_cast<std::size_t>(k)] * (dprobs[static_cast<std::size_t>(k)] - dot);
    }
  }

  NetworkGrads grads;
  grads.layer2.weights.resize(static_cast<std::size_t>(n_out * n_hidden));
  grads.layer2.biases = dlogits;
  for (int r = 0; r < n_out; ++r) {
    for (int c = 0; c < n_hidden; ++c) {
      grads.layer2.weights[static_cast<std::size_t>(r * n_hidden + c)] =
          dlogits[static_cast<std::size_t>(r)] * trace.hidden[static_cast<std::size_t>(c)];
    }
  }

  std::vector<double> dpre(static_cast<std::size_t>(n_hidden));
  for (int j = 0; j < n_hidden; ++j) {
    double acc = 0.0;
    for (int r = 0; r < n_out; ++r) {
      acc += layer2.weight(r, j) * dlogits[static_cast<std::size_t>(r)];
    }
    dpre[static_cast<std::size_t>(j)] =
        trace.hidden_pre[static_cast<std::size_t>(j)] > 0.0 ? acc : 0.0;
  }

  grads.layer1.weights.resize(static_cast<std::size_t>(n_hidden * n_in));
  grads.layer1.biases = dpre;
  for (int r = 0; r < n_hidden; ++r) {
    for (int c = 0; c < n_in; ++c) {
      grads.layer1.weights[static_cast<std::size_t>(r * n_in + c)] =
          dpre[static_cast<std::size_t>(r)] * trace.input[static_cast<std::size_t>(c)];
    }
  }

  grads.input.assign(static_cast<std::size_t>(n_in), 0.0);
  for (int c = 0; c < n_in; ++c) {
    double acc = 0.0;
    for (int r = 0; r < n_hidden; ++r) {
      acc += layer1.weight(r, c) * dpre[static_cast<std::size_t>(r)];
    }
    grads.input[static_cast<std::size_t>(c)] = acc;
  }
  return grads;
}

}  // namespace qhc
