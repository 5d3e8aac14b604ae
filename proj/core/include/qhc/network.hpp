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

#include <span>
#include <vector>

namespace qhc {

/// Fully connected layer; weights row-major [out_dim][in_dim].
struct DenseLayer {
  int in_dim = 0;
  int out_dim = 0;
  std::vector<double> weights;
  std::vector<double> biases;

  double weight(int row, int col) const {
    return weights[static_cast<std::size_t>(row * in_dim + col)];
  }
};

/// Intermediates of one forward pass, kept for backprop.
struct ForwardTrace {
  std::vector<double> input;
  std::vector<double> hidden_pre;  // before ReLU
  std::vector<double> hidden;
  std::vector<double> logits;
  std::vector<double> probs;  // softmax output, sums to 1
};

enum class LossKind { cross_entropy, mse };

/// probs = softmax(W2 * relu(W1 * input + b1) + b2).
ForwardTrace forward(const DenseLayer& layer1, const DenseLayer& layer2,
                     std::span<const double> input);

/// -log(p[label]), with p clamped below at 1e-12 so a confidently wrong
/// prediction stays finite.
double cross_entropy(std::span<const double> probs, int label);

/// Mean squared error against the one-hot target.
double mse_loss(std::span<const double> probs, int label);

double loss_value(LossKind kind, std::span<const double> probs, int label);

struct LayerGrads {
  std::vector<double> weights;
  std::vector<double> biases;
};

struct NetworkGrads {
  LayerGrads layer1;
  LayerGrads layer2;
  std::vector<double> input;  // dL/d(network input), for chaining upstream
};

/// Exact gradients of the loss. For cross-entropy the softmax collapses
/// to dL/dlogits = probs - onehot(label). ReLU subgradient at 0 is 0.
NetworkGrads backward(const DenseLayer& layer1, const DenseLayer& layer2,
                      const ForwardTrace& trace, int label,
                      LossKind kind = LossKind::cross_entropy);

}  // namespace qhc
