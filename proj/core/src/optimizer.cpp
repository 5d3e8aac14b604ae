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
#include "qhc/optimizer.hpp"

#include <cmath>

#include "qhc/errors.hpp"

namespace qhc {

AdamState make_adam_state(std::size_t n_params) {
  return {std::vector<double>(n_params, 0.0), std::vector<double>(n_params, 0.0), 0};
}

void adam_step(std::span<double> params, std::span<const double> grad, AdamState& state,
               const AdamConfig& config) {
  if (params.size() != grad.size() || params.size() != state.m.size()) {
    throw data_error("optimizer state does not match the parameter count");
  }
  state.step += 1;
  const double m_corr = 1.0 - std::pow(config.beta1, static_cast<double>(state.step));
  const double v_corr = 1.0 - std::pow(config.beta2, static_cast<double>(state.step));
  for (std::size_t i = 0; i < params.size(); ++i) {
    state.m[i] = config.beta1 * state.m[i] + (1.0 - config.beta1) * grad[i];
    state.v[i] = config.beta2 * state.v[i] + (1.0 - config.beta2) * grad[i] * grad[i];
    const double m_hat = state.m[i] / m_corr;
    const double v_hat = state.v[i] / v_corr;
    params[i] -= config.learning_rate * m_hat / (std::sqrt(v_hat) + config.epsilon);
  }
}

void sgd_step(std::span<double> params, std::span<const double> grad, double learning_rate) {
  if (params.size() != grad.size()) {
    throw data_error("gradient does not match the parameter count");
  }
  for (std::size_t i = 0; i < params.size(); ++i) {
    params[i] -= learning_rate * grad[i];
  }
}

}  // namespace qhc
