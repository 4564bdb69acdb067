// Copyright 2026 The scf-ganlab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cmath>
#include <cstdint>
#include <string>

#include "ganlab/nn/matrix.hpp"

namespace ganlab::nn {

template <typename Scalar>
struct AdamState {
  Vector<Scalar> first_moment;
  Vector<Scalar> second_moment;
  std::uint64_t step_count = 0;
  Scalar lr = Scalar(2e-4);
  Scalar beta1 = Scalar(0.9);
  Scalar beta2 = Scalar(0.999);
  Scalar eps_hat = Scalar(1e-8);

  AdamState() = default;
  AdamState(Index parameter_count, Scalar learning_rate)
      : first_moment(Vector<Scalar>::Zero(parameter_count)),
        second_moment(Vector<Scalar>::Zero(parameter_count)),
        lr(learning_rate) {
    if (!(learning_rate > Scalar(0))) throw ConfigError("Adam learning rate must be positive");
  }
};

// One bias-corrected Adam update, in place.
template <typename Scalar>
void adam_step(Eigen::Ref<Vector<Scalar>> params, const Eigen::Ref<const Vector<Scalar>>& grads,
               AdamState<Scalar>& state) {
  if (params.size() != grads.size()) {
    throw ShapeError("Adam: " + std::to_string(params.size()) + " parameters but " +
                     std::to_string(grads.size()) + " gradients");
  }
  if (state.first_moment.size() != params.size()) {
    throw ShapeError("Adam: state sized for " + std::to_string(state.first_moment.size()) +
                     " parameters, got " + std::to_string(params.size()));
  }
  for (Index i = 0; i < grads.size(); ++i) {
    if (!std::isfinite(grads[i])) {
      throw NumericError("Adam: non-finite gradient at parameter index " + std::to_string(i));
    }
  }
  state.step_count += 1;
  const auto t = static_cast<Scalar>(state.step_count);
  state.first_moment = state.beta1 * state.first_moment + (Scalar(1) - state.beta1) * grads;
  state.second_moment =
      state.beta2 * state.second_moment + (Scalar(1) - state.beta2) * grads.cwiseProduct(grads);
  const Scalar correction1 = Scalar(1) - std::pow(state.beta1, t);
  const Scalar correction2 = Scalar(1) - std::pow(state.beta2, t);
  for (Index i = 0; i < params.size(); ++i) {
    const Scalar m_hat = state.first_moment[i] / correction1;
    const Scalar v_hat = state.second_moment[i] / correction2;
    params[i] -= state.lr * m_hat / (std::sqrt(v_hat) + state.eps_hat);
  }
}

}  // namespace ganlab::nn
