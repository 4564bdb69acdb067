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

#include <algorithm>
#include <cmath>
#include <functional>

#include "ganlab/nn/mlp.hpp"

namespace ganlab::nn {

// Scalar loss over a network output. Writes d loss / d output into `grad`
// when it is non-null.
template <typename Scalar>
using OutputLoss = std::function<Scalar(const Matrix<Scalar>& output, Matrix<Scalar>* grad)>;

// max_i |analytic_i - numeric_i| / max(1, |analytic_i|), where numeric_i is
// the central difference of `f` around `point` along coordinate i.
template <typename Scalar, typename F>
Scalar max_relative_error(F&& f, const Vector<Scalar>& point, const Vector<Scalar>& analytic,
                          Scalar step) {
  if (!(step > Scalar(0))) throw ConfigError("finite-difference step must be positive");
  if (point.size() != analytic.size()) {
    throw ShapeError("gradient check: " + std::to_string(point.size()) + " coordinates but " +
                     std::to_string(analytic.size()) + " analytic entries");
  }
  Scalar worst = Scalar(0);
  Vector<Scalar> probe = point;
  for (Index i = 0; i < point.size(); ++i) {
    probe[i] = point[i] + step;
    const Scalar plus = f(probe);
    probe[i] = point[i] - step;
    const Scalar minus = f(probe);
    probe[i] = point[i];
    const Scalar numeric = (plus - minus) / (Scalar(2) * step);
    const Scalar err = std::abs(analytic[i] - numeric) / std::max(Scalar(1), std::abs(analytic[i]));
    worst = std::max(worst, err);
  }
  return worst;
}

template <typename Scalar>
Vector<Scalar> analytic_parameter_gradient(const Mlp<Scalar>& model, const Matrix<Scalar>& input,
                                           const OutputLoss<Scalar>& loss) {
  ForwardTape<Scalar> tape;
  const Matrix<Scalar> out = model.forward(input, &tape);
  Matrix<Scalar> d_out;
  loss(out, &d_out);
  Vector<Scalar> grads;
  model.backward(tape, d_out, &grads);
  return grads;
}

// Checks the network's parameter gradients against central differences.
template <typename Scalar>
Scalar finite_difference_check(const Mlp<Scalar>& model, const Matrix<Scalar>& input,
                               const OutputLoss<Scalar>& loss, Scalar step) {
  const Vector<Scalar> analytic = analytic_parameter_gradient(model, input, loss);
  Mlp<Scalar> probe = model;
  auto f = [&](const Vector<Scalar>& params) {
    probe.set_parameters(params);
    return loss(probe.forward(input), nullptr);
  };
  return max_relative_error<Scalar>(f, model.parameters(), analytic, step);
}

// Same check with respect to the network input.
template <typename Scalar>
Scalar finite_difference_check_input(const Mlp<Scalar>& model, const Matrix<Scalar>& input,
                                     const OutputLoss<Scalar>& loss, Scalar step) {
  ForwardTape<Scalar> tape;
  const Matrix<Scalar> out = model.forward(input, &tape);
  Matrix<Scalar> d_out;
  loss(out, &d_out);
  const Matrix<Scalar> d_in = model.backward(tape, d_out);
  const Vector<Scalar> analytic = Eigen::Map<const Vector<Scalar>>(d_in.data(), d_in.size());
  const Vector<Scalar> point = Eigen::Map<const Vector<Scalar>>(input.data(), input.size());
  auto f = [&](const Vector<Scalar>& flat) {
    const Matrix<Scalar> x = Eigen::Map<const Matrix<Scalar>>(flat.data(), input.rows(), input.cols());
    return loss(model.forward(x), nullptr);
  };
  return max_relative_error<Scalar>(f, point, analytic, step);
}

}  // namespace ganlab::nn
