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
#include <string_view>

#include "ganlab/nn/matrix.hpp"

namespace ganlab::nn {

enum class ActivationKind { ReLU, Tanh, Sigmoid, Identity };

struct Activation {
  ActivationKind kind = ActivationKind::Identity;
};

constexpr std::string_view to_string(ActivationKind kind) {
  switch (kind) {
    case ActivationKind::ReLU: return "relu";
    case ActivationKind::Tanh: return "tanh";
    case ActivationKind::Sigmoid: return "sigmoid";
    case ActivationKind::Identity: return "identity";
  }
  return "identity";
}

inline ActivationKind activation_from_string(std::string_view name) {
  if (name == "relu") return ActivationKind::ReLU;
  if (name == "tanh") return ActivationKind::Tanh;
  if (name == "sigmoid") return ActivationKind::Sigmoid;
  if (name == "identity") return ActivationKind::Identity;
  throw ConfigError("unknown activation '" + std::string(name) + "'");
}

template <typename Scalar>
Scalar sigmoid(Scalar x) {
  if (x >= Scalar(0)) return Scalar(1) / (Scalar(1) + std::exp(-x));
  const Scalar e = std::exp(x);
  return e / (Scalar(1) + e);
}

template <typename Scalar>
Matrix<Scalar> activation_forward(ActivationKind kind, const Matrix<Scalar>& input) {
  switch (kind) {
    case ActivationKind::ReLU: return input.cwiseMax(Scalar(0));
    case ActivationKind::Tanh: return input.array().tanh().matrix();
    case ActivationKind::Sigmoid: return input.unaryExpr([](Scalar v) { return sigmoid(v); });
    case ActivationKind::Identity: return input;
  }
  return input;
}

// Gradient with respect to the activation input. `output` is the value
// activation_forward produced for `input`.
template <typename Scalar>
Matrix<Scalar> activation_backward(ActivationKind kind, const Matrix<Scalar>& input,
                                   const Matrix<Scalar>& output,
                                   const Matrix<Scalar>& upstream) {
  if (upstream.rows() != input.rows() || upstream.cols() != input.cols()) {
    throw ShapeError("activation upstream gradient " + shape_string(upstream) +
                     " does not match input " + shape_string(input));
  }
  switch (kind) {
    case ActivationKind::ReLU:
      return (input.array() > Scalar(0)).select(upstream, Scalar(0));
    case ActivationKind::Tanh:
      return (upstream.array() * (Scalar(1) - output.array().square())).matrix();
    case ActivationKind::Sigmoid:
      return (upstream.array() * output.array() * (Scalar(1) - output.array())).matrix();
    case ActivationKind::Identity: return upstream;
  }
  return upstream;
}

}  // namespace ganlab::nn
