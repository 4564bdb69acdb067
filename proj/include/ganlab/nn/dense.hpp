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
#include <optional>

#include "ganlab/nn/matrix.hpp"
#include "ganlab/nn/prng.hpp"

namespace ganlab::nn {

// Fully connected layer y = x W + b, with W stored (in_dim x out_dim).
template <typename Scalar>
struct DenseLayer {
  Matrix<Scalar> weights;
  RowVector<Scalar> bias;

  DenseLayer() = default;
  DenseLayer(Index in_dim, Index out_dim)
      : weights(Matrix<Scalar>::Zero(in_dim, out_dim)), bias(RowVector<Scalar>::Zero(out_dim)) {}

  Index in_dim() const { return weights.rows(); }
  Index out_dim() const { return weights.cols(); }

  // Glorot-uniform weights, zero bias.
  static DenseLayer glorot(Index in_dim, Index out_dim, Prng& rng) {
    DenseLayer layer(in_dim, out_dim);
    const Scalar limit = std::sqrt(Scalar(6) / static_cast<Scalar>(in_dim + out_dim));
    layer.weights = uniform_matrix<Scalar>(in_dim, out_dim, -limit, limit, rng);
    return layer;
  }
};

template <typename Scalar>
struct DenseGrads {
  Matrix<Scalar> d_input;
  Matrix<Scalar> d_weights;
  RowVector<Scalar> d_bias;
};

template <typename Scalar>
struct DenseResult {
  Matrix<Scalar> output;
  std::optional<DenseGrads<Scalar>> grads;
};

template <typename Scalar>
Matrix<Scalar> dense_forward(const DenseLayer<Scalar>& layer, const Matrix<Scalar>& input) {
  if (input.cols() != layer.in_dim()) {
    throw ShapeError("dense input " + shape_string(input) + " does not match weights " +
                     shape_string(layer.weights));
  }
  Matrix<Scalar> output = input * layer.weights;
  output.rowwise() += layer.bias;
  return output;
}

template <typename Scalar>
DenseGrads<Scalar> dense_backward(const DenseLayer<Scalar>& layer, const Matrix<Scalar>& input,
                                  const Matrix<Scalar>& upstream) {
  if (input.cols() != layer.in_dim()) {
    throw ShapeError("dense input " + shape_string(input) + " does not match weights " +
                     shape_string(layer.weights));
  }
  if (upstream.rows() != input.rows() || upstream.cols() != layer.out_dim()) {
    throw ShapeError("dense upstream gradient " + shape_string(upstream) + " does not match " +
                     shape_string(input.rows(), layer.out_dim()));
  }
  DenseGrads<Scalar> grads;
  grads.d_input = upstream * layer.weights.transpose();
  grads.d_weights = input.transpose() * upstream;
  grads.d_bias = upstream.colwise().sum();
  return grads;
}

template <typename Scalar>
DenseResult<Scalar> dense_forward_backward(const DenseLayer<Scalar>& layer,
                                           const Matrix<Scalar>& input,
                                           const Matrix<Scalar>* upstream = nullptr) {
  DenseResult<Scalar> result{dense_forward(layer, input), std::nullopt};
  if (upstream != nullptr) result.grads = dense_backward(layer, input, *upstream);
  return result;
}

}  // namespace ganlab::nn
