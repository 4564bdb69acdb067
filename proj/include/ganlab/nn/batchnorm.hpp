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

namespace ganlab::nn {

enum class NormMode { Train, Infer };

// Per-column batch normalization. Train mode standardizes by the batch mean
// and population (biased) variance; Infer mode uses the running statistics.
// Running statistics blend as running = momentum * running + (1 - momentum) * batch.
template <typename Scalar>
struct BatchNorm1D {
  RowVector<Scalar> gamma;
  RowVector<Scalar> beta;
  RowVector<Scalar> running_mean;
  RowVector<Scalar> running_var;
  Scalar epsilon = Scalar(1e-5);
  Scalar momentum = Scalar(0.9);
  NormMode mode = NormMode::Train;

  BatchNorm1D() = default;
  explicit BatchNorm1D(Index dim, Scalar eps = Scalar(1e-5), Scalar mom = Scalar(0.9))
      : gamma(RowVector<Scalar>::Ones(dim)),
        beta(RowVector<Scalar>::Zero(dim)),
        running_mean(RowVector<Scalar>::Zero(dim)),
        running_var(RowVector<Scalar>::Ones(dim)),
        epsilon(eps),
        momentum(mom) {
    if (!(eps >= Scalar(0))) throw ConfigError("batch-norm epsilon must be >= 0");
    if (!(mom > Scalar(0) && mom <= Scalar(1)))
      throw ConfigError("batch-norm momentum must lie in (0, 1]");
  }

  Index dim() const { return gamma.size(); }
};

// Intermediate values a backward pass needs.
template <typename Scalar>
struct BatchNormCache {
  NormMode mode = NormMode::Train;
  RowVector<Scalar> mean;
  RowVector<Scalar> var;
  RowVector<Scalar> inv_std;
  Matrix<Scalar> normalized;
};

template <typename Scalar>
struct BatchNormGrads {
  Matrix<Scalar> d_input;
  RowVector<Scalar> d_gamma;
  RowVector<Scalar> d_beta;
};

template <typename Scalar>
struct BatchNormResult {
  Matrix<Scalar> output;
  std::optional<BatchNormGrads<Scalar>> grads;
};

template <typename Scalar>
Matrix<Scalar> batchnorm_forward(const BatchNorm1D<Scalar>& layer, const Matrix<Scalar>& input,
                                 BatchNormCache<Scalar>* cache = nullptr) {
  if (input.cols() != layer.dim()) {
    throw ShapeError("batch-norm input " + shape_string(input) + " does not match dim " +
                     std::to_string(layer.dim()));
  }
  BatchNormCache<Scalar> local;
  BatchNormCache<Scalar>& c = cache != nullptr ? *cache : local;
  c.mode = layer.mode;
  if (layer.mode == NormMode::Train) {
    if (input.rows() < 2) {
      throw BatchTooSmallError("batch-norm in train mode needs at least 2 rows, got " +
                               std::to_string(input.rows()));
    }
    const Scalar n = static_cast<Scalar>(input.rows());
    c.mean = input.colwise().sum() / n;
    c.var = (input.rowwise() - c.mean).array().square().colwise().sum().matrix() / n;
  } else {
    c.mean = layer.running_mean;
    c.var = layer.running_var;
  }
  // A zero-variance column with epsilon = 0 normalizes to 0 rather than NaN.
  c.inv_std = (c.var.array() + layer.epsilon)
                  .unaryExpr([](Scalar v) { return v > Scalar(0) ? Scalar(1) / std::sqrt(v) : Scalar(0); })
                  .matrix();
  c.normalized = ((input.rowwise() - c.mean).array().rowwise() * c.inv_std.array()).matrix();
  Matrix<Scalar> output =
      (c.normalized.array().rowwise() * layer.gamma.array()).rowwise() + layer.beta.array();
  return output;
}

template <typename Scalar>
void update_running_stats(BatchNorm1D<Scalar>& layer, const BatchNormCache<Scalar>& cache) {
  if (cache.mode != NormMode::Train) return;
  layer.running_mean = layer.momentum * layer.running_mean + (Scalar(1) - layer.momentum) * cache.mean;
  layer.running_var = layer.momentum * layer.running_var + (Scalar(1) - layer.momentum) * cache.var;
}

template <typename Scalar>
BatchNormGrads<Scalar> batchnorm_backward(const BatchNorm1D<Scalar>& layer,
                                          const BatchNormCache<Scalar>& cache,
                                          const Matrix<Scalar>& upstream) {
  if (upstream.rows() != cache.normalized.rows() || upstream.cols() != layer.dim()) {
    throw ShapeError("batch-norm upstream gradient " + shape_string(upstream) +
                     " does not match " + shape_string(cache.normalized));
  }
  BatchNormGrads<Scalar> grads;
  grads.d_beta = upstream.colwise().sum();
  grads.d_gamma = (upstream.array() * cache.normalized.array()).colwise().sum().matrix();
  const Matrix<Scalar> d_norm = (upstream.array().rowwise() * layer.gamma.array()).matrix();
  if (cache.mode == NormMode::Infer) {
    grads.d_input = (d_norm.array().rowwise() * cache.inv_std.array()).matrix();
    return grads;
  }
  // dx = inv_std / n * (n * d_norm - sum(d_norm) - x_hat * sum(d_norm * x_hat))
  const Scalar n = static_cast<Scalar>(upstream.rows());
  const RowVector<Scalar> sum_d = d_norm.colwise().sum();
  const RowVector<Scalar> sum_dx = (d_norm.array() * cache.normalized.array()).colwise().sum().matrix();
  Matrix<Scalar> centered = (n * d_norm.array()).matrix();
  centered.rowwise() -= sum_d;
  centered -= (cache.normalized.array().rowwise() * sum_dx.array()).matrix();
  grads.d_input = ((centered.array().rowwise() * cache.inv_std.array()) / n).matrix();
  return grads;
}

// Forward plus optional backward; Train mode also folds the batch statistics
// into the running statistics.
template <typename Scalar>
BatchNormResult<Scalar> batchnorm_forward_backward(BatchNorm1D<Scalar>& layer,
                                                   const Matrix<Scalar>& input,
                                                   const Matrix<Scalar>* upstream = nullptr) {
  BatchNormCache<Scalar> cache;
  BatchNormResult<Scalar> result{batchnorm_forward(layer, input, &cache), std::nullopt};
  if (upstream != nullptr) result.grads = batchnorm_backward(layer, cache, *upstream);
  update_running_stats(layer, cache);
  return result;
}

}  // namespace ganlab::nn
