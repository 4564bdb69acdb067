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

#include <optional>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "ganlab/nn/activation.hpp"
#include "ganlab/nn/batchnorm.hpp"
#include "ganlab/nn/dense.hpp"
#include "ganlab/nn/prng.hpp"

namespace ganlab::nn {

template <typename Scalar>
using Layer = std::variant<DenseLayer<Scalar>, BatchNorm1D<Scalar>, Activation>;

enum class WeightInit { Glorot, Zero };

// Shape of a plain feedforward stack: each hidden width becomes
// Dense -> [BatchNorm] -> hidden activation, followed by Dense -> output activation.
struct MlpSpec {
  Index input_dim = 1;
  std::vector<Index> hidden;
  Index output_dim = 1;
  ActivationKind hidden_activation = ActivationKind::ReLU;
  ActivationKind output_activation = ActivationKind::Identity;
  bool batch_norm = false;
  WeightInit init = WeightInit::Glorot;
};

// Per-layer inputs (and batch-norm caches) recorded by a forward pass.
template <typename Scalar>
struct ForwardTape {
  std::vector<Matrix<Scalar>> inputs;
  std::vector<Matrix<Scalar>> outputs;
  std::vector<std::optional<BatchNormCache<Scalar>>> norm_caches;
};

template <typename Scalar>
class Mlp {
 public:
  using MatrixT = Matrix<Scalar>;
  using VectorT = Vector<Scalar>;

  Mlp() = default;
  explicit Mlp(std::vector<Layer<Scalar>> layers) : layers_(std::move(layers)) {}

  static Mlp build(const MlpSpec& spec, Prng& rng) {
    std::vector<Layer<Scalar>> layers;
    Index width = spec.input_dim;
    auto dense = [&](Index in, Index out) {
      return spec.init == WeightInit::Glorot ? DenseLayer<Scalar>::glorot(in, out, rng)
                                             : DenseLayer<Scalar>(in, out);
    };
    for (Index h : spec.hidden) {
      layers.emplace_back(dense(width, h));
      if (spec.batch_norm) layers.emplace_back(BatchNorm1D<Scalar>(h));
      layers.emplace_back(Activation{spec.hidden_activation});
      width = h;
    }
    layers.emplace_back(dense(width, spec.output_dim));
    if (spec.output_activation != ActivationKind::Identity) {
      layers.emplace_back(Activation{spec.output_activation});
    }
    return Mlp(std::move(layers));
  }

  const std::vector<Layer<Scalar>>& layers() const { return layers_; }
  std::vector<Layer<Scalar>>& layers() { return layers_; }

  Index input_dim() const {
    for (const auto& layer : layers_) {
      if (const auto* d = std::get_if<DenseLayer<Scalar>>(&layer)) return d->in_dim();
      if (const auto* b = std::get_if<BatchNorm1D<Scalar>>(&layer)) return b->dim();
    }
    return 0;
  }

  Index output_dim() const {
    for (auto it = layers_.rbegin(); it != layers_.rend(); ++it) {
      if (const auto* d = std::get_if<DenseLayer<Scalar>>(&*it)) return d->out_dim();
      if (const auto* b = std::get_if<BatchNorm1D<Scalar>>(&*it)) return b->dim();
    }
    return 0;
  }

  // Kind of the final activation layer, Identity when the stack ends in a
  // parametric layer.
  ActivationKind output_activation() const {
    if (!layers_.empty()) {
      if (const auto* a = std::get_if<Activation>(&layers_.back())) return a->kind;
    }
    return ActivationKind::Identity;
  }

  bool has_batch_norm() const {
    for (const auto& layer : layers_)
      if (std::holds_alternative<BatchNorm1D<Scalar>>(layer)) return true;
    return false;
  }

  void set_mode(NormMode mode) {
    for (auto& layer : layers_)
      if (auto* b = std::get_if<BatchNorm1D<Scalar>>(&layer)) b->mode = mode;
  }

  MatrixT forward(const MatrixT& input, ForwardTape<Scalar>* tape = nullptr) const {
    if (tape != nullptr) {
      tape->inputs.clear();
      tape->outputs.clear();
      tape->norm_caches.clear();
    }
    MatrixT x = input;
    for (const auto& layer : layers_) {
      std::optional<BatchNormCache<Scalar>> cache;
      MatrixT y = std::visit(
          [&](const auto& l) -> MatrixT {
            using L = std::decay_t<decltype(l)>;
            if constexpr (std::is_same_v<L, DenseLayer<Scalar>>) {
              return dense_forward(l, x);
            } else if constexpr (std::is_same_v<L, BatchNorm1D<Scalar>>) {
              cache.emplace();
              return batchnorm_forward(l, x, &*cache);
            } else {
              return activation_forward<Scalar>(l.kind, x);
            }
          },
          layer);
      if (tape != nullptr) {
        tape->inputs.push_back(std::move(x));
        tape->outputs.push_back(y);
        tape->norm_caches.push_back(std::move(cache));
      }
      x = std::move(y);
    }
    return x;
  }

  // Back-propagates `upstream` (d loss / d output) through the recorded pass.
  // Parameter gradients are written to `param_grads` in parameters() order;
  // the return value is d loss / d input.
  MatrixT backward(const ForwardTape<Scalar>& tape, const MatrixT& upstream,
                   VectorT* param_grads = nullptr) const {
    if (tape.inputs.size() != layers_.size()) {
      throw ShapeError("backward called with a tape from a different network");
    }
    if (param_grads != nullptr) param_grads->setZero(parameter_count());
    Index offset = parameter_count();
    MatrixT grad = upstream;
    for (std::size_t k = layers_.size(); k-- > 0;) {
      const auto& layer = layers_[k];
      const MatrixT& in = tape.inputs[k];
      if (const auto* d = std::get_if<DenseLayer<Scalar>>(&layer)) {
        DenseGrads<Scalar> g = dense_backward(*d, in, grad);
        offset -= d->weights.size() + d->bias.size();
        if (param_grads != nullptr) {
          param_grads->segment(offset, d->weights.size()) =
              Eigen::Map<const VectorT>(g.d_weights.data(), g.d_weights.size());
          param_grads->segment(offset + d->weights.size(), d->bias.size()) = g.d_bias.transpose();
        }
        grad = std::move(g.d_input);
      } else if (const auto* b = std::get_if<BatchNorm1D<Scalar>>(&layer)) {
        BatchNormGrads<Scalar> g = batchnorm_backward(*b, *tape.norm_caches[k], grad);
        offset -= 2 * b->dim();
        if (param_grads != nullptr) {
          param_grads->segment(offset, b->dim()) = g.d_gamma.transpose();
          param_grads->segment(offset + b->dim(), b->dim()) = g.d_beta.transpose();
        }
        grad = std::move(g.d_input);
      } else {
        const auto& a = std::get<Activation>(layer);
        grad = activation_backward<Scalar>(a.kind, in, tape.outputs[k], grad);
      }
    }
    return grad;
  }

  // Folds the batch statistics of a Train-mode pass into the running stats.
  void commit_batch_stats(const ForwardTape<Scalar>& tape) {
    for (std::size_t k = 0; k < layers_.size() && k < tape.norm_caches.size(); ++k) {
      if (auto* b = std::get_if<BatchNorm1D<Scalar>>(&layers_[k])) {
        if (tape.norm_caches[k]) update_running_stats(*b, *tape.norm_caches[k]);
      }
    }
  }

  Index parameter_count() const {
    Index n = 0;
    for (const auto& layer : layers_) {
      if (const auto* d = std::get_if<DenseLayer<Scalar>>(&layer)) n += d->weights.size() + d->bias.size();
      if (const auto* b = std::get_if<BatchNorm1D<Scalar>>(&layer)) n += 2 * b->dim();
    }
    return n;
  }

  // Flattened trainable parameters: per dense layer W (row-major) then b;
  // per batch-norm layer gamma then beta. Running statistics are not included.
  VectorT parameters() const {
    VectorT out(parameter_count());
    Index offset = 0;
    auto put = [&](const auto& block) {
      for (Index i = 0; i < block.size(); ++i) out[offset++] = block.data()[i];
    };
    for (const auto& layer : layers_) {
      if (const auto* d = std::get_if<DenseLayer<Scalar>>(&layer)) {
        put(d->weights);
        put(d->bias);
      } else if (const auto* b = std::get_if<BatchNorm1D<Scalar>>(&layer)) {
        put(b->gamma);
        put(b->beta);
      }
    }
    return out;
  }

  void set_parameters(const Eigen::Ref<const VectorT>& values) {
    if (values.size() != parameter_count()) {
      throw ShapeError("set_parameters: expected " + std::to_string(parameter_count()) +
                       " values, got " + std::to_string(values.size()));
    }
    Index offset = 0;
    auto take = [&](auto& block) {
      for (Index i = 0; i < block.size(); ++i) block.data()[i] = values[offset++];
    };
    for (auto& layer : layers_) {
      if (auto* d = std::get_if<DenseLayer<Scalar>>(&layer)) {
        take(d->weights);
        take(d->bias);
      } else if (auto* b = std::get_if<BatchNorm1D<Scalar>>(&layer)) {
        take(b->gamma);
        take(b->beta);
      }
    }
  }

 private:
  std::vector<Layer<Scalar>> layers_;
};

}  // namespace ganlab::nn
