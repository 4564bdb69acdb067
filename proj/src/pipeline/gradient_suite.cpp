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

#include "ganlab/pipeline/gradient_suite.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "ganlab/nn/gradcheck.hpp"
#include "ganlab/util/errors.hpp"

namespace ganlab::pipeline {
namespace {

using nn::ActivationKind;
using nn::Index;
using nn::MatrixXd;
using nn::Mlp;
using nn::Prng;

constexpr double kKink = 1e-3;

enum class LossKind { Generic, LogitCrossEntropy, ProbCrossEntropy, Hinge };

struct Case {
  std::string name;
  Mlp<double> net;
  LossKind loss;
};

Index between(Prng& rng, Index lo, Index hi) { return lo + static_cast<Index>(rng.index(static_cast<std::uint64_t>(hi - lo + 1))); }

Mlp<double> single(Index in, Index out, std::optional<ActivationKind> act, bool batch_norm, Prng& rng) {
  std::vector<nn::Layer<double>> layers;
  layers.emplace_back(nn::DenseLayer<double>::glorot(in, out, rng));
  if (batch_norm) {
    nn::BatchNorm1D<double> bn(out);
    bn.gamma = nn::uniform_matrix<double>(1, out, 0.5, 1.5, rng);
    bn.beta = nn::uniform_matrix<double>(1, out, -0.5, 0.5, rng);
    layers.emplace_back(std::move(bn));
  }
  if (act) layers.emplace_back(nn::Activation{*act});
  return Mlp<double>(std::move(layers));
}

Mlp<double> stack(Index in, std::vector<Index> hidden, ActivationKind out_act, bool batch_norm, Prng& rng) {
  nn::MlpSpec spec;
  spec.input_dim = in;
  spec.hidden = std::move(hidden);
  spec.output_dim = 1;
  spec.output_activation = out_act;
  spec.batch_norm = batch_norm;
  return Mlp<double>::build(spec, rng);
}

Case make_case(int trial, Prng& rng) {
  const Index in = between(rng, 2, 6);
  const Index h1 = between(rng, 3, 8);
  const Index h2 = between(rng, 3, 8);
  switch (trial % 12) {
    case 0: return {"dense", single(in, h1, std::nullopt, false, rng), LossKind::Generic};
    case 1: return {"batch_norm", single(in, h1, std::nullopt, true, rng), LossKind::Generic};
    case 2: return {"relu", single(in, h1, ActivationKind::ReLU, false, rng), LossKind::Generic};
    case 3: return {"tanh", single(in, h1, ActivationKind::Tanh, false, rng), LossKind::Generic};
    case 4: return {"sigmoid", single(in, h1, ActivationKind::Sigmoid, false, rng), LossKind::Generic};
    case 5: return {"identity", single(in, h1, ActivationKind::Identity, false, rng), LossKind::Generic};
    case 6: {
      nn::MlpSpec spec;
      spec.input_dim = between(rng, 4, 8);
      spec.hidden = {h1, h2};
      spec.output_dim = in;
      spec.output_activation = ActivationKind::Tanh;
      spec.batch_norm = true;
      return {"generator", Mlp<double>::build(spec, rng), LossKind::Generic};
    }
    case 7: return {"wgan_critic", stack(in, {h1, h2}, ActivationKind::Identity, true, rng), LossKind::Generic};
    case 8: return {"vanilla_critic", stack(in, {h1, h2}, ActivationKind::Sigmoid, true, rng), LossKind::ProbCrossEntropy};
    case 9: return {"logreg", stack(in, {}, ActivationKind::Identity, false, rng), LossKind::LogitCrossEntropy};
    case 10: return {"linear_svm", stack(in, {}, ActivationKind::Identity, false, rng), LossKind::Hinge};
    default: return {"mlp_bp", stack(in, {h1, h2}, ActivationKind::Identity, false, rng), LossKind::LogitCrossEntropy};
  }
}

nn::OutputLoss<double> make_loss(LossKind kind, const MatrixXd& weights, const Eigen::VectorXd& labels) {
  switch (kind) {
    case LossKind::Generic:
      return [weights](const MatrixXd& out, MatrixXd* grad) {
        if (grad) *grad = weights + 0.1 * out;
        return (weights.array() * out.array()).sum() + 0.05 * out.squaredNorm();
      };
    case LossKind::LogitCrossEntropy:
      return [labels](const MatrixXd& out, MatrixXd* grad) {
        const double n = static_cast<double>(out.rows());
        double loss = 0.0;
        if (grad) grad->resize(out.rows(), 1);
        for (Index i = 0; i < out.rows(); ++i) {
          const double s = out(i, 0);
          loss += std::max(s, 0.0) + std::log1p(std::exp(-std::abs(s))) - labels[i] * s;
          if (grad) (*grad)(i, 0) = (nn::sigmoid(s) - labels[i]) / n;
        }
        return loss / n;
      };
    case LossKind::ProbCrossEntropy:
      return [labels](const MatrixXd& out, MatrixXd* grad) {
        const double n = static_cast<double>(out.rows());
        double loss = 0.0;
        if (grad) grad->resize(out.rows(), 1);
        for (Index i = 0; i < out.rows(); ++i) {
          const double p = out(i, 0), y = labels[i];
          loss -= y * std::log(p) + (1.0 - y) * std::log(1.0 - p);
          if (grad) (*grad)(i, 0) = (-y / p + (1.0 - y) / (1.0 - p)) / n;
        }
        return loss / n;
      };
    case LossKind::Hinge:
      return [labels](const MatrixXd& out, MatrixXd* grad) {
        const double n = static_cast<double>(out.rows());
        double loss = 0.0;
        if (grad) grad->resize(out.rows(), 1);
        for (Index i = 0; i < out.rows(); ++i) {
          const double t = labels[i] > 0.5 ? 1.0 : -1.0;
          const double slack = 1.0 - t * out(i, 0);
          loss += std::max(0.0, slack);
          if (grad) (*grad)(i, 0) = slack > 0.0 ? -t / n : 0.0;
        }
        return loss / n;
      };
  }
  throw ConfigError("unknown loss");
}

// True when the point sits well clear of every non-differentiable kink.
bool smooth_at(const Case& c, const MatrixXd& x, const Eigen::VectorXd& labels) {
  nn::ForwardTape<double> tape;
  const MatrixXd out = c.net.forward(x, &tape);
  for (std::size_t k = 0; k < c.net.layers().size(); ++k) {
    const auto* a = std::get_if<nn::Activation>(&c.net.layers()[k]);
    if (a && a->kind == ActivationKind::ReLU && (tape.inputs[k].array().abs() < kKink).any()) return false;
  }
  if (c.loss == LossKind::Hinge) {
    for (Index i = 0; i < out.rows(); ++i) {
      const double t = labels[i] > 0.5 ? 1.0 : -1.0;
      if (std::abs(1.0 - t * out(i, 0)) < kKink) return false;
    }
  }
  return true;
}

}  // namespace

GradientSuiteResult run_gradient_suite(std::uint64_t seed, int trials, double step) {
  if (trials < 1) throw ConfigError("gradient suite needs at least one trial");
  GradientSuiteResult result;
  Prng rng(seed);
  for (int t = 0; t < trials; ++t) {
    Case c = make_case(t, rng);
    // Random biases so ReLU kinks are not all at the origin.
    Eigen::VectorXd params = c.net.parameters();
    params += nn::uniform_matrix<double>(params.size(), 1, -0.1, 0.1, rng).col(0);
    c.net.set_parameters(params);

    const Index rows = between(rng, 4, 8);
    MatrixXd x;
    Eigen::VectorXd labels(rows);
    int attempts = 0;
    do {
      if (attempts++ > 1000) throw NumericError("gradient suite could not find a smooth point for " + c.name);
      x = nn::normal_matrix<double>(rows, c.net.input_dim(), rng);
      for (Index i = 0; i < rows; ++i) labels[i] = i % 2 == 0 ? 1.0 : 0.0;
      if (attempts > 1) ++result.resampled_inputs;
    } while (!smooth_at(c, x, labels));

    const MatrixXd weights = nn::normal_matrix<double>(rows, c.net.output_dim(), rng);
    const auto loss = make_loss(c.loss, weights, labels);
    GradientTrial trial;
    trial.component = c.name;
    trial.parameter_error = nn::finite_difference_check<double>(c.net, x, loss, step);
    trial.input_error = nn::finite_difference_check_input<double>(c.net, x, loss, step);
    result.max_error = std::max({result.max_error, trial.parameter_error, trial.input_error});
    result.trials.push_back(std::move(trial));
  }
  return result;
}

}  // namespace ganlab::pipeline
