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

#include <gtest/gtest.h>

#include <cmath>
#include <cstring>
#include <functional>

#include "ganlab/nn/adam.hpp"
#include "ganlab/nn/batchnorm.hpp"
#include "ganlab/nn/clip.hpp"
#include "ganlab/nn/dense.hpp"
#include "ganlab/nn/gradcheck.hpp"
#include "ganlab/nn/mlp.hpp"
#include "ganlab/nn/prng.hpp"

namespace ganlab::nn {
namespace {

// Central differences of a scalar function of a matrix, written out here so
// the checks below never go through the library's own gradient checker.
MatrixXd central_differences(const std::function<double(const MatrixXd&)>& f, MatrixXd at,
                             double step) {
  MatrixXd out(at.rows(), at.cols());
  for (Index r = 0; r < at.rows(); ++r) {
    for (Index c = 0; c < at.cols(); ++c) {
      const double saved = at(r, c);
      at(r, c) = saved + step;
      const double plus = f(at);
      at(r, c) = saved - step;
      const double minus = f(at);
      at(r, c) = saved;
      out(r, c) = (plus - minus) / (2 * step);
    }
  }
  return out;
}

double max_rel(const MatrixXd& analytic, const MatrixXd& numeric) {
  double worst = 0;
  for (Index i = 0; i < analytic.size(); ++i) {
    const double a = analytic.data()[i];
    worst = std::max(worst, std::abs(a - numeric.data()[i]) / std::max(1.0, std::abs(a)));
  }
  return worst;
}

TEST(Prng, IdenticalSeedsGiveIdenticalStreams) {
  Prng a(1234), b(1234);
  for (int i = 0; i < 1000; ++i) ASSERT_EQ(a.next_u64(), b.next_u64());
  Prng c(1234), d(1234);
  for (int i = 0; i < 1000; ++i) ASSERT_EQ(c.normal(), d.normal());
}

TEST(Prng, UniformStaysInUnitInterval) {
  Prng rng(9);
  for (int i = 0; i < 10000; ++i) {
    const double u = rng.uniform();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    const double v = rng.uniform_open_low();
    ASSERT_GT(v, 0.0);
    ASSERT_LE(v, 1.0);
  }
}

TEST(Prng, IndexIsInRange) {
  Prng rng(3);
  for (std::uint64_t n : {1u, 2u, 7u, 1000u}) {
    for (int i = 0; i < 500; ++i) ASSERT_LT(rng.index(n), n);
  }
}

TEST(Dense, IdentityWeightsPassInputThrough) {
  DenseLayer<double> layer(2, 2);
  layer.weights = MatrixXd::Identity(2, 2);
  MatrixXd x(1, 2);
  x << 3, -1;
  const MatrixXd y = dense_forward(layer, x);
  EXPECT_DOUBLE_EQ(y(0, 0), 3);
  EXPECT_DOUBLE_EQ(y(0, 1), -1);
}

TEST(Dense, ScalarAffine) {
  DenseLayer<double> layer(1, 1);
  layer.weights(0, 0) = 2;
  layer.bias(0) = 1;
  MatrixXd x(1, 1);
  x << 3;
  EXPECT_DOUBLE_EQ(dense_forward(layer, x)(0, 0), 7);
}

TEST(Dense, ShapeMismatchNamesBothShapes) {
  DenseLayer<double> layer(4, 3);
  MatrixXd x(2, 5);
  try {
    dense_forward(layer, x);
    FAIL() << "expected ShapeError";
  } catch (const ShapeError& e) {
    const std::string msg = e.what();
    EXPECT_NE(msg.find("(2 x 5)"), std::string::npos) << msg;
    EXPECT_NE(msg.find("(4 x 3)"), std::string::npos) << msg;
  }
}

TEST(Dense, WeightGradientMatchesFiniteDifferences) {
  Prng rng(11);
  DenseLayer<double> layer = DenseLayer<double>::glorot(4, 3, rng);
  layer.bias = normal_matrix<double>(1, 3, rng);
  const MatrixXd x = normal_matrix<double>(2, 4, rng);
  const MatrixXd probe = normal_matrix<double>(2, 3, rng);
  // loss = sum(probe .* y), so d loss / d y = probe.
  const DenseResult<double> res = dense_forward_backward(layer, x, &probe);
  ASSERT_TRUE(res.grads.has_value());

  const MatrixXd numeric_w = central_differences(
      [&](const MatrixXd& w) {
        DenseLayer<double> l = layer;
        l.weights = w;
        return dense_forward(l, x).cwiseProduct(probe).sum();
      },
      layer.weights, 1e-5);
  EXPECT_LT(max_rel(res.grads->d_weights, numeric_w), 1e-6);

  const MatrixXd numeric_x = central_differences(
      [&](const MatrixXd& in) { return dense_forward(layer, in).cwiseProduct(probe).sum(); }, x,
      1e-5);
  EXPECT_LT(max_rel(res.grads->d_input, numeric_x), 1e-6);

  const MatrixXd numeric_b = central_differences(
      [&](const MatrixXd& b) {
        DenseLayer<double> l = layer;
        l.bias = b;
        return dense_forward(l, x).cwiseProduct(probe).sum();
      },
      MatrixXd(layer.bias), 1e-5);
  EXPECT_LT(max_rel(MatrixXd(res.grads->d_bias), numeric_b), 1e-6);
}

TEST(BatchNorm, StandardizesColumnWithPopulationVariance) {
  BatchNorm1D<double> bn(1, 0.0);
  MatrixXd x(3, 1);
  x << 1, 2, 3;
  const MatrixXd y = batchnorm_forward(bn, x);
  EXPECT_NEAR(y(0, 0), -1.224745, 1e-6);
  EXPECT_NEAR(y(1, 0), 0.0, 1e-12);
  EXPECT_NEAR(y(2, 0), 1.224745, 1e-6);
}

TEST(BatchNorm, ConstantColumnCollapsesToBeta) {
  BatchNorm1D<double> bn(1);
  bn.beta(0) = 7;
  MatrixXd x = MatrixXd::Constant(3, 1, 5.0);
  const MatrixXd y = batchnorm_forward(bn, x);
  for (Index r = 0; r < 3; ++r) EXPECT_DOUBLE_EQ(y(r, 0), 7.0);
}

TEST(BatchNorm, ZeroEpsilonConstantColumnStaysFinite) {
  BatchNorm1D<double> bn(1, 0.0);
  MatrixXd x = MatrixXd::Constant(4, 1, 2.0);
  EXPECT_TRUE(batchnorm_forward(bn, x).allFinite());
}

TEST(BatchNorm, TrainModeRejectsSingleRow) {
  BatchNorm1D<double> bn(2);
  MatrixXd x(1, 2);
  x << 1, 2;
  EXPECT_THROW(batchnorm_forward(bn, x), BatchTooSmallError);
  bn.mode = NormMode::Infer;
  EXPECT_NO_THROW(batchnorm_forward(bn, x));
}

TEST(BatchNorm, BackwardMatchesFiniteDifferences) {
  Prng rng(5);
  BatchNorm1D<double> bn(4);
  bn.gamma = normal_matrix<double>(1, 4, rng);
  bn.beta = normal_matrix<double>(1, 4, rng);
  const MatrixXd x = normal_matrix<double>(8, 4, rng) * 2.0;
  const MatrixXd probe = normal_matrix<double>(8, 4, rng);
  BatchNormCache<double> cache;
  batchnorm_forward(bn, x, &cache);
  const BatchNormGrads<double> g = batchnorm_backward(bn, cache, probe);

  auto loss_x = [&](const MatrixXd& in) { return batchnorm_forward(bn, in).cwiseProduct(probe).sum(); };
  EXPECT_LT(max_rel(g.d_input, central_differences(loss_x, x, 1e-5)), 1e-5);

  auto loss_gamma = [&](const MatrixXd& gm) {
    BatchNorm1D<double> l = bn;
    l.gamma = gm;
    return batchnorm_forward(l, x).cwiseProduct(probe).sum();
  };
  EXPECT_LT(max_rel(MatrixXd(g.d_gamma), central_differences(loss_gamma, MatrixXd(bn.gamma), 1e-5)),
            1e-5);
}

TEST(BatchNorm, InferModeBackwardMatchesFiniteDifferences) {
  Prng rng(6);
  BatchNorm1D<double> bn(3);
  bn.running_mean = normal_matrix<double>(1, 3, rng);
  bn.running_var = RowVectorXd::Constant(3, 2.5);
  bn.gamma = normal_matrix<double>(1, 3, rng);
  bn.mode = NormMode::Infer;
  const MatrixXd x = normal_matrix<double>(5, 3, rng);
  const MatrixXd probe = normal_matrix<double>(5, 3, rng);
  BatchNormCache<double> cache;
  batchnorm_forward(bn, x, &cache);
  const auto g = batchnorm_backward(bn, cache, probe);
  auto loss_x = [&](const MatrixXd& in) { return batchnorm_forward(bn, in).cwiseProduct(probe).sum(); };
  EXPECT_LT(max_rel(g.d_input, central_differences(loss_x, x, 1e-5)), 1e-6);
}

TEST(BatchNorm, TrainOutputIsStandardizedBeforeAffine) {
  Prng rng(21);
  // epsilon = 0 so the check measures the standardization itself.
  for (int trial = 0; trial < 20; ++trial) {
    BatchNorm1D<double> bn(5, 0.0);
    const MatrixXd x = normal_matrix<double>(16, 5, rng) * 3.0 + MatrixXd::Constant(16, 5, 4.0);
    const MatrixXd y = batchnorm_forward(bn, x);
    for (Index c = 0; c < 5; ++c) {
      const double mean = y.col(c).mean();
      const double var = (y.col(c).array() - mean).square().mean();
      EXPECT_NEAR(mean, 0.0, 1e-9);
      EXPECT_NEAR(var, 1.0, 1e-6);
    }
  }
}

TEST(BatchNorm, RunningStatsBlendWithMomentum) {
  BatchNorm1D<double> bn(1);
  MatrixXd x(2, 1);
  x << 1, 3;  // mean 2, population variance 1
  batchnorm_forward_backward(bn, x);
  EXPECT_NEAR(bn.running_mean(0), 0.1 * 2.0, 1e-15);
  EXPECT_NEAR(bn.running_var(0), 0.9 * 1.0 + 0.1 * 1.0, 1e-15);
}

// Reference Adam written from the textbook recurrences.
double scripted_adam(double param, double grad, int steps, double lr) {
  const double b1 = 0.9, b2 = 0.999, eps = 1e-8;
  double m = 0, v = 0;
  for (int t = 1; t <= steps; ++t) {
    m = b1 * m + (1 - b1) * grad;
    v = b2 * v + (1 - b2) * grad * grad;
    const double mh = m / (1 - std::pow(b1, t));
    const double vh = v / (1 - std::pow(b2, t));
    param = param - lr * mh / (std::sqrt(vh) + eps);
  }
  return param;
}

TEST(Adam, ZeroGradientLeavesParametersAndAdvancesStep) {
  AdamState<double> state(3, 2e-4);
  VectorXd p(3);
  p << 1, -2, 3;
  const VectorXd before = p;
  for (int i = 0; i < 5; ++i) {
    adam_step<double>(p, VectorXd::Zero(3), state);
    EXPECT_EQ(state.step_count, static_cast<std::uint64_t>(i + 1));
    EXPECT_EQ(p, before);
  }
}

TEST(Adam, FirstStepIsLearningRateTimesSign) {
  AdamState<double> state(1, 0.0002);
  VectorXd p = VectorXd::Zero(1);
  VectorXd g(1);
  g << 0.5;
  adam_step<double>(p, g, state);
  // eps_hat perturbs the step by lr * eps_hat / |g| = 4e-12.
  EXPECT_NEAR(p[0], -0.0002, 1e-11);
}

TEST(Adam, TwoStepsMatchScriptedReference) {
  AdamState<double> state(2, 2e-4);
  VectorXd p(2);
  p << 0.3, -0.7;
  const VectorXd g = VectorXd::Constant(2, 1.0);
  adam_step<double>(p, g, state);
  adam_step<double>(p, g, state);
  EXPECT_NEAR(p[0], scripted_adam(0.3, 1.0, 2, 2e-4), 1e-12);
  EXPECT_NEAR(p[1], scripted_adam(-0.7, 1.0, 2, 2e-4), 1e-12);
}

TEST(Adam, NonFiniteGradientNamesIndex) {
  AdamState<double> state(3, 1e-3);
  VectorXd p = VectorXd::Zero(3);
  VectorXd g(3);
  g << 0, std::nan(""), 0;
  try {
    adam_step<double>(p, g, state);
    FAIL();
  } catch (const NumericError& e) {
    EXPECT_NE(std::string(e.what()).find("index 1"), std::string::npos);
  }
  EXPECT_EQ(state.step_count, 0u);
}

TEST(Clip, ClampsOutliersOnly) {
  VectorXd p(3);
  p << 0.02, -0.005, 0.01;
  clip_weights<double>(p, 0.01);
  EXPECT_DOUBLE_EQ(p[0], 0.01);
  EXPECT_DOUBLE_EQ(p[1], -0.005);
  EXPECT_DOUBLE_EQ(p[2], 0.01);
}

TEST(Clip, InsideValuesAreBitwiseUnchanged) {
  Prng rng(2);
  VectorXd p(50);
  for (Index i = 0; i < p.size(); ++i) p[i] = rng.uniform(-0.01, 0.01);
  const VectorXd before = p;
  clip_weights<double>(p, 0.01);
  EXPECT_EQ(0, std::memcmp(p.data(), before.data(), sizeof(double) * 50));
}

TEST(Clip, CountOfClampedEntriesMatchesBruteForce) {
  Prng rng(77);
  VectorXd p(1000);
  for (Index i = 0; i < p.size(); ++i) p[i] = rng.uniform(-1.0, 1.0);
  int expected_at_bound = 0;
  for (Index i = 0; i < p.size(); ++i) expected_at_bound += std::abs(p[i]) >= 0.01 ? 1 : 0;
  clip_weights<double>(p, 0.01);
  int at_bound = 0;
  for (Index i = 0; i < p.size(); ++i) at_bound += std::abs(p[i]) == 0.01 ? 1 : 0;
  EXPECT_EQ(p.cwiseAbs().maxCoeff(), 0.01);
  EXPECT_EQ(at_bound, expected_at_bound);
}

TEST(Clip, IsIdempotent) {
  Prng rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    VectorXd p(100);
    for (Index i = 0; i < p.size(); ++i) p[i] = rng.normal();
    const VectorXd once = clipped<double>(p, 0.3);
    EXPECT_EQ(clipped<double>(once, 0.3), once);
  }
}

TEST(Clip, NonPositiveBoundIsConfigError) {
  VectorXd p = VectorXd::Zero(2);
  EXPECT_THROW(clip_weights<double>(p, 0.0), ConfigError);
  EXPECT_THROW(clip_weights<double>(p, -1.0), ConfigError);
}

OutputLoss<double> half_squared_norm() {
  return [](const MatrixXd& out, MatrixXd* grad) {
    if (grad != nullptr) *grad = out;
    return 0.5 * out.squaredNorm();
  };
}

TEST(GradCheck, QuadraticLossIsExact) {
  Prng rng(1);
  Mlp<double> model({DenseLayer<double>::glorot(3, 2, rng)});
  const MatrixXd x = normal_matrix<double>(4, 3, rng);
  EXPECT_LT(finite_difference_check(model, x, half_squared_norm(), 1e-5), 1e-8);
}

TEST(GradCheck, TwoLayerReluAgreesAtTwoStepSizes) {
  Prng rng(4);
  MlpSpec spec{.input_dim = 3, .hidden = {5}, .output_dim = 2};
  const Mlp<double> model = Mlp<double>::build(spec, rng);
  MatrixXd x = normal_matrix<double>(6, 3, rng);
  // Keep pre-activations away from the ReLU kink.
  ForwardTape<double> tape;
  model.forward(x, &tape);
  ASSERT_GT(tape.inputs[1].cwiseAbs().minCoeff(), 1e-3);
  const double coarse = finite_difference_check(model, x, half_squared_norm(), 1e-4);
  const double fine = finite_difference_check(model, x, half_squared_norm(), 1e-6);
  EXPECT_LT(coarse, 1e-5);
  EXPECT_LT(fine, 1e-5);
}

TEST(GradCheck, CorruptedGradientIsDetected) {
  Prng rng(4);
  MlpSpec spec{.input_dim = 3, .hidden = {5}, .output_dim = 2};
  Mlp<double> model = Mlp<double>::build(spec, rng);
  const MatrixXd x = normal_matrix<double>(6, 3, rng) * 2.0;
  VectorXd analytic = analytic_parameter_gradient(model, x, half_squared_norm());
  Index worst = 0;
  analytic.cwiseAbs().maxCoeff(&worst);
  ASSERT_GT(std::abs(analytic[worst]), 0.4);
  analytic[worst] *= 2;
  Mlp<double> probe = model;
  auto f = [&](const VectorXd& params) {
    probe.set_parameters(params);
    return 0.5 * probe.forward(x).squaredNorm();
  };
  EXPECT_GT(max_relative_error<double>(f, model.parameters(), analytic, 1e-5), 0.4);
}

TEST(Mlp, ParameterRoundTripIsExact) {
  Prng rng(12);
  MlpSpec spec{.input_dim = 4, .hidden = {6, 5}, .output_dim = 2, .batch_norm = true};
  Mlp<double> model = Mlp<double>::build(spec, rng);
  const VectorXd p = model.parameters();
  EXPECT_EQ(p.size(), model.parameter_count());
  VectorXd q = p.array() + 1.0;
  model.set_parameters(q);
  EXPECT_EQ(model.parameters(), q);
  EXPECT_THROW(model.set_parameters(VectorXd::Zero(3)), ShapeError);
}

TEST(Mlp, BuildIsDeterministicPerSeed) {
  MlpSpec spec{.input_dim = 4, .hidden = {8}, .output_dim = 1, .batch_norm = true};
  Prng a(99), b(99);
  EXPECT_EQ(Mlp<double>::build(spec, a).parameters(), Mlp<double>::build(spec, b).parameters());
}

TEST(Mlp, BatchNormNetworkGradientMatches) {
  Prng rng(31);
  MlpSpec spec{.input_dim = 3,
               .hidden = {4, 4},
               .output_dim = 2,
               .hidden_activation = ActivationKind::Tanh,
               .output_activation = ActivationKind::Sigmoid,
               .batch_norm = true};
  const Mlp<double> model = Mlp<double>::build(spec, rng);
  const MatrixXd x = normal_matrix<double>(7, 3, rng);
  EXPECT_LT(finite_difference_check(model, x, half_squared_norm(), 1e-5), 1e-6);
  EXPECT_LT(finite_difference_check_input(model, x, half_squared_norm(), 1e-5), 1e-6);
}

TEST(Activation, RangesHold) {
  Prng rng(17);
  const MatrixXd x = normal_matrix<double>(50, 4, rng) * 5.0;
  const MatrixXd relu = activation_forward(ActivationKind::ReLU, x);
  const MatrixXd tanh = activation_forward(ActivationKind::Tanh, x);
  const MatrixXd sig = activation_forward(ActivationKind::Sigmoid, x);
  EXPECT_GE(relu.minCoeff(), 0.0);
  EXPECT_GT(tanh.minCoeff(), -1.0);
  EXPECT_LT(tanh.maxCoeff(), 1.0);
  EXPECT_GT(sig.minCoeff(), 0.0);
  EXPECT_LT(sig.maxCoeff(), 1.0);
  EXPECT_EQ(activation_forward(ActivationKind::Identity, x), x);
}

}  // namespace
}  // namespace ganlab::nn
