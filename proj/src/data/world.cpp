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

#include "ganlab/data/world.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>

#include "ganlab/nn/activation.hpp"
#include "ganlab/nn/prng.hpp"
#include "ganlab/util/errors.hpp"

namespace ganlab::data {
namespace {

using Array14 = std::array<double, kNumericIndicators>;

// Indicator order: total_profit, operating_margin, capital_cost_profit_margin,
// return_on_assets, net_profit_growth_rate, total_assets,
// development_capability, operating_revenue_growth_rate,
// total_asset_growth_rate, current_ratio, quick_ratio,
// inventory_turnover_rate, accounts_receivable_turnover_rate,
// total_asset_turnover_rate. Currency figures are in millions.
constexpr Array14 kSteelMean{120, 0.06, 0.08, 0.04, 0.05, 5000, 0.50, 0.06, 0.05, 1.1, 0.7, 6.0, 8.0, 0.7};
constexpr Array14 kSteelStd{60, 0.04, 0.05, 0.03, 0.12, 2000, 0.15, 0.10, 0.08, 0.30, 0.25, 1.5, 2.0, 0.2};
constexpr Array14 kPharmaMean{60, 0.09, 0.12, 0.06, 0.08, 1800, 0.60, 0.10, 0.08, 1.4, 1.0, 5.0, 4.0, 1.1};
constexpr Array14 kPharmaStd{30, 0.04, 0.05, 0.03, 0.10, 700, 0.15, 0.08, 0.06, 0.30, 0.25, 1.2, 1.0, 0.25};
constexpr Array14 kShopMean{40, 0.05, 0.10, 0.05, 0.15, 900, 0.70, 0.20, 0.15, 1.3, 1.0, 10.0, 15.0, 1.6};
constexpr Array14 kShopStd{35, 0.04, 0.05, 0.03, 0.20, 500, 0.15, 0.15, 0.12, 0.30, 0.25, 3.0, 4.0, 0.4};

// Standardized log-odds weights; healthier indicators lower default risk.
constexpr Array14 kCoefficients{-0.4, -0.5, -0.3, -0.6, -0.3, -0.2, -0.2,
                                -0.3, -0.1, -0.5, -0.4, -0.2, -0.3, -0.2};

nn::MatrixXd correlation() {
  const auto& schema = IndicatorSchema::standard();
  nn::MatrixXd r = nn::MatrixXd::Identity(kNumericIndicators, kNumericIndicators);
  for (std::size_t i = 0; i < kNumericIndicators; ++i) {
    for (std::size_t j = 0; j < kNumericIndicators; ++j) {
      if (i == j) continue;
      const auto ci = schema.numeric()[i].category;
      const auto cj = schema.numeric()[j].category;
      double rho = 0.0;
      if (ci == cj) {
        rho = 0.4;
      } else if ((ci == IndicatorCategory::Profitability && cj == IndicatorCategory::Liquidity) ||
                 (ci == IndicatorCategory::Liquidity && cj == IndicatorCategory::Profitability)) {
        rho = 0.2;
      }
      r(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rho;
    }
  }
  return r;
}

IndustryProfile make_profile(const Array14& mean, const Array14& std) {
  const nn::MatrixXd r = correlation();
  IndustryProfile p;
  p.mean = mean;
  p.covariance.resize(kNumericIndicators, kNumericIndicators);
  for (std::size_t i = 0; i < kNumericIndicators; ++i)
    for (std::size_t j = 0; j < kNumericIndicators; ++j)
      p.covariance(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          std[i] * std[j] * r(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
  return p;
}

// Lower-triangular factor L with L L^T = covariance. Falls back to a
// symmetric square root for semi-definite matrices.
nn::MatrixXd covariance_factor(const nn::MatrixXd& covariance, std::size_t industry) {
  const Eigen::MatrixXd cov = covariance;
  Eigen::LLT<Eigen::MatrixXd> llt(cov);
  if (llt.info() == Eigen::Success) return llt.matrixL().toDenseMatrix();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(cov);
  const double tol = 1e-10 * std::max(1.0, eig.eigenvalues().cwiseAbs().maxCoeff());
  if (eig.info() != Eigen::Success || eig.eigenvalues().minCoeff() < -tol) {
    throw ConfigError("industry " + std::to_string(industry) + ": covariance is not positive semi-definite");
  }
  const Eigen::VectorXd root = eig.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  return eig.eigenvectors() * root.asDiagonal() * eig.eigenvectors().transpose();
}

// E[sigmoid(a + s Z + b)] for Z ~ N(0, 1), composite Simpson on [-8, 8].
double expected_sigmoid(double a, double s, double b) {
  constexpr int kIntervals = 800;
  constexpr double kLo = -8.0, kHi = 8.0;
  const double h = (kHi - kLo) / kIntervals;
  double total = 0.0;
  for (int i = 0; i <= kIntervals; ++i) {
    const double z = kLo + h * i;
    const double weight = (i == 0 || i == kIntervals) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
    const double pdf = std::exp(-0.5 * z * z) / std::sqrt(2.0 * std::numbers::pi);
    total += weight * pdf * nn::sigmoid(a + s * z + b);
  }
  return total * h / 3.0;
}

}  // namespace

WorldConfig default_world_config() {
  WorldConfig config;
  config.profiles = {make_profile(kSteelMean, kSteelStd), make_profile(kPharmaMean, kPharmaStd),
                     make_profile(kShopMean, kShopStd)};
  config.coefficients = kCoefficients;
  return config;
}

WorldConfig strong_signal_world_config() {
  WorldConfig config = default_world_config();
  for (double& w : config.coefficients) w *= 3.0;
  config.n = 3000;
  config.base_default_rate = 0.2;
  return config;
}

WorldConfig no_signal_world_config() {
  WorldConfig config = default_world_config();
  config.coefficients.fill(0.0);
  config.base_default_rate = 0.3;
  // contract_status would otherwise leak the label.
  config.breach_prob_default = config.breach_prob_healthy;
  return config;
}

void validate_world_config(const WorldConfig& config) {
  if (config.n == 0) throw ConfigError("world size n must be positive");
  double total = 0.0;
  for (double w : config.industry_mix) {
    if (!(w >= 0.0)) throw ConfigError("industry mix weights must be nonnegative");
    total += w;
  }
  if (std::abs(total - 1.0) > 1e-12) throw ConfigError("industry mix weights must sum to 1");
  if (!(config.base_default_rate > 0.0 && config.base_default_rate < 1.0)) {
    throw ConfigError("base default rate must lie in (0, 1)");
  }
  for (double p : {config.breach_prob_default, config.breach_prob_healthy}) {
    if (!(p >= 0.0 && p <= 1.0)) throw ConfigError("breach probabilities must lie in [0, 1]");
  }
  for (std::size_t k = 0; k < kIndustryCount; ++k) {
    const auto& cov = config.profiles[k].covariance;
    if (cov.rows() != static_cast<Eigen::Index>(kNumericIndicators) || cov.cols() != cov.rows()) {
      throw ConfigError("industry " + std::to_string(k) + ": covariance must be " +
                        std::to_string(kNumericIndicators) + " x " + std::to_string(kNumericIndicators));
    }
    if (!cov.allFinite() || (cov - cov.transpose()).cwiseAbs().maxCoeff() > 1e-12 * std::max(1.0, cov.cwiseAbs().maxCoeff())) {
      throw ConfigError("industry " + std::to_string(k) + ": covariance is not symmetric");
    }
    covariance_factor(cov, k);
  }
}

ReferenceScale reference_scale(const WorldConfig& config) {
  ReferenceScale rs;
  for (std::size_t j = 0; j < kNumericIndicators; ++j) {
    double center = 0.0;
    for (std::size_t k = 0; k < kIndustryCount; ++k) center += config.industry_mix[k] * config.profiles[k].mean[j];
    double var = 0.0;
    for (std::size_t k = 0; k < kIndustryCount; ++k) {
      const auto jj = static_cast<Eigen::Index>(j);
      const double d = config.profiles[k].mean[j] - center;
      var += config.industry_mix[k] * (config.profiles[k].covariance(jj, jj) + d * d);
    }
    rs.center[j] = center;
    rs.scale[j] = var > 0.0 ? std::sqrt(var) : 1.0;
  }
  return rs;
}

double calibrate_intercept(const WorldConfig& config) {
  const ReferenceScale rs = reference_scale(config);
  Eigen::VectorXd v(kNumericIndicators);
  for (std::size_t j = 0; j < kNumericIndicators; ++j) v[static_cast<Eigen::Index>(j)] = config.coefficients[j] / rs.scale[j];
  std::array<double, kIndustryCount> offset{}, spread{};
  for (std::size_t k = 0; k < kIndustryCount; ++k) {
    double a = 0.0;
    for (std::size_t j = 0; j < kNumericIndicators; ++j)
      a += v[static_cast<Eigen::Index>(j)] * (config.profiles[k].mean[j] - rs.center[j]);
    offset[k] = a;
    const Eigen::MatrixXd cov = config.profiles[k].covariance;
    spread[k] = std::sqrt(std::max(0.0, v.dot(cov * v)));
  }
  auto rate = [&](double b) {
    double total = 0.0;
    for (std::size_t k = 0; k < kIndustryCount; ++k) {
      if (config.industry_mix[k] > 0.0) total += config.industry_mix[k] * expected_sigmoid(offset[k], spread[k], b);
    }
    return total;
  };
  double lo = -40.0, hi = 40.0;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    (rate(mid) < config.base_default_rate ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

double effective_intercept(const WorldConfig& config) {
  if (config.intercept) return *config.intercept;
  bool all_zero = true;
  for (double w : config.coefficients) all_zero = all_zero && w == 0.0;
  if (all_zero) return std::log(config.base_default_rate / (1.0 - config.base_default_rate));
  return calibrate_intercept(config);
}

Dataset make_reference_world(const WorldConfig& config) {
  validate_world_config(config);
  const ReferenceScale rs = reference_scale(config);
  const double intercept = effective_intercept(config);
  std::array<nn::MatrixXd, kIndustryCount> factors;
  for (std::size_t k = 0; k < kIndustryCount; ++k) factors[k] = covariance_factor(config.profiles[k].covariance, k);
  std::array<double, kIndustryCount> cumulative{};
  double running = 0.0;
  std::size_t last_positive = 0;
  for (std::size_t k = 0; k < kIndustryCount; ++k) {
    running += config.industry_mix[k];
    cumulative[k] = running;
    if (config.industry_mix[k] > 0.0) last_positive = k;
  }

  nn::Prng rng(config.seed);
  std::vector<FirmRecord> records;
  records.reserve(config.n);
  Eigen::VectorXd z(kNumericIndicators);
  for (std::size_t i = 0; i < config.n; ++i) {
    FirmRecord r;
    char id[16];
    std::snprintf(id, sizeof(id), "F%06zu", i + 1);
    r.firm_id = id;

    const double u = rng.uniform();
    std::size_t k = last_positive;
    for (std::size_t c = 0; c < kIndustryCount; ++c) {
      if (config.industry_mix[c] > 0.0 && u < cumulative[c]) {
        k = c;
        break;
      }
    }
    r.industry = static_cast<Industry>(k);

    for (Eigen::Index j = 0; j < z.size(); ++j) z[j] = rng.normal();
    const Eigen::VectorXd x = factors[k] * z;
    double logit = intercept;
    for (std::size_t j = 0; j < kNumericIndicators; ++j) {
      r.indicators[j] = config.profiles[k].mean[j] + x[static_cast<Eigen::Index>(j)];
      logit += config.coefficients[j] * (r.indicators[j] - rs.center[j]) / rs.scale[j];
    }
    const double p = nn::sigmoid(logit);
    r.ground_truth_p = p;
    r.label = rng.uniform() < p ? 1 : 0;
    const double breach = r.label == 1 ? config.breach_prob_default : config.breach_prob_healthy;
    r.contract_status = rng.uniform() < breach ? 0 : 1;
    records.push_back(std::move(r));
  }
  return Dataset(std::move(records));
}

}  // namespace ganlab::data
