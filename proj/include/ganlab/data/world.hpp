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

#include <array>
#include <cstdint>
#include <optional>

#include "ganlab/data/dataset.hpp"
#include "ganlab/nn/matrix.hpp"

namespace ganlab::data {

struct IndustryProfile {
  std::array<double, kNumericIndicators> mean{};
  nn::MatrixXd covariance;  // kNumericIndicators x kNumericIndicators, symmetric PSD
};

// Seeded synthetic population of firms with known default probabilities.
//
// Default probability is sigmoid(w . s(x) + b), where s() standardizes each
// indicator by the exact mean and standard deviation of the industry
// mixture (see reference_scale). When `intercept` is unset, b is solved so
// that the population default rate equals base_default_rate.
struct WorldConfig {
  std::size_t n = 2000;
  std::array<double, kIndustryCount> industry_mix{0.4, 0.3, 0.3};
  double base_default_rate = 0.05;
  std::array<IndustryProfile, kIndustryCount> profiles;
  std::array<double, kNumericIndicators> coefficients{};
  std::optional<double> intercept;
  double breach_prob_default = 0.35;
  double breach_prob_healthy = 0.08;
  std::uint64_t seed = 2025;
};

struct ReferenceScale {
  std::array<double, kNumericIndicators> center{};
  std::array<double, kNumericIndicators> scale{};
};

// Moderate signal, 5% defaults, n = 2000.
WorldConfig default_world_config();
// Coefficients scaled up so the Bayes-optimal scorer separates classes well.
WorldConfig strong_signal_world_config();
// Labels independent of features.
WorldConfig no_signal_world_config();

void validate_world_config(const WorldConfig& config);

// Mean and standard deviation of each indicator under the industry mixture.
ReferenceScale reference_scale(const WorldConfig& config);

// Intercept b that makes the expected default probability equal to
// base_default_rate (Simpson quadrature per industry + bisection).
double calibrate_intercept(const WorldConfig& config);

double effective_intercept(const WorldConfig& config);

// Sampling order, per record i = 0..n-1, from one Prng(seed) stream:
//   1. u = uniform(); industry = first k with u < cumulative mix weight k
//   2. 14 normal() draws z; x = mean_k + L_k z  (L_k the Cholesky factor)
//   3. p = sigmoid(w . s(x) + b)
//   4. label = uniform() < p
//   5. breached = uniform() < (label ? breach_prob_default : breach_prob_healthy)
// firm_id is "F" followed by i + 1 zero-padded to six digits. Each record
// keeps p as ground_truth_p.
Dataset make_reference_world(const WorldConfig& config);

}  // namespace ganlab::data
