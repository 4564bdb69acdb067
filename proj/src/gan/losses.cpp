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

#include "ganlab/gan/losses.hpp"

#include <cmath>
#include <string>

#include "ganlab/util/errors.hpp"

namespace ganlab::gan {
namespace {

void require_range(const VectorXd& v, bool zero_ok, bool one_ok, const char* what) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const double p = v[i];
    const bool ok = std::isfinite(p) && (zero_ok ? p >= 0.0 : p > 0.0) && (one_ok ? p <= 1.0 : p < 1.0);
    if (!ok) {
      throw DomainError(std::string(what) + "[" + std::to_string(i) + "] = " + std::to_string(p) +
                        " is outside the valid probability interval");
    }
  }
}

double mean_or_zero(const VectorXd& v) { return v.size() == 0 ? 0.0 : v.mean(); }

}  // namespace

double gan_value(const VectorXd& d_real, const VectorXd& d_fake) {
  require_range(d_real, false, true, "d_real");
  require_range(d_fake, true, false, "d_fake");
  if (d_real.size() == 0 || d_fake.size() == 0) throw DomainError("gan value needs non-empty inputs");
  return d_real.array().log().mean() + (1.0 - d_fake.array()).log().mean();
}

VanillaLosses vanilla_losses(const VectorXd& d_real, const VectorXd& d_fake, double label_smooth,
                             GeneratorLossForm form) {
  require_range(d_real, false, false, "d_real");
  require_range(d_fake, false, false, "d_fake");
  if (!(label_smooth > 0.5 && label_smooth <= 1.0)) throw ConfigError("label smoothing must lie in (0.5, 1]");
  const double s = label_smooth;
  VanillaLosses out;
  const VectorXd real_term = s * d_real.array().log() + (1.0 - s) * (1.0 - d_real.array()).log();
  const VectorXd fake_log1m = (1.0 - d_fake.array()).log();
  out.d_loss = -mean_or_zero(real_term) - mean_or_zero(fake_log1m);
  if (form == GeneratorLossForm::Minimax) {
    out.g_loss = mean_or_zero(fake_log1m);
  } else {
    out.g_loss = d_fake.size() == 0 ? 0.0 : -d_fake.array().log().mean();
  }
  return out;
}

WassersteinLosses wgan_losses(const VectorXd& real_scores, const VectorXd& fake_scores) {
  if (!real_scores.allFinite() || !fake_scores.allFinite()) {
    throw NumericError("critic scores contain a non-finite value");
  }
  if (real_scores.size() == 0 || fake_scores.size() == 0) throw NumericError("critic scores are empty");
  WassersteinLosses out;
  out.critic_loss = fake_scores.mean() - real_scores.mean();
  out.generator_loss = -fake_scores.mean();
  out.wasserstein_estimate = -out.critic_loss;
  return out;
}

}  // namespace ganlab::gan
