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

#include "ganlab/nn/matrix.hpp"

namespace ganlab::gan {

using nn::VectorXd;

enum class GeneratorLossForm {
  Minimax,        // g_loss = mean(log(1 - D(G(z)))), the printed minimax objective
  NonSaturating,  // g_loss = -mean(log D(G(z)))
};

// Minimax value mean(log d_real) + mean(log(1 - d_fake)). d_real entries must
// lie in (0, 1] and d_fake entries in [0, 1); anything else is a DomainError.
double gan_value(const VectorXd& d_real, const VectorXd& d_fake);

struct VanillaLosses {
  double d_loss = 0.0;
  double g_loss = 0.0;
};

// Discriminator cross-entropy with real targets smoothed to `label_smooth`,
// plus the generator loss in the requested form. Probabilities must lie in
// (0, 1). Either vector may be empty, in which case its term is omitted.
VanillaLosses vanilla_losses(const VectorXd& d_real, const VectorXd& d_fake, double label_smooth,
                             GeneratorLossForm form);

struct WassersteinLosses {
  double critic_loss = 0.0;
  double generator_loss = 0.0;
  double wasserstein_estimate = 0.0;
};

WassersteinLosses wgan_losses(const VectorXd& real_scores, const VectorXd& fake_scores);

}  // namespace ganlab::gan
