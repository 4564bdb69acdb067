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

#include "ganlab/gan/model.hpp"

#include <string>

#include "ganlab/util/errors.hpp"

namespace ganlab::gan {

std::string_view to_string(GanMode mode) {
  return mode == GanMode::Vanilla ? "vanilla" : "wgan";
}

GanMode gan_mode_from_string(std::string_view name) {
  if (name == "vanilla") return GanMode::Vanilla;
  if (name == "wgan" || name == "wasserstein") return GanMode::Wasserstein;
  throw ConfigError("unknown GAN mode '" + std::string(name) + "' (expected vanilla or wgan)");
}

std::string_view to_string(NoiseDistribution distribution) {
  return distribution == NoiseDistribution::StandardNormal ? "normal" : "uniform";
}

NoiseDistribution noise_distribution_from_string(std::string_view name) {
  if (name == "normal") return NoiseDistribution::StandardNormal;
  if (name == "uniform") return NoiseDistribution::UniformMinus1To1;
  throw ConfigError("unknown noise distribution '" + std::string(name) + "' (expected normal or uniform)");
}

GanModel make_gan(Index feature_dim, GanMode mode, const NoiseSpec& noise,
                  const GanArchitecture& architecture, nn::Prng& rng) {
  if (feature_dim < 1) throw ConfigError("feature dimension must be positive");
  if (noise.dim < 1) throw ConfigError("noise dimension must be positive");
  GanModel model;
  model.mode = mode;
  model.noise = noise;
  model.generator = nn::Mlp<double>::build(
      nn::MlpSpec{.input_dim = noise.dim,
                  .hidden = architecture.generator_hidden,
                  .output_dim = feature_dim,
                  .hidden_activation = nn::ActivationKind::ReLU,
                  .output_activation = nn::ActivationKind::Tanh,
                  .batch_norm = architecture.generator_batch_norm},
      rng);
  model.critic = nn::Mlp<double>::build(
      nn::MlpSpec{.input_dim = feature_dim,
                  .hidden = architecture.critic_hidden,
                  .output_dim = 1,
                  .hidden_activation = nn::ActivationKind::ReLU,
                  .output_activation =
                      mode == GanMode::Vanilla ? nn::ActivationKind::Sigmoid : nn::ActivationKind::Identity,
                  .batch_norm = architecture.critic_batch_norm},
      rng);
  return model;
}

void validate_gan(const GanModel& model) {
  if (model.noise.dim < 1) throw DataError("noise dimension must be positive");
  if (model.generator.input_dim() != model.noise.dim) {
    throw DataError("generator input " + std::to_string(model.generator.input_dim()) +
                    " does not match noise dimension " + std::to_string(model.noise.dim));
  }
  if (model.generator.output_dim() != model.critic.input_dim()) {
    throw DataError("generator output " + std::to_string(model.generator.output_dim()) +
                    " does not match critic input " + std::to_string(model.critic.input_dim()));
  }
  if (model.critic.output_dim() != 1) throw DataError("critic must produce one score per row");
  const auto expected =
      model.mode == GanMode::Vanilla ? nn::ActivationKind::Sigmoid : nn::ActivationKind::Identity;
  if (model.critic.output_activation() != expected) {
    throw DataError("critic output activation does not match GAN mode " + std::string(to_string(model.mode)));
  }
}

void bind_model(const GanModel& model, Index feature_dim) {
  if (model.feature_dim() != feature_dim) {
    throw BindError("model bundle has feature dimension " + std::to_string(model.feature_dim()) +
                    " but the dataset has " + std::to_string(feature_dim));
  }
}

MatrixXd sample_noise(const NoiseSpec& spec, Index n, nn::Prng& rng) {
  if (n < 0) throw ConfigError("noise sample count must be nonnegative");
  if (spec.distribution == NoiseDistribution::StandardNormal) return nn::normal_matrix<double>(n, spec.dim, rng);
  return nn::uniform_matrix<double>(n, spec.dim, -1.0, 1.0, rng);
}

}  // namespace ganlab::gan
