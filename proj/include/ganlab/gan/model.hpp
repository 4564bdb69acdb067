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

#include <string_view>
#include <vector>

#include "ganlab/nn/mlp.hpp"
#include "ganlab/nn/prng.hpp"

namespace ganlab::gan {

using nn::Index;
using nn::MatrixXd;

enum class GanMode { Vanilla, Wasserstein };

enum class NoiseDistribution { StandardNormal, UniformMinus1To1 };

struct NoiseSpec {
  Index dim = 32;
  NoiseDistribution distribution = NoiseDistribution::StandardNormal;

  bool operator==(const NoiseSpec&) const = default;
};

// Hidden widths of both networks. Batch normalization follows every hidden
// dense layer of a network when its flag is set.
struct GanArchitecture {
  std::vector<Index> generator_hidden{64, 64};
  std::vector<Index> critic_hidden{64, 32};
  bool generator_batch_norm = true;
  bool critic_batch_norm = true;
};

// Generator maps noise to standardized feature rows through a Tanh output;
// the critic scores feature rows, ending in Sigmoid (Vanilla) or Identity
// (Wasserstein).
struct GanModel {
  nn::Mlp<double> generator;
  nn::Mlp<double> critic;
  GanMode mode = GanMode::Wasserstein;
  NoiseSpec noise;

  Index feature_dim() const { return generator.output_dim(); }
};

std::string_view to_string(GanMode mode);
GanMode gan_mode_from_string(std::string_view name);
std::string_view to_string(NoiseDistribution distribution);
NoiseDistribution noise_distribution_from_string(std::string_view name);

GanModel make_gan(Index feature_dim, GanMode mode, const NoiseSpec& noise,
                  const GanArchitecture& architecture, nn::Prng& rng);

// Throws DataError when the generator/critic shapes or output activations
// disagree with the mode and noise spec.
void validate_gan(const GanModel& model);

// Throws BindError when the model was built for a different feature count.
void bind_model(const GanModel& model, Index feature_dim);

MatrixXd sample_noise(const NoiseSpec& spec, Index n, nn::Prng& rng);

}  // namespace ganlab::gan
