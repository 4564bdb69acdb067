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

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ganlab/classifiers/classifier.hpp"
#include "ganlab/data/world.hpp"
#include "ganlab/gan/model.hpp"
#include "ganlab/gan/trainer.hpp"

namespace ganlab::pipeline {

inline constexpr std::string_view kSeedEnvVar = "SCF_GANLAB_SEED";

struct ExperimentConfig {
  std::string world_preset = "default";  // default | strong_signal | no_signal
  data::WorldConfig world = data::default_world_config();
  double signal_scale = 1.0;  // multiplies the preset's logistic coefficients
  gan::GanMode gan_mode = gan::GanMode::Wasserstein;
  gan::TrainConfig gan;
  gan::NoiseSpec noise;
  gan::GanArchitecture architecture;
  std::vector<classifiers::ClassifierConfig> classifiers;
  double augment_target_ratio = 1.0;
  double split_fraction = 0.8;
  std::size_t synthetic_count = 0;  // 0: exactly the minority deficit
  std::vector<std::uint64_t> seeds{1, 2, 3, 4, 5};
  bool seeds_explicit = false;
  std::filesystem::path output_dir = "out";
};

ExperimentConfig default_experiment_config();

// Flat text, one `section.key = value` per line, `#` starts a comment.
// Lists are comma separated. Unknown keys are configuration errors.
ExperimentConfig parse_config(std::string_view text, ExperimentConfig base = default_experiment_config());
ExperimentConfig load_config(const std::filesystem::path& path);

// Canonical key = value rendering of every setting (round-trips through
// parse_config).
std::string render_config(const ExperimentConfig& config);

void validate_experiment_config(const ExperimentConfig& config);

// --seed beats explicit experiment.seeds, which beat the environment
// variable, which beats the built-in list.
std::vector<std::uint64_t> resolve_seeds(const ExperimentConfig& config, std::optional<std::uint64_t> cli_seed,
                                         const char* env_value);

std::uint64_t parse_seed(std::string_view text);

}  // namespace ganlab::pipeline
