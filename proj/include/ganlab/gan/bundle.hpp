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

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "ganlab/data/dataset.hpp"
#include "ganlab/gan/model.hpp"
#include "ganlab/gan/trainer.hpp"

namespace ganlab::gan {

inline constexpr std::string_view kBundleFormat = "scf-ganlab-bundle";
inline constexpr int kBundleVersion = 1;

// Envelope shared by GAN and classifier bundles:
//   {format, format_version, kind, payload, checksum}
// where checksum is the SHA-256 of payload.dump().
std::string seal_bundle(std::string_view kind, const nlohmann::json& payload);

// Validates the envelope and returns the payload. Throws NotABundleError,
// VersionMismatchError, TruncatedBundleError or ChecksumError.
nlohmann::json open_bundle(std::string_view text, std::string_view expected_kind);

nlohmann::json network_to_json(const nn::Mlp<double>& net);
nn::Mlp<double> network_from_json(const nlohmann::json& j);

nlohmann::json norm_stats_to_json(const data::NormStats& stats);
data::NormStats norm_stats_from_json(const nlohmann::json& j);

nlohmann::json train_config_to_json(const TrainConfig& config);
TrainConfig train_config_from_json(const nlohmann::json& j);

struct GanBundle {
  GanModel model;
  std::optional<TrainConfig> config;
  std::optional<data::NormStats> norm_stats;
};

std::string to_bundle_text(const GanBundle& bundle);
GanBundle from_bundle_text(std::string_view text);

void save_model(const GanBundle& bundle, const std::filesystem::path& path);
GanBundle load_model(const std::filesystem::path& path);

}  // namespace ganlab::gan
