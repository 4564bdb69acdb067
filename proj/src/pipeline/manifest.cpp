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

#include "ganlab/pipeline/manifest.hpp"

#include <chrono>
#include <ctime>

#include <Eigen/Core>
#include <json.hpp>

#include "ganlab/gan/bundle.hpp"
#include "ganlab/util/numfmt.hpp"
#include "ganlab/util/sha256.hpp"

#ifndef GANLAB_VERSION
#define GANLAB_VERSION "unknown"
#endif

namespace ganlab::pipeline {

ArtifactWriter::ArtifactWriter(std::filesystem::path root) : root_(std::move(root)) {}

void ArtifactWriter::write(const std::string& relative_path, std::string_view contents) {
  util::write_text_file(root_ / relative_path, contents);
  const std::string hash = util::sha256_hex(contents);
  for (auto& e : entries_) {
    if (e.path == relative_path) {
      e.sha256 = hash;
      return;
    }
  }
  entries_.push_back({relative_path, hash});
}

std::string ArtifactWriter::manifest_json(const std::string& config_echo, const std::string& generated_at) const {
  nlohmann::json doc;
  doc["files"] = nlohmann::json::array();
  for (const auto& e : entries_) doc["files"].push_back({{"path", e.path}, {"sha256", e.sha256}});
  doc["config_echo"] = config_echo;
  doc["versions"] = {{"scf-ganlab", GANLAB_VERSION},
                     {"bundle_format", gan::kBundleVersion},
                     {"eigen", std::to_string(EIGEN_WORLD_VERSION) + "." + std::to_string(EIGEN_MAJOR_VERSION) + "." +
                                   std::to_string(EIGEN_MINOR_VERSION)}};
  doc["generated_at"] = generated_at;
  return doc.dump(2) + "\n";
}

void ArtifactWriter::write_manifest(const std::string& config_echo) {
  util::write_text_file(root_ / "manifest.json", manifest_json(config_echo, utc_timestamp()));
}

std::string version_string() { return GANLAB_VERSION; }

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace ganlab::pipeline
