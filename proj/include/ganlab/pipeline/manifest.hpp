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
#include <string>
#include <string_view>
#include <vector>

namespace ganlab::pipeline {

struct ManifestEntry {
  std::string path;  // relative to the output root, '/' separated
  std::string sha256;
};

// Writes files under one root and remembers each one's hash.
class ArtifactWriter {
 public:
  explicit ArtifactWriter(std::filesystem::path root);

  void write(const std::string& relative_path, std::string_view contents);

  const std::filesystem::path& root() const { return root_; }
  const std::vector<ManifestEntry>& entries() const { return entries_; }

  // {files: [{path, sha256}], config_echo, versions, generated_at}
  std::string manifest_json(const std::string& config_echo, const std::string& generated_at) const;

  // Writes manifest.json (not listed in itself).
  void write_manifest(const std::string& config_echo);

 private:
  std::filesystem::path root_;
  std::vector<ManifestEntry> entries_;
};

std::string version_string();

// UTC, ISO 8601 to the second.
std::string utc_timestamp();

}  // namespace ganlab::pipeline
