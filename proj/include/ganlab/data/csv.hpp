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
#include <istream>
#include <string>

#include "ganlab/data/dataset.hpp"

namespace ganlab::data {

struct CsvWriteOptions {
  bool ground_truth = false;  // append a ground_truth_p column
  bool origin = false;        // append an origin column (real / synthetic)
};

// Columns are matched by header name, so their order in the file is free.
// Required: firm_id, industry, every numeric indicator, contract_status, label.
// Optional: ground_truth_p, origin.
Dataset read_csv(std::istream& in, const std::string& source_name = "<stream>");
Dataset load_csv(const std::filesystem::path& path);

std::string to_csv(const Dataset& dataset, const CsvWriteOptions& options = {});
void save_csv(const Dataset& dataset, const std::filesystem::path& path,
              const CsvWriteOptions& options = {});

}  // namespace ganlab::data
