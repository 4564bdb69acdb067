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
#include <string>
#include <vector>

#include "ganlab/data/dataset.hpp"
#include "ganlab/gan/model.hpp"

namespace ganlab::gan {

struct GenerateOptions {
  // The generator does not model industry; each record draws one from this mix.
  std::array<double, data::kIndustryCount> industry_mix{1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0};
  std::string id_prefix = "SYN";
};

// Draws n records from the generator (Infer mode). Numeric columns are mapped
// back through norm_stats; contract_status is rounded to {0, 1}. Every record
// is labeled default and tagged synthetic.
std::vector<data::FirmRecord> generate_records(const GanModel& model, long long n, const data::NormStats& norm_stats,
                                               nn::Prng& rng, const GenerateOptions& options = {});

}  // namespace ganlab::gan
