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

#include "ganlab/data/dataset.hpp"

namespace ganlab::data {

// Per-feature mean and population standard deviation of the numeric
// indicators. A feature whose std is below 1e-12 is flagged zero-variance.
NormStats compute_norm_stats(const Dataset& dataset);

// z-scores every numeric indicator with the dataset's own statistics.
// contract_status and label are left as they are.
Dataset normalize(const Dataset& dataset);

// z-scores with externally supplied statistics (e.g. a test split scored
// with training statistics).
Dataset apply_normalization(const Dataset& dataset, const NormStats& stats);

Dataset denormalize(const Dataset& dataset);

// Inverse map for a single record's indicators.
void denormalize_indicators(std::array<double, kNumericIndicators>& values, const NormStats& stats);

}  // namespace ganlab::data
