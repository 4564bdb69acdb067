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

#include "ganlab/data/normalize.hpp"

#include <cmath>

#include "ganlab/util/errors.hpp"

namespace ganlab::data {

NormStats compute_norm_stats(const Dataset& dataset) {
  if (dataset.size() < 2) {
    throw DataError("normalization needs at least 2 records, got " + std::to_string(dataset.size()));
  }
  const double n = static_cast<double>(dataset.size());
  NormStats stats(kNumericIndicators);
  for (std::size_t j = 0; j < kNumericIndicators; ++j) {
    double sum = 0;
    for (const auto& r : dataset.records()) sum += r.indicators[j];
    const double mean = sum / n;
    double ss = 0;
    for (const auto& r : dataset.records()) ss += (r.indicators[j] - mean) * (r.indicators[j] - mean);
    const double std = std::sqrt(ss / n);
    stats[j] = FeatureStats{mean, std, std < 1e-12};
  }
  return stats;
}

Dataset apply_normalization(const Dataset& dataset, const NormStats& stats) {
  if (dataset.is_normalized()) throw StateError("dataset is already normalized");
  if (stats.size() != kNumericIndicators) {
    throw DataError("normalization statistics cover " + std::to_string(stats.size()) + " features");
  }
  std::vector<FirmRecord> out = dataset.records();
  for (auto& r : out) {
    for (std::size_t j = 0; j < kNumericIndicators; ++j) {
      r.indicators[j] = stats[j].zero_variance ? 0.0 : (r.indicators[j] - stats[j].mean) / stats[j].std;
    }
  }
  return Dataset(std::move(out), stats);
}

Dataset normalize(const Dataset& dataset) {
  if (dataset.is_normalized()) throw StateError("dataset is already normalized");
  return apply_normalization(dataset, compute_norm_stats(dataset));
}

void denormalize_indicators(std::array<double, kNumericIndicators>& values, const NormStats& stats) {
  for (std::size_t j = 0; j < kNumericIndicators; ++j) {
    values[j] = stats[j].zero_variance ? stats[j].mean : values[j] * stats[j].std + stats[j].mean;
  }
}

Dataset denormalize(const Dataset& dataset) {
  if (!dataset.is_normalized()) throw StateError("dataset is not normalized");
  std::vector<FirmRecord> out = dataset.records();
  for (auto& r : out) denormalize_indicators(r.indicators, *dataset.norm_stats());
  return Dataset(std::move(out));
}

}  // namespace ganlab::data
