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
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "ganlab/metrics/confusion.hpp"
#include "ganlab/metrics/report.hpp"
#include "ganlab/pipeline/benchmark.hpp"

namespace ganlab::pipeline {

// Reference figure quoted in the ablation output, never asserted.
inline constexpr std::string_view kAblationReferenceClaim =
    "reference claim: removing GAN-generated data lowers performance by approximately 5%";

struct MetricDeltas {
  double accuracy = 0.0;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  double auc = 0.0;

  bool operator==(const MetricDeltas&) const = default;
};

struct AblationSeedResult {
  std::uint64_t seed = 0;
  metrics::MetricsRow without_augmentation;
  metrics::MetricsRow with_augmentation;
  MetricDeltas delta;  // with - without
  std::size_t synthetic_appended = 0;
};

struct AblationResult {
  std::vector<AblationSeedResult> per_seed;
  metrics::MetricsRow median_without;
  metrics::MetricsRow median_with;
  MetricDeltas median_delta;
  std::vector<std::string> warnings;
};

MetricDeltas metric_deltas(const metrics::MetricsRow& with, const metrics::MetricsRow& without);

// Both arms share the split and classifier seed; only the synthetic pools
// differ. An empty pool is the no-augmentation arm.
AblationSeedResult ablation_seed(const PreparedSplit& split, std::span<const data::FirmRecord> synthetic_with,
                                 std::span<const data::FirmRecord> synthetic_without, double target_ratio,
                                 const classifiers::ClassifierConfig& config, std::uint64_t seed);

// World fixed by config.world; split, GAN and classifier seeds vary with each
// run seed. Uses the configured mlp_bp classifier (or its defaults).
AblationResult run_ablation(const ExperimentConfig& config, const std::vector<std::uint64_t>& seeds,
                            std::ostream* log = nullptr);

AblationResult summarize_ablation(std::vector<AblationSeedResult> per_seed);

double median(std::vector<double> values);

std::string render_ablation(const AblationResult& result, metrics::ReportFormat format);

}  // namespace ganlab::pipeline
