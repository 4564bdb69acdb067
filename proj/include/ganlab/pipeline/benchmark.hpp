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
#include <map>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "ganlab/classifiers/classifier.hpp"
#include "ganlab/data/dataset.hpp"
#include "ganlab/gan/trainer.hpp"
#include "ganlab/metrics/confusion.hpp"
#include "ganlab/metrics/roc.hpp"
#include "ganlab/pipeline/config.hpp"

namespace ganlab::pipeline {

// Per-purpose seeds derived from one run seed.
struct RunSeeds {
  std::uint64_t split;
  std::uint64_t gan_init;
  std::uint64_t gan_train;
  std::uint64_t synth;
  std::uint64_t classifier;
};
RunSeeds run_seeds(std::uint64_t seed);

// Runs `body`, rethrowing library errors as the same kind prefixed with the
// stage name.
template <typename F>
auto stage(const std::string& name, F&& body) -> decltype(body());

struct PreparedSplit {
  data::Dataset train_raw;
  data::Dataset test_raw;
  data::NormStats stats;  // from train_raw
  data::Dataset train_norm;
  data::Dataset test_norm;
};

PreparedSplit prepare_split(const data::Dataset& world, double train_fraction, std::uint64_t seed);

struct GanStage {
  gan::TrainResult trained;
  std::vector<data::FirmRecord> synthetic;  // raw (denormalized) units
};

// Trains the GAN on the normalized training defaults and draws enough
// synthetic defaults to reach the target ratio (or config.synthetic_count).
GanStage run_gan_stage(const ExperimentConfig& config, const PreparedSplit& split, const RunSeeds& seeds);

struct ArmResult {
  classifiers::TrainedClassifier model;
  metrics::MetricsRow row;
  metrics::RocResult roc;
  std::size_t appended = 0;
  std::size_t shortfall = 0;
};

// Augments the raw training split with `synthetic` (may be empty), applies the
// training normalization, fits, and scores the untouched test split.
ArmResult evaluate_arm(const PreparedSplit& split, std::span<const data::FirmRecord> synthetic, double target_ratio,
                       const classifiers::ClassifierConfig& config, const std::string& name);

// Throws ContractError if a test record or a synthetic record leaks into the
// evaluation, or a test id appears in training.
void check_isolation(const data::Dataset& train, const data::Dataset& test);

// AUC of the ground-truth default probabilities on the given records.
double bayes_auc(const data::Dataset& records);

struct BenchmarkResult {
  std::uint64_t seed = 0;
  std::vector<metrics::MetricsRow> rows;
  std::map<std::string, metrics::RocResult> roc;
  gan::LossHistory history;
  bool gan_stopped_early = false;
  std::size_t synthetic_generated = 0;
  double bayes_auc = 0.0;
  std::string report_csv;
  std::string report_md;
};

// Full pipeline for one seed. When write_outputs is set every artifact goes
// under config.output_dir together with manifest.json.
BenchmarkResult run_benchmark(const ExperimentConfig& config, std::uint64_t seed, bool write_outputs = true,
                              std::ostream* log = nullptr);

std::string row_name(classifiers::ClassifierKind kind, bool augmented);

}  // namespace ganlab::pipeline

#include "ganlab/pipeline/stage_impl.hpp"
