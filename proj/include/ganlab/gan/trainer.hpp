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
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ganlab/gan/losses.hpp"
#include "ganlab/gan/model.hpp"

namespace ganlab::gan {

struct TrainConfig {
  int epochs = 120;
  Index batch_size = 64;
  double lr = 2e-4;
  double clip_c = 0.01;    // Wasserstein only
  int n_critic = 5;        // Wasserstein only
  double label_smooth = 0.9;  // Vanilla only
  GeneratorLossForm generator_loss_form = GeneratorLossForm::Minimax;
  std::uint64_t seed = 42;
  int stop_window = 10;
  double stop_band_low = 0.45;
  double stop_band_high = 0.55;
  double stop_plateau = 0.01;
  bool early_stop = true;
  double holdout_fraction = 0.1;
};

void validate_train_config(const TrainConfig& config);

struct EpochRecord {
  int epoch = 0;
  double d_loss_train = 0.0;
  double g_loss_train = 0.0;
  double d_loss_holdout = 0.0;
  double disc_accuracy_holdout = 0.0;
  std::optional<double> wasserstein_estimate;

  bool operator==(const EpochRecord&) const = default;
};

struct LossHistory {
  GanMode mode = GanMode::Wasserstein;
  std::vector<EpochRecord> records;

  bool operator==(const LossHistory&) const = default;
};

// CSV with header
// epoch,d_loss_train,g_loss_train,d_loss_holdout,disc_acc_holdout,wasserstein_estimate
std::string loss_history_csv(const LossHistory& history);

struct TrainCounters {
  std::uint64_t critic_updates = 0;
  std::uint64_t generator_updates = 0;
};

enum class UpdateKind { Critic, Generator };

// Called after every optimizer step with the model as it stands.
using TrainObserver = std::function<void(UpdateKind, const GanModel&, const TrainCounters&)>;

struct TrainResult {
  GanModel model;
  LossHistory history;
  TrainCounters counters;
  bool stopped_early = false;
};

// Trains on standardized feature rows.
//
// A fixed holdout (holdout_fraction of the rows, chosen by the seed) is kept
// out of training and scored after every epoch. Each epoch runs one
// generator update per full training batch. Vanilla mode pairs every
// generator update with one discriminator update on the next batch;
// Wasserstein mode precedes it with n_critic critic updates, each followed by
// weight clipping, drawing batches from a stream that reshuffles whenever it
// runs out. Batches are min(batch_size, training rows) rows.
TrainResult train(const MatrixXd& features, const TrainConfig& config, GanModel model,
                  const TrainObserver& observer = {});

// Vanilla: the last stop_window holdout accuracies all lie in the stop band.
// Wasserstein: |W| changed by less than stop_plateau (relative) across the
// last stop_window epochs.
bool should_stop(const LossHistory& history, const TrainConfig& config);

// Two-sample energy distance 2 E|X - Y| - E|X - X'| - E|Y - Y'|, with the
// within-sample terms averaged over distinct pairs.
double energy_distance(const MatrixXd& a, const MatrixXd& b);

}  // namespace ganlab::gan
