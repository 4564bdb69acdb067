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

#include "ganlab/gan/trainer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "ganlab/nn/adam.hpp"
#include "ganlab/nn/clip.hpp"
#include "ganlab/util/errors.hpp"
#include "ganlab/util/numfmt.hpp"

namespace ganlab::gan {
namespace {

using nn::ForwardTape;
using nn::Mlp;
using nn::VectorXd;

constexpr double kProbFloor = 1e-12;

VectorXd clamp_probabilities(const MatrixXd& p) {
  return p.col(0).cwiseMax(kProbFloor).cwiseMin(1.0 - kProbFloor);
}

MatrixXd gather_rows(const MatrixXd& x, const std::vector<Index>& rows, std::size_t begin, std::size_t count) {
  MatrixXd out(static_cast<Index>(count), x.cols());
  for (std::size_t i = 0; i < count; ++i) out.row(static_cast<Index>(i)) = x.row(rows[begin + i]);
  return out;
}

// Endless sequence of batches over a fixed row set, reshuffled per pass.
class BatchStream {
 public:
  BatchStream(const MatrixXd& x, std::vector<Index> rows, std::size_t batch, nn::Prng& rng)
      : x_(x), rows_(std::move(rows)), batch_(batch), rng_(rng) {
    reshuffle();
  }

  MatrixXd next() {
    if (cursor_ + batch_ > rows_.size()) reshuffle();
    MatrixXd out = gather_rows(x_, rows_, cursor_, batch_);
    cursor_ += batch_;
    return out;
  }

 private:
  void reshuffle() {
    nn::shuffle(std::span<Index>(rows_), rng_);
    cursor_ = 0;
  }

  const MatrixXd& x_;
  std::vector<Index> rows_;
  std::size_t batch_;
  nn::Prng& rng_;
  std::size_t cursor_ = 0;
};

void apply_update(Mlp<double>& net, const VectorXd& grads, nn::AdamState<double>& state,
                  std::optional<double> clip) {
  VectorXd params = net.parameters();
  nn::adam_step<double>(params, grads, state);
  if (clip) nn::clip_weights<double>(params, *clip);
  net.set_parameters(params);
}

struct ModeGuard {
  GanModel& model;
  explicit ModeGuard(GanModel& m) : model(m) {
    model.generator.set_mode(nn::NormMode::Infer);
    model.critic.set_mode(nn::NormMode::Infer);
  }
  ~ModeGuard() {
    model.generator.set_mode(nn::NormMode::Train);
    model.critic.set_mode(nn::NormMode::Train);
  }
};

void evaluate_holdout(GanModel& model, const MatrixXd& holdout, const MatrixXd& monitor_noise,
                      const TrainConfig& config, EpochRecord& rec) {
  ModeGuard guard(model);
  const MatrixXd fake = model.generator.forward(monitor_noise);
  const MatrixXd real_out = model.critic.forward(holdout);
  const MatrixXd fake_out = model.critic.forward(fake);
  const double total = static_cast<double>(real_out.rows() + fake_out.rows());
  if (model.mode == GanMode::Vanilla) {
    const VectorXd pr = clamp_probabilities(real_out);
    const VectorXd pf = clamp_probabilities(fake_out);
    rec.d_loss_holdout = vanilla_losses(pr, pf, config.label_smooth, config.generator_loss_form).d_loss;
    const auto correct = (pr.array() >= 0.5).count() + (pf.array() < 0.5).count();
    rec.disc_accuracy_holdout = static_cast<double>(correct) / total;
  } else {
    const VectorXd sr = real_out.col(0);
    const VectorXd sf = fake_out.col(0);
    const WassersteinLosses w = wgan_losses(sr, sf);
    rec.d_loss_holdout = w.critic_loss;
    rec.wasserstein_estimate = w.wasserstein_estimate;
    // Critic scores are unbounded, so real/fake is decided against the
    // midpoint of the two class means.
    const double threshold = 0.5 * (sr.mean() + sf.mean());
    const auto correct = (sr.array() >= threshold).count() + (sf.array() < threshold).count();
    rec.disc_accuracy_holdout = static_cast<double>(correct) / total;
  }
}

}  // namespace

void validate_train_config(const TrainConfig& c) {
  if (c.epochs < 1) throw ConfigError("epochs must be >= 1");
  if (c.batch_size < 2) throw ConfigError("batch size must be >= 2");
  if (!(c.lr > 0.0)) throw ConfigError("learning rate must be positive");
  if (!(c.clip_c > 0.0)) throw ConfigError("clip bound must be positive");
  if (c.n_critic < 1) throw ConfigError("n_critic must be >= 1");
  if (!(c.label_smooth > 0.5 && c.label_smooth <= 1.0)) throw ConfigError("label smoothing must lie in (0.5, 1]");
  if (c.stop_window < 1) throw ConfigError("stop window must be >= 1");
  if (!(c.stop_band_low <= c.stop_band_high)) throw ConfigError("stop band is empty");
  if (!(c.stop_plateau > 0.0)) throw ConfigError("plateau tolerance must be positive");
  if (!(c.holdout_fraction >= 0.0 && c.holdout_fraction < 1.0)) throw ConfigError("holdout fraction must lie in [0, 1)");
}

TrainResult train(const MatrixXd& features, const TrainConfig& config, GanModel model,
                  const TrainObserver& observer) {
  validate_train_config(config);
  validate_gan(model);
  bind_model(model, features.cols());
  if (features.rows() < config.batch_size) {
    throw DataError("dataset has " + std::to_string(features.rows()) + " rows, smaller than one batch of " +
                    std::to_string(config.batch_size));
  }
  nn::require_finite(features, "training features");

  nn::Prng rng(config.seed);
  std::vector<Index> order(static_cast<std::size_t>(features.rows()));
  std::iota(order.begin(), order.end(), Index{0});
  nn::shuffle(std::span<Index>(order), rng);
  const auto n = static_cast<std::size_t>(features.rows());
  std::size_t holdout_count = static_cast<std::size_t>(std::floor(config.holdout_fraction * static_cast<double>(n)));
  holdout_count = std::min(holdout_count, n - 2);
  std::vector<Index> holdout_rows(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(holdout_count));
  std::vector<Index> train_rows(order.begin() + static_cast<std::ptrdiff_t>(holdout_count), order.end());
  std::sort(holdout_rows.begin(), holdout_rows.end());
  std::sort(train_rows.begin(), train_rows.end());
  const std::vector<Index>& monitor_rows = holdout_rows.empty() ? train_rows : holdout_rows;
  const MatrixXd holdout = gather_rows(features, monitor_rows, 0, monitor_rows.size());

  const std::size_t batch = std::min(static_cast<std::size_t>(config.batch_size), train_rows.size());
  const std::size_t updates_per_epoch = train_rows.size() / batch;
  const auto batch_rows = static_cast<Index>(batch);

  nn::Prng monitor_rng(nn::derive_seed(config.seed, 1));
  const MatrixXd monitor_noise = sample_noise(model.noise, holdout.rows(), monitor_rng);

  BatchStream stream(features, train_rows, batch, rng);
  nn::AdamState<double> critic_opt(model.critic.parameter_count(), config.lr);
  nn::AdamState<double> gen_opt(model.generator.parameter_count(), config.lr);
  model.generator.set_mode(nn::NormMode::Train);
  model.critic.set_mode(nn::NormMode::Train);

  const bool wasserstein = model.mode == GanMode::Wasserstein;
  if (wasserstein) {
    // Start inside the clipping box, so the constraint holds from step one.
    model.critic.set_parameters(nn::clipped<double>(model.critic.parameters(), config.clip_c));
  }
  const int critic_steps = wasserstein ? config.n_critic : 1;
  const double inv_b = 1.0 / static_cast<double>(batch);
  const double s = config.label_smooth;

  TrainResult result;
  result.history.mode = model.mode;
  ForwardTape<double> tape_critic, tape_gen;
  VectorXd grads_critic, grads_gen;

  for (int epoch = 1; epoch <= config.epochs; ++epoch) {
    double d_loss_sum = 0.0, g_loss_sum = 0.0;
    for (std::size_t u = 0; u < updates_per_epoch; ++u) {
      for (int k = 0; k < critic_steps; ++k) {
        // Real and fake rows share one critic pass so batch norm sees a mixed batch.
        MatrixXd joint(2 * batch_rows, model.feature_dim());
        joint.topRows(batch_rows) = stream.next();
        joint.bottomRows(batch_rows) = model.generator.forward(sample_noise(model.noise, batch_rows, rng));
        const MatrixXd out = model.critic.forward(joint, &tape_critic);
        MatrixXd upstream(2 * batch_rows, 1);
        if (wasserstein) {
          d_loss_sum += wgan_losses(out.col(0).head(batch_rows), out.col(0).tail(batch_rows)).critic_loss;
          upstream.topRows(batch_rows).setConstant(-inv_b);
          upstream.bottomRows(batch_rows).setConstant(inv_b);
        } else {
          const VectorXd p = clamp_probabilities(out);
          const auto pr = p.head(batch_rows).array();
          const auto pf = p.tail(batch_rows).array();
          d_loss_sum += vanilla_losses(pr.matrix(), pf.matrix(), s, config.generator_loss_form).d_loss;
          upstream.col(0).head(batch_rows) = -(s / pr - (1.0 - s) / (1.0 - pr)) * inv_b;
          upstream.col(0).tail(batch_rows) = (1.0 / (1.0 - pf)) * inv_b;
        }
        model.critic.backward(tape_critic, upstream, &grads_critic);
        apply_update(model.critic, grads_critic, critic_opt,
                     wasserstein ? std::optional<double>(config.clip_c) : std::nullopt);
        model.critic.commit_batch_stats(tape_critic);
        ++result.counters.critic_updates;
        if (observer) observer(UpdateKind::Critic, model, result.counters);
      }

      // The generator step also scores a mixed batch; only the fake half
      // carries gradient, and the critic's running stats are left alone.
      MatrixXd joint(2 * batch_rows, model.feature_dim());
      joint.topRows(batch_rows) = stream.next();
      joint.bottomRows(batch_rows) = model.generator.forward(sample_noise(model.noise, batch_rows, rng), &tape_gen);
      const MatrixXd out = model.critic.forward(joint, &tape_critic);
      MatrixXd upstream = MatrixXd::Zero(2 * batch_rows, 1);
      if (wasserstein) {
        g_loss_sum += -out.col(0).tail(batch_rows).mean();
        upstream.bottomRows(batch_rows).setConstant(-inv_b);
      } else {
        const VectorXd pf = clamp_probabilities(out).tail(batch_rows);
        if (config.generator_loss_form == GeneratorLossForm::Minimax) {
          g_loss_sum += (1.0 - pf.array()).log().mean();
          upstream.col(0).tail(batch_rows) = -(1.0 / (1.0 - pf.array())) * inv_b;
        } else {
          g_loss_sum += -pf.array().log().mean();
          upstream.col(0).tail(batch_rows) = -(1.0 / pf.array()) * inv_b;
        }
      }
      const MatrixXd d_joint = model.critic.backward(tape_critic, upstream);
      model.generator.backward(tape_gen, d_joint.bottomRows(batch_rows), &grads_gen);
      apply_update(model.generator, grads_gen, gen_opt, std::nullopt);
      model.generator.commit_batch_stats(tape_gen);
      ++result.counters.generator_updates;
      if (observer) observer(UpdateKind::Generator, model, result.counters);
    }

    EpochRecord rec;
    rec.epoch = epoch;
    rec.d_loss_train = d_loss_sum / static_cast<double>(updates_per_epoch * static_cast<std::size_t>(critic_steps));
    rec.g_loss_train = g_loss_sum / static_cast<double>(updates_per_epoch);
    evaluate_holdout(model, holdout, monitor_noise, config, rec);
    result.history.records.push_back(rec);
    if (config.early_stop && should_stop(result.history, config)) {
      result.stopped_early = true;
      break;
    }
  }
  result.model = std::move(model);
  return result;
}

bool should_stop(const LossHistory& history, const TrainConfig& config) {
  const auto window = static_cast<std::size_t>(config.stop_window);
  const auto& recs = history.records;
  if (recs.empty() || recs.size() < window) return false;
  if (history.mode == GanMode::Vanilla) {
    for (std::size_t i = recs.size() - window; i < recs.size(); ++i) {
      const double acc = recs[i].disc_accuracy_holdout;
      if (acc < config.stop_band_low || acc > config.stop_band_high) return false;
    }
    return true;
  }
  // Plateau: mean |W| over the last K epochs within 1% of the mean over the K before.
  if (recs.size() < 2 * window) return false;
  double previous = 0.0, recent = 0.0;
  for (std::size_t i = recs.size() - 2 * window; i < recs.size(); ++i) {
    const auto& w = recs[i].wasserstein_estimate;
    if (!w) return false;
    (i < recs.size() - window ? previous : recent) += std::abs(*w);
  }
  return std::abs(previous - recent) < config.stop_plateau * std::max(previous, 1e-12);
}

double energy_distance(const MatrixXd& a, const MatrixXd& b) {
  if (a.cols() != b.cols()) throw ShapeError("energy distance: samples have different widths");
  if (a.rows() < 2 || b.rows() < 2) throw DataError("energy distance needs at least 2 rows per sample");
  auto mean_cross = [](const MatrixXd& x, const MatrixXd& y) {
    double total = 0.0;
    for (Index i = 0; i < x.rows(); ++i)
      for (Index j = 0; j < y.rows(); ++j) total += (x.row(i) - y.row(j)).norm();
    return total / static_cast<double>(x.rows() * y.rows());
  };
  auto mean_within = [](const MatrixXd& x) {
    double total = 0.0;
    for (Index i = 0; i < x.rows(); ++i)
      for (Index j = i + 1; j < x.rows(); ++j) total += (x.row(i) - x.row(j)).norm();
    return 2.0 * total / static_cast<double>(x.rows() * (x.rows() - 1));
  };
  return 2.0 * mean_cross(a, b) - mean_within(a) - mean_within(b);
}

std::string loss_history_csv(const LossHistory& history) {
  std::string out = "epoch,d_loss_train,g_loss_train,d_loss_holdout,disc_acc_holdout,wasserstein_estimate\n";
  for (const auto& r : history.records) {
    out += std::to_string(r.epoch) + ',' + util::format_double(r.d_loss_train) + ',' +
           util::format_double(r.g_loss_train) + ',' + util::format_double(r.d_loss_holdout) + ',' +
           util::format_double(r.disc_accuracy_holdout) + ',';
    if (r.wasserstein_estimate) out += util::format_double(*r.wasserstein_estimate);
    out += '\n';
  }
  return out;
}

}  // namespace ganlab::gan
