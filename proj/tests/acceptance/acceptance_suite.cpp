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

// Prints one PASS/FAIL line per acceptance criterion; exits nonzero on any FAIL.
// Usage: acceptance_suite <output-dir>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <functional>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "ganlab/gan/losses.hpp"
#include "ganlab/gan/trainer.hpp"
#include "ganlab/metrics/confusion.hpp"
#include "ganlab/metrics/report.hpp"
#include "ganlab/metrics/roc.hpp"
#include "ganlab/nn/adam.hpp"
#include "ganlab/pipeline/ablation.hpp"
#include "ganlab/pipeline/benchmark.hpp"
#include "ganlab/pipeline/gradient_suite.hpp"
#include "ganlab/util/numfmt.hpp"

namespace fs = std::filesystem;
using namespace ganlab;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string num(double v) { return util::format_double(v); }

Outcome gradient_suite() {
  const auto t0 = Clock::now();
  const auto r = pipeline::run_gradient_suite(2025, 100);
  const double secs = seconds_since(t0);
  const bool ok = r.trials.size() == 100 && r.max_error < 1e-4 && secs < 30.0;
  return {ok, "max relative error " + num(r.max_error) + " over " + std::to_string(r.trials.size()) + " trials, " +
                  util::format_fixed(secs, 1) + " s"};
}

Outcome adam_oracle() {
  const Eigen::VectorXd p0 = (Eigen::VectorXd(4) << 0.5, -1.25, 3.0, 0.0).finished();
  const Eigen::VectorXd g = (Eigen::VectorXd(4) << 0.1, -2.0, 1e-3, 7.5).finished();
  Eigen::VectorXd p = p0;
  nn::AdamState<double> st(4, 2e-4);
  nn::adam_step<double>(p, g, st);
  nn::adam_step<double>(p, g, st);

  // Scalar reference written out step by step.
  double worst = 0.0;
  for (int i = 0; i < 4; ++i) {
    double theta = p0[i], m = 0, v = 0;
    for (int t = 1; t <= 2; ++t) {
      m = 0.9 * m + 0.1 * g[i];
      v = 0.999 * v + 0.001 * g[i] * g[i];
      const double mh = m / (1 - std::pow(0.9, t));
      const double vh = v / (1 - std::pow(0.999, t));
      theta -= 2e-4 * mh / (std::sqrt(vh) + 1e-8);
    }
    worst = std::max(worst, std::abs(theta - p[i]));
  }
  return {worst <= 1e-12, "max deviation " + num(worst)};
}

Outcome value_fixed_point() {
  double worst = 0.0;
  for (Eigen::Index b : {1, 64, 1000}) {
    const Eigen::VectorXd half = Eigen::VectorXd::Constant(b, 0.5);
    worst = std::max(worst, std::abs(gan::gan_value(half, half) + 2.0 * std::numbers::ln2));
  }
  return {worst <= 1e-12, "max |V + 2 ln 2| = " + num(worst)};
}

Outcome wgan_mechanics() {
  const data::Dataset world = data::make_reference_world(data::default_world_config());
  const auto split = pipeline::prepare_split(world, 0.8, 1);
  const nn::MatrixXd x = split.train_norm.with_label(1).features();
  nn::Prng init(3);
  gan::GanModel m = gan::make_gan(x.cols(), gan::GanMode::Wasserstein, {}, {}, init);
  gan::TrainConfig c;
  c.epochs = 40;
  c.batch_size = 16;
  c.early_stop = false;
  std::size_t checked = 0, violations = 0;
  const auto r = gan::train(x, c, m, [&](gan::UpdateKind k, const gan::GanModel& g, const gan::TrainCounters&) {
    if (k != gan::UpdateKind::Critic) return;
    ++checked;
    const auto p = g.critic.parameters();
    if (p.size() > 0 && p.cwiseAbs().maxCoeff() > c.clip_c) ++violations;
  });
  const bool ratio = r.counters.critic_updates == 5 * r.counters.generator_updates && r.counters.generator_updates > 0;
  return {violations == 0 && ratio && checked == r.counters.critic_updates,
          std::to_string(checked) + " critic updates checked, " + std::to_string(violations) + " out of range; " +
              std::to_string(r.counters.critic_updates) + " critic vs " +
              std::to_string(r.counters.generator_updates) + " generator updates"};
}

nn::MatrixXd mixture(Eigen::Index n, nn::Prng& rng) {
  nn::MatrixXd x(n, 2);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double c = rng.uniform() < 0.5 ? -0.5 : 0.5;
    x(i, 0) = c + 0.15 * rng.normal();
    x(i, 1) = c + 0.15 * rng.normal();
  }
  return x;
}

Outcome toy_convergence() {
  const auto t0 = Clock::now();
  nn::Prng data_rng(11);
  const nn::MatrixXd train_x = mixture(1000, data_rng);
  const nn::MatrixXd held = mixture(1000, data_rng);
  nn::Prng init(5);
  gan::GanModel m = gan::make_gan(2, gan::GanMode::Wasserstein, {}, {}, init);
  auto sample = [](const gan::GanModel& g) {
    nn::Prng r(99);
    auto gen = g.generator;
    gen.set_mode(nn::NormMode::Infer);
    return nn::MatrixXd(gen.forward(gan::sample_noise(g.noise, 1000, r)));
  };
  const double e0 = gan::energy_distance(sample(m), held);
  gan::TrainConfig c;
  c.epochs = 300;
  c.batch_size = 64;
  c.lr = 2e-4;
  c.early_stop = false;
  const auto r = gan::train(train_x, c, std::move(m));
  const double e1 = gan::energy_distance(sample(r.model), held);
  const double secs = seconds_since(t0);
  return {e1 < 0.5 * e0 && secs < 60.0, "energy distance " + num(e0) + " -> " + num(e1) + " (ratio " +
                                            util::format_fixed(e1 / e0, 3) + "), " + util::format_fixed(secs, 1) + " s"};
}

double mann_whitney(const Eigen::VectorXi& y, const Eigen::VectorXd& s) {
  double wins = 0, pairs = 0;
  for (Eigen::Index i = 0; i < y.size(); ++i)
    for (Eigen::Index j = 0; j < y.size(); ++j)
      if (y[i] == 1 && y[j] == 0) {
        pairs += 1;
        wins += s[i] > s[j] ? 1.0 : (s[i] == s[j] ? 0.5 : 0.0);
      }
  return wins / pairs;
}

Outcome metric_oracles() {
  nn::Prng rng(606);
  int prf_bad = 0;
  for (int t = 0; t < 1000; ++t) {
    const auto n = static_cast<Eigen::Index>(1 + rng.index(50));
    Eigen::VectorXi y(n), p(n);
    for (Eigen::Index i = 0; i < n; ++i) {
      y[i] = rng.bernoulli(0.35);
      p[i] = rng.bernoulli(0.5);
    }
    std::size_t tp = 0, fp = 0, fn = 0, tn = 0;
    for (Eigen::Index i = 0; i < n; ++i) (y[i] ? (p[i] ? tp : fn) : (p[i] ? fp : tn)) += 1;
    const auto r = metrics::confusion_and_prf(y, p);
    const double prec = tp + fp ? double(tp) / double(tp + fp) : 0.0;
    const double rec = tp + fn ? double(tp) / double(tp + fn) : 0.0;
    const bool ok = r.confusion == metrics::ConfusionMatrix{tp, fp, fn, tn} &&
                    r.metrics.accuracy == double(tp + tn) / double(n) && r.metrics.precision == prec &&
                    r.metrics.recall == rec;
    prf_bad += !ok;
  }
  double auc_worst = 0.0;
  for (int t = 0; t < 100; ++t) {
    const auto n = static_cast<Eigen::Index>(2 + rng.index(80));
    Eigen::VectorXi y(n);
    Eigen::VectorXd s(n);
    for (Eigen::Index i = 0; i < n; ++i) {
      y[i] = i == 0 ? 1 : (i == 1 ? 0 : rng.bernoulli(0.3));
      s[i] = std::round(4 * rng.normal()) / 4 + 0.5 * y[i];
    }
    auc_worst = std::max(auc_worst, std::abs(metrics::roc_and_auc(y, s).auc - mann_whitney(y, s)));
  }
  const double hand = metrics::roc_and_auc((Eigen::VectorXi(4) << 1, 0, 1, 0).finished(),
                                           (Eigen::VectorXd(4) << 0.9, 0.8, 0.4, 0.3).finished())
                          .auc;
  return {prf_bad == 0 && auc_worst <= 1e-12 && hand == 0.75,
          std::to_string(prf_bad) + " confusion/PRF mismatches, max AUC deviation " + num(auc_worst) +
              ", hand case " + num(hand)};
}

Outcome loss_shape() {
  pipeline::ExperimentConfig c = pipeline::default_experiment_config();
  c.gan.early_stop = false;
  const data::Dataset world = data::make_reference_world(c.world);
  const auto seeds = pipeline::run_seeds(c.seeds.front());
  const auto split = pipeline::prepare_split(world, c.split_fraction, seeds.split);
  const auto gs = pipeline::run_gan_stage(c, split, seeds);
  const auto& rec = gs.trained.history.records;
  if (rec.size() != 120) return {false, std::to_string(rec.size()) + " records"};
  auto mean = [&](std::size_t from, bool holdout) {
    double s = 0;
    for (std::size_t i = from; i < from + 10; ++i) s += holdout ? rec[i].d_loss_holdout : rec[i].d_loss_train;
    return s / 10;
  };
  const double tf = mean(0, false), tl = mean(110, false), hf = mean(0, true), hl = mean(110, true);
  return {tl < tf && hl < hf, "120 records; d_loss train " + num(tf) + " -> " + num(tl) + ", holdout " + num(hf) +
                                  " -> " + num(hl)};
}

Outcome table_shape(const fs::path& out) {
  pipeline::ExperimentConfig def = pipeline::default_experiment_config();
  def.output_dir = out / "benchmark_default";
  const auto rd = pipeline::run_benchmark(def, def.seeds.front());
  const std::string header = rd.report_csv.substr(0, rd.report_csv.find('\n'));
  bool ok = header.rfind("Model,Accuracy,Recall,Precision,F1", 0) == 0;
  std::size_t gan_rows = 0;
  for (const auto& row : rd.rows) gan_rows += row.model_name.ends_with(" +GAN");
  ok = ok && gan_rows == def.classifiers.size() && rd.rows.size() == 2 * def.classifiers.size();

  pipeline::ExperimentConfig strong = pipeline::parse_config("world.preset = strong_signal\n");
  strong.output_dir = out / "benchmark_strong";
  const auto rs = pipeline::run_benchmark(strong, strong.seeds.front());
  double min_auc = 1.0;
  for (const auto& row : rs.rows) min_auc = std::min(min_auc, row.auc.value_or(0.0));
  ok = ok && min_auc > 0.9 && rs.bayes_auc > 0.95;
  return {ok, "header '" + header + "', " + std::to_string(gan_rows) + " +GAN rows; strong-signal min AUC " +
                  util::format_fixed(min_auc, 4) + ", Bayes AUC " + util::format_fixed(rs.bayes_auc, 4)};
}

Outcome ablation_direction() {
  const auto t0 = Clock::now();
  const pipeline::ExperimentConfig c = pipeline::default_experiment_config();
  const auto r = pipeline::run_ablation(c, {1, 2, 3, 4, 5});
  const double secs = seconds_since(t0);
  const std::string md = pipeline::render_ablation(r, metrics::ReportFormat::Markdown);
  const bool claim = md.find(pipeline::kAblationReferenceClaim) != std::string::npos;
  const bool ok = r.per_seed.size() == 5 && r.median_with.recall >= r.median_without.recall && claim && secs < 300;
  return {ok, "median recall without " + util::format_fixed(r.median_without.recall, 4) + ", with " +
                  util::format_fixed(r.median_with.recall, 4) + (claim ? ", reference claim printed" : "") + ", " +
                  util::format_fixed(secs, 1) + " s"};
}

Outcome determinism(const fs::path& out) {
  pipeline::ExperimentConfig c = pipeline::default_experiment_config();
  const fs::path a = out / "determinism_a", b = out / "determinism_b";
  c.output_dir = a;
  pipeline::run_benchmark(c, 7);
  c.output_dir = b;
  pipeline::run_benchmark(c, 7);
  std::vector<std::string> files{"report.csv", "gan_model.json"};
  for (const auto& e : fs::directory_iterator(a / "models")) files.push_back("models/" + e.path().filename().string());
  std::size_t differ = 0;
  for (const auto& f : files) differ += util::read_text_file(a / f) != util::read_text_file(b / f);
  return {differ == 0 && files.size() > 2,
          std::to_string(files.size()) + " artifacts compared, " + std::to_string(differ) + " differ"};
}

Outcome discrepancy_footnote() {
  const std::string md = metrics::render_report(metrics::published_reference_rows(), metrics::ReportFormat::Markdown);
  const bool ok = md.find("GANs: 0.985 vs 0.97") != std::string::npos;
  return {ok, ok ? "footnote flags GANs: 0.985 vs 0.97" : "footnote missing"};
}

}  // namespace

int main(int argc, char** argv) {
  const fs::path out = argc > 1 ? fs::path(argv[1]) : fs::path("acceptance_out");
  fs::remove_all(out);
  fs::create_directories(out);

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"gradient suite", gradient_suite},
      {"optimizer oracle", adam_oracle},
      {"value fixed point", value_fixed_point},
      {"WGAN mechanics", wgan_mechanics},
      {"toy convergence", toy_convergence},
      {"metric oracles", metric_oracles},
      {"loss history shape", loss_shape},
      {"benchmark table shape", [&] { return table_shape(out); }},
      {"ablation direction", ablation_direction},
      {"determinism", [&] { return determinism(out); }},
      {"discrepancy footnote", discrepancy_footnote},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " [" << i + 1 << "] " << criteria[i].first << ": " << o.detail
              << std::endl;
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failures)) << "/" << criteria.size() << " criteria passed\n";
  return failures == 0 ? 0 : 1;
}
