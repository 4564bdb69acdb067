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

#include "ganlab/pipeline/benchmark.hpp"

#include <cmath>
#include <set>

#include "ganlab/data/augment.hpp"
#include "ganlab/data/csv.hpp"
#include "ganlab/data/normalize.hpp"
#include "ganlab/data/split.hpp"
#include "ganlab/data/world.hpp"
#include "ganlab/gan/bundle.hpp"
#include "ganlab/gan/generate.hpp"
#include "ganlab/metrics/report.hpp"
#include "ganlab/metrics/svg.hpp"
#include "ganlab/pipeline/manifest.hpp"
#include "ganlab/util/numfmt.hpp"

namespace ganlab::pipeline {

RunSeeds run_seeds(std::uint64_t seed) {
  return {nn::derive_seed(seed, 1), nn::derive_seed(seed, 2), nn::derive_seed(seed, 3), nn::derive_seed(seed, 4),
          nn::derive_seed(seed, 5)};
}

std::string row_name(classifiers::ClassifierKind kind, bool augmented) {
  std::string name(classifiers::display_name(kind));
  return augmented ? name + " +GAN" : name;
}

PreparedSplit prepare_split(const data::Dataset& world, double train_fraction, std::uint64_t seed) {
  PreparedSplit out;
  data::Split s = data::stratified_split(world, train_fraction, seed);
  out.train_raw = std::move(s.train);
  out.test_raw = std::move(s.test);
  out.stats = data::compute_norm_stats(out.train_raw);
  out.train_norm = data::apply_normalization(out.train_raw, out.stats);
  out.test_norm = data::apply_normalization(out.test_raw, out.stats);
  return out;
}

GanStage run_gan_stage(const ExperimentConfig& config, const PreparedSplit& split, const RunSeeds& seeds) {
  const data::Dataset defaults = split.train_norm.with_label(1);
  nn::Prng init(seeds.gan_init);
  gan::GanModel model =
      gan::make_gan(static_cast<nn::Index>(data::kFeatureColumns), config.gan_mode, config.noise, config.architecture, init);
  gan::TrainConfig tc = config.gan;
  tc.seed = seeds.gan_train;

  GanStage out;
  out.trained = gan::train(defaults.features(), tc, std::move(model));

  std::size_t count = config.synthetic_count;
  if (count == 0) {
    const auto pos = static_cast<double>(split.train_raw.count_label(1));
    const auto neg = static_cast<double>(split.train_raw.count_label(0));
    count = static_cast<std::size_t>(std::max(0.0, std::ceil(config.augment_target_ratio * neg - pos)));
  }
  // Industries follow their frequency among the training defaults.
  gan::GenerateOptions options;
  options.industry_mix = {0.0, 0.0, 0.0};
  for (const auto& r : defaults.records()) options.industry_mix[static_cast<std::size_t>(r.industry)] += 1.0;
  nn::Prng rng(seeds.synth);
  out.synthetic = gan::generate_records(out.trained.model, static_cast<long long>(count), split.stats, rng, options);
  return out;
}

void check_isolation(const data::Dataset& train, const data::Dataset& test) {
  std::set<std::string> test_ids;
  for (const auto& r : test.records()) {
    if (r.origin != data::Origin::Real) throw ContractError("synthetic record " + r.firm_id + " in the test split");
    test_ids.insert(r.firm_id);
  }
  for (const auto& r : train.records()) {
    if (test_ids.count(r.firm_id)) throw ContractError("test record " + r.firm_id + " appears in training data");
  }
}

ArmResult evaluate_arm(const PreparedSplit& split, std::span<const data::FirmRecord> synthetic, double target_ratio,
                       const classifiers::ClassifierConfig& config, const std::string& name) {
  ArmResult out;
  data::AugmentResult aug = data::augment(split.train_raw, synthetic, target_ratio);
  out.appended = aug.appended;
  out.shortfall = synthetic.empty() ? 0 : aug.shortfall;
  check_isolation(aug.dataset, split.test_raw);
  const data::Dataset train = data::apply_normalization(aug.dataset, split.stats);
  out.model = classifiers::train_classifier(train, config);
  const classifiers::Prediction pred = classifiers::predict(out.model, split.test_norm);
  const Eigen::VectorXi labels = split.test_norm.labels();
  out.row = metrics::confusion_and_prf(labels, pred.labels).metrics;
  out.row.model_name = name;
  out.roc = metrics::roc_and_auc(labels, pred.probabilities);
  out.row.auc = out.roc.auc;
  return out;
}

double bayes_auc(const data::Dataset& records) {
  Eigen::VectorXd p(static_cast<Eigen::Index>(records.size()));
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto& gt = records.records()[i].ground_truth_p;
    if (!gt) throw DataError("record " + records.records()[i].firm_id + " has no ground_truth_p");
    p[static_cast<Eigen::Index>(i)] = *gt;
  }
  return metrics::roc_and_auc(records.labels(), p).auc;
}

BenchmarkResult run_benchmark(const ExperimentConfig& config, std::uint64_t seed, bool write_outputs, std::ostream* log) {
  validate_experiment_config(config);
  const RunSeeds seeds = run_seeds(seed);
  BenchmarkResult result;
  result.seed = seed;
  ArtifactWriter writer(config.output_dir);
  auto emit = [&](const std::string& path, std::string_view contents) {
    if (write_outputs) stage("write", [&] { writer.write(path, contents); });
  };

  const data::Dataset world = stage("genworld", [&] { return data::make_reference_world(config.world); });
  const PreparedSplit split = stage("split", [&] { return prepare_split(world, config.split_fraction, seeds.split); });
  result.bayes_auc = stage("bayes", [&] { return bayes_auc(split.test_raw); });
  emit("world.csv", data::to_csv(world, {.ground_truth = true}));
  emit("train.csv", data::to_csv(split.train_raw, {.ground_truth = true}));
  emit("test.csv", data::to_csv(split.test_raw, {.ground_truth = true}));

  const GanStage gs = stage("train-gan", [&] { return run_gan_stage(config, split, seeds); });
  result.history = gs.trained.history;
  result.gan_stopped_early = gs.trained.stopped_early;
  result.synthetic_generated = gs.synthetic.size();
  if (log) {
    *log << "gan: " << gs.trained.history.records.size() << " epochs"
         << (gs.trained.stopped_early ? " (stopping rule fired)" : "") << ", " << gs.synthetic.size()
         << " synthetic defaults\n";
  }
  emit("synthetic.csv", data::to_csv(data::Dataset(gs.synthetic), {.origin = true}));
  emit("gan_model.json", gan::to_bundle_text({gs.trained.model, config.gan, split.stats}));
  emit("loss_history.csv", gan::loss_history_csv(gs.trained.history));
  {
    metrics::PlotSeries dtr{"d_loss train", {}, {}}, dho{"d_loss holdout", {}, {}}, gtr{"g_loss train", {}, {}};
    for (const auto& r : gs.trained.history.records) {
      dtr.x.push_back(r.epoch);
      dtr.y.push_back(r.d_loss_train);
      dho.x.push_back(r.epoch);
      dho.y.push_back(r.d_loss_holdout);
      gtr.x.push_back(r.epoch);
      gtr.y.push_back(r.g_loss_train);
    }
    emit("loss_history.svg",
         metrics::line_plot_svg({dtr, dho, gtr}, {.title = "GAN losses", .x_label = "epoch", .y_label = "loss"}));
  }

  std::vector<metrics::PlotSeries> roc_series;
  std::vector<metrics::MetricsRow> rows;
  for (std::size_t k = 0; k < config.classifiers.size(); ++k) {
    classifiers::ClassifierConfig cc = config.classifiers[k];
    cc.seed = nn::derive_seed(seeds.classifier, k);
    for (bool augmented : {false, true}) {
      const std::string name = row_name(cc.kind, augmented);
      const std::span<const data::FirmRecord> synth =
          augmented ? std::span<const data::FirmRecord>(gs.synthetic) : std::span<const data::FirmRecord>();
      const ArmResult arm = stage("classify " + name, [&] {
        return evaluate_arm(split, synth, config.augment_target_ratio, cc, name);
      });
      if (log) {
        for (const auto& w : arm.model.metadata.warnings) *log << "warning: " << name << ": " << w << "\n";
        if (arm.shortfall > 0) *log << "warning: " << name << ": synthetic pool short by " << arm.shortfall << "\n";
      }
      const std::string slug = std::string(classifiers::to_string(cc.kind)) + (augmented ? "_gan" : "");
      emit("models/" + slug + ".json", classifiers::to_bundle_text(arm.model));
      emit("roc/" + slug + ".csv", metrics::roc_csv(arm.roc.curve));
      metrics::PlotSeries s{name, {}, {}};
      for (const auto& p : arm.roc.curve.points) {
        s.x.push_back(p.fpr);
        s.y.push_back(p.tpr);
      }
      roc_series.push_back(std::move(s));
      result.roc[name] = arm.roc;
      rows.push_back(arm.row);
    }
  }
  result.rows = rows;
  result.report_csv = metrics::render_report(rows, metrics::ReportFormat::Csv);
  result.report_md = metrics::render_report(rows, metrics::ReportFormat::Markdown);
  result.report_md += "\nBayes-optimal scorer (ground_truth_p) AUC on the test split: " +
                      util::format_fixed(result.bayes_auc, 4) + "\n";
  emit("roc.svg", metrics::line_plot_svg(roc_series, {.title = "ROC (test split)",
                                                      .x_label = "false positive rate",
                                                      .y_label = "true positive rate",
                                                      .diagonal = true}));
  emit("report.csv", result.report_csv);
  emit("report.md", result.report_md);
  if (write_outputs) {
    ExperimentConfig echo = config;
    echo.seeds = {seed};
    stage("write", [&] { writer.write_manifest(render_config(echo)); });
  }
  return result;
}

}  // namespace ganlab::pipeline
