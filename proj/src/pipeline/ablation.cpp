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

#include "ganlab/pipeline/ablation.hpp"

#include <algorithm>

#include "ganlab/data/world.hpp"
#include "ganlab/metrics/report.hpp"
#include "ganlab/util/errors.hpp"
#include "ganlab/util/numfmt.hpp"

namespace ganlab::pipeline {

double median(std::vector<double> values) {
  if (values.empty()) throw DataError("median of an empty list");
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  return n % 2 == 1 ? values[n / 2] : 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

MetricDeltas metric_deltas(const metrics::MetricsRow& with, const metrics::MetricsRow& without) {
  MetricDeltas d;
  d.accuracy = with.accuracy - without.accuracy;
  d.precision = with.precision - without.precision;
  d.recall = with.recall - without.recall;
  d.f1 = with.f1 - without.f1;
  d.auc = with.auc.value_or(0.0) - without.auc.value_or(0.0);
  return d;
}

AblationSeedResult ablation_seed(const PreparedSplit& split, std::span<const data::FirmRecord> synthetic_with,
                                 std::span<const data::FirmRecord> synthetic_without, double target_ratio,
                                 const classifiers::ClassifierConfig& config, std::uint64_t seed) {
  AblationSeedResult out;
  out.seed = seed;
  const std::string name(classifiers::display_name(config.kind));
  const ArmResult without = evaluate_arm(split, synthetic_without, target_ratio, config, name);
  const ArmResult with = evaluate_arm(split, synthetic_with, target_ratio, config, name + " +GAN");
  out.without_augmentation = without.row;
  out.with_augmentation = with.row;
  out.synthetic_appended = with.appended;
  out.delta = metric_deltas(with.row, without.row);
  return out;
}

AblationResult summarize_ablation(std::vector<AblationSeedResult> per_seed) {
  AblationResult out;
  out.per_seed = std::move(per_seed);
  if (out.per_seed.empty()) throw DataError("ablation produced no results");
  auto column = [&](auto get) {
    std::vector<double> v;
    for (const auto& s : out.per_seed) v.push_back(get(s));
    return median(std::move(v));
  };
  auto med_row = [&](auto pick, std::string name) {
    metrics::MetricsRow r;
    r.model_name = std::move(name);
    r.accuracy = column([&](const AblationSeedResult& s) { return pick(s).accuracy; });
    r.precision = column([&](const AblationSeedResult& s) { return pick(s).precision; });
    r.recall = column([&](const AblationSeedResult& s) { return pick(s).recall; });
    r.f1 = column([&](const AblationSeedResult& s) { return pick(s).f1; });
    r.auc = column([&](const AblationSeedResult& s) { return pick(s).auc.value_or(0.0); });
    return r;
  };
  const std::string base = out.per_seed.front().without_augmentation.model_name;
  out.median_without = med_row([](const AblationSeedResult& s) -> const metrics::MetricsRow& {
    return s.without_augmentation;
  }, base + " (median)");
  out.median_with = med_row([](const AblationSeedResult& s) -> const metrics::MetricsRow& {
    return s.with_augmentation;
  }, base + " +GAN (median)");
  out.median_delta.accuracy = column([](const AblationSeedResult& s) { return s.delta.accuracy; });
  out.median_delta.precision = column([](const AblationSeedResult& s) { return s.delta.precision; });
  out.median_delta.recall = column([](const AblationSeedResult& s) { return s.delta.recall; });
  out.median_delta.f1 = column([](const AblationSeedResult& s) { return s.delta.f1; });
  out.median_delta.auc = column([](const AblationSeedResult& s) { return s.delta.auc; });
  return out;
}

AblationResult run_ablation(const ExperimentConfig& config, const std::vector<std::uint64_t>& seeds, std::ostream* log) {
  validate_experiment_config(config);
  if (seeds.empty()) throw ConfigError("ablation needs at least one seed");
  classifiers::ClassifierConfig clf;
  clf.kind = classifiers::ClassifierKind::MlpBp;
  for (const auto& cc : config.classifiers)
    if (cc.kind == classifiers::ClassifierKind::MlpBp) clf = cc;

  const data::Dataset world = stage("genworld", [&] { return data::make_reference_world(config.world); });
  std::vector<AblationSeedResult> per_seed;
  for (std::uint64_t seed : seeds) {
    const RunSeeds rs = run_seeds(seed);
    const PreparedSplit split = stage("split", [&] { return prepare_split(world, config.split_fraction, rs.split); });
    const GanStage gs = stage("train-gan", [&] { return run_gan_stage(config, split, rs); });
    classifiers::ClassifierConfig cc = clf;
    cc.seed = rs.classifier;
    per_seed.push_back(stage("classify", [&] {
      return ablation_seed(split, gs.synthetic, {}, config.augment_target_ratio, cc, seed);
    }));
    if (log) {
      const auto& s = per_seed.back();
      *log << "seed " << seed << ": recall " << util::format_fixed(s.without_augmentation.recall, 3) << " -> "
           << util::format_fixed(s.with_augmentation.recall, 3) << "\n";
    }
  }
  AblationResult out = summarize_ablation(std::move(per_seed));
  if (seeds.size() < 3) {
    out.warnings.push_back("only " + std::to_string(seeds.size()) +
                           " seed(s); medians over fewer than 3 seeds are not meaningful");
  }
  if (log)
    for (const auto& w : out.warnings) *log << "warning: " << w << "\n";
  return out;
}

std::string render_ablation(const AblationResult& r, metrics::ReportFormat format) {
  if (format == metrics::ReportFormat::Csv) {
    std::string out = "seed,arm,accuracy,recall,precision,f1,auc\n";
    auto line = [&](const std::string& seed, const std::string& arm, const metrics::MetricsRow& m) {
      out += seed + ',' + arm + ',' + util::format_double(m.accuracy) + ',' + util::format_double(m.recall) + ',' +
             util::format_double(m.precision) + ',' + util::format_double(m.f1) + ',' +
             util::format_double(m.auc.value_or(0.0)) + '\n';
    };
    for (const auto& s : r.per_seed) {
      line(std::to_string(s.seed), "without", s.without_augmentation);
      line(std::to_string(s.seed), "with", s.with_augmentation);
    }
    line("median", "without", r.median_without);
    line("median", "with", r.median_with);
    const auto& d = r.median_delta;
    out += "median,delta," + util::format_double(d.accuracy) + ',' + util::format_double(d.recall) + ',' +
           util::format_double(d.precision) + ',' + util::format_double(d.f1) + ',' + util::format_double(d.auc) + '\n';
    return out;
  }
  std::vector<metrics::MetricsRow> rows;
  for (const auto& s : r.per_seed) {
    auto a = s.without_augmentation;
    auto b = s.with_augmentation;
    a.model_name += " [seed " + std::to_string(s.seed) + "]";
    b.model_name += " [seed " + std::to_string(s.seed) + "]";
    rows.push_back(a);
    rows.push_back(b);
  }
  rows.push_back(r.median_without);
  rows.push_back(r.median_with);
  std::string out = metrics::render_report(rows, metrics::ReportFormat::Markdown);
  const auto& d = r.median_delta;
  out += "\nMedian delta (with - without): accuracy " + util::format_fixed(d.accuracy, 3) + ", recall " +
         util::format_fixed(d.recall, 3) + ", precision " + util::format_fixed(d.precision, 3) + ", F1 " +
         util::format_fixed(d.f1, 3) + ", AUC " + util::format_fixed(d.auc, 3) + "\n";
  out += "Minority-class recall, median: " + util::format_fixed(r.median_without.recall, 3) + " without, " +
         util::format_fixed(r.median_with.recall, 3) + " with augmentation.\n";
  out += std::string(kAblationReferenceClaim) + " (context only, not checked).\n";
  for (const auto& w : r.warnings) out += "warning: " + w + "\n";
  return out;
}

}  // namespace ganlab::pipeline
