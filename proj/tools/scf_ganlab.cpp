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

// scf-ganlab: command-line front end for the GAN augmentation pipeline.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "ganlab/classifiers/classifier.hpp"
#include "ganlab/data/augment.hpp"
#include "ganlab/data/csv.hpp"
#include "ganlab/data/normalize.hpp"
#include "ganlab/data/world.hpp"
#include "ganlab/gan/bundle.hpp"
#include "ganlab/gan/generate.hpp"
#include "ganlab/metrics/report.hpp"
#include "ganlab/metrics/roc.hpp"
#include "ganlab/metrics/svg.hpp"
#include "ganlab/pipeline/ablation.hpp"
#include "ganlab/pipeline/benchmark.hpp"
#include "ganlab/pipeline/config.hpp"
#include "ganlab/pipeline/gradient_suite.hpp"
#include "ganlab/pipeline/manifest.hpp"
#include "ganlab/util/errors.hpp"
#include "ganlab/util/numfmt.hpp"

namespace fs = std::filesystem;
using namespace ganlab;

namespace {

struct Common {
  std::string config_path;
  std::string seed_text;
  std::string out;
  std::string mode;
  std::string format = "md";
};

struct Resolved {
  pipeline::ExperimentConfig config;
  std::vector<std::uint64_t> seeds;
  fs::path out;
};

Resolved resolve(const Common& c) {
  Resolved r;
  r.config = c.config_path.empty() ? pipeline::default_experiment_config() : pipeline::load_config(c.config_path);
  if (!c.mode.empty()) r.config.gan_mode = gan::gan_mode_from_string(c.mode);
  std::optional<std::uint64_t> cli_seed;
  if (!c.seed_text.empty()) cli_seed = pipeline::parse_seed(c.seed_text);
  r.seeds = pipeline::resolve_seeds(r.config, cli_seed, std::getenv(std::string(pipeline::kSeedEnvVar).c_str()));
  r.out = c.out.empty() ? r.config.output_dir : fs::path(c.out);
  r.config.output_dir = r.out;
  return r;
}

void add_common(CLI::App* cmd, Common& c, bool with_mode, bool with_format) {
  cmd->add_option("--config", c.config_path, "experiment config file (section.key = value)");
  cmd->add_option("--seed", c.seed_text, "seed (overrides config and SCF_GANLAB_SEED)");
  cmd->add_option("--out", c.out, "output directory");
  if (with_mode) cmd->add_option("--mode", c.mode, "GAN mode")->check(CLI::IsMember({"vanilla", "wgan"}));
  if (with_format) cmd->add_option("--format", c.format, "report format")->check(CLI::IsMember({"csv", "md"}));
}

data::Dataset load_training_csv(const std::string& path) {
  if (path.empty()) throw ConfigError("--data is required");
  return data::load_csv(path);
}

int cmd_genworld(const Common& c) {
  Resolved r = resolve(c);
  // For world generation the seed is the world seed.
  if (!c.seed_text.empty() || std::getenv(std::string(pipeline::kSeedEnvVar).c_str()) != nullptr)
    r.config.world.seed = r.seeds.front();
  const data::Dataset world = data::make_reference_world(r.config.world);
  pipeline::ArtifactWriter w(r.out);
  w.write("world.csv", data::to_csv(world, {.ground_truth = true}));
  w.write_manifest(pipeline::render_config(r.config));
  std::cout << "wrote " << (r.out / "world.csv").string() << " (" << world.size() << " records, "
            << world.count_label(1) << " defaults)\n";
  return 0;
}

int cmd_train_gan(const Common& c, const std::string& data_path, int epochs) {
  Resolved r = resolve(c);
  const data::Dataset raw = load_training_csv(data_path);
  const data::NormStats stats = data::compute_norm_stats(raw);
  const data::Dataset defaults = data::apply_normalization(raw, stats).with_label(1);
  const auto seeds = pipeline::run_seeds(r.seeds.front());
  nn::Prng init(seeds.gan_init);
  gan::GanModel model = gan::make_gan(static_cast<nn::Index>(data::kFeatureColumns), r.config.gan_mode, r.config.noise,
                                      r.config.architecture, init);
  gan::TrainConfig tc = r.config.gan;
  tc.seed = seeds.gan_train;
  if (epochs > 0) tc.epochs = epochs;
  const gan::TrainResult tr = gan::train(defaults.features(), tc, std::move(model));
  pipeline::ArtifactWriter w(r.out);
  w.write("gan_model.json", gan::to_bundle_text({tr.model, tc, stats}));
  w.write("loss_history.csv", gan::loss_history_csv(tr.history));
  metrics::PlotSeries d{"d_loss train", {}, {}}, h{"d_loss holdout", {}, {}};
  for (const auto& rec : tr.history.records) {
    d.x.push_back(rec.epoch);
    d.y.push_back(rec.d_loss_train);
    h.x.push_back(rec.epoch);
    h.y.push_back(rec.d_loss_holdout);
  }
  w.write("loss_history.svg", metrics::line_plot_svg({d, h}, {.title = "GAN losses", .x_label = "epoch", .y_label = "loss"}));
  w.write_manifest(pipeline::render_config(r.config));
  std::cout << "trained " << gan::to_string(tr.model.mode) << " GAN on " << defaults.size() << " default rows for "
            << tr.history.records.size() << " epochs" << (tr.stopped_early ? " (stopping rule fired)" : "") << "\n";
  return 0;
}

int cmd_synth(const Common& c, const std::string& model_path, long long n) {
  Resolved r = resolve(c);
  if (model_path.empty()) throw ConfigError("--model is required");
  const gan::GanBundle bundle = gan::load_model(model_path);
  if (!bundle.norm_stats) throw BindError("GAN bundle carries no normalization statistics");
  nn::Prng rng(pipeline::run_seeds(r.seeds.front()).synth);
  const auto records = gan::generate_records(bundle.model, n, *bundle.norm_stats, rng);
  pipeline::ArtifactWriter w(r.out);
  w.write("synthetic.csv", data::to_csv(data::Dataset(records), {.origin = true}));
  w.write_manifest(pipeline::render_config(r.config));
  std::cout << "wrote " << records.size() << " synthetic records to " << (r.out / "synthetic.csv").string() << "\n";
  return 0;
}

int cmd_train_clf(const Common& c, const std::string& data_path, const std::string& kind, const std::string& synth_path) {
  Resolved r = resolve(c);
  const data::Dataset raw = load_training_csv(data_path);
  const data::NormStats stats = data::compute_norm_stats(raw);
  data::Dataset train = raw;
  if (!synth_path.empty()) {
    const data::Dataset synth = data::load_csv(synth_path);
    const auto aug = data::augment(raw, synth.records(), r.config.augment_target_ratio);
    train = aug.dataset;
    std::cout << "appended " << aug.appended << " synthetic records";
    if (aug.shortfall) std::cout << " (short by " << aug.shortfall << ")";
    std::cout << "\n";
  }
  classifiers::ClassifierConfig cc;
  cc.kind = classifiers::classifier_kind_from_string(kind);
  for (const auto& k : r.config.classifiers)
    if (k.kind == cc.kind) cc = k;
  cc.seed = pipeline::run_seeds(r.seeds.front()).classifier;
  const auto model = classifiers::train_classifier(data::apply_normalization(train, stats), cc);
  for (const auto& warn : model.metadata.warnings) std::cerr << "warning: " << warn << "\n";
  pipeline::ArtifactWriter w(r.out);
  const std::string file = "models/" + std::string(classifiers::to_string(cc.kind)) + ".json";
  w.write(file, classifiers::to_bundle_text(model));
  w.write_manifest(pipeline::render_config(r.config));
  std::cout << "wrote " << (r.out / file).string() << " (final training loss "
            << util::format_fixed(model.metadata.final_train_loss, 4) << ")\n";
  return 0;
}

int cmd_eval(const Common& c, const std::string& model_path, const std::string& data_path) {
  if (model_path.empty()) throw ConfigError("--model is required");
  const auto model = classifiers::load_classifier(model_path);
  const data::Dataset raw = load_training_csv(data_path);
  if (!model.norm_stats) throw BindError("classifier bundle carries no normalization statistics");
  const data::Dataset test = data::apply_normalization(raw, *model.norm_stats);
  const auto pred = classifiers::predict(model, test);
  auto row = metrics::confusion_and_prf(test.labels(), pred.labels).metrics;
  row.model_name = std::string(classifiers::display_name(model.kind));
  const auto roc = metrics::roc_and_auc(test.labels(), pred.probabilities);
  row.auc = roc.auc;
  std::cout << metrics::render_report({row}, metrics::report_format_from_string(c.format));
  if (!c.out.empty()) {
    pipeline::ArtifactWriter w(c.out);
    w.write("roc.csv", metrics::roc_csv(roc.curve));
    w.write("report.csv", metrics::render_report({row}, metrics::ReportFormat::Csv));
    w.write_manifest("");
  }
  return 0;
}

int cmd_benchmark(const Common& c) {
  Resolved r = resolve(c);
  if (r.seeds.size() > 1) std::cerr << "note: benchmark runs the first seed (" << r.seeds.front() << ")\n";
  const auto result = pipeline::run_benchmark(r.config, r.seeds.front(), true, &std::cerr);
  std::cout << (c.format == "csv" ? result.report_csv : result.report_md);
  std::cerr << "artifacts in " << r.out.string() << "\n";
  return 0;
}

int cmd_ablate(const Common& c) {
  Resolved r = resolve(c);
  const auto result = pipeline::run_ablation(r.config, r.seeds, &std::cerr);
  const std::string md = pipeline::render_ablation(result, metrics::ReportFormat::Markdown);
  const std::string csv = pipeline::render_ablation(result, metrics::ReportFormat::Csv);
  pipeline::ArtifactWriter w(r.out);
  w.write("ablation.md", md);
  w.write("ablation.csv", csv);
  w.write_manifest(pipeline::render_config(r.config));
  std::cout << (c.format == "csv" ? csv : md);
  return 0;
}

int cmd_gradcheck(const Common& c, int trials) {
  std::optional<std::uint64_t> seed;
  if (!c.seed_text.empty()) seed = pipeline::parse_seed(c.seed_text);
  const auto result = pipeline::run_gradient_suite(seed.value_or(2025), trials);
  std::cout << "trials: " << result.trials.size() << "\nresampled inputs: " << result.resampled_inputs
            << "\nmax relative error: " << util::format_double(result.max_error) << "\n";
  if (!(result.max_error < 1e-4)) {
    std::cerr << "gradient check failed (tolerance 1e-4)\n";
    return exit_code(ErrorKind::Numeric);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"scf-ganlab: GAN-based minority augmentation for supply-chain credit risk"};
  app.require_subcommand(1);
  app.set_version_flag("--version", pipeline::version_string());

  Common common;
  std::string data_path, model_path, kind = "mlp_bp", synth_path;
  long long n = 100;
  int epochs = 0, trials = 100;

  auto* genworld = app.add_subcommand("genworld", "generate a reference world CSV");
  add_common(genworld, common, false, false);

  auto* train_gan = app.add_subcommand("train-gan", "train a GAN on the default rows of a CSV");
  add_common(train_gan, common, true, false);
  train_gan->add_option("--data", data_path, "training CSV (raw units)")->required();
  train_gan->add_option("--epochs", epochs, "override gan.epochs");

  auto* synth = app.add_subcommand("synth", "draw synthetic default records from a GAN bundle");
  add_common(synth, common, false, false);
  synth->add_option("--model", model_path, "GAN bundle")->required();
  synth->add_option("--n", n, "number of records");

  auto* train_clf = app.add_subcommand("train-clf", "train a classifier");
  add_common(train_clf, common, false, false);
  train_clf->add_option("--data", data_path, "training CSV (raw units)")->required();
  train_clf->add_option("--kind", kind, "logreg | linear_svm | mlp_bp");
  train_clf->add_option("--synthetic", synth_path, "synthetic CSV to augment with");

  auto* eval = app.add_subcommand("eval", "evaluate a classifier bundle on a CSV");
  add_common(eval, common, false, true);
  eval->add_option("--model", model_path, "classifier bundle")->required();
  eval->add_option("--data", data_path, "evaluation CSV (raw units)")->required();

  auto* benchmark = app.add_subcommand("benchmark", "full comparison pipeline");
  add_common(benchmark, common, true, true);

  auto* ablate = app.add_subcommand("ablate", "with/without augmentation over seeds");
  add_common(ablate, common, true, true);

  auto* gradcheck = app.add_subcommand("gradcheck", "finite-difference gradient suite");
  add_common(gradcheck, common, false, false);
  gradcheck->add_option("--trials", trials, "number of random trials");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_code(ErrorKind::Config);
  }

  try {
    if (*genworld) return cmd_genworld(common);
    if (*train_gan) return cmd_train_gan(common, data_path, epochs);
    if (*synth) return cmd_synth(common, model_path, n);
    if (*train_clf) return cmd_train_clf(common, data_path, kind, synth_path);
    if (*eval) return cmd_eval(common, model_path, data_path);
    if (*benchmark) return cmd_benchmark(common);
    if (*ablate) return cmd_ablate(common);
    if (*gradcheck) return cmd_gradcheck(common, trials);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
