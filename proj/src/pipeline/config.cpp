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

#include "ganlab/pipeline/config.hpp"

#include <charconv>
#include <cmath>
#include <functional>
#include <map>

#include "ganlab/util/errors.hpp"
#include "ganlab/util/numfmt.hpp"

namespace ganlab::pipeline {
namespace {

using classifiers::ClassifierConfig;
using classifiers::ClassifierKind;

std::vector<std::string> split_list(std::string_view v) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = v.find(',', start);
    const std::string_view item = util::trim(v.substr(start, comma == std::string_view::npos ? v.npos : comma - start));
    if (!item.empty()) out.emplace_back(item);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

struct Parser {
  std::string key;
  std::string value;
  int line = 0;

  [[noreturn]] void fail(const std::string& why) const {
    throw ConfigError("config line " + std::to_string(line) + " (" + key + "): " + why);
  }
  double real() const {
    const auto v = util::parse_double(value);
    if (!v) fail("expected a number, got '" + value + "'");
    return *v;
  }
  long long integer() const {
    const auto v = util::parse_int(value);
    if (!v) fail("expected an integer, got '" + value + "'");
    return *v;
  }
  std::size_t count() const {
    const long long v = integer();
    if (v < 0) fail("expected a nonnegative integer");
    return static_cast<std::size_t>(v);
  }
  bool boolean() const {
    if (value == "true" || value == "1" || value == "yes") return true;
    if (value == "false" || value == "0" || value == "no") return false;
    fail("expected true or false, got '" + value + "'");
  }
  std::vector<double> reals() const {
    std::vector<double> out;
    for (const auto& item : split_list(value)) {
      const auto v = util::parse_double(item);
      if (!v) fail("expected numbers, got '" + item + "'");
      out.push_back(*v);
    }
    return out;
  }
  std::vector<nn::Index> widths() const {
    std::vector<nn::Index> out;
    for (const auto& item : split_list(value)) {
      const auto v = util::parse_int(item);
      if (!v || *v < 1) fail("expected positive widths, got '" + item + "'");
      out.push_back(static_cast<nn::Index>(*v));
    }
    return out;
  }
};

data::WorldConfig preset(const std::string& name) {
  if (name == "default") return data::default_world_config();
  if (name == "strong_signal") return data::strong_signal_world_config();
  if (name == "no_signal") return data::no_signal_world_config();
  throw ConfigError("unknown world preset '" + name + "' (expected default, strong_signal or no_signal)");
}

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? ", " : "") + items[i];
  return out;
}

template <typename T, typename F>
std::string join_as(const std::vector<T>& items, F f) {
  std::vector<std::string> s;
  for (const auto& i : items) s.push_back(f(i));
  return join(s);
}

std::string fmt(double v) { return util::format_double(v); }

}  // namespace

ExperimentConfig default_experiment_config() {
  ExperimentConfig c;
  for (ClassifierKind k : {ClassifierKind::LogReg, ClassifierKind::LinearSvm, ClassifierKind::MlpBp}) {
    ClassifierConfig cc;
    cc.kind = k;
    c.classifiers.push_back(cc);
  }
  return c;
}

std::uint64_t parse_seed(std::string_view text) {
  text = util::trim(text);
  std::uint64_t v = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (text.empty() || ec != std::errc() || ptr != end) {
    throw ConfigError("seed must be an unsigned 64-bit integer, got '" + std::string(text) + "'");
  }
  return v;
}

ExperimentConfig parse_config(std::string_view text, ExperimentConfig c) {
  // Classifier-wide settings are applied after the kinds list is known.
  std::vector<std::function<void(ClassifierConfig&)>> classifier_settings;
  std::optional<double> signal_scale;
  std::map<std::string, int> seen;

  auto with_world_preset = [&](const std::string& name) {
    const std::uint64_t seed = c.world.seed;
    c.world = preset(name);
    c.world.seed = seed;
    c.world_preset = name;
    c.signal_scale = 1.0;
  };

  int line_no = 0;
  std::size_t pos = 0;
  // The preset resets the world block, so it is applied before other world keys.
  std::vector<Parser> entries;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? text.npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = util::trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("config line " + std::to_string(line_no) + ": expected 'section.key = value'");
    }
    Parser p{std::string(util::trim(line.substr(0, eq))), std::string(util::trim(line.substr(eq + 1))), line_no};
    if (p.key.find('.') == std::string::npos) p.fail("keys take the form section.key");
    if (seen.count(p.key)) p.fail("duplicate key (first set on line " + std::to_string(seen[p.key]) + ")");
    seen[p.key] = line_no;
    if (p.key == "world.preset") {
      with_world_preset(p.value);
    } else {
      entries.push_back(std::move(p));
    }
  }

  for (const Parser& p : entries) {
    const std::string& k = p.key;
    // world
    if (k == "world.n") c.world.n = p.count();
    else if (k == "world.seed") c.world.seed = parse_seed(p.value);
    else if (k == "world.base_default_rate") c.world.base_default_rate = p.real();
    else if (k == "world.industry_mix") {
      const auto v = p.reals();
      if (v.size() != data::kIndustryCount) p.fail("expected three weights");
      for (std::size_t i = 0; i < v.size(); ++i) c.world.industry_mix[i] = v[i];
    } else if (k == "world.signal_scale") signal_scale = p.real();
    else if (k == "world.intercept") c.world.intercept = p.real();
    else if (k == "world.breach_prob_default") c.world.breach_prob_default = p.real();
    else if (k == "world.breach_prob_healthy") c.world.breach_prob_healthy = p.real();
    // gan
    else if (k == "gan.mode") c.gan_mode = gan::gan_mode_from_string(p.value);
    else if (k == "gan.epochs") c.gan.epochs = static_cast<int>(p.integer());
    else if (k == "gan.batch_size") c.gan.batch_size = p.integer();
    else if (k == "gan.lr") c.gan.lr = p.real();
    else if (k == "gan.clip_c") c.gan.clip_c = p.real();
    else if (k == "gan.n_critic") c.gan.n_critic = static_cast<int>(p.integer());
    else if (k == "gan.label_smooth") c.gan.label_smooth = p.real();
    else if (k == "gan.generator_loss") {
      if (p.value == "minimax") c.gan.generator_loss_form = gan::GeneratorLossForm::Minimax;
      else if (p.value == "non_saturating") c.gan.generator_loss_form = gan::GeneratorLossForm::NonSaturating;
      else p.fail("expected minimax or non_saturating");
    } else if (k == "gan.stop_window") c.gan.stop_window = static_cast<int>(p.integer());
    else if (k == "gan.stop_band") {
      const auto v = p.reals();
      if (v.size() != 2) p.fail("expected two bounds");
      c.gan.stop_band_low = v[0];
      c.gan.stop_band_high = v[1];
    } else if (k == "gan.stop_plateau") c.gan.stop_plateau = p.real();
    else if (k == "gan.early_stop") c.gan.early_stop = p.boolean();
    else if (k == "gan.holdout_fraction") c.gan.holdout_fraction = p.real();
    else if (k == "gan.noise_dim") c.noise.dim = p.integer();
    else if (k == "gan.noise") c.noise.distribution = gan::noise_distribution_from_string(p.value);
    else if (k == "gan.generator_hidden") c.architecture.generator_hidden = p.widths();
    else if (k == "gan.critic_hidden") c.architecture.critic_hidden = p.widths();
    else if (k == "gan.generator_batch_norm") c.architecture.generator_batch_norm = p.boolean();
    else if (k == "gan.critic_batch_norm") c.architecture.critic_batch_norm = p.boolean();
    // classifiers
    else if (k == "classifiers.kinds") {
      std::vector<ClassifierConfig> list;
      for (const auto& name : split_list(p.value)) {
        ClassifierConfig cc;
        cc.kind = classifiers::classifier_kind_from_string(name);
        list.push_back(cc);
      }
      c.classifiers = std::move(list);
    } else if (k == "classifier.epochs") {
      const int v = static_cast<int>(p.integer());
      classifier_settings.emplace_back([v](ClassifierConfig& cc) { cc.epochs = v; });
    } else if (k == "classifier.batch_size") {
      const auto v = p.integer();
      classifier_settings.emplace_back([v](ClassifierConfig& cc) { cc.batch_size = v; });
    } else if (k == "classifier.lr") {
      const double v = p.real();
      classifier_settings.emplace_back([v](ClassifierConfig& cc) { cc.lr = v; });
    } else if (k == "classifier.l2") {
      const double v = p.real();
      classifier_settings.emplace_back([v](ClassifierConfig& cc) { cc.l2 = v; });
    } else if (k == "classifier.threshold") {
      const double v = p.real();
      classifier_settings.emplace_back([v](ClassifierConfig& cc) { cc.threshold = v; });
    } else if (k == "classifier.hidden") {
      const auto v = p.widths();
      classifier_settings.emplace_back([v](ClassifierConfig& cc) { cc.hidden = v; });
    }
    // experiment
    else if (k == "experiment.seeds") {
      std::vector<std::uint64_t> seeds;
      for (const auto& item : split_list(p.value)) seeds.push_back(parse_seed(item));
      if (seeds.empty()) p.fail("seed list is empty");
      c.seeds = std::move(seeds);
      c.seeds_explicit = true;
    } else if (k == "experiment.split_fraction") c.split_fraction = p.real();
    else if (k == "experiment.augment_target_ratio") c.augment_target_ratio = p.real();
    else if (k == "experiment.synthetic_count") c.synthetic_count = p.count();
    else if (k == "experiment.output_dir") c.output_dir = p.value;
    else p.fail("unknown key");
  }
  if (signal_scale) {
    if (!std::isfinite(*signal_scale)) throw ConfigError("world.signal_scale must be finite");
    const auto base = preset(c.world_preset).coefficients;
    for (std::size_t i = 0; i < base.size(); ++i) c.world.coefficients[i] = base[i] * *signal_scale;
    c.signal_scale = *signal_scale;
  }
  for (auto& cc : c.classifiers)
    for (const auto& set : classifier_settings) set(cc);
  validate_experiment_config(c);
  return c;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::string text;
  try {
    text = util::read_text_file(path);
  } catch (const IoError&) {
    throw ConfigError("cannot read config file " + path.string());
  }
  return parse_config(text);
}

void validate_experiment_config(const ExperimentConfig& c) {
  data::validate_world_config(c.world);
  gan::validate_train_config(c.gan);
  if (c.noise.dim < 1) throw ConfigError("gan.noise_dim must be >= 1");
  if (c.classifiers.empty()) throw ConfigError("at least one classifier is required");
  for (const auto& cc : c.classifiers) classifiers::validate_classifier_config(cc);
  if (!(c.augment_target_ratio > 0.0 && c.augment_target_ratio <= 1.0)) {
    throw ConfigError("experiment.augment_target_ratio must lie in (0, 1]");
  }
  if (!(c.split_fraction > 0.0 && c.split_fraction < 1.0)) throw ConfigError("experiment.split_fraction must lie in (0, 1)");
  if (c.seeds.empty()) throw ConfigError("experiment.seeds must not be empty");
}

std::string render_config(const ExperimentConfig& c) {
  std::string out;
  auto put = [&](const std::string& k, const std::string& v) { out += k + " = " + v + "\n"; };
  auto widths = [](const std::vector<nn::Index>& w) { return join_as(w, [](nn::Index i) { return std::to_string(i); }); };
  put("world.preset", c.world_preset);
  put("world.n", std::to_string(c.world.n));
  put("world.seed", std::to_string(c.world.seed));
  put("world.base_default_rate", fmt(c.world.base_default_rate));
  put("world.industry_mix", join_as(std::vector<double>(c.world.industry_mix.begin(), c.world.industry_mix.end()), fmt));
  put("world.signal_scale", fmt(c.signal_scale));
  if (c.world.intercept) put("world.intercept", fmt(*c.world.intercept));
  put("world.breach_prob_default", fmt(c.world.breach_prob_default));
  put("world.breach_prob_healthy", fmt(c.world.breach_prob_healthy));
  put("gan.mode", std::string(gan::to_string(c.gan_mode)));
  put("gan.epochs", std::to_string(c.gan.epochs));
  put("gan.batch_size", std::to_string(c.gan.batch_size));
  put("gan.lr", fmt(c.gan.lr));
  put("gan.clip_c", fmt(c.gan.clip_c));
  put("gan.n_critic", std::to_string(c.gan.n_critic));
  put("gan.label_smooth", fmt(c.gan.label_smooth));
  put("gan.generator_loss",
      c.gan.generator_loss_form == gan::GeneratorLossForm::Minimax ? "minimax" : "non_saturating");
  put("gan.stop_window", std::to_string(c.gan.stop_window));
  put("gan.stop_band", fmt(c.gan.stop_band_low) + ", " + fmt(c.gan.stop_band_high));
  put("gan.stop_plateau", fmt(c.gan.stop_plateau));
  put("gan.early_stop", c.gan.early_stop ? "true" : "false");
  put("gan.holdout_fraction", fmt(c.gan.holdout_fraction));
  put("gan.noise_dim", std::to_string(c.noise.dim));
  put("gan.noise", std::string(gan::to_string(c.noise.distribution)));
  put("gan.generator_hidden", widths(c.architecture.generator_hidden));
  put("gan.critic_hidden", widths(c.architecture.critic_hidden));
  put("gan.generator_batch_norm", c.architecture.generator_batch_norm ? "true" : "false");
  put("gan.critic_batch_norm", c.architecture.critic_batch_norm ? "true" : "false");
  put("classifiers.kinds", join_as(c.classifiers, [](const ClassifierConfig& cc) {
        return std::string(classifiers::to_string(cc.kind));
      }));
  if (!c.classifiers.empty()) {
    const auto& cc = c.classifiers.front();
    put("classifier.epochs", std::to_string(cc.epochs));
    put("classifier.batch_size", std::to_string(cc.batch_size));
    put("classifier.lr", fmt(cc.lr));
    put("classifier.l2", fmt(cc.l2));
    put("classifier.threshold", fmt(cc.threshold));
    put("classifier.hidden", widths(cc.hidden));
  }
  put("experiment.seeds", join_as(c.seeds, [](std::uint64_t s) { return std::to_string(s); }));
  put("experiment.split_fraction", fmt(c.split_fraction));
  put("experiment.augment_target_ratio", fmt(c.augment_target_ratio));
  put("experiment.synthetic_count", std::to_string(c.synthetic_count));
  put("experiment.output_dir", c.output_dir.string());
  return out;
}

std::vector<std::uint64_t> resolve_seeds(const ExperimentConfig& config, std::optional<std::uint64_t> cli_seed,
                                         const char* env_value) {
  if (cli_seed) return {*cli_seed};
  if (config.seeds_explicit) return config.seeds;
  if (env_value != nullptr && *env_value != '\0') return {parse_seed(env_value)};
  return config.seeds;
}

}  // namespace ganlab::pipeline
