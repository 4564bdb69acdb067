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

#include "ganlab/gan/bundle.hpp"

#include <variant>

#include "ganlab/util/errors.hpp"
#include "ganlab/util/numfmt.hpp"
#include "ganlab/util/sha256.hpp"

namespace ganlab::gan {
namespace {

using nlohmann::json;

template <typename Block>
json flat(const Block& block) {
  json arr = json::array();
  for (Index i = 0; i < block.size(); ++i) arr.push_back(block.data()[i]);
  return arr;
}

template <typename Block>
void unflat(const json& arr, Block& block, const char* what) {
  if (!arr.is_array() || static_cast<Index>(arr.size()) != block.size()) {
    throw TruncatedBundleError(std::string("bundle field '") + what + "' has the wrong length");
  }
  for (Index i = 0; i < block.size(); ++i) block.data()[i] = arr[static_cast<std::size_t>(i)].get<double>();
}

std::string_view generator_loss_name(GeneratorLossForm f) {
  return f == GeneratorLossForm::Minimax ? "minimax" : "non_saturating";
}

}  // namespace

std::string seal_bundle(std::string_view kind, const json& payload) {
  json doc;
  doc["format"] = kBundleFormat;
  doc["format_version"] = kBundleVersion;
  doc["kind"] = kind;
  doc["payload"] = payload;
  doc["checksum"] = util::sha256_hex(payload.dump());
  return doc.dump(1) + "\n";
}

json open_bundle(std::string_view text, std::string_view expected_kind) {
  json doc = json::parse(text.begin(), text.end(), nullptr, false);
  if (doc.is_discarded()) {
    const std::string_view head = util::trim(text);
    if (head.empty() || head.front() != '{') throw NotABundleError("not a model bundle");
    throw TruncatedBundleError("model bundle is truncated or malformed");
  }
  if (!doc.is_object() || !doc.contains("format") || doc["format"] != kBundleFormat) {
    throw NotABundleError("not a model bundle");
  }
  if (!doc.contains("format_version") || !doc["format_version"].is_number_integer()) {
    throw TruncatedBundleError("model bundle has no format_version");
  }
  const int version = doc["format_version"].get<int>();
  if (version != kBundleVersion) {
    throw VersionMismatchError("model bundle format_version " + std::to_string(version) + " is not supported (expected " +
                               std::to_string(kBundleVersion) + ")");
  }
  if (!doc.contains("kind") || !doc.contains("payload") || !doc.contains("checksum") || !doc["checksum"].is_string()) {
    throw TruncatedBundleError("model bundle is missing required fields");
  }
  if (doc["kind"] != expected_kind) {
    throw BindError("bundle holds a '" + doc["kind"].get<std::string>() + "' model, expected '" +
                    std::string(expected_kind) + "'");
  }
  if (util::sha256_hex(doc["payload"].dump()) != doc["checksum"].get<std::string>()) {
    throw ChecksumError("model bundle checksum does not match its contents");
  }
  return doc["payload"];
}

json network_to_json(const nn::Mlp<double>& net) {
  json specs = json::array();
  json weights = json::array();
  for (const auto& layer : net.layers()) {
    if (const auto* d = std::get_if<nn::DenseLayer<double>>(&layer)) {
      specs.push_back({{"type", "dense"}, {"in", d->weights.rows()}, {"out", d->weights.cols()}});
      weights.push_back({{"weights", flat(d->weights)}, {"bias", flat(d->bias)}});
    } else if (const auto* b = std::get_if<nn::BatchNorm1D<double>>(&layer)) {
      specs.push_back({{"type", "batch_norm"}, {"dim", b->dim()}, {"epsilon", b->epsilon}, {"momentum", b->momentum}});
      weights.push_back({{"gamma", flat(b->gamma)},
                         {"beta", flat(b->beta)},
                         {"running_mean", flat(b->running_mean)},
                         {"running_var", flat(b->running_var)}});
    } else {
      const auto& a = std::get<nn::Activation>(layer);
      specs.push_back({{"type", "activation"}, {"kind", nn::to_string(a.kind)}});
      weights.push_back(nullptr);
    }
  }
  return {{"layer_specs", specs}, {"weights", weights}};
}

nn::Mlp<double> network_from_json(const json& j) {
  try {
    const json& specs = j.at("layer_specs");
    const json& weights = j.at("weights");
    if (specs.size() != weights.size()) throw TruncatedBundleError("layer_specs and weights differ in length");
    std::vector<nn::Layer<double>> layers;
    Index width = -1;
    auto chain = [&](Index in, Index out) {
      if (width >= 0 && in != width) throw TruncatedBundleError("layer widths in bundle do not chain");
      width = out;
    };
    for (std::size_t k = 0; k < specs.size(); ++k) {
      const json& s = specs[k];
      const std::string type = s.at("type").get<std::string>();
      if (type == "dense") {
        nn::DenseLayer<double> d(s.at("in").get<Index>(), s.at("out").get<Index>());
        chain(d.weights.rows(), d.weights.cols());
        unflat(weights[k].at("weights"), d.weights, "weights");
        unflat(weights[k].at("bias"), d.bias, "bias");
        layers.emplace_back(std::move(d));
      } else if (type == "batch_norm") {
        nn::BatchNorm1D<double> b(s.at("dim").get<Index>(), s.at("epsilon").get<double>(),
                                  s.at("momentum").get<double>());
        chain(b.dim(), b.dim());
        unflat(weights[k].at("gamma"), b.gamma, "gamma");
        unflat(weights[k].at("beta"), b.beta, "beta");
        unflat(weights[k].at("running_mean"), b.running_mean, "running_mean");
        unflat(weights[k].at("running_var"), b.running_var, "running_var");
        layers.emplace_back(std::move(b));
      } else if (type == "activation") {
        layers.emplace_back(nn::Activation{nn::activation_from_string(s.at("kind").get<std::string>())});
      } else {
        throw TruncatedBundleError("unknown layer type '" + type + "' in bundle");
      }
    }
    if (width < 0) throw TruncatedBundleError("bundle network has no dense layer");
    return nn::Mlp<double>(std::move(layers));
  } catch (const json::exception& e) {
    throw TruncatedBundleError(std::string("malformed network in bundle: ") + e.what());
  } catch (const ConfigError& e) {
    throw TruncatedBundleError(std::string("malformed network in bundle: ") + e.what());
  }
}

json norm_stats_to_json(const data::NormStats& stats) {
  json arr = json::array();
  for (const auto& s : stats) arr.push_back({{"mean", s.mean}, {"std", s.std}, {"zero_variance", s.zero_variance}});
  return arr;
}

data::NormStats norm_stats_from_json(const json& j) {
  try {
    data::NormStats out;
    for (const auto& s : j) {
      out.push_back({s.at("mean").get<double>(), s.at("std").get<double>(), s.at("zero_variance").get<bool>()});
    }
    return out;
  } catch (const json::exception& e) {
    throw TruncatedBundleError(std::string("malformed norm_stats in bundle: ") + e.what());
  }
}

json train_config_to_json(const TrainConfig& c) {
  return {{"epochs", c.epochs},
          {"batch_size", c.batch_size},
          {"lr", c.lr},
          {"clip_c", c.clip_c},
          {"n_critic", c.n_critic},
          {"label_smooth", c.label_smooth},
          {"generator_loss_form", generator_loss_name(c.generator_loss_form)},
          {"seed", c.seed},
          {"stop_window", c.stop_window},
          {"stop_band", {c.stop_band_low, c.stop_band_high}},
          {"stop_plateau", c.stop_plateau},
          {"early_stop", c.early_stop},
          {"holdout_fraction", c.holdout_fraction}};
}

TrainConfig train_config_from_json(const json& j) {
  try {
    TrainConfig c;
    c.epochs = j.at("epochs").get<int>();
    c.batch_size = j.at("batch_size").get<Index>();
    c.lr = j.at("lr").get<double>();
    c.clip_c = j.at("clip_c").get<double>();
    c.n_critic = j.at("n_critic").get<int>();
    c.label_smooth = j.at("label_smooth").get<double>();
    const std::string form = j.at("generator_loss_form").get<std::string>();
    if (form == "minimax") {
      c.generator_loss_form = GeneratorLossForm::Minimax;
    } else if (form == "non_saturating") {
      c.generator_loss_form = GeneratorLossForm::NonSaturating;
    } else {
      throw TruncatedBundleError("unknown generator_loss_form '" + form + "'");
    }
    c.seed = j.at("seed").get<std::uint64_t>();
    c.stop_window = j.at("stop_window").get<int>();
    c.stop_band_low = j.at("stop_band").at(0).get<double>();
    c.stop_band_high = j.at("stop_band").at(1).get<double>();
    c.stop_plateau = j.at("stop_plateau").get<double>();
    c.early_stop = j.at("early_stop").get<bool>();
    c.holdout_fraction = j.at("holdout_fraction").get<double>();
    return c;
  } catch (const json::exception& e) {
    throw TruncatedBundleError(std::string("malformed train_config in bundle: ") + e.what());
  }
}

std::string to_bundle_text(const GanBundle& bundle) {
  validate_gan(bundle.model);
  json payload;
  payload["mode"] = to_string(bundle.model.mode);
  payload["noise_spec"] = {{"dim", bundle.model.noise.dim},
                           {"distribution", to_string(bundle.model.noise.distribution)}};
  payload["generator"] = network_to_json(bundle.model.generator);
  payload["critic"] = network_to_json(bundle.model.critic);
  if (bundle.config) payload["train_config"] = train_config_to_json(*bundle.config);
  if (bundle.norm_stats) payload["norm_stats"] = norm_stats_to_json(*bundle.norm_stats);
  return seal_bundle("gan", payload);
}

GanBundle from_bundle_text(std::string_view text) {
  const json payload = open_bundle(text, "gan");
  GanBundle out;
  try {
    out.model.mode = gan_mode_from_string(payload.at("mode").get<std::string>());
    out.model.noise.dim = payload.at("noise_spec").at("dim").get<Index>();
    out.model.noise.distribution =
        noise_distribution_from_string(payload.at("noise_spec").at("distribution").get<std::string>());
  } catch (const json::exception& e) {
    throw TruncatedBundleError(std::string("malformed gan bundle: ") + e.what());
  } catch (const ConfigError& e) {
    throw TruncatedBundleError(std::string("malformed gan bundle: ") + e.what());
  }
  if (!payload.contains("generator") || !payload.contains("critic")) {
    throw TruncatedBundleError("gan bundle is missing a network");
  }
  out.model.generator = network_from_json(payload["generator"]);
  out.model.critic = network_from_json(payload["critic"]);
  if (payload.contains("train_config")) out.config = train_config_from_json(payload["train_config"]);
  if (payload.contains("norm_stats")) out.norm_stats = norm_stats_from_json(payload["norm_stats"]);
  try {
    validate_gan(out.model);
  } catch (const Error& e) {
    throw TruncatedBundleError(std::string("inconsistent gan bundle: ") + e.what());
  }
  return out;
}

void save_model(const GanBundle& bundle, const std::filesystem::path& path) {
  util::write_text_file(path, to_bundle_text(bundle));
}

GanBundle load_model(const std::filesystem::path& path) { return from_bundle_text(util::read_text_file(path)); }

}  // namespace ganlab::gan
