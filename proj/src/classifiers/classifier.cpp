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

#include "ganlab/classifiers/classifier.hpp"

#include <cmath>
#include <numeric>

#include "ganlab/gan/bundle.hpp"
#include "ganlab/nn/adam.hpp"
#include "ganlab/util/errors.hpp"
#include "ganlab/util/numfmt.hpp"

namespace ganlab::classifiers {
namespace {

// 1 at every dense-weight position of the flattened parameter vector.
VectorXd weight_mask(const nn::Mlp<double>& net) {
  VectorXd mask = VectorXd::Zero(net.parameter_count());
  Index offset = 0;
  for (const auto& layer : net.layers()) {
    if (const auto* d = std::get_if<nn::DenseLayer<double>>(&layer)) {
      mask.segment(offset, d->weights.size()).setOnes();
      offset += d->weights.size() + d->bias.size();
    } else if (const auto* b = std::get_if<nn::BatchNorm1D<double>>(&layer)) {
      offset += 2 * b->dim();
    }
  }
  return mask;
}

nn::MlpSpec network_spec(const ClassifierConfig& c, Index input_dim) {
  nn::MlpSpec spec;
  spec.input_dim = input_dim;
  spec.output_dim = 1;
  spec.output_activation = nn::ActivationKind::Identity;
  if (c.kind == ClassifierKind::MlpBp) {
    spec.hidden = c.hidden;
    spec.hidden_activation = nn::ActivationKind::ReLU;
    spec.init = nn::WeightInit::Glorot;
  } else {
    spec.init = nn::WeightInit::Zero;
  }
  return spec;
}

}  // namespace

std::string_view to_string(ClassifierKind kind) {
  switch (kind) {
    case ClassifierKind::LogReg: return "logreg";
    case ClassifierKind::LinearSvm: return "linear_svm";
    case ClassifierKind::MlpBp: return "mlp_bp";
  }
  return "logreg";
}

ClassifierKind classifier_kind_from_string(std::string_view name) {
  if (name == "logreg") return ClassifierKind::LogReg;
  if (name == "linear_svm" || name == "svm") return ClassifierKind::LinearSvm;
  if (name == "mlp_bp" || name == "mlp") return ClassifierKind::MlpBp;
  throw ConfigError("unknown classifier kind '" + std::string(name) + "'");
}

std::string_view display_name(ClassifierKind kind) {
  switch (kind) {
    case ClassifierKind::LogReg: return "Logistic Regression";
    case ClassifierKind::LinearSvm: return "SVM";
    case ClassifierKind::MlpBp: return "BP network";
  }
  return "";
}

void validate_classifier_config(const ClassifierConfig& c) {
  if (c.epochs < 1) throw ConfigError("classifier epochs must be >= 1");
  if (c.batch_size < 1) throw ConfigError("classifier batch size must be >= 1");
  if (!(c.lr > 0.0)) throw ConfigError("classifier learning rate must be positive");
  if (!(c.l2 >= 0.0)) throw ConfigError("l2 penalty must be nonnegative");
  if (!(c.threshold > 0.0 && c.threshold < 1.0)) throw ConfigError("threshold must lie in (0, 1)");
  if (c.kind == ClassifierKind::MlpBp) {
    if (c.hidden.empty()) throw ConfigError("mlp_bp needs at least one hidden layer");
    for (Index h : c.hidden)
      if (h < 1) throw ConfigError("hidden widths must be positive");
  }
}

TrainedClassifier fit_classifier(const MatrixXd& x, const Eigen::VectorXi& y, const ClassifierConfig& config) {
  validate_classifier_config(config);
  if (x.rows() == 0) throw DataError("cannot train a classifier on an empty dataset");
  if (x.rows() != y.size()) {
    throw ShapeError("features have " + std::to_string(x.rows()) + " rows but labels have " + std::to_string(y.size()));
  }
  nn::require_finite(x, "classifier features");
  for (Index i = 0; i < y.size(); ++i)
    if (y[i] != 0 && y[i] != 1) throw DataError("labels must be 0 or 1");

  TrainedClassifier out;
  out.kind = config.kind;
  out.threshold = config.threshold;
  const Index positives = y.sum();
  if (positives == 0 || positives == y.size()) {
    if (config.kind != ClassifierKind::MlpBp) {
      throw DegenerateDataError(std::string(to_string(config.kind)) + " needs both classes in the training data");
    }
    out.metadata.warnings.push_back("training data holds a single class");
  }

  nn::Prng rng(config.seed);
  nn::Mlp<double> net = nn::Mlp<double>::build(network_spec(config, x.cols()), rng);
  const VectorXd mask = weight_mask(net);
  nn::AdamState<double> opt(net.parameter_count(), config.lr);
  const bool hinge = config.kind == ClassifierKind::LinearSvm;

  std::vector<Index> order(static_cast<std::size_t>(x.rows()));
  std::iota(order.begin(), order.end(), Index{0});
  const auto n = static_cast<std::size_t>(x.rows());
  const auto batch = std::min(n, static_cast<std::size_t>(config.batch_size));
  nn::ForwardTape<double> tape;
  VectorXd grads;

  for (int epoch = 0; epoch < config.epochs; ++epoch) {
    nn::shuffle(std::span<Index>(order), rng);
    double loss_sum = 0.0;
    for (std::size_t start = 0; start < n; start += batch) {
      const std::size_t count = std::min(batch, n - start);
      MatrixXd xb(static_cast<Index>(count), x.cols());
      VectorXd yb(static_cast<Index>(count));
      for (std::size_t i = 0; i < count; ++i) {
        xb.row(static_cast<Index>(i)) = x.row(order[start + i]);
        yb[static_cast<Index>(i)] = y[order[start + i]];
      }
      const MatrixXd s = net.forward(xb, &tape);
      MatrixXd upstream(static_cast<Index>(count), 1);
      const double inv = 1.0 / static_cast<double>(count);
      double data_loss = 0.0;
      for (Index i = 0; i < static_cast<Index>(count); ++i) {
        const double score = s(i, 0);
        if (hinge) {
          const double target = yb[i] > 0.5 ? 1.0 : -1.0;
          const double slack = 1.0 - target * score;
          data_loss += std::max(0.0, slack);
          upstream(i, 0) = slack > 0.0 ? -target * inv : 0.0;
        } else {
          // log(1 + e^s) - y s, in a form that does not overflow.
          data_loss += std::max(score, 0.0) + std::log1p(std::exp(-std::abs(score))) - yb[i] * score;
          upstream(i, 0) = (nn::sigmoid(score) - yb[i]) * inv;
        }
      }
      net.backward(tape, upstream, &grads);
      VectorXd params = net.parameters();
      const VectorXd weights_only = params.cwiseProduct(mask);
      grads += config.l2 * weights_only;
      loss_sum += data_loss * inv + 0.5 * config.l2 * weights_only.squaredNorm();
      nn::adam_step<double>(params, grads, opt);
      net.set_parameters(params);
    }
    out.metadata.final_train_loss = loss_sum / std::ceil(static_cast<double>(n) / static_cast<double>(batch));
    out.metadata.epochs_run = epoch + 1;
  }
  out.network = std::move(net);
  return out;
}

TrainedClassifier train_classifier(const data::Dataset& train, const ClassifierConfig& config) {
  if (!train.is_normalized()) throw StateError("classifier training data must be normalized");
  TrainedClassifier out = fit_classifier(train.features(), train.labels(), config);
  out.norm_stats = train.norm_stats();
  return out;
}

Prediction predict(const TrainedClassifier& model, const MatrixXd& x) {
  if (x.cols() != model.network.input_dim()) {
    throw BindError("classifier expects " + std::to_string(model.network.input_dim()) + " features, got " +
                    std::to_string(x.cols()));
  }
  Prediction p;
  if (x.rows() == 0) {
    p.scores.resize(0);
    p.probabilities.resize(0);
    p.labels.resize(0);
    return p;
  }
  p.scores = model.network.forward(x).col(0);
  p.probabilities = p.scores.unaryExpr([](double s) { return nn::sigmoid(s); });
  p.labels = (p.probabilities.array() >= model.threshold).cast<int>();
  return p;
}

Prediction predict(const TrainedClassifier& model, const data::Dataset& records) {
  if (model.norm_stats) {
    if (!records.is_normalized()) throw BindError("records must be normalized before prediction");
    if (*records.norm_stats() != *model.norm_stats) {
      throw BindError("records were normalized with different statistics than the classifier");
    }
  }
  return predict(model, records.features());
}

std::string to_bundle_text(const TrainedClassifier& model) {
  nlohmann::json payload;
  payload["classifier_kind"] = to_string(model.kind);
  payload["threshold"] = model.threshold;
  payload["network"] = gan::network_to_json(model.network);
  payload["metadata"] = {{"epochs_run", model.metadata.epochs_run},
                         {"final_train_loss", model.metadata.final_train_loss},
                         {"warnings", model.metadata.warnings}};
  if (model.norm_stats) payload["norm_stats"] = gan::norm_stats_to_json(*model.norm_stats);
  return gan::seal_bundle("classifier", payload);
}

TrainedClassifier classifier_from_bundle_text(std::string_view text) {
  const nlohmann::json payload = gan::open_bundle(text, "classifier");
  TrainedClassifier out;
  try {
    out.kind = classifier_kind_from_string(payload.at("classifier_kind").get<std::string>());
    out.threshold = payload.at("threshold").get<double>();
    const auto& meta = payload.at("metadata");
    out.metadata.epochs_run = meta.at("epochs_run").get<int>();
    out.metadata.final_train_loss = meta.at("final_train_loss").get<double>();
    out.metadata.warnings = meta.at("warnings").get<std::vector<std::string>>();
  } catch (const nlohmann::json::exception& e) {
    throw TruncatedBundleError(std::string("malformed classifier bundle: ") + e.what());
  } catch (const ConfigError& e) {
    throw TruncatedBundleError(std::string("malformed classifier bundle: ") + e.what());
  }
  if (!payload.contains("network")) throw TruncatedBundleError("classifier bundle has no network");
  out.network = gan::network_from_json(payload["network"]);
  if (payload.contains("norm_stats")) out.norm_stats = gan::norm_stats_from_json(payload["norm_stats"]);
  return out;
}

void save_classifier(const TrainedClassifier& model, const std::filesystem::path& path) {
  util::write_text_file(path, to_bundle_text(model));
}

TrainedClassifier load_classifier(const std::filesystem::path& path) {
  return classifier_from_bundle_text(util::read_text_file(path));
}

}  // namespace ganlab::classifiers
