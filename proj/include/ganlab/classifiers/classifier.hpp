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
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "ganlab/data/dataset.hpp"
#include "ganlab/nn/mlp.hpp"

namespace ganlab::classifiers {

using nn::Index;
using nn::MatrixXd;
using nn::VectorXd;

enum class ClassifierKind { LogReg, LinearSvm, MlpBp };

std::string_view to_string(ClassifierKind kind);  // logreg, linear_svm, mlp_bp
ClassifierKind classifier_kind_from_string(std::string_view name);
std::string_view display_name(ClassifierKind kind);  // report row label

struct ClassifierConfig {
  ClassifierKind kind = ClassifierKind::LogReg;
  int epochs = 100;
  Index batch_size = 64;
  double lr = 0.01;
  std::vector<Index> hidden{32, 16};  // MlpBp only
  double l2 = 1e-4;                   // on dense weights, not biases
  std::uint64_t seed = 7;
  double threshold = 0.5;
};

void validate_classifier_config(const ClassifierConfig& config);

struct TrainingMetadata {
  int epochs_run = 0;
  double final_train_loss = 0.0;
  std::vector<std::string> warnings;
};

// The network emits one raw score per row (a logit, or the SVM margin).
// Probabilities are sigmoid(score) for every kind.
struct TrainedClassifier {
  ClassifierKind kind = ClassifierKind::LogReg;
  nn::Mlp<double> network;
  double threshold = 0.5;
  std::optional<data::NormStats> norm_stats;
  TrainingMetadata metadata;
};

struct Prediction {
  VectorXd scores;         // logits or margins
  VectorXd probabilities;  // sigmoid(scores)
  Eigen::VectorXi labels;  // 1 iff probability >= threshold
};

// Matrix entry point; y holds 0/1 labels.
TrainedClassifier fit_classifier(const MatrixXd& x, const Eigen::VectorXi& y, const ClassifierConfig& config);

// Requires a normalized dataset; the model keeps its norm_stats.
TrainedClassifier train_classifier(const data::Dataset& train, const ClassifierConfig& config);

Prediction predict(const TrainedClassifier& model, const MatrixXd& x);

// The records must be normalized with the statistics the model was trained on.
Prediction predict(const TrainedClassifier& model, const data::Dataset& records);

std::string to_bundle_text(const TrainedClassifier& model);
TrainedClassifier classifier_from_bundle_text(std::string_view text);
void save_classifier(const TrainedClassifier& model, const std::filesystem::path& path);
TrainedClassifier load_classifier(const std::filesystem::path& path);

}  // namespace ganlab::classifiers
