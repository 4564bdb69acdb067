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

#include <cstddef>
#include <optional>
#include <string>

#include <Eigen/Dense>

namespace ganlab::metrics {

// Positive class is default = 1.
struct ConfusionMatrix {
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t fn = 0;
  std::size_t tn = 0;

  std::size_t total() const { return tp + fp + fn + tn; }
  bool operator==(const ConfusionMatrix&) const = default;
};

struct MetricsRow {
  std::string model_name;
  double accuracy = 0.0;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  std::optional<double> auc;
  // Set when the value was forced to 0 by an empty denominator.
  bool precision_undefined = false;
  bool recall_undefined = false;
  bool f1_undefined = false;

  bool operator==(const MetricsRow&) const = default;
};

ConfusionMatrix confusion_matrix(const Eigen::VectorXi& labels, const Eigen::VectorXi& predicted);

MetricsRow metrics_from_confusion(const ConfusionMatrix& cm, std::string model_name = {});

// 2PR/(P+R), or 0 when P+R = 0.
double f1_score(double precision, double recall);

struct ConfusionAndPrf {
  ConfusionMatrix confusion;
  MetricsRow metrics;
};

ConfusionAndPrf confusion_and_prf(const Eigen::VectorXi& labels, const Eigen::VectorXi& predicted);

}  // namespace ganlab::metrics
