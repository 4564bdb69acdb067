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

#include "ganlab/metrics/confusion.hpp"

#include "ganlab/util/errors.hpp"

namespace ganlab::metrics {

ConfusionMatrix confusion_matrix(const Eigen::VectorXi& labels, const Eigen::VectorXi& predicted) {
  if (labels.size() != predicted.size()) {
    throw ShapeError("labels have length " + std::to_string(labels.size()) + " but predictions have length " +
                     std::to_string(predicted.size()));
  }
  if (labels.size() == 0) throw DataError("confusion matrix needs at least one sample");
  ConfusionMatrix cm;
  for (Eigen::Index i = 0; i < labels.size(); ++i) {
    const int y = labels[i];
    const int p = predicted[i];
    if ((y != 0 && y != 1) || (p != 0 && p != 1)) {
      throw DataError("labels and predictions must be 0 or 1 (index " + std::to_string(i) + ")");
    }
    if (y == 1) {
      (p == 1 ? cm.tp : cm.fn) += 1;
    } else {
      (p == 1 ? cm.fp : cm.tn) += 1;
    }
  }
  return cm;
}

double f1_score(double precision, double recall) {
  const double denom = precision + recall;
  return denom > 0.0 ? 2.0 * precision * recall / denom : 0.0;
}

MetricsRow metrics_from_confusion(const ConfusionMatrix& cm, std::string model_name) {
  MetricsRow row;
  row.model_name = std::move(model_name);
  const auto total = static_cast<double>(cm.total());
  row.accuracy = total > 0.0 ? static_cast<double>(cm.tp + cm.tn) / total : 0.0;
  if (cm.tp + cm.fp > 0) {
    row.precision = static_cast<double>(cm.tp) / static_cast<double>(cm.tp + cm.fp);
  } else {
    row.precision_undefined = true;
  }
  if (cm.tp + cm.fn > 0) {
    row.recall = static_cast<double>(cm.tp) / static_cast<double>(cm.tp + cm.fn);
  } else {
    row.recall_undefined = true;
  }
  row.f1 = f1_score(row.precision, row.recall);
  row.f1_undefined = row.precision + row.recall == 0.0;
  return row;
}

ConfusionAndPrf confusion_and_prf(const Eigen::VectorXi& labels, const Eigen::VectorXi& predicted) {
  ConfusionAndPrf out;
  out.confusion = confusion_matrix(labels, predicted);
  out.metrics = metrics_from_confusion(out.confusion);
  return out;
}

}  // namespace ganlab::metrics
