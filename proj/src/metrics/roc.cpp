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

#include "ganlab/metrics/roc.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "ganlab/util/errors.hpp"
#include "ganlab/util/numfmt.hpp"

namespace ganlab::metrics {

RocResult roc_and_auc(const Eigen::VectorXi& labels, const Eigen::VectorXd& scores) {
  if (labels.size() != scores.size()) {
    throw ShapeError("labels have length " + std::to_string(labels.size()) + " but scores have length " +
                     std::to_string(scores.size()));
  }
  long long pos = 0, neg = 0;
  for (Eigen::Index i = 0; i < labels.size(); ++i) {
    if (labels[i] == 1) {
      ++pos;
    } else if (labels[i] == 0) {
      ++neg;
    } else {
      throw DataError("labels must be 0 or 1 (index " + std::to_string(i) + ")");
    }
    if (!std::isfinite(scores[i])) throw NumericError("non-finite score at index " + std::to_string(i));
  }
  if (pos == 0 || neg == 0) throw DataError("ROC is undefined unless both classes are present");

  std::vector<Eigen::Index> order(static_cast<std::size_t>(scores.size()));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) { return scores[a] > scores[b]; });

  RocResult out;
  out.curve.points.push_back({std::numeric_limits<double>::infinity(), 0.0, 0.0});
  long long tp = 0, fp = 0, prev_tp = 0, prev_fp = 0;
  // Twice the area in units of one positive-negative pair.
  long long doubled_area = 0;
  std::size_t i = 0;
  while (i < order.size()) {
    const double threshold = scores[order[i]];
    while (i < order.size() && scores[order[i]] == threshold) {
      (labels[order[i]] == 1 ? tp : fp) += 1;
      ++i;
    }
    doubled_area += (fp - prev_fp) * (tp + prev_tp);
    out.curve.points.push_back({threshold, static_cast<double>(fp) / static_cast<double>(neg),
                                static_cast<double>(tp) / static_cast<double>(pos)});
    prev_tp = tp;
    prev_fp = fp;
  }
  out.auc = static_cast<double>(doubled_area) / (2.0 * static_cast<double>(pos) * static_cast<double>(neg));
  return out;
}

std::string roc_csv(const RocCurve& curve) {
  std::string out = "threshold,fpr,tpr\n";
  for (const auto& p : curve.points) {
    out += (std::isinf(p.threshold) ? std::string("inf") : util::format_double(p.threshold)) + ',' +
           util::format_double(p.fpr) + ',' + util::format_double(p.tpr) + '\n';
  }
  return out;
}

}  // namespace ganlab::metrics
