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

#include <string>
#include <vector>

#include <Eigen/Dense>

namespace ganlab::metrics {

struct RocPoint {
  double threshold = 0.0;  // +inf for the (0, 0) start
  double fpr = 0.0;
  double tpr = 0.0;
};

struct RocCurve {
  std::vector<RocPoint> points;
};

struct RocResult {
  RocCurve curve;
  double auc = 0.0;
};

// Sweeps every distinct score, highest first; a row is called positive when
// its score >= the threshold. AUC is the trapezoid area, accumulated in
// integer counts so ties land exactly on the Mann-Whitney value.
RocResult roc_and_auc(const Eigen::VectorXi& labels, const Eigen::VectorXd& scores);

// threshold,fpr,tpr
std::string roc_csv(const RocCurve& curve);

}  // namespace ganlab::metrics
