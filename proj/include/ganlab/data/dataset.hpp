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

#include <array>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "ganlab/data/schema.hpp"
#include "ganlab/nn/matrix.hpp"

namespace ganlab::data {

enum class Origin { Real, Synthetic };

struct FirmRecord {
  std::string firm_id;
  Industry industry = Industry::Steel;
  std::array<double, kNumericIndicators> indicators{};
  int contract_status = 1;  // 0 = breached, 1 = fulfilled
  int label = 0;            // 1 = default
  Origin origin = Origin::Real;
  std::optional<double> ground_truth_p;

  bool operator==(const FirmRecord&) const = default;
};

// Throws DataError when a record breaks the schema invariants.
void validate_record(const FirmRecord& record);

struct FeatureStats {
  double mean = 0.0;
  double std = 1.0;
  bool zero_variance = false;

  bool operator==(const FeatureStats&) const = default;
};

// One entry per numeric indicator.
using NormStats = std::vector<FeatureStats>;

// Ordered, immutable collection of firm records. When norm_stats is present
// the numeric indicators hold z-scores computed with those statistics.
class Dataset {
 public:
  Dataset() = default;
  explicit Dataset(std::vector<FirmRecord> records, std::optional<NormStats> norm_stats = std::nullopt);

  const IndicatorSchema& schema() const { return IndicatorSchema::standard(); }
  const std::vector<FirmRecord>& records() const { return records_; }
  std::size_t size() const { return records_.size(); }
  bool empty() const { return records_.empty(); }
  bool is_normalized() const { return norm_stats_.has_value(); }
  const std::optional<NormStats>& norm_stats() const { return norm_stats_; }

  std::size_t count_label(int label) const;

  // n x kFeatureColumns: the numeric indicators, then contract_status.
  nn::MatrixXd features() const;
  Eigen::VectorXi labels() const;

  // Records matching `label`, keeping order and normalization state.
  Dataset with_label(int label) const;

 private:
  std::vector<FirmRecord> records_;
  std::optional<NormStats> norm_stats_;
};

}  // namespace ganlab::data
