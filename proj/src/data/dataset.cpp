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

#include "ganlab/data/dataset.hpp"

#include <cmath>

#include "ganlab/util/errors.hpp"

namespace ganlab::data {

void validate_record(const FirmRecord& record) {
  const auto& schema = IndicatorSchema::standard();
  for (std::size_t i = 0; i < kNumericIndicators; ++i) {
    if (!std::isfinite(record.indicators[i])) {
      throw DataError("record " + record.firm_id + ": " + std::string(schema.numeric()[i].name) +
                      " is not finite");
    }
  }
  if (record.contract_status != 0 && record.contract_status != 1) {
    throw DataError("record " + record.firm_id + ": contract_status must be 0 or 1, got " +
                    std::to_string(record.contract_status));
  }
  if (record.label != 0 && record.label != 1) {
    throw DataError("record " + record.firm_id + ": label must be 0 or 1, got " +
                    std::to_string(record.label));
  }
}

Dataset::Dataset(std::vector<FirmRecord> records, std::optional<NormStats> norm_stats)
    : records_(std::move(records)), norm_stats_(std::move(norm_stats)) {
  for (const auto& r : records_) validate_record(r);
  if (norm_stats_ && norm_stats_->size() != kNumericIndicators) {
    throw DataError("normalization statistics cover " + std::to_string(norm_stats_->size()) +
                    " features, schema has " + std::to_string(kNumericIndicators));
  }
}

std::size_t Dataset::count_label(int label) const {
  std::size_t n = 0;
  for (const auto& r : records_) n += r.label == label ? 1 : 0;
  return n;
}

nn::MatrixXd Dataset::features() const {
  nn::MatrixXd x(static_cast<Eigen::Index>(records_.size()), static_cast<Eigen::Index>(kFeatureColumns));
  for (std::size_t i = 0; i < records_.size(); ++i) {
    const auto row = static_cast<Eigen::Index>(i);
    for (std::size_t j = 0; j < kNumericIndicators; ++j)
      x(row, static_cast<Eigen::Index>(j)) = records_[i].indicators[j];
    x(row, static_cast<Eigen::Index>(kNumericIndicators)) = records_[i].contract_status;
  }
  return x;
}

Eigen::VectorXi Dataset::labels() const {
  Eigen::VectorXi y(static_cast<Eigen::Index>(records_.size()));
  for (std::size_t i = 0; i < records_.size(); ++i) y[static_cast<Eigen::Index>(i)] = records_[i].label;
  return y;
}

Dataset Dataset::with_label(int label) const {
  std::vector<FirmRecord> subset;
  for (const auto& r : records_)
    if (r.label == label) subset.push_back(r);
  return Dataset(std::move(subset), norm_stats_);
}

}  // namespace ganlab::data
