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

#include "ganlab/data/augment.hpp"

#include <cmath>

#include "ganlab/util/errors.hpp"

namespace ganlab::data {

AugmentResult augment(const Dataset& train, std::span<const FirmRecord> synthetic, double target_ratio) {
  if (!(target_ratio > 0.0 && target_ratio <= 1.0)) {
    throw ConfigError("augmentation target ratio must lie in (0, 1]");
  }
  for (const auto& r : synthetic) {
    validate_record(r);
    if (r.label != 1) {
      throw ContractError("synthetic record " + r.firm_id + " is labeled non-default; only the minority class may be synthesized");
    }
  }
  const double negatives = static_cast<double>(train.count_label(0));
  const double positives = static_cast<double>(train.count_label(1));
  const double deficit = std::ceil(target_ratio * negatives - positives);
  const std::size_t needed = deficit > 0 ? static_cast<std::size_t>(deficit) : 0;

  AugmentResult result;
  result.appended = std::min(needed, synthetic.size());
  result.shortfall = needed - result.appended;
  if (result.appended == 0) {
    result.dataset = train;
    return result;
  }
  std::vector<FirmRecord> records = train.records();
  records.reserve(records.size() + result.appended);
  for (std::size_t i = 0; i < result.appended; ++i) {
    FirmRecord r = synthetic[i];
    r.origin = Origin::Synthetic;
    records.push_back(std::move(r));
  }
  result.dataset = Dataset(std::move(records), train.norm_stats());
  return result;
}

}  // namespace ganlab::data
