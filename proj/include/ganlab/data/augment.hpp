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

#include <span>

#include "ganlab/data/dataset.hpp"

namespace ganlab::data {

struct AugmentResult {
  Dataset dataset;
  std::size_t appended = 0;
  // Records still missing to reach the target ratio when the synthetic pool
  // ran out.
  std::size_t shortfall = 0;
};

// Appends the fewest synthetic default records needed to bring
// defaults / non-defaults up to target_ratio. Appended records are tagged
// Origin::Synthetic; existing records are neither changed nor reordered.
AugmentResult augment(const Dataset& train, std::span<const FirmRecord> synthetic, double target_ratio);

}  // namespace ganlab::data
