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

#include "ganlab/data/split.hpp"

#include <cmath>
#include <vector>

#include "ganlab/nn/prng.hpp"
#include "ganlab/util/errors.hpp"

namespace ganlab::data {

Split stratified_split(const Dataset& dataset, double train_fraction, std::uint64_t seed) {
  if (!(train_fraction > 0.0 && train_fraction < 1.0)) {
    throw ConfigError("train fraction must lie in (0, 1)");
  }
  nn::Prng rng(seed);
  std::vector<bool> to_train(dataset.size(), false);
  for (int label : {0, 1}) {
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < dataset.size(); ++i)
      if (dataset.records()[i].label == label) members.push_back(i);
    if (members.size() < 2) {
      throw StratificationError("class " + std::to_string(label) + " has " +
                                std::to_string(members.size()) + " records; stratification needs at least 2");
    }
    nn::shuffle(std::span<std::size_t>(members), rng);
    const auto take = static_cast<std::size_t>(std::floor(train_fraction * static_cast<double>(members.size())));
    for (std::size_t k = 0; k < take; ++k) to_train[members[k]] = true;
  }
  std::vector<FirmRecord> train, test;
  for (std::size_t i = 0; i < dataset.size(); ++i) {
    (to_train[i] ? train : test).push_back(dataset.records()[i]);
  }
  return Split{Dataset(std::move(train), dataset.norm_stats()), Dataset(std::move(test), dataset.norm_stats())};
}

}  // namespace ganlab::data
