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

#include "ganlab/data/dataset.hpp"

namespace ganlab::data {

struct Split {
  Dataset train;
  Dataset test;
};

// Per class, floor(train_fraction * count) records go to train and the rest
// to test. Within each side records keep their original order.
Split stratified_split(const Dataset& dataset, double train_fraction, std::uint64_t seed);

}  // namespace ganlab::data
