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

#include <algorithm>
#include <string>

#include "ganlab/nn/matrix.hpp"

namespace ganlab::nn {

// Projects every parameter into [-c, c]. Values already inside are untouched.
template <typename Scalar>
void clip_weights(Eigen::Ref<Vector<Scalar>> params, Scalar c) {
  if (!(c > Scalar(0))) {
    throw ConfigError("clip bound must be positive, got " + std::to_string(static_cast<double>(c)));
  }
  for (Index i = 0; i < params.size(); ++i) params[i] = std::clamp(params[i], -c, c);
}

template <typename Scalar>
Vector<Scalar> clipped(Vector<Scalar> params, Scalar c) {
  clip_weights<Scalar>(params, c);
  return params;
}

}  // namespace ganlab::nn
