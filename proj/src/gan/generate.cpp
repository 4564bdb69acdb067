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

#include "ganlab/gan/generate.hpp"

#include <cmath>
#include <cstdio>

#include "ganlab/data/normalize.hpp"
#include "ganlab/util/errors.hpp"

namespace ganlab::gan {

std::vector<data::FirmRecord> generate_records(const GanModel& model, long long n, const data::NormStats& norm_stats,
                                               nn::Prng& rng, const GenerateOptions& options) {
  if (n < 0) throw ConfigError("record count must be nonnegative, got " + std::to_string(n));
  bind_model(model, static_cast<Index>(data::kFeatureColumns));
  if (norm_stats.size() != data::kNumericIndicators) {
    throw BindError("normalization stats cover " + std::to_string(norm_stats.size()) + " features, expected " +
                    std::to_string(data::kNumericIndicators));
  }
  double mix_total = 0.0;
  for (double w : options.industry_mix) {
    if (!(w >= 0.0)) throw ConfigError("industry mix weights must be nonnegative");
    mix_total += w;
  }
  if (!(mix_total > 0.0)) throw ConfigError("industry mix is all zero");

  std::vector<data::FirmRecord> out;
  if (n == 0) return out;

  nn::Mlp<double> generator = model.generator;
  generator.set_mode(nn::NormMode::Infer);
  const MatrixXd noise = sample_noise(model.noise, static_cast<Index>(n), rng);
  const MatrixXd rows = generator.forward(noise);
  nn::require_finite(rows, "generator output");

  out.reserve(static_cast<std::size_t>(n));
  for (Index i = 0; i < rows.rows(); ++i) {
    data::FirmRecord rec;
    char id[32];
    std::snprintf(id, sizeof id, "%06lld", static_cast<long long>(i));
    rec.firm_id = options.id_prefix + id;

    double u = rng.uniform() * mix_total;
    std::size_t k = 0;
    while (k + 1 < data::kIndustryCount && (u >= options.industry_mix[k] || options.industry_mix[k] == 0.0)) {
      u -= options.industry_mix[k];
      ++k;
    }
    rec.industry = static_cast<data::Industry>(k);

    for (std::size_t j = 0; j < data::kNumericIndicators; ++j) rec.indicators[j] = rows(i, static_cast<Index>(j));
    data::denormalize_indicators(rec.indicators, norm_stats);
    const double status = rows(i, static_cast<Index>(data::kNumericIndicators));
    rec.contract_status = std::lround(status) >= 1 ? 1 : 0;
    rec.label = 1;
    rec.origin = data::Origin::Synthetic;
    out.push_back(std::move(rec));
  }
  return out;
}

}  // namespace ganlab::gan
