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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "ganlab/data/augment.hpp"
#include "ganlab/data/csv.hpp"
#include "ganlab/data/normalize.hpp"
#include "ganlab/data/split.hpp"
#include "ganlab/data/world.hpp"
#include "ganlab/nn/prng.hpp"

namespace ganlab::data {
namespace {

std::string header_without(std::string_view skip) {
  std::string h = "firm_id,industry";
  for (const auto& d : IndicatorSchema::standard().numeric()) {
    if (d.name == skip) continue;
    h += ",";
    h += d.name;
  }
  return h + ",contract_status,label\n";
}

std::string row(const std::string& id, const std::string& first_value, int label) {
  std::string r = id + ",Steel," + first_value;
  for (std::size_t j = 1; j < kNumericIndicators; ++j) r += "," + std::to_string(j);
  return r + ",1," + std::to_string(label) + "\n";
}

FirmRecord record(const std::string& id, int label, double base) {
  FirmRecord r;
  r.firm_id = id;
  r.label = label;
  for (std::size_t j = 0; j < kNumericIndicators; ++j) r.indicators[j] = base + static_cast<double>(j);
  return r;
}

Dataset random_dataset(std::size_t n, std::size_t positives, std::uint64_t seed) {
  nn::Prng rng(seed);
  std::vector<FirmRecord> out;
  for (std::size_t i = 0; i < n; ++i) {
    FirmRecord r;
    r.firm_id = "R" + std::to_string(i);
    r.label = i < positives ? 1 : 0;
    r.contract_status = static_cast<int>(rng.index(2));
    r.industry = static_cast<Industry>(rng.index(3));
    for (auto& v : r.indicators) v = rng.normal() * 3.0 + 1.5;
    out.push_back(r);
  }
  return Dataset(std::move(out));
}

TEST(Schema, HasFourteenUniqueNumericIndicatorsAndContractStatus) {
  const auto& s = IndicatorSchema::standard();
  EXPECT_EQ(s.numeric().size(), 14u);
  EXPECT_EQ(s.feature_count(), 15u);
  auto names = s.feature_names();
  EXPECT_EQ(names.back(), "contract_status");
  std::sort(names.begin(), names.end());
  EXPECT_EQ(std::adjacent_find(names.begin(), names.end()), names.end());
  EXPECT_EQ(s.numeric_index("inventory_turnover_rate"), 11u);
  EXPECT_EQ(s.numeric()[4].name, "net_profit_growth_rate");
}

TEST(Csv, LoadsWellFormedRowsByHeaderName) {
  // Columns deliberately reversed relative to the schema.
  std::string header = "label,contract_status";
  const auto& defs = IndicatorSchema::standard().numeric();
  for (auto it = defs.rbegin(); it != defs.rend(); ++it) header += "," + std::string(it->name);
  header += ",industry,firm_id\n";
  auto line = [](int label, int status, double base, const char* industry, const char* id) {
    std::string r = std::to_string(label) + "," + std::to_string(status);
    for (std::size_t j = kNumericIndicators; j-- > 0;) r += "," + std::to_string(base + j);
    return r + "," + industry + "," + id + "\n";
  };
  std::istringstream in(header + line(1, 0, 10, "Steel", "A") + line(0, 1, 20, "ECommerce", "B"));
  const Dataset d = read_csv(in);
  ASSERT_EQ(d.size(), 2u);
  EXPECT_EQ(d.records()[0].firm_id, "A");
  EXPECT_EQ(d.records()[0].label, 1);
  EXPECT_EQ(d.records()[0].contract_status, 0);
  EXPECT_DOUBLE_EQ(d.records()[0].indicators[0], 10);
  EXPECT_DOUBLE_EQ(d.records()[0].indicators[13], 23);
  EXPECT_EQ(d.records()[1].industry, Industry::ECommerce);
  EXPECT_DOUBLE_EQ(d.records()[1].indicators[5], 25);
}

TEST(Csv, MissingColumnIsNamed) {
  std::istringstream in(header_without("quick_ratio"));
  try {
    read_csv(in);
    FAIL();
  } catch (const SchemaError& e) {
    EXPECT_NE(std::string(e.what()).find("quick_ratio"), std::string::npos);
  }
}

TEST(Csv, NonNumericCellCitesRowAndColumn) {
  std::istringstream in(header_without("") + row("a", "1", 0) + row("b", "2", 1) + row("c", "abc", 0));
  try {
    read_csv(in);
    FAIL();
  } catch (const ParseError& e) {
    const std::string msg = e.what();
    EXPECT_NE(msg.find("row 3"), std::string::npos) << msg;
    EXPECT_NE(msg.find("total_profit"), std::string::npos) << msg;
  }
}

TEST(Csv, UnknownIndustryIsNamed) {
  std::string bad = row("a", "1", 0);
  bad.replace(bad.find("Steel"), 5, "Mining");
  std::istringstream in(header_without("") + bad);
  try {
    read_csv(in);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("Mining"), std::string::npos);
  }
}

TEST(Csv, WriteThenReadPreservesRecordsExactly) {
  Dataset d = make_reference_world([] {
    auto c = default_world_config();
    c.n = 50;
    return c;
  }());
  std::istringstream in(to_csv(d, {.ground_truth = true, .origin = true}));
  const Dataset back = read_csv(in);
  EXPECT_EQ(back.records(), d.records());
}

TEST(Normalize, StandardizesColumn) {
  std::vector<FirmRecord> rs = {record("a", 0, 1), record("b", 0, 2), record("c", 1, 3)};
  const Dataset n = normalize(Dataset(rs));
  EXPECT_NEAR(n.records()[0].indicators[0], -1.224745, 1e-6);
  EXPECT_NEAR(n.records()[1].indicators[0], 0.0, 1e-12);
  EXPECT_NEAR(n.records()[2].indicators[0], 1.224745, 1e-6);
  EXPECT_EQ(n.records()[2].label, 1);
  EXPECT_EQ(n.records()[2].contract_status, 1);
}

TEST(Normalize, ConstantColumnMapsToZeroAndIsFlagged) {
  std::vector<FirmRecord> rs = {record("a", 0, 1), record("b", 0, 2), record("c", 1, 3)};
  for (auto& r : rs) r.indicators[3] = 4.0;
  const Dataset n = normalize(Dataset(rs));
  for (const auto& r : n.records()) EXPECT_EQ(r.indicators[3], 0.0);
  EXPECT_TRUE((*n.norm_stats())[3].zero_variance);
  EXPECT_FALSE((*n.norm_stats())[0].zero_variance);
  EXPECT_EQ(denormalize(n).records()[1].indicators[3], 4.0);
}

TEST(Normalize, RoundTripIsIdentity) {
  const Dataset d = random_dataset(200, 20, 3);
  const Dataset back = denormalize(normalize(d));
  double worst = 0;
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = 0; j < kNumericIndicators; ++j)
      worst = std::max(worst, std::abs(back.records()[i].indicators[j] - d.records()[i].indicators[j]));
  EXPECT_LT(worst, 1e-12);
}

TEST(Normalize, StateErrors) {
  const Dataset n = normalize(random_dataset(10, 2, 1));
  EXPECT_THROW(normalize(n), StateError);
  EXPECT_THROW(denormalize(random_dataset(10, 2, 1)), StateError);
  EXPECT_THROW(normalize(random_dataset(1, 0, 1)), DataError);
}

TEST(Split, FloorRulePerClass) {
  const Dataset d = random_dataset(100, 10, 5);
  const Split s = stratified_split(d, 0.8, 42);
  EXPECT_EQ(s.train.count_label(1), 8u);
  EXPECT_EQ(s.train.count_label(0), 72u);
  EXPECT_EQ(s.test.count_label(1), 2u);
  EXPECT_EQ(s.test.count_label(0), 18u);
}

TEST(Split, DeterministicPerSeed) {
  const Dataset d = random_dataset(60, 9, 5);
  EXPECT_EQ(stratified_split(d, 0.7, 1).train.records(), stratified_split(d, 0.7, 1).train.records());
  EXPECT_NE(stratified_split(d, 0.7, 1).train.records(), stratified_split(d, 0.7, 2).train.records());
}

TEST(Split, UnionIsInputMultiset) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Dataset d = random_dataset(37 + seed, 5 + seed, seed);
    const Split s = stratified_split(d, 0.65, seed);
    std::map<std::string, int> counts;
    for (const auto& r : d.records()) counts[r.firm_id]++;
    for (const auto& r : s.train.records()) counts[r.firm_id]--;
    for (const auto& r : s.test.records()) counts[r.firm_id]--;
    for (const auto& [id, c] : counts) EXPECT_EQ(c, 0) << id;
    EXPECT_EQ(s.train.size() + s.test.size(), d.size());
  }
}

TEST(Split, TooFewInClassIsError) {
  EXPECT_THROW(stratified_split(random_dataset(20, 1, 1), 0.8, 1), StratificationError);
  EXPECT_THROW(stratified_split(random_dataset(20, 0, 1), 0.8, 1), StratificationError);
  EXPECT_THROW(stratified_split(random_dataset(20, 5, 1), 1.0, 1), ConfigError);
}

TEST(Augment, FillsDeficitToRatio) {
  std::vector<FirmRecord> rs;
  for (int i = 0; i < 95; ++i) rs.push_back(record("n" + std::to_string(i), 0, i));
  for (int i = 0; i < 5; ++i) rs.push_back(record("p" + std::to_string(i), 1, i));
  const Dataset train(rs);
  std::vector<FirmRecord> synth;
  for (int i = 0; i < 200; ++i) synth.push_back(record("s" + std::to_string(i), 1, i));
  const AugmentResult res = augment(train, synth, 1.0);
  EXPECT_EQ(res.appended, 90u);
  EXPECT_EQ(res.shortfall, 0u);
  EXPECT_EQ(res.dataset.count_label(0), 95u);
  EXPECT_EQ(res.dataset.count_label(1), 95u);
  for (std::size_t i = 0; i < train.size(); ++i) EXPECT_EQ(res.dataset.records()[i], train.records()[i]);
  for (std::size_t i = train.size(); i < res.dataset.size(); ++i)
    EXPECT_EQ(res.dataset.records()[i].origin, Origin::Synthetic);
}

TEST(Augment, NoOpWhenTargetMet) {
  std::vector<FirmRecord> rs = {record("a", 0, 1), record("b", 1, 2)};
  std::vector<FirmRecord> synth = {record("s", 1, 3)};
  const AugmentResult res = augment(Dataset(rs), synth, 1.0);
  EXPECT_EQ(res.appended, 0u);
  EXPECT_EQ(res.dataset.records(), rs);
}

TEST(Augment, ReportsShortfall) {
  std::vector<FirmRecord> rs;
  for (int i = 0; i < 95; ++i) rs.push_back(record("n" + std::to_string(i), 0, i));
  for (int i = 0; i < 5; ++i) rs.push_back(record("p" + std::to_string(i), 1, i));
  std::vector<FirmRecord> synth;
  for (int i = 0; i < 10; ++i) synth.push_back(record("s" + std::to_string(i), 1, i));
  const AugmentResult res = augment(Dataset(rs), synth, 1.0);
  EXPECT_EQ(res.appended, 10u);
  EXPECT_EQ(res.shortfall, 80u);
}

TEST(Augment, MajorityClassSyntheticIsContractError) {
  std::vector<FirmRecord> rs = {record("a", 0, 1), record("b", 0, 2), record("c", 1, 2)};
  std::vector<FirmRecord> synth = {record("s", 0, 3)};
  EXPECT_THROW(augment(Dataset(rs), synth, 1.0), ContractError);
}

TEST(World, ZeroCoefficientsGiveConstantProbability) {
  WorldConfig c = default_world_config();
  c.coefficients.fill(0.0);
  c.intercept = std::log(0.05 / 0.95);
  c.n = 300;
  for (const auto& r : make_reference_world(c).records()) EXPECT_DOUBLE_EQ(*r.ground_truth_p, 0.05);
}

TEST(World, SingleIndustryMix) {
  WorldConfig c = default_world_config();
  c.industry_mix = {1.0, 0.0, 0.0};
  c.n = 200;
  for (const auto& r : make_reference_world(c).records()) EXPECT_EQ(r.industry, Industry::Steel);
}

TEST(World, BitReproducible) {
  WorldConfig c = default_world_config();
  c.n = 400;
  EXPECT_EQ(make_reference_world(c).records(), make_reference_world(c).records());
}

TEST(World, CalibratedInterceptHitsBaseRate) {
  const WorldConfig c = default_world_config();
  const Dataset d = make_reference_world(c);
  double mean_p = 0;
  for (const auto& r : d.records()) mean_p += *r.ground_truth_p;
  mean_p /= static_cast<double>(d.size());
  // Sampling noise on the mean of 2000 probabilities is well under 0.01.
  EXPECT_NEAR(mean_p, 0.05, 0.01);
}

TEST(World, NonPsdCovarianceIsConfigError) {
  WorldConfig c = default_world_config();
  c.profiles[1].covariance(0, 1) = c.profiles[1].covariance(1, 0) = 1e6;
  EXPECT_THROW(make_reference_world(c), ConfigError);
  WorldConfig m = default_world_config();
  m.industry_mix = {0.5, 0.5, 0.5};
  EXPECT_THROW(make_reference_world(m), ConfigError);
}

// Replays the documented sampling order with plain loops and a hand-written
// Cholesky factorization.
std::size_t replay_positive_count(const WorldConfig& c) {
  constexpr std::size_t n = kNumericIndicators;
  std::array<std::array<std::array<double, n>, n>, kIndustryCount> lower{};
  for (std::size_t k = 0; k < kIndustryCount; ++k) {
    const auto& a = c.profiles[k].covariance;
    auto& l = lower[k];
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j <= i; ++j) {
        double s = a(i, j);
        for (std::size_t m = 0; m < j; ++m) s -= l[i][m] * l[j][m];
        l[i][j] = i == j ? std::sqrt(s) : s / l[j][j];
      }
    }
  }
  std::array<double, n> center{}, scale{};
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < kIndustryCount; ++k) center[j] += c.industry_mix[k] * c.profiles[k].mean[j];
    double var = 0;
    for (std::size_t k = 0; k < kIndustryCount; ++k) {
      const double d = c.profiles[k].mean[j] - center[j];
      var += c.industry_mix[k] * (c.profiles[k].covariance(j, j) + d * d);
    }
    scale[j] = std::sqrt(var);
  }
  const double b = effective_intercept(c);
  nn::Prng rng(c.seed);
  std::size_t positives = 0;
  for (std::size_t i = 0; i < c.n; ++i) {
    const double u = rng.uniform();
    std::size_t k = 0;
    double acc = 0;
    for (k = 0; k < kIndustryCount; ++k) {
      acc += c.industry_mix[k];
      if (u < acc) break;
    }
    std::array<double, n> z{};
    for (auto& v : z) v = rng.normal();
    double logit = b;
    for (std::size_t j = 0; j < n; ++j) {
      double x = c.profiles[k].mean[j];
      for (std::size_t m = 0; m <= j; ++m) x += lower[k][j][m] * z[m];
      logit += c.coefficients[j] * (x - center[j]) / scale[j];
    }
    const double p = 1.0 / (1.0 + std::exp(-logit));
    if (rng.uniform() < p) ++positives;
    rng.uniform();  // contract status draw
  }
  return positives;
}

TEST(World, PositiveCountMatchesReplay) {
  const WorldConfig c = default_world_config();
  ASSERT_EQ(c.n, 2000u);
  EXPECT_EQ(make_reference_world(c).count_label(1), replay_positive_count(c));
}

TEST(World, DefaultersBreachContractsMoreOften) {
  const Dataset d = make_reference_world(strong_signal_world_config());
  double breach_pos = 0, breach_neg = 0;
  for (const auto& r : d.records()) (r.label ? breach_pos : breach_neg) += r.contract_status == 0;
  EXPECT_GT(breach_pos / d.count_label(1), breach_neg / d.count_label(0));
}

}  // namespace
}  // namespace ganlab::data
