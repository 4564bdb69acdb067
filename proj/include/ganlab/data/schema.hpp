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
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ganlab::data {

// Fourteen numeric indicators plus the binary contract status.
inline constexpr std::size_t kNumericIndicators = 14;
inline constexpr std::size_t kFeatureColumns = kNumericIndicators + 1;

enum class IndicatorCategory {
  Profitability,
  AssetsAndGrowth,
  Liquidity,
  OperationalEfficiency,
  ContractStatus,
};

enum class Industry { Steel, PharmaDistribution, ECommerce };
inline constexpr std::size_t kIndustryCount = 3;

struct IndicatorDef {
  std::string_view name;
  IndicatorCategory category;
};

std::string_view to_string(Industry industry);
std::optional<Industry> industry_from_string(std::string_view name);
std::string_view to_string(IndicatorCategory category);

// Ordered, versioned indicator system. Column order of every feature matrix
// is numeric() in order, then contract_status.
class IndicatorSchema {
 public:
  static const IndicatorSchema& standard();

  int version() const { return 1; }
  std::span<const IndicatorDef> numeric() const { return numeric_; }
  static constexpr std::string_view contract_status_name() { return "contract_status"; }
  static constexpr std::size_t feature_count() { return kFeatureColumns; }

  std::optional<std::size_t> numeric_index(std::string_view name) const;
  std::vector<std::string> feature_names() const;

 private:
  IndicatorSchema();
  std::array<IndicatorDef, kNumericIndicators> numeric_;
};

}  // namespace ganlab::data
