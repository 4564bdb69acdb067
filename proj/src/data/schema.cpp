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

#include "ganlab/data/schema.hpp"

namespace ganlab::data {

std::string_view to_string(Industry industry) {
  switch (industry) {
    case Industry::Steel: return "Steel";
    case Industry::PharmaDistribution: return "PharmaDistribution";
    case Industry::ECommerce: return "ECommerce";
  }
  return "Steel";
}

std::optional<Industry> industry_from_string(std::string_view name) {
  if (name == "Steel") return Industry::Steel;
  if (name == "PharmaDistribution") return Industry::PharmaDistribution;
  if (name == "ECommerce") return Industry::ECommerce;
  return std::nullopt;
}

std::string_view to_string(IndicatorCategory category) {
  switch (category) {
    case IndicatorCategory::Profitability: return "Profitability";
    case IndicatorCategory::AssetsAndGrowth: return "Assets and Growth";
    case IndicatorCategory::Liquidity: return "Liquidity Indicators";
    case IndicatorCategory::OperationalEfficiency: return "Operational Efficiency";
    case IndicatorCategory::ContractStatus: return "Contract Status";
  }
  return "";
}

IndicatorSchema::IndicatorSchema()
    : numeric_{{
          {"total_profit", IndicatorCategory::Profitability},
          {"operating_margin", IndicatorCategory::Profitability},
          {"capital_cost_profit_margin", IndicatorCategory::Profitability},
          {"return_on_assets", IndicatorCategory::Profitability},
          {"net_profit_growth_rate", IndicatorCategory::Profitability},
          {"total_assets", IndicatorCategory::AssetsAndGrowth},
          {"development_capability", IndicatorCategory::AssetsAndGrowth},
          {"operating_revenue_growth_rate", IndicatorCategory::AssetsAndGrowth},
          {"total_asset_growth_rate", IndicatorCategory::AssetsAndGrowth},
          {"current_ratio", IndicatorCategory::Liquidity},
          {"quick_ratio", IndicatorCategory::Liquidity},
          {"inventory_turnover_rate", IndicatorCategory::OperationalEfficiency},
          {"accounts_receivable_turnover_rate", IndicatorCategory::OperationalEfficiency},
          {"total_asset_turnover_rate", IndicatorCategory::OperationalEfficiency},
      }} {}

const IndicatorSchema& IndicatorSchema::standard() {
  static const IndicatorSchema schema;
  return schema;
}

std::optional<std::size_t> IndicatorSchema::numeric_index(std::string_view name) const {
  for (std::size_t i = 0; i < numeric_.size(); ++i)
    if (numeric_[i].name == name) return i;
  return std::nullopt;
}

std::vector<std::string> IndicatorSchema::feature_names() const {
  std::vector<std::string> names;
  for (const auto& def : numeric_) names.emplace_back(def.name);
  names.emplace_back(contract_status_name());
  return names;
}

}  // namespace ganlab::data
