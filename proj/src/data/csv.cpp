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

#include "ganlab/data/csv.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

#include "ganlab/util/errors.hpp"
#include "ganlab/util/numfmt.hpp"

namespace ganlab::data {
namespace {

std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream ss(line);
  while (std::getline(ss, cell, ',')) cells.emplace_back(util::trim(cell));
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

}  // namespace

Dataset read_csv(std::istream& in, const std::string& source_name) {
  const auto& schema = IndicatorSchema::standard();
  std::string line;
  if (!std::getline(in, line)) throw SchemaError(source_name + ": missing header row");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  // Tolerate a UTF-8 byte-order mark.
  if (line.rfind("\xEF\xBB\xBF", 0) == 0) line.erase(0, 3);
  const std::vector<std::string> header = split_line(line);

  std::map<std::string, std::size_t> column;
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (!column.emplace(header[i], i).second)
      throw SchemaError(source_name + ": duplicate column '" + header[i] + "'");
  }
  auto require = [&](std::string_view name) {
    auto it = column.find(std::string(name));
    if (it == column.end()) throw SchemaError(source_name + ": missing required column '" + std::string(name) + "'");
    return it->second;
  };
  const std::size_t id_col = require("firm_id");
  const std::size_t industry_col = require("industry");
  std::array<std::size_t, kNumericIndicators> numeric_cols{};
  for (std::size_t j = 0; j < kNumericIndicators; ++j) numeric_cols[j] = require(schema.numeric()[j].name);
  const std::size_t contract_col = require(IndicatorSchema::contract_status_name());
  const std::size_t label_col = require("label");
  std::optional<std::size_t> truth_col, origin_col;
  if (auto it = column.find("ground_truth_p"); it != column.end()) truth_col = it->second;
  if (auto it = column.find("origin"); it != column.end()) origin_col = it->second;
  const std::size_t known = kNumericIndicators + 4 + (truth_col ? 1 : 0) + (origin_col ? 1 : 0);
  if (known != header.size()) {
    for (const auto& name : header) {
      const bool ok = name == "firm_id" || name == "industry" || name == "label" ||
                      name == IndicatorSchema::contract_status_name() || name == "ground_truth_p" ||
                      name == "origin" || schema.numeric_index(name).has_value();
      if (!ok) throw SchemaError(source_name + ": unknown column '" + name + "'");
    }
  }

  std::vector<FirmRecord> records;
  std::size_t row = 0;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (util::trim(line).empty()) continue;
    ++row;
    const std::vector<std::string> cells = split_line(line);
    if (cells.size() != header.size()) {
      throw ParseError(source_name + ": row " + std::to_string(row) + " has " +
                       std::to_string(cells.size()) + " cells, header has " + std::to_string(header.size()));
    }
    auto number = [&](std::size_t col) {
      auto v = util::parse_double(cells[col]);
      if (!v || !std::isfinite(*v)) {
        throw ParseError(source_name + ": row " + std::to_string(row) + ", column '" + header[col] +
                         "': not a finite number: '" + cells[col] + "'");
      }
      return *v;
    };
    auto integer01 = [&](std::size_t col) {
      auto v = util::parse_int(cells[col]);
      if (!v || (*v != 0 && *v != 1)) {
        throw ParseError(source_name + ": row " + std::to_string(row) + ", column '" + header[col] +
                         "': expected 0 or 1, got '" + cells[col] + "'");
      }
      return static_cast<int>(*v);
    };

    FirmRecord r;
    r.firm_id = cells[id_col];
    if (r.firm_id.empty()) throw ParseError(source_name + ": row " + std::to_string(row) + ": empty firm_id");
    auto industry = industry_from_string(cells[industry_col]);
    if (!industry) {
      throw ParseError(source_name + ": row " + std::to_string(row) + ": unknown industry '" +
                       cells[industry_col] + "'");
    }
    r.industry = *industry;
    for (std::size_t j = 0; j < kNumericIndicators; ++j) r.indicators[j] = number(numeric_cols[j]);
    r.contract_status = integer01(contract_col);
    r.label = integer01(label_col);
    if (truth_col && !cells[*truth_col].empty()) r.ground_truth_p = number(*truth_col);
    if (origin_col) {
      const std::string& o = cells[*origin_col];
      if (o == "synthetic") {
        r.origin = Origin::Synthetic;
      } else if (o != "real") {
        throw ParseError(source_name + ": row " + std::to_string(row) + ": unknown origin '" + o + "'");
      }
    }
    records.push_back(std::move(r));
  }
  return Dataset(std::move(records));
}

Dataset load_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  return read_csv(in, path.string());
}

std::string to_csv(const Dataset& dataset, const CsvWriteOptions& options) {
  const auto& schema = IndicatorSchema::standard();
  std::string out = "firm_id,industry";
  for (const auto& def : schema.numeric()) {
    out += ',';
    out += def.name;
  }
  out += ",contract_status,label";
  if (options.ground_truth) out += ",ground_truth_p";
  if (options.origin) out += ",origin";
  out += '\n';
  for (const auto& r : dataset.records()) {
    out += r.firm_id;
    out += ',';
    out += to_string(r.industry);
    for (double v : r.indicators) {
      out += ',';
      out += util::format_double(v);
    }
    out += ',' + std::to_string(r.contract_status) + ',' + std::to_string(r.label);
    if (options.ground_truth) {
      out += ',';
      if (r.ground_truth_p) out += util::format_double(*r.ground_truth_p);
    }
    if (options.origin) out += r.origin == Origin::Synthetic ? ",synthetic" : ",real";
    out += '\n';
  }
  return out;
}

void save_csv(const Dataset& dataset, const std::filesystem::path& path, const CsvWriteOptions& options) {
  util::write_text_file(path, to_csv(dataset, options));
}

}  // namespace ganlab::data
