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

#include <string>
#include <string_view>
#include <vector>

#include "ganlab/metrics/confusion.hpp"

namespace ganlab::metrics {

enum class ReportFormat { Csv, Markdown };

ReportFormat report_format_from_string(std::string_view name);  // csv | md | markdown

// Columns: Model, Accuracy, Recall, Precision, F1, and AUC when any row has
// one. Markdown rounds to 2 decimals and appends footnotes; CSV keeps full
// precision and has no footnotes. Duplicate model names are rejected.
std::string render_report(const std::vector<MetricsRow>& rows, ReportFormat format);

// Printed F1 further than this from 2PR/(P+R) gets a footnote. Allows for
// two-decimal rounding of P, R and F1 themselves.
inline constexpr double kF1ConsistencyTolerance = 0.01;

// The published comparison table, as printed (F1 values not recomputed).
std::vector<MetricsRow> published_reference_rows();

}  // namespace ganlab::metrics
