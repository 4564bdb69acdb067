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

#include "ganlab/metrics/report.hpp"

#include <cmath>
#include <set>

#include "ganlab/util/errors.hpp"
#include "ganlab/util/numfmt.hpp"

namespace ganlab::metrics {
namespace {

constexpr std::string_view kUndefinedMark = "†";     // dagger
constexpr std::string_view kInconsistentMark = "‡";  // double dagger

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string md_cell(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += '\\';
    out += c;
  }
  return out;
}

bool f1_inconsistent(const MetricsRow& r) {
  if (r.precision + r.recall <= 0.0) return false;
  return std::abs(r.f1 - f1_score(r.precision, r.recall)) > kF1ConsistencyTolerance;
}

}  // namespace

ReportFormat report_format_from_string(std::string_view name) {
  if (name == "csv") return ReportFormat::Csv;
  if (name == "md" || name == "markdown") return ReportFormat::Markdown;
  throw ConfigError("unknown report format '" + std::string(name) + "' (expected csv or md)");
}

std::string render_report(const std::vector<MetricsRow>& rows, ReportFormat format) {
  std::set<std::string> names;
  bool any_auc = false;
  for (const auto& r : rows) {
    if (!names.insert(r.model_name).second) throw ConfigError("duplicate model name '" + r.model_name + "' in report");
    any_auc = any_auc || r.auc.has_value();
  }

  std::string out;
  if (format == ReportFormat::Csv) {
    out = any_auc ? "Model,Accuracy,Recall,Precision,F1,AUC\n" : "Model,Accuracy,Recall,Precision,F1\n";
    for (const auto& r : rows) {
      out += csv_field(r.model_name) + ',' + util::format_double(r.accuracy) + ',' + util::format_double(r.recall) +
             ',' + util::format_double(r.precision) + ',' + util::format_double(r.f1);
      if (any_auc) out += ',' + (r.auc ? util::format_double(*r.auc) : std::string());
      out += '\n';
    }
    return out;
  }

  out = any_auc ? "| Model | Accuracy | Recall | Precision | F1 | AUC |\n|---|---|---|---|---|---|\n"
                : "| Model | Accuracy | Recall | Precision | F1 |\n|---|---|---|---|---|\n";
  bool any_undefined = false;
  std::vector<std::string> mismatches;
  for (const auto& r : rows) {
    auto cell = [&](double v, bool undefined, bool inconsistent = false) {
      std::string s = util::format_fixed(v, 2);
      if (undefined) {
        s += kUndefinedMark;
        any_undefined = true;
      }
      if (inconsistent) s += kInconsistentMark;
      return s;
    };
    const bool bad_f1 = f1_inconsistent(r);
    if (bad_f1) {
      mismatches.push_back(r.model_name + ": " + util::format_fixed(f1_score(r.precision, r.recall), 3) + " vs " +
                           util::format_fixed(r.f1, 2));
    }
    out += "| " + md_cell(r.model_name) + " | " + cell(r.accuracy, false) + " | " + cell(r.recall, r.recall_undefined) +
           " | " + cell(r.precision, r.precision_undefined) + " | " + cell(r.f1, r.f1_undefined, bad_f1) + " |";
    if (any_auc) out += ' ' + (r.auc ? util::format_fixed(*r.auc, 2) : std::string("-")) + " |";
    out += '\n';
  }
  if (any_undefined || !mismatches.empty()) out += '\n';
  if (any_undefined) {
    out += std::string(kUndefinedMark) + " Zero denominator; the value is reported as 0.\n";
  }
  if (!mismatches.empty()) {
    out += std::string(kInconsistentMark) + " F1 recomputed as 2PR/(P+R) disagrees with the F1 given: ";
    for (std::size_t i = 0; i < mismatches.size(); ++i) out += (i ? "; " : "") + mismatches[i];
    out += ".\n";
  }
  return out;
}

std::vector<MetricsRow> published_reference_rows() {
  auto row = [](std::string name, double acc, double rec, double prec, double f1) {
    MetricsRow r;
    r.model_name = std::move(name);
    r.accuracy = acc;
    r.recall = rec;
    r.precision = prec;
    r.f1 = f1;
    return r;
  };
  return {row("SVM", 0.83, 0.88, 0.84, 0.89), row("BP network", 0.88, 0.93, 0.88, 0.94),
          row("RNN", 0.90, 0.96, 0.90, 0.95), row("LSTM", 0.92, 0.97, 0.93, 0.96),
          row("GANs", 0.96, 1.00, 0.97, 0.97)};
}

}  // namespace ganlab::metrics
