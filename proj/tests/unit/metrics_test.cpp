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

#include <cmath>
#include <sstream>

#include "ganlab/metrics/confusion.hpp"
#include "ganlab/metrics/report.hpp"
#include "ganlab/metrics/roc.hpp"
#include "ganlab/metrics/svg.hpp"
#include "ganlab/nn/prng.hpp"
#include "ganlab/util/errors.hpp"

namespace ganlab::metrics {
namespace {

Eigen::VectorXi ints(std::initializer_list<int> v) {
  Eigen::VectorXi out(static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (int x : v) out[i++] = x;
  return out;
}

Eigen::VectorXd reals(std::initializer_list<double> v) {
  Eigen::VectorXd out(static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (double x : v) out[i++] = x;
  return out;
}

// Pairwise P(score+ > score-) + P(tie)/2.
double mann_whitney(const Eigen::VectorXi& y, const Eigen::VectorXd& s) {
  double wins = 0, pairs = 0;
  for (Eigen::Index i = 0; i < y.size(); ++i) {
    if (y[i] != 1) continue;
    for (Eigen::Index j = 0; j < y.size(); ++j) {
      if (y[j] != 0) continue;
      pairs += 1;
      if (s[i] > s[j]) wins += 1;
      else if (s[i] == s[j]) wins += 0.5;
    }
  }
  return wins / pairs;
}

TEST(Confusion, CountingExample) {
  // tp=8, fp=2, fn=0, tn=10
  Eigen::VectorXi y(20), p(20);
  for (int i = 0; i < 20; ++i) {
    y[i] = i < 8 ? 1 : 0;
    p[i] = i < 10 ? 1 : 0;
  }
  const auto r = confusion_and_prf(y, p);
  EXPECT_EQ(r.confusion, (ConfusionMatrix{8, 2, 0, 10}));
  EXPECT_DOUBLE_EQ(r.metrics.accuracy, 0.9);
  EXPECT_DOUBLE_EQ(r.metrics.precision, 0.8);
  EXPECT_DOUBLE_EQ(r.metrics.recall, 1.0);
  EXPECT_NEAR(r.metrics.f1, 0.888889, 1e-6);
}

TEST(Confusion, PerfectPredictions) {
  const auto y = ints({1, 0, 0, 1, 1});
  const auto m = confusion_and_prf(y, y).metrics;
  EXPECT_EQ(m.accuracy, 1.0);
  EXPECT_EQ(m.precision, 1.0);
  EXPECT_EQ(m.recall, 1.0);
  EXPECT_EQ(m.f1, 1.0);
}

TEST(Confusion, PrintedPrecisionAndRecallGiveThisF1) {
  EXPECT_NEAR(f1_score(0.97, 1.00), 0.984772, 1e-6);
}

TEST(Confusion, ZeroDenominatorsAreZeroAndFlagged) {
  const auto m = confusion_and_prf(ints({0, 0, 0}), ints({0, 0, 0})).metrics;
  EXPECT_EQ(m.precision, 0.0);
  EXPECT_EQ(m.recall, 0.0);
  EXPECT_EQ(m.f1, 0.0);
  EXPECT_TRUE(m.precision_undefined && m.recall_undefined && m.f1_undefined);
  EXPECT_EQ(m.accuracy, 1.0);
}

TEST(Confusion, ArgumentErrors) {
  EXPECT_THROW(confusion_and_prf(ints({1, 0}), ints({1})), ShapeError);
  EXPECT_THROW(confusion_and_prf(Eigen::VectorXi(0), Eigen::VectorXi(0)), DataError);
  EXPECT_THROW(confusion_and_prf(ints({2}), ints({1})), DataError);
}

TEST(Confusion, AgreesWithRecountOnRandomCases) {
  nn::Prng rng(2024);
  for (int t = 0; t < 1000; ++t) {
    const auto n = static_cast<Eigen::Index>(1 + rng.index(40));
    Eigen::VectorXi y(n), p(n);
    for (Eigen::Index i = 0; i < n; ++i) {
      y[i] = rng.bernoulli(0.3);
      p[i] = rng.bernoulli(0.4);
    }
    std::size_t tp = 0, fp = 0, fn = 0, tn = 0;
    for (Eigen::Index i = 0; i < n; ++i) {
      tp += y[i] && p[i];
      fp += !y[i] && p[i];
      fn += y[i] && !p[i];
      tn += !y[i] && !p[i];
    }
    const auto r = confusion_and_prf(y, p);
    ASSERT_EQ(r.confusion, (ConfusionMatrix{tp, fp, fn, tn}));
    ASSERT_EQ(r.metrics.accuracy, static_cast<double>(tp + tn) / static_cast<double>(n));
    ASSERT_EQ(r.metrics.precision, tp + fp ? static_cast<double>(tp) / static_cast<double>(tp + fp) : 0.0);
    ASSERT_EQ(r.metrics.recall, tp + fn ? static_cast<double>(tp) / static_cast<double>(tp + fn) : 0.0);
    if (r.metrics.precision + r.metrics.recall > 0)
      ASSERT_NEAR(r.metrics.f1, 2 * r.metrics.precision * r.metrics.recall / (r.metrics.precision + r.metrics.recall),
                  1e-12);
  }
}

TEST(Roc, HandCase) {
  EXPECT_DOUBLE_EQ(roc_and_auc(ints({1, 0, 1, 0}), reals({0.9, 0.8, 0.4, 0.3})).auc, 0.75);
}

TEST(Roc, PerfectAndTied) {
  EXPECT_EQ(roc_and_auc(ints({1, 1, 0, 0}), reals({0.9, 0.8, 0.2, 0.1})).auc, 1.0);
  EXPECT_EQ(roc_and_auc(ints({1, 0, 1, 0, 0}), reals({0.5, 0.5, 0.5, 0.5, 0.5})).auc, 0.5);
}

TEST(Roc, CurveEndpointsAndMonotone) {
  nn::Prng rng(3);
  Eigen::VectorXi y(50);
  Eigen::VectorXd s(50);
  for (int i = 0; i < 50; ++i) {
    y[i] = i % 3 == 0;
    s[i] = std::round(rng.normal() * 4) / 4 + 0.5 * y[i];
  }
  const auto r = roc_and_auc(y, s);
  ASSERT_GE(r.curve.points.size(), 2u);
  EXPECT_EQ(r.curve.points.front().fpr, 0.0);
  EXPECT_EQ(r.curve.points.front().tpr, 0.0);
  EXPECT_EQ(r.curve.points.back().fpr, 1.0);
  EXPECT_EQ(r.curve.points.back().tpr, 1.0);
  for (std::size_t i = 1; i < r.curve.points.size(); ++i) {
    EXPECT_GE(r.curve.points[i].fpr, r.curve.points[i - 1].fpr);
    EXPECT_GE(r.curve.points[i].tpr, r.curve.points[i - 1].tpr);
    EXPECT_LT(r.curve.points[i].threshold, r.curve.points[i - 1].threshold);
  }
}

TEST(Roc, TrapezoidEqualsMannWhitney) {
  nn::Prng rng(99);
  for (int t = 0; t < 100; ++t) {
    const auto n = static_cast<Eigen::Index>(2 + rng.index(60));
    Eigen::VectorXi y(n);
    Eigen::VectorXd s(n);
    for (Eigen::Index i = 0; i < n; ++i) {
      y[i] = i < 1 ? 1 : (i < 2 ? 0 : rng.bernoulli(0.4));
      // Coarse grid so ties are common.
      s[i] = std::round(rng.normal() * 3) / 3 + 0.4 * y[i];
    }
    ASSERT_NEAR(roc_and_auc(y, s).auc, mann_whitney(y, s), 1e-12);
  }
}

TEST(Roc, InvariantUnderMonotoneTransform) {
  nn::Prng rng(5);
  Eigen::VectorXi y(40);
  Eigen::VectorXd s(40);
  for (int i = 0; i < 40; ++i) {
    y[i] = i % 2;
    s[i] = rng.normal() + 0.3 * y[i];
  }
  const Eigen::VectorXd t = s.unaryExpr([](double v) { return std::exp(3 * v) + 7; });
  const auto a = roc_and_auc(y, s), b = roc_and_auc(y, t);
  EXPECT_EQ(a.auc, b.auc);
  ASSERT_EQ(a.curve.points.size(), b.curve.points.size());
  for (std::size_t i = 0; i < a.curve.points.size(); ++i) {
    EXPECT_EQ(a.curve.points[i].fpr, b.curve.points[i].fpr);
    EXPECT_EQ(a.curve.points[i].tpr, b.curve.points[i].tpr);
  }
}

TEST(Roc, SwappingLabels) {
  nn::Prng rng(6);
  Eigen::VectorXi y(30);
  Eigen::VectorXd s(30);
  for (int i = 0; i < 30; ++i) {
    y[i] = i % 3 == 0;
    s[i] = std::round(rng.normal() * 2);
  }
  const Eigen::VectorXi swapped = (1 - y.array()).matrix();
  const double auc = roc_and_auc(y, s).auc;
  EXPECT_NEAR(roc_and_auc(swapped, s).auc, 1.0 - auc, 1e-12);
  EXPECT_NEAR(roc_and_auc(swapped, -s).auc, auc, 1e-12);
}

TEST(Roc, SingleClassIsError) {
  EXPECT_THROW(roc_and_auc(ints({1, 1}), reals({0.1, 0.2})), DataError);
  EXPECT_THROW(roc_and_auc(ints({1, 0}), reals({0.1})), ShapeError);
}

TEST(Roc, CsvExport) {
  const auto r = roc_and_auc(ints({1, 0}), reals({0.75, 0.25}));
  EXPECT_EQ(roc_csv(r.curve), "threshold,fpr,tpr\ninf,0,0\n0.75,0,1\n0.25,1,1\n");
}

TEST(Report, PublishedRowsAsMarkdown) {
  const std::string md = render_report(published_reference_rows(), ReportFormat::Markdown);
  EXPECT_EQ(md.substr(0, md.find('\n')), "| Model | Accuracy | Recall | Precision | F1 |");
  EXPECT_NE(md.find("| GANs | 0.96 | 1.00 | 0.97 | 0.97"), std::string::npos);
  EXPECT_NE(md.find("GANs: 0.985 vs 0.97"), std::string::npos);
  EXPECT_NE(md.find("SVM: 0.860 vs 0.89"), std::string::npos);
}

TEST(Report, ConsistentRowsGetNoF1Footnote) {
  MetricsRow r;
  r.model_name = "m";
  r.precision = 0.8;
  r.recall = 1.0;
  r.f1 = f1_score(0.8, 1.0);
  const std::string md = render_report({r}, ReportFormat::Markdown);
  EXPECT_EQ(md.find("2PR"), std::string::npos);
}

TEST(Report, EmptyIsHeaderOnly) {
  EXPECT_EQ(render_report({}, ReportFormat::Csv), "Model,Accuracy,Recall,Precision,F1\n");
  EXPECT_EQ(render_report({}, ReportFormat::Markdown),
            "| Model | Accuracy | Recall | Precision | F1 |\n|---|---|---|---|---|\n");
}

TEST(Report, OneCsvRowIsTwoLinesAtFullPrecision) {
  MetricsRow r;
  r.model_name = "SVM";
  r.accuracy = 1.0 / 3.0;
  const std::string csv = render_report({r}, ReportFormat::Csv);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 2);
  EXPECT_NE(csv.find("0.3333333333333333"), std::string::npos);
}

TEST(Report, AucColumnWhenPresent) {
  MetricsRow r;
  r.model_name = "a";
  r.auc = 0.875;
  MetricsRow s;
  s.model_name = "b";
  const std::string csv = render_report({r, s}, ReportFormat::Csv);
  EXPECT_EQ(csv, "Model,Accuracy,Recall,Precision,F1,AUC\na,0,0,0,0,0.875\nb,0,0,0,0,\n");
}

TEST(Report, ZeroDenominatorFootnote) {
  const auto m = confusion_and_prf(ints({0, 0}), ints({0, 0}));
  MetricsRow r = m.metrics;
  r.model_name = "x";
  const std::string md = render_report({r}, ReportFormat::Markdown);
  EXPECT_NE(md.find("0.00†"), std::string::npos);
  EXPECT_NE(md.find("† Zero denominator"), std::string::npos);
}

TEST(Report, DuplicateNamesRejected) {
  MetricsRow r;
  r.model_name = "dup";
  EXPECT_THROW(render_report({r, r}, ReportFormat::Csv), ConfigError);
}

TEST(Svg, StandaloneDocument) {
  const std::string svg =
      line_plot_svg({{"a<b", {0, 1, 2}, {1, 0.5, 0.25}}}, {.title = "t", .x_label = "x", .y_label = "y"});
  EXPECT_EQ(svg.rfind("<svg", 0), 0u);
  EXPECT_NE(svg.find("</svg>"), std::string::npos);
  EXPECT_NE(svg.find("<polyline"), std::string::npos);
  EXPECT_NE(svg.find("a&lt;b"), std::string::npos);
}

}  // namespace
}  // namespace ganlab::metrics
