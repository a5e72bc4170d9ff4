#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "agepred/corpus.hpp"
#include "agepred/error.hpp"

namespace agepred {

struct CategoryStats {
  std::int64_t count = 0;  // gold documents in this category
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

struct ClassificationReport {
  double accuracy = 0.0;
  double baseline = 0.0;  // majority-class accuracy on the gold labels
  std::int64_t total = 0;
  std::array<CategoryStats, kNumCategories> per_category{};
  std::array<std::array<std::int64_t, kNumCategories>, kNumCategories>
      confusion{};  // [gold][predicted]
};

inline double majority_baseline(std::span<const AgeCategory> gold) {
  if (gold.empty()) throw ValidationError("majority_baseline: empty input");
  std::array<std::int64_t, kNumCategories> counts{};
  for (auto c : gold) ++counts[static_cast<int>(c)];
  std::int64_t best = 0;
  for (auto c : counts) best = std::max(best, c);
  return static_cast<double>(best) / static_cast<double>(gold.size());
}

// Precision/recall use the 0/0 -> 0 convention, so a category that is never
// predicted and never gold reports 0 rather than NaN.
inline ClassificationReport classification_report(
    std::span<const AgeCategory> gold, std::span<const AgeCategory> pred) {
  if (gold.size() != pred.size()) {
    throw ValidationError("classification_report: length mismatch");
  }
  if (gold.empty()) throw ValidationError("classification_report: empty input");
  ClassificationReport r;
  r.total = static_cast<std::int64_t>(gold.size());
  for (std::size_t i = 0; i < gold.size(); ++i) {
    ++r.confusion[static_cast<int>(gold[i])][static_cast<int>(pred[i])];
  }
  std::int64_t trace = 0;
  for (int c = 0; c < kNumCategories; ++c) {
    std::int64_t tp = r.confusion[c][c];
    std::int64_t gold_total = 0, pred_total = 0;
    for (int o = 0; o < kNumCategories; ++o) {
      gold_total += r.confusion[c][o];
      pred_total += r.confusion[o][c];
    }
    trace += tp;
    auto& s = r.per_category[c];
    s.count = gold_total;
    s.precision = pred_total == 0 ? 0.0
                                  : static_cast<double>(tp) /
                                        static_cast<double>(pred_total);
    s.recall = gold_total == 0 ? 0.0
                               : static_cast<double>(tp) /
                                     static_cast<double>(gold_total);
    s.f1 = (s.precision + s.recall) == 0.0
               ? 0.0
               : 2.0 * s.precision * s.recall / (s.precision + s.recall);
  }
  r.accuracy = static_cast<double>(trace) / static_cast<double>(r.total);
  r.baseline = majority_baseline(gold);
  return r;
}

inline double mae(std::span<const double> actual,
                  std::span<const double> predicted) {
  if (actual.size() != predicted.size() || actual.empty()) {
    throw ValidationError("mae: inputs must be equal-length and non-empty");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < actual.size(); ++i) {
    sum += std::abs(actual[i] - predicted[i]);
  }
  return sum / static_cast<double>(actual.size());
}

// Product-moment correlation; a constant input has no defined correlation
// and is reported as an error rather than a silent 0.
inline double pearson(std::span<const double> actual,
                      std::span<const double> predicted) {
  if (actual.size() != predicted.size() || actual.size() < 2) {
    throw ValidationError("pearson: needs equal-length inputs of size >= 2");
  }
  const double n = static_cast<double>(actual.size());
  double mean_a = 0.0, mean_p = 0.0;
  for (std::size_t i = 0; i < actual.size(); ++i) {
    mean_a += actual[i];
    mean_p += predicted[i];
  }
  mean_a /= n;
  mean_p /= n;
  double cov = 0.0, var_a = 0.0, var_p = 0.0;
  for (std::size_t i = 0; i < actual.size(); ++i) {
    const double da = actual[i] - mean_a;
    const double dp = predicted[i] - mean_p;
    cov += da * dp;
    var_a += da * da;
    var_p += dp * dp;
  }
  if (var_a == 0.0 || var_p == 0.0) {
    throw ValidationError("pearson: undefined for constant input");
  }
  return cov / std::sqrt(var_a * var_p);
}

struct RegressionReport {
  double mae_years = 0.0;
  double pearson_r = 0.0;
  std::int64_t n = 0;
  std::vector<std::pair<double, double>> pairs;  // (actual, predicted)
};

inline RegressionReport regression_report(std::span<const double> actual,
                                          std::span<const double> predicted) {
  RegressionReport r;
  r.mae_years = mae(actual, predicted);
  r.pearson_r = pearson(actual, predicted);
  r.n = static_cast<std::int64_t>(actual.size());
  r.pairs.reserve(actual.size());
  for (std::size_t i = 0; i < actual.size(); ++i) {
    r.pairs.emplace_back(actual[i], predicted[i]);
  }
  return r;
}

namespace detail {

inline std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace detail

// CSV feed for predicted-vs-actual scatter plots; error = predicted - actual.
inline void scatter_report(
    std::span<const std::pair<double, double>> pairs, std::ostream& out) {
  out << "actual,predicted,error\n";
  for (const auto& [actual, predicted] : pairs) {
    out << detail::format_double(actual) << ','
        << detail::format_double(predicted) << ','
        << detail::format_double(predicted - actual) << '\n';
  }
}

inline void scatter_report(std::span<const std::pair<double, double>> pairs,
                           const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write scatter file: " + path);
  scatter_report(pairs, out);
  if (!out) throw IoError("failed writing scatter file: " + path);
}

inline std::string format_classification_table(
    const ClassificationReport& r) {
  std::ostringstream out;
  char line[128];
  out << "Category   Count  Precision  Recall  F1\n";
  for (int c = 0; c < kNumCategories; ++c) {
    const auto& s = r.per_category[c];
    std::snprintf(line, sizeof line, "%-8s %7lld      %.3f   %.3f  %.3f\n",
                  kCategoryLabels[c], static_cast<long long>(s.count),
                  s.precision, s.recall, s.f1);
    out << line;
  }
  std::snprintf(line, sizeof line,
                "accuracy %.4f  baseline %.4f  documents %lld\n", r.accuracy,
                r.baseline, static_cast<long long>(r.total));
  out << line;
  return out.str();
}

inline std::string format_regression_table(const RegressionReport& r) {
  std::ostringstream out;
  char line[128];
  std::snprintf(line, sizeof line,
                "MAE %.4f years  Pearson r %.4f  documents %lld\n",
                r.mae_years, r.pearson_r, static_cast<long long>(r.n));
  out << line;
  return out.str();
}

}  // namespace agepred
