#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "agepred/corpus.hpp"
#include "agepred/error.hpp"
#include "agepred/features.hpp"
#include "agepred/util.hpp"

namespace agepred {

// Conditional maximum-entropy model over age categories.
//
// Parameters exist only for (feature, category) pairs observed in training;
// everything else is an implicit zero. The correction feature pads each
// document's feature mass up to the constant C so that the iterative-scaling
// update keeps its monotone-likelihood guarantee.
struct MaxEntModel {
  std::vector<AgeCategory> categories;
  int n_features = 0;
  double C = 1.0;
  // Per category: (feature id, lambda), sorted by id; instantiated pairs only.
  std::vector<std::vector<std::pair<int, double>>> lambda;
  // Correction-feature weight per category, plus its instantiation flag.
  std::vector<double> lambda_corr;
  std::vector<char> corr_set;

  MaxEntModel() {
    for (auto c : all_categories()) categories.push_back(c);
    lambda.resize(categories.size());
    lambda_corr.assign(categories.size(), 0.0);
    corr_set.assign(categories.size(), 0);
  }
};

struct GisConfig {
  int max_iterations = 200;
  double constraint_tolerance = 1e-3;
  double likelihood_tolerance = 1e-6;
  bool use_correction = true;
  int threads = 1;
};

struct GisIterStat {
  int iteration = 0;          // 1-based
  double log_likelihood = 0;  // at the lambda this iteration started from
  double max_residual = 0;    // max |empirical - model| over instantiated pairs
};

// f#(d): the sum of all feature values of a document.
inline double feature_mass(const FeatureVector& fv) {
  double sum = 0.0;
  for (const auto& [id, w] : fv.entries) sum += w;
  return sum;
}

namespace detail {

inline double sparse_dot(const std::vector<std::pair<int, double>>& row,
                         const std::vector<std::pair<int, double>>& fv) {
  double sum = 0.0;
  std::size_t i = 0, j = 0;
  while (i < row.size() && j < fv.size()) {
    if (row[i].first < fv[j].first) {
      ++i;
    } else if (row[i].first > fv[j].first) {
      ++j;
    } else {
      sum += row[i].second * fv[j].second;
      ++i;
      ++j;
    }
  }
  return sum;
}

inline void softmax_in_place(std::vector<double>& scores) {
  double max_score = -std::numeric_limits<double>::infinity();
  for (double s : scores) max_score = std::max(max_score, s);
  double sum = 0.0;
  for (double& s : scores) {
    s = std::exp(s - max_score);
    sum += s;
  }
  for (double& s : scores) s /= sum;
}

}  // namespace detail

inline std::vector<double> category_scores(const MaxEntModel& model,
                                           const FeatureVector& fv) {
  std::vector<double> scores(model.categories.size(), 0.0);
  const double corr_value = model.C - feature_mass(fv);
  for (std::size_t c = 0; c < model.categories.size(); ++c) {
    scores[c] = detail::sparse_dot(model.lambda[c], fv.entries);
    if (model.corr_set[c]) scores[c] += model.lambda_corr[c] * corr_value;
  }
  return scores;
}

// p(c|d) via overflow-safe softmax over the category scores.
inline std::vector<double> predict_proba(const MaxEntModel& model,
                                         const FeatureVector& fv) {
  std::vector<double> probs = category_scores(model, fv);
  detail::softmax_in_place(probs);
  return probs;
}

// Argmax category; ties break toward the lowest ordinal.
inline AgeCategory predict(const MaxEntModel& model, const FeatureVector& fv) {
  const std::vector<double> probs = predict_proba(model, fv);
  std::size_t best = 0;
  for (std::size_t c = 1; c < probs.size(); ++c) {
    if (probs[c] > probs[best]) best = c;
  }
  return model.categories[best];
}

// p~(f_i, c_j) = (1/N) sum_d f_i(d) [label(d) = c_j], instantiated pairs only.
inline std::map<std::pair<AgeCategory, int>, double> empirical_expectations(
    std::span<const LabeledVector> data) {
  if (data.empty()) throw ValidationError("empirical_expectations: no data");
  std::map<std::pair<AgeCategory, int>, double> exp;
  for (const auto& doc : data) {
    for (const auto& [id, w] : doc.fv.entries) {
      exp[{doc.label, id}] += w;
    }
  }
  const double n = static_cast<double>(data.size());
  for (auto& [key, value] : exp) value /= n;
  return exp;
}

// p(f_i, c_j) = (1/N) sum_d p(c_j|d) f_i(d), over the same instantiated set.
inline std::map<std::pair<AgeCategory, int>, double> model_expectations(
    const MaxEntModel& model, std::span<const LabeledVector> data) {
  if (data.empty()) throw ValidationError("model_expectations: no data");
  std::map<std::pair<AgeCategory, int>, double> exp;
  for (const auto& doc : data) {
    const std::vector<double> probs = predict_proba(model, doc.fv);
    for (const auto& [id, w] : doc.fv.entries) {
      for (std::size_t c = 0; c < model.categories.size(); ++c) {
        exp[{model.categories[c], id}] += probs[c] * w;
      }
    }
  }
  const double n = static_cast<double>(data.size());
  for (auto& [key, value] : exp) value /= n;
  return exp;
}

// l(lambda) = sum_d [score(label_d, d) - log sum_c exp(score(c, d))]; <= 0.
inline double log_likelihood(const MaxEntModel& model,
                             std::span<const LabeledVector> data) {
  double ll = 0.0;
  for (const auto& doc : data) {
    const std::vector<double> scores = category_scores(model, doc.fv);
    double max_score = -std::numeric_limits<double>::infinity();
    for (double s : scores) max_score = std::max(max_score, s);
    double sum = 0.0;
    for (double s : scores) sum += std::exp(s - max_score);
    std::size_t label_idx = model.categories.size();
    for (std::size_t c = 0; c < model.categories.size(); ++c) {
      if (model.categories[c] == doc.label) {
        label_idx = c;
        break;
      }
    }
    if (label_idx == model.categories.size()) {
      throw ValidationError("log_likelihood: document label not in model");
    }
    ll += scores[label_idx] - max_score - std::log(sum);
  }
  return ll;
}

// Generalized iterative scaling with a constant correction feature.
//
//   C = max_d f#(d); each document carries an extra feature of value
//   C - f#(d); the update is delta = (1/C) log(p~ / p) per instantiated pair.
//
// Stops at max_iterations, when the largest constraint residual falls under
// constraint_tolerance, or when the likelihood gain falls under
// likelihood_tolerance. `categories` empty means "labels present in data".
inline MaxEntModel train_gis(std::span<const LabeledVector> data,
                             const GisConfig& config,
                             std::vector<AgeCategory> categories = {},
                             std::vector<GisIterStat>* log = nullptr) {
  if (data.empty()) throw ValidationError("train_gis: no training documents");
  if (config.max_iterations < 1) {
    throw ValidationError("train_gis: max_iterations must be >= 1");
  }
  if (config.constraint_tolerance <= 0 || config.likelihood_tolerance <= 0) {
    throw ValidationError("train_gis: tolerances must be > 0");
  }

  // Resolve the category list and check every category has support.
  std::array<std::int64_t, kNumCategories> label_counts{};
  for (const auto& doc : data) ++label_counts[static_cast<int>(doc.label)];
  if (categories.empty()) {
    for (auto c : all_categories()) {
      if (label_counts[static_cast<int>(c)] > 0) categories.push_back(c);
    }
  } else {
    std::sort(categories.begin(), categories.end());
    categories.erase(std::unique(categories.begin(), categories.end()),
                     categories.end());
    for (auto c : categories) {
      if (label_counts[static_cast<int>(c)] == 0) {
        throw ValidationError(std::string("train_gis: category ") +
                              category_label(c) + " has zero documents");
      }
    }
  }
  std::array<int, kNumCategories> cat_index;
  cat_index.fill(-1);
  for (std::size_t c = 0; c < categories.size(); ++c) {
    cat_index[static_cast<int>(categories[c])] = static_cast<int>(c);
  }
  for (const auto& doc : data) {
    if (cat_index[static_cast<int>(doc.label)] < 0) {
      throw ValidationError(std::string("train_gis: document label ") +
                            category_label(doc.label) +
                            " missing from category list");
    }
  }

  const std::size_t n_docs = data.size();
  const std::size_t n_cats = categories.size();
  int max_id = -1;
  for (const auto& doc : data) {
    if (!doc.fv.entries.empty()) {
      max_id = std::max(max_id, doc.fv.entries.back().first);
    }
  }
  const std::size_t n_feat = static_cast<std::size_t>(max_id + 1);
  const std::size_t corr = n_feat;              // correction column
  const std::size_t n_cols = n_feat + 1;

  std::vector<double> masses(n_docs);
  double C = 0.0;
  for (std::size_t d = 0; d < n_docs; ++d) {
    masses[d] = feature_mass(data[d].fv);
    C = std::max(C, masses[d]);
  }
  if (!(C > 0.0)) {
    throw ValidationError("train_gis: all documents have zero feature mass");
  }

  // Empirical expectations over (category, feature) incl. the correction.
  std::vector<double> empirical(n_cats * n_cols, 0.0);
  for (std::size_t d = 0; d < n_docs; ++d) {
    const auto row = static_cast<std::size_t>(
                         cat_index[static_cast<int>(data[d].label)]) * n_cols;
    for (const auto& [id, w] : data[d].fv.entries) {
      empirical[row + static_cast<std::size_t>(id)] += w;
    }
    if (config.use_correction) empirical[row + corr] += C - masses[d];
  }
  for (double& e : empirical) e /= static_cast<double>(n_docs);
  std::vector<char> instantiated(n_cats * n_cols, 0);
  for (std::size_t i = 0; i < empirical.size(); ++i) {
    instantiated[i] = empirical[i] > 0.0 ? 1 : 0;
  }

  std::vector<double> lambda(n_cats * n_cols, 0.0);

  // Fixed-size chunks reduced in index order: sums do not depend on the
  // number of worker threads.
  const std::size_t chunk_size = 1024;
  const std::size_t n_chunks = (n_docs + chunk_size - 1) / chunk_size;
  std::vector<std::vector<double>> chunk_exp(n_chunks);
  std::vector<double> chunk_ll(n_chunks);

  std::vector<double> model_exp(n_cats * n_cols);
  double prev_ll = -std::numeric_limits<double>::infinity();
  if (log) log->clear();

  for (int iter = 1; iter <= config.max_iterations; ++iter) {
    run_indexed(n_chunks, config.threads, [&](std::size_t chunk) {
      auto& acc = chunk_exp[chunk];
      acc.assign(n_cats * n_cols, 0.0);
      double ll = 0.0;
      std::vector<double> scores(n_cats);
      const std::size_t begin = chunk * chunk_size;
      const std::size_t end = std::min(begin + chunk_size, n_docs);
      for (std::size_t d = begin; d < end; ++d) {
        const auto& entries = data[d].fv.entries;
        const double corr_value = C - masses[d];
        for (std::size_t c = 0; c < n_cats; ++c) {
          double s = 0.0;
          const double* lrow = lambda.data() + c * n_cols;
          for (const auto& [id, w] : entries) {
            s += lrow[static_cast<std::size_t>(id)] * w;
          }
          if (config.use_correction) s += lrow[corr] * corr_value;
          scores[c] = s;
        }
        double max_score = scores[0];
        for (double s : scores) max_score = std::max(max_score, s);
        double z = 0.0;
        for (double& s : scores) {
          s = std::exp(s - max_score);
          z += s;
        }
        const auto label_row = static_cast<std::size_t>(
            cat_index[static_cast<int>(data[d].label)]);
        ll += std::log(scores[label_row] / z);
        for (std::size_t c = 0; c < n_cats; ++c) {
          const double p = scores[c] / z;
          double* arow = acc.data() + c * n_cols;
          for (const auto& [id, w] : entries) {
            arow[static_cast<std::size_t>(id)] += p * w;
          }
          if (config.use_correction) arow[corr] += p * corr_value;
        }
      }
      chunk_ll[chunk] = ll;
    });

    std::fill(model_exp.begin(), model_exp.end(), 0.0);
    double ll = 0.0;
    for (std::size_t chunk = 0; chunk < n_chunks; ++chunk) {
      ll += chunk_ll[chunk];
      const auto& acc = chunk_exp[chunk];
      for (std::size_t i = 0; i < model_exp.size(); ++i) model_exp[i] += acc[i];
    }
    for (double& e : model_exp) e /= static_cast<double>(n_docs);
    if (!std::isfinite(ll)) {
      throw NumericError("train_gis: non-finite log-likelihood at iteration " +
                         std::to_string(iter));
    }

    double residual = 0.0;
    for (std::size_t i = 0; i < model_exp.size(); ++i) {
      if (instantiated[i]) {
        residual = std::max(residual, std::abs(empirical[i] - model_exp[i]));
      }
    }
    if (log) log->push_back({iter, ll, residual});

    if (residual < config.constraint_tolerance) break;
    if (iter > 1 && ll - prev_ll < config.likelihood_tolerance) break;
    prev_ll = ll;

    for (std::size_t i = 0; i < lambda.size(); ++i) {
      if (!instantiated[i]) continue;
      if (!(model_exp[i] > 0.0)) {
        throw NumericError(
            "train_gis: model expectation underflow at iteration " +
            std::to_string(iter));
      }
      lambda[i] += std::log(empirical[i] / model_exp[i]) / C;
      if (!std::isfinite(lambda[i])) {
        throw NumericError("train_gis: non-finite parameter at iteration " +
                           std::to_string(iter));
      }
    }
  }

  MaxEntModel model;
  model.categories = categories;
  model.n_features = static_cast<int>(n_feat);
  model.C = C;
  model.lambda.assign(n_cats, {});
  model.lambda_corr.assign(n_cats, 0.0);
  model.corr_set.assign(n_cats, 0);
  for (std::size_t c = 0; c < n_cats; ++c) {
    for (std::size_t f = 0; f < n_feat; ++f) {
      if (instantiated[c * n_cols + f]) {
        model.lambda[c].emplace_back(static_cast<int>(f),
                                     lambda[c * n_cols + f]);
      }
    }
    if (config.use_correction && instantiated[c * n_cols + corr]) {
      model.lambda_corr[c] = lambda[c * n_cols + corr];
      model.corr_set[c] = 1;
    }
  }
  return model;
}

}  // namespace agepred
