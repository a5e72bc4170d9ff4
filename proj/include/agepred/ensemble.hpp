#pragma once

#include <array>
#include <cmath>
#include <span>
#include <vector>

#include "agepred/corpus.hpp"
#include "agepred/error.hpp"
#include "agepred/features.hpp"
#include "agepred/maxent.hpp"
#include "agepred/regression.hpp"

namespace agepred {

enum class LabelMode { Predicted, Gold };

// Looks up the ids of the six category-indicator features; every one must be
// registered in the regression feature space.
inline std::array<int, kNumCategories> collect_indicator_ids(
    const FeatureSpace& space) {
  std::array<int, kNumCategories> ids{};
  for (auto c : all_categories()) {
    const int id =
        space.lookup({FeatureKind::CategoryIndicator, category_label(c)});
    if (id < 0) {
      throw ValidationError(
          std::string("category indicator not registered in feature space: ") +
          category_label(c));
    }
    ids[static_cast<int>(c)] = id;
  }
  return ids;
}

// Classifier chained into the regressor: the predicted category becomes a
// one-hot indicator feature of the regression vector.
struct EnsembleModel {
  MaxEntModel classifier;
  LassoModel regressor;
  std::array<int, kNumCategories> indicator_ids{-1, -1, -1, -1, -1, -1};
  LabelMode mode = LabelMode::Predicted;
};

// Returns fv plus exactly one indicator feature (weight 1.0); any indicator
// already present is replaced, so augmenting twice is idempotent.
inline FeatureVector augment(const FeatureVector& fv, AgeCategory cat,
                             const std::array<int, kNumCategories>& ids) {
  const int target = ids[static_cast<int>(cat)];
  if (target < 0) {
    throw ValidationError(
        std::string("augment: unregistered category indicator: ") +
        category_label(cat));
  }
  FeatureVector out;
  out.doc_token_count = fv.doc_token_count;
  out.entries.reserve(fv.entries.size() + 1);
  bool inserted = false;
  for (const auto& entry : fv.entries) {
    bool is_indicator = false;
    for (int id : ids) {
      if (entry.first == id) {
        is_indicator = true;
        break;
      }
    }
    if (is_indicator) continue;
    if (!inserted && entry.first > target) {
      out.entries.emplace_back(target, 1.0);
      inserted = true;
    }
    out.entries.push_back(entry);
  }
  if (!inserted) out.entries.emplace_back(target, 1.0);
  return out;
}

// One training document seen through both feature spaces. The classifier and
// regressor index different spaces (the regressor drops text bigrams and
// uses its own document-frequency floor), so each side gets its own vector.
struct EnsembleTrainDoc {
  FeatureVector classifier_fv;
  FeatureVector regressor_fv;
  double age = 0.0;
};

// In Predicted mode (the default) training vectors carry the classifier's
// own prediction, matching what the regressor will see at inference time;
// Gold mode uses the bucketized true age instead.
inline EnsembleModel train_ensemble(const MaxEntModel& classifier,
                                    std::span<const EnsembleTrainDoc> data,
                                    const SgdConfig& config, LabelMode mode,
                                    const FeatureSpace& regressor_space) {
  if (data.empty()) throw ValidationError("train_ensemble: no data");
  EnsembleModel model;
  model.classifier = classifier;
  model.indicator_ids = collect_indicator_ids(regressor_space);
  model.mode = mode;
  std::vector<AgedVector> augmented;
  augmented.reserve(data.size());
  for (const auto& doc : data) {
    const AgeCategory cat =
        mode == LabelMode::Predicted
            ? predict(classifier, doc.classifier_fv)
            : bucketize(static_cast<int>(std::llround(doc.age)));
    augmented.push_back(
        {augment(doc.regressor_fv, cat, model.indicator_ids), doc.age});
  }
  model.regressor = tune(augmented, config);
  return model;
}

struct EnsemblePrediction {
  AgeCategory category;
  double age;
};

inline EnsemblePrediction predict_ensemble(const EnsembleModel& model,
                                           const FeatureVector& classifier_fv,
                                           const FeatureVector& regressor_fv) {
  const AgeCategory cat = predict(model.classifier, classifier_fv);
  const double age = predict_age(
      model.regressor, augment(regressor_fv, cat, model.indicator_ids));
  return {cat, age};
}

}  // namespace agepred
