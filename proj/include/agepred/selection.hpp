#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "agepred/error.hpp"
#include "agepred/features.hpp"

namespace agepred {

// 2x2 presence table for one feature against one class-vs-rest partition:
//   a = present & class, b = present & rest,
//   c = absent  & class, d = absent  & rest.
struct ContingencyTable {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t c = 0;
  std::int64_t d = 0;

  std::int64_t n() const { return a + b + c + d; }
};

// chi^2 = n (ad - bc)^2 / ((a+b)(c+d)(a+c)(b+d)); a degenerate margin means
// the table carries no signal, reported as 0.
inline double chi2(const ContingencyTable& t) {
  if (t.n() <= 0) throw ValidationError("chi2: table total must be > 0");
  const double ab = static_cast<double>(t.a + t.b);
  const double cd = static_cast<double>(t.c + t.d);
  const double ac = static_cast<double>(t.a + t.c);
  const double bd = static_cast<double>(t.b + t.d);
  if (ab == 0.0 || cd == 0.0 || ac == 0.0 || bd == 0.0) return 0.0;
  const double det = static_cast<double>(t.a) * static_cast<double>(t.d) -
                     static_cast<double>(t.b) * static_cast<double>(t.c);
  return static_cast<double>(t.n()) * det * det / (ab * cd * ac * bd);
}

struct FeatureChi2 {
  int id = 0;
  std::array<double, kNumCategories> per_category{};
  double best = 0.0;
  bool kept = false;
};

// One-vs-rest chi-squared selection over presence (weight > 0). A feature is
// kept iff its best per-category statistic reaches the critical value.
inline std::vector<FeatureChi2> chi2_scores(
    const FeatureSpace& space, std::span<const LabeledVector> docs,
    double critical) {
  std::array<std::int64_t, kNumCategories> class_totals{};
  std::vector<std::array<std::int64_t, kNumCategories>> present(
      static_cast<std::size_t>(space.size()));
  int categories_seen = 0;
  for (const auto& doc : docs) {
    const int c = static_cast<int>(doc.label);
    if (class_totals[c] == 0) ++categories_seen;
    ++class_totals[c];
    for (const auto& [id, weight] : doc.fv.entries) {
      if (weight > 0.0 && id >= 0 && id < space.size()) {
        ++present[static_cast<std::size_t>(id)][c];
      }
    }
  }
  if (categories_seen < 2) {
    throw ValidationError(
        "chi-squared selection needs at least 2 categories");
  }
  const auto n = static_cast<std::int64_t>(docs.size());
  std::vector<FeatureChi2> scores(static_cast<std::size_t>(space.size()));
  for (int id = 0; id < space.size(); ++id) {
    auto& s = scores[static_cast<std::size_t>(id)];
    s.id = id;
    std::int64_t present_total = 0;
    for (int c = 0; c < kNumCategories; ++c) {
      present_total += present[static_cast<std::size_t>(id)][c];
    }
    for (int c = 0; c < kNumCategories; ++c) {
      if (class_totals[c] == 0) continue;
      ContingencyTable t;
      t.a = present[static_cast<std::size_t>(id)][c];
      t.b = present_total - t.a;
      t.c = class_totals[c] - t.a;
      t.d = n - class_totals[c] - t.b;
      s.per_category[c] = chi2(t);
      s.best = std::max(s.best, s.per_category[c]);
    }
    s.kept = s.best >= critical;
  }
  return scores;
}

inline std::vector<int> select(const FeatureSpace& space,
                               std::span<const LabeledVector> docs,
                               double critical = 2.71) {
  std::vector<int> kept;
  for (const auto& s : chi2_scores(space, docs, critical)) {
    if (s.kept) kept.push_back(s.id);
  }
  return kept;
}

}  // namespace agepred
