#pragma once

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "agepred/error.hpp"
#include "agepred/rng.hpp"

#include "json.hpp"

namespace agepred {

// The six age buckets, ordered by lower bound.
enum class AgeCategory : int {
  Under18 = 0,
  Age18To24 = 1,
  Age25To34 = 2,
  Age35To49 = 3,
  Age50To64 = 4,
  Age65Plus = 5,
};

inline constexpr int kNumCategories = 6;

inline constexpr std::array<const char*, kNumCategories> kCategoryLabels = {
    "xx-17", "18-24", "25-34", "35-49", "50-64", "65-xx"};

inline const char* category_label(AgeCategory c) {
  return kCategoryLabels[static_cast<int>(c)];
}

inline std::optional<AgeCategory> parse_category(std::string_view s) {
  for (int i = 0; i < kNumCategories; ++i) {
    if (s == kCategoryLabels[i]) return static_cast<AgeCategory>(i);
  }
  return std::nullopt;
}

inline std::array<AgeCategory, kNumCategories> all_categories() {
  return {AgeCategory::Under18,   AgeCategory::Age18To24,
          AgeCategory::Age25To34, AgeCategory::Age35To49,
          AgeCategory::Age50To64, AgeCategory::Age65Plus};
}

// One author's aggregated text plus whatever labels the source corpus had.
struct Document {
  std::string id;
  std::string text;
  std::optional<int> age;
  std::optional<AgeCategory> category;
  std::string source;
};

struct CorpusSplit {
  std::vector<Document> train;
  std::vector<Document> test;
  std::uint64_t seed = 0;
};

inline AgeCategory bucketize(int age) {
  if (age < 5 || age > 120) {
    throw ValidationError("age out of range [5,120]: " + std::to_string(age));
  }
  if (age <= 17) return AgeCategory::Under18;
  if (age <= 24) return AgeCategory::Age18To24;
  if (age <= 34) return AgeCategory::Age25To34;
  if (age <= 49) return AgeCategory::Age35To49;
  if (age <= 64) return AgeCategory::Age50To64;
  return AgeCategory::Age65Plus;
}

namespace detail {

inline bool is_space_byte(char c) {
  return std::isspace(static_cast<unsigned char>(c)) != 0;
}

// Drops every complete <...> markup span; a '<' without a matching '>' stays.
inline std::string strip_markup(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  std::size_t i = 0;
  while (i < s.size()) {
    if (s[i] == '<') {
      std::size_t close = s.find('>', i + 1);
      if (close != std::string::npos) {
        i = close + 1;
        continue;
      }
    }
    out += s[i++];
  }
  return out;
}

inline bool is_url_chunk(std::string_view w) {
  if (w.size() > 4 && (w.substr(0, 4) == "www." || w.substr(0, 4) == "WWW.")) {
    return true;
  }
  // scheme://rest with a non-empty alphabetic-initial scheme and non-empty rest
  std::size_t p = w.find("://");
  if (p == std::string_view::npos || p == 0 || p + 3 >= w.size()) return false;
  if (std::isalpha(static_cast<unsigned char>(w[0])) == 0) return false;
  for (std::size_t i = 1; i < p; ++i) {
    unsigned char c = static_cast<unsigned char>(w[i]);
    if (std::isalnum(c) == 0 && c != '+' && c != '.' && c != '-') return false;
  }
  return true;
}

inline bool is_hashtag_or_mention(std::string_view w) {
  if (w.size() < 2 || (w[0] != '#' && w[0] != '@')) return false;
  unsigned char c = static_cast<unsigned char>(w[1]);
  return std::isalnum(c) != 0 || c == '_';
}

}  // namespace detail

// Markup spans are stripped first, then each whitespace-delimited chunk is
// either replaced by "urllink" (URLs), dropped (#hashtags, @mentions) or kept
// verbatim; chunks are rejoined with single spaces. Idempotent by
// construction: "urllink" is not a URL and the output carries no markup,
// hashtag or mention chunks.
inline std::string clean_text(const std::string& raw) {
  const std::string stripped = detail::strip_markup(raw);
  std::string out;
  out.reserve(stripped.size());
  std::size_t i = 0;
  while (i < stripped.size()) {
    while (i < stripped.size() && detail::is_space_byte(stripped[i])) ++i;
    std::size_t start = i;
    while (i < stripped.size() && !detail::is_space_byte(stripped[i])) ++i;
    if (i == start) break;
    std::string_view chunk(stripped.data() + start, i - start);
    if (detail::is_hashtag_or_mention(chunk)) continue;
    if (!out.empty()) out += ' ';
    if (detail::is_url_chunk(chunk)) {
      out += "urllink";
    } else {
      out += chunk;
    }
  }
  // A dropped final chunk can leave a trailing space; trim defensively is not
  // needed because separators are only written before kept chunks.
  return out;
}

// Corpus files are UTF-8 JSON Lines; see README for the field list.
inline std::vector<Document> load_corpus(const std::string& path,
                                         bool require_labels = true,
                                         std::int64_t* dropped_empty = nullptr) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open corpus file: " + path);
  std::vector<Document> docs;
  std::unordered_set<std::string> seen_ids;
  std::string line;
  std::int64_t lineno = 0;
  std::int64_t dropped = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    const std::string where = path + ":" + std::to_string(lineno) + ": ";
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
      throw ValidationError(where + "malformed JSON: " + e.what());
    }
    if (!j.is_object()) throw ValidationError(where + "expected a JSON object");
    if (!j.contains("id") || !j["id"].is_string()) {
      throw ValidationError(where + "missing required string field \"id\"");
    }
    if (!j.contains("text") || !j["text"].is_string()) {
      throw ValidationError(where + "missing required string field \"text\"");
    }
    Document d;
    d.id = j["id"].get<std::string>();
    if (!seen_ids.insert(d.id).second) {
      throw ValidationError(where + "duplicate document id \"" + d.id + "\"");
    }
    d.text = clean_text(j["text"].get<std::string>());
    if (j.contains("source")) {
      if (!j["source"].is_string()) {
        throw ValidationError(where + "field \"source\" must be a string");
      }
      d.source = j["source"].get<std::string>();
    }
    if (j.contains("age") && !j["age"].is_null()) {
      if (!j["age"].is_number_integer()) {
        throw ValidationError(where + "field \"age\" must be an integer");
      }
      int age = j["age"].get<int>();
      try {
        d.category = bucketize(age);
      } catch (const ValidationError& e) {
        throw ValidationError(where + e.what());
      }
      d.age = age;
    }
    if (j.contains("category") && !j["category"].is_null()) {
      if (!j["category"].is_string()) {
        throw ValidationError(where + "field \"category\" must be a string");
      }
      const std::string cs = j["category"].get<std::string>();
      auto cat = parse_category(cs);
      if (!cat) throw ValidationError(where + "unknown category \"" + cs + "\"");
      if (d.age && *d.category != *cat) {
        throw ValidationError(where + "label conflict: age " +
                              std::to_string(*d.age) + " falls in " +
                              category_label(*d.category) +
                              " but category says " + cs);
      }
      d.category = *cat;
    }
    if (require_labels && !d.age && !d.category) {
      throw ValidationError(where + "document has neither age nor category");
    }
    if (d.text.empty()) {
      ++dropped;
      continue;
    }
    docs.push_back(std::move(d));
  }
  if (dropped_empty) *dropped_empty = dropped;
  return docs;
}

inline void save_corpus(const std::vector<Document>& docs,
                        const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write corpus file: " + path);
  for (const auto& d : docs) {
    nlohmann::ordered_json j;
    j["id"] = d.id;
    j["text"] = d.text;
    if (d.age) j["age"] = *d.age;
    if (d.category) j["category"] = category_label(*d.category);
    if (!d.source.empty()) j["source"] = d.source;
    out << j.dump() << '\n';
  }
  if (!out) throw IoError("failed writing corpus file: " + path);
}

// Duplicates minority-class documents (uniformly, with replacement) until
// every requested category reaches the majority count, or `max_target` when
// that cap is smaller. Originals are always retained; duplicates get
// "#dupN" id suffixes. `categories` empty means "categories present in docs".
inline std::vector<Document> oversample(const std::vector<Document>& docs,
                                        std::uint64_t seed,
                                        std::vector<AgeCategory> categories = {},
                                        std::int64_t max_target = 0) {
  std::array<std::vector<std::size_t>, kNumCategories> pools;
  for (std::size_t i = 0; i < docs.size(); ++i) {
    if (!docs[i].category) {
      throw ValidationError("oversample: document \"" + docs[i].id +
                            "\" has no category");
    }
    pools[static_cast<int>(*docs[i].category)].push_back(i);
  }
  if (categories.empty()) {
    for (auto c : all_categories()) {
      if (!pools[static_cast<int>(c)].empty()) categories.push_back(c);
    }
  }
  std::int64_t majority = 0;
  for (auto c : categories) {
    const auto& pool = pools[static_cast<int>(c)];
    if (pool.empty()) {
      throw ValidationError(std::string("oversample: category ") +
                            category_label(c) + " has no documents");
    }
    majority = std::max<std::int64_t>(majority,
                                      static_cast<std::int64_t>(pool.size()));
  }
  std::int64_t target = majority;
  if (max_target > 0) target = std::min(target, max_target);

  std::vector<Document> out = docs;
  DetRng rng(seed);
  std::int64_t dup_seq = 0;
  for (auto c : categories) {
    const auto& pool = pools[static_cast<int>(c)];
    std::int64_t need = target - static_cast<std::int64_t>(pool.size());
    for (std::int64_t k = 0; k < need; ++k) {
      const Document& src = docs[pool[rng.below(pool.size())]];
      Document dup = src;
      dup.id = src.id + "#dup" + std::to_string(++dup_seq);
      out.push_back(std::move(dup));
    }
  }
  return out;
}

// Stratified, seeded split. Oversampling is applied afterwards (train side
// only), never here.
inline CorpusSplit split(const std::vector<Document>& docs, double ratio,
                         std::uint64_t seed) {
  if (!(ratio > 0.0 && ratio < 1.0)) {
    throw ValidationError("split ratio must be in (0,1)");
  }
  std::array<std::vector<std::size_t>, kNumCategories> strata;
  for (std::size_t i = 0; i < docs.size(); ++i) {
    if (!docs[i].category) {
      throw ValidationError("split: document \"" + docs[i].id +
                            "\" has no category");
    }
    strata[static_cast<int>(*docs[i].category)].push_back(i);
  }
  CorpusSplit result;
  result.seed = seed;
  for (int c = 0; c < kNumCategories; ++c) {
    auto& idx = strata[c];
    if (idx.empty()) continue;
    if (idx.size() < 2) {
      throw ValidationError(std::string("split: stratum ") +
                            kCategoryLabels[c] +
                            " has fewer than 2 documents");
    }
    DetRng rng(mix_seed(seed, static_cast<std::uint64_t>(c)));
    rng.shuffle(idx);
    auto n = static_cast<std::int64_t>(idx.size());
    std::int64_t n_train = std::llround(ratio * static_cast<double>(n));
    n_train = std::clamp<std::int64_t>(n_train, 1, n - 1);
    for (std::int64_t i = 0; i < n; ++i) {
      (i < n_train ? result.train : result.test).push_back(docs[idx[i]]);
    }
  }
  return result;
}

inline CorpusSplit split(const std::vector<Document>& docs,
                         std::uint64_t seed) {
  return split(docs, 0.9, seed);
}

}  // namespace agepred
