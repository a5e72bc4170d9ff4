#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "agepred/corpus.hpp"
#include "agepred/error.hpp"
#include "agepred/textproc.hpp"
#include "agepred/util.hpp"

namespace agepred {

// Kind order fixes feature-id assignment (ids are dense in (kind, name)
// sort order), so it is part of the model-file contract.
enum class FeatureKind : std::uint8_t {
  Unigram = 0,
  Bigram = 1,
  PosUnigram = 2,
  PosBigram = 3,
  LiwcClass = 4,
  StyleStat = 5,
  CategoryIndicator = 6,
};

inline constexpr std::array<const char*, 7> kFeatureKindLabels = {
    "unigram", "bigram", "pos_unigram", "pos_bigram",
    "liwc_class", "style_stat", "category_indicator"};

inline const char* feature_kind_label(FeatureKind k) {
  return kFeatureKindLabels[static_cast<int>(k)];
}

inline std::optional<FeatureKind> parse_feature_kind(std::string_view s) {
  for (int i = 0; i < 7; ++i) {
    if (s == kFeatureKindLabels[i]) return static_cast<FeatureKind>(i);
  }
  return std::nullopt;
}

struct FeatureKey {
  FeatureKind kind;
  std::string name;

  friend bool operator==(const FeatureKey& a, const FeatureKey& b) {
    return a.kind == b.kind && a.name == b.name;
  }
  friend bool operator<(const FeatureKey& a, const FeatureKey& b) {
    if (a.kind != b.kind) return a.kind < b.kind;
    return a.name < b.name;
  }
};

// Feature generators enabled for a run. The named presets follow the four
// experiment configurations; "style" covers POS n-grams, punctuation and
// count statistics, and LIWC classes as one switch.
struct FeatureConfig {
  bool unigrams = true;
  bool bigrams = true;
  bool style = true;

  enum class Preset { Unigram, Ngram, Style, Global };

  static FeatureConfig preset(Preset p) {
    switch (p) {
      case Preset::Unigram: return {true, false, false};
      case Preset::Ngram: return {true, true, false};
      case Preset::Style: return {true, false, true};
      case Preset::Global: break;
    }
    return {true, true, true};
  }

  friend bool operator==(const FeatureConfig&, const FeatureConfig&) = default;
};

inline constexpr std::array<const char*, 4> kPresetLabels = {
    "UNIGRAM", "NGRAM", "STYLE", "GLOBAL"};

inline const char* preset_label(FeatureConfig::Preset p) {
  return kPresetLabels[static_cast<int>(p)];
}

inline std::optional<FeatureConfig::Preset> parse_preset(std::string_view s) {
  for (int i = 0; i < 4; ++i) {
    if (s == kPresetLabels[i]) return static_cast<FeatureConfig::Preset>(i);
  }
  return std::nullopt;
}

using StopwordSet = std::unordered_set<std::string>;

// One lowercased word per line; blank lines skipped.
inline StopwordSet load_stopwords(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open stopword file: " + path);
  StopwordSet words;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    words.insert(ascii_lower(line));
  }
  return words;
}

// Word-class lists loaded from a directory of .txt files; the class name is
// the file stem. Words may belong to several classes (stored as a bitmask).
class LiwcLexicon {
 public:
  static LiwcLexicon load(const std::string& dir) {
    namespace fs = std::filesystem;
    if (!fs::is_directory(dir)) {
      throw IoError("LIWC lexicon directory not found: " + dir);
    }
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir)) {
      if (entry.is_regular_file() && entry.path().extension() == ".txt") {
        files.push_back(entry.path());
      }
    }
    std::sort(files.begin(), files.end());
    if (files.size() > 32) {
      throw ValidationError("LIWC lexicon supports at most 32 classes");
    }
    LiwcLexicon lex;
    for (const auto& file : files) {
      const std::uint32_t bit = 1u << lex.class_names_.size();
      lex.class_names_.push_back(file.stem().string());
      std::ifstream in(file);
      if (!in) throw IoError("cannot open LIWC class file: " + file.string());
      std::string line;
      while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        lex.word_classes_[ascii_lower(line)] |= bit;
      }
    }
    return lex;
  }

  const std::vector<std::string>& class_names() const { return class_names_; }

  std::uint32_t classes_of(const std::string& lowercased_word) const {
    auto it = word_classes_.find(lowercased_word);
    return it == word_classes_.end() ? 0u : it->second;
  }

 private:
  std::vector<std::string> class_names_;
  std::unordered_map<std::string, std::uint32_t> word_classes_;
};

using CountMap = std::map<FeatureKey, std::int64_t>;

// Raw feature counts for one document. Unigrams are lowercased and stopword
// filtered; bigrams are lowercased but keep stopwords; POS n-grams run over
// the full tag sequence; style stats are computed before any lowercasing.
inline CountMap extract_counts(const TokenizedDocument& doc,
                               const FeatureConfig& config,
                               const StopwordSet& stopwords,
                               const LiwcLexicon& liwc) {
  CountMap counts;
  std::string prev_word;
  bool have_prev = false;
  std::int64_t word_count = 0;
  for (const Token& t : doc.tokens) {
    if (t.kind != TokenKind::Word) continue;
    ++word_count;
    const std::string lower = ascii_lower(t.text);
    if (config.unigrams && stopwords.count(lower) == 0) {
      ++counts[{FeatureKind::Unigram, lower}];
    }
    if (config.bigrams) {
      if (have_prev) {
        ++counts[{FeatureKind::Bigram, prev_word + " " + lower}];
      }
      prev_word = lower;
      have_prev = true;
    }
    if (config.style) {
      std::uint32_t mask = liwc.classes_of(lower);
      for (std::size_t ci = 0; mask != 0; ++ci, mask >>= 1) {
        if (mask & 1u) {
          ++counts[{FeatureKind::LiwcClass, liwc.class_names()[ci]}];
        }
      }
    }
  }
  if (config.style) {
    for (std::size_t i = 0; i < doc.pos.size(); ++i) {
      const char* tag = pos_tag_label(doc.pos[i]);
      ++counts[{FeatureKind::PosUnigram, tag}];
      if (i + 1 < doc.pos.size()) {
        ++counts[{FeatureKind::PosBigram,
                  std::string(tag) + " " + pos_tag_label(doc.pos[i + 1])}];
      }
    }
    for (const Token& t : doc.tokens) {
      if (t.kind == TokenKind::Punct) {
        ++counts[{FeatureKind::StyleStat, "punct_" + t.text}];
      }
    }
    const auto sentence_count =
        static_cast<std::int64_t>(doc.sentences.size());
    if (sentence_count > 0) {
      counts[{FeatureKind::StyleStat, "sentence_count"}] = sentence_count;
    }
    if (word_count > 0) {
      counts[{FeatureKind::StyleStat, "word_count"}] = word_count;
    }
    if (sentence_count > 0 && word_count > 0) {
      // Bucketed to an integer so it can live in a count vector.
      std::int64_t avg = std::llround(static_cast<double>(word_count) /
                                      static_cast<double>(sentence_count));
      if (avg > 0) {
        counts[{FeatureKind::StyleStat, "avg_words_per_sentence"}] = avg;
      }
    }
  }
  return counts;
}

// Bidirectional feature-name <-> id index. Ids are dense and assigned in
// (kind, name) sort order, which makes model files reproducible.
struct FeatureSpace {
  std::vector<FeatureKey> keys;        // id -> key, sorted
  std::map<FeatureKey, int> index;     // key -> id
  std::vector<std::int64_t> doc_freq;  // per id
  std::int64_t n_docs = 0;

  int size() const { return static_cast<int>(keys.size()); }

  int lookup(const FeatureKey& key) const {
    auto it = index.find(key);
    return it == index.end() ? -1 : it->second;
  }

  // Keeps only the flagged ids; relative (hence sorted) order is preserved
  // and ids are reassigned densely.
  FeatureSpace restrict(const std::vector<char>& keep) const {
    FeatureSpace out;
    out.n_docs = n_docs;
    for (std::size_t id = 0; id < keys.size(); ++id) {
      if (id < keep.size() && keep[id]) {
        out.index.emplace(keys[id], static_cast<int>(out.keys.size()));
        out.keys.push_back(keys[id]);
        out.doc_freq.push_back(doc_freq[id]);
      }
    }
    return out;
  }

  // Returns a copy with the six category-indicator features registered
  // (document frequency pinned to n_docs). Used by the chained regressor.
  FeatureSpace with_category_indicators() const {
    FeatureSpace out = *this;
    for (auto c : all_categories()) {
      FeatureKey key{FeatureKind::CategoryIndicator, category_label(c)};
      if (out.index.count(key)) continue;
      out.index.emplace(key, -1);  // placeholder, reindexed below
      out.keys.push_back(key);
      out.doc_freq.push_back(0);
    }
    std::sort(out.keys.begin(), out.keys.end());
    out.doc_freq.assign(out.keys.size(), 0);
    for (std::size_t id = 0; id < out.keys.size(); ++id) {
      out.index[out.keys[id]] = static_cast<int>(id);
      int old = lookup(out.keys[id]);
      out.doc_freq[id] = old >= 0 ? doc_freq[old] : n_docs;
    }
    return out;
  }
};

inline FeatureSpace build_space(const std::vector<CountMap>& documents,
                                std::int64_t min_df) {
  if (min_df < 1) throw ValidationError("min_df must be >= 1");
  std::map<FeatureKey, std::int64_t> df;
  for (const auto& doc : documents) {
    for (const auto& [key, count] : doc) {
      if (count > 0) ++df[key];
    }
  }
  FeatureSpace space;
  space.n_docs = static_cast<std::int64_t>(documents.size());
  for (const auto& [key, freq] : df) {
    if (freq >= min_df) {
      space.index.emplace(key, static_cast<int>(space.keys.size()));
      space.keys.push_back(key);
      space.doc_freq.push_back(freq);
    }
  }
  if (space.keys.empty()) {
    throw ValidationError(
        "no features meet min_df=" + std::to_string(min_df) +
        "; lower min_df or add documents");
  }
  return space;
}

// Sparse L1-normalized feature vector: weight = count / document token count.
struct FeatureVector {
  std::vector<std::pair<int, double>> entries;  // sorted by id, weights > 0
  std::int64_t doc_token_count = 0;

  double get(int id) const {
    auto it = std::lower_bound(
        entries.begin(), entries.end(), id,
        [](const auto& e, int v) { return e.first < v; });
    return (it != entries.end() && it->first == id) ? it->second : 0.0;
  }
};

inline FeatureVector vectorize(const CountMap& counts,
                               const FeatureSpace& space,
                               std::int64_t token_count) {
  if (token_count <= 0) {
    throw ValidationError("vectorize: token_count must be > 0");
  }
  FeatureVector fv;
  fv.doc_token_count = token_count;
  for (const auto& [key, count] : counts) {
    if (count <= 0) continue;
    int id = space.lookup(key);
    if (id < 0) continue;
    fv.entries.emplace_back(
        id, static_cast<double>(count) / static_cast<double>(token_count));
  }
  // counts iterate in key order and ids are assigned in key order, so this
  // is already sorted; keep the invariant explicit anyway.
  std::sort(fv.entries.begin(), fv.entries.end());
  return fv;
}

// A vectorized document with its gold category (classification/selection).
struct LabeledVector {
  FeatureVector fv;
  AgeCategory label;
};

// A vectorized document with its exact age in years (regression).
struct AgedVector {
  FeatureVector fv;
  double age;
};

}  // namespace agepred
