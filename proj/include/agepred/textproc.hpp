#pragma once

#include <array>
#include <cctype>
#include <cstdint>
#include <fstream>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "agepred/error.hpp"
#include "agepred/util.hpp"

namespace agepred {

// Characters that become single-character punctuation tokens. Everything
// else that is not whitespace stays inside word tokens.
inline constexpr std::string_view kPunctuationChars = ".,;:!?'\"()-";

inline bool is_punctuation_char(char c) {
  return kPunctuationChars.find(c) != std::string_view::npos;
}

enum class TokenKind : std::uint8_t { Word, Punct };

struct Token {
  std::string text;
  TokenKind kind;
  std::size_t offset;  // byte index into the source text
};

// Token-index range [begin, end).
struct Span {
  std::size_t begin;
  std::size_t end;
  bool operator==(const Span&) const = default;
};

// Splits on whitespace and the fixed punctuation class. Token text is always
// a verbatim substring of the input; no case folding, no stemming.
inline std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    unsigned char c = static_cast<unsigned char>(text[i]);
    if (std::isspace(c)) {
      ++i;
      continue;
    }
    if (is_punctuation_char(text[i])) {
      tokens.push_back({std::string(1, text[i]), TokenKind::Punct, i});
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < n && !std::isspace(static_cast<unsigned char>(text[i])) &&
           !is_punctuation_char(text[i])) {
      ++i;
    }
    tokens.push_back({text.substr(start, i - start), TokenKind::Word, start});
  }
  return tokens;
}

inline bool is_sentence_terminal(const Token& t) {
  return t.kind == TokenKind::Punct &&
         (t.text == "." || t.text == "!" || t.text == "?");
}

// A sentence ends at each . ! ? token; trailing tokens form a final sentence.
inline std::vector<Span> detect_sentences(const std::vector<Token>& tokens) {
  std::vector<Span> spans;
  std::size_t start = 0;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (is_sentence_terminal(tokens[i])) {
      spans.push_back({start, i + 1});
      start = i + 1;
    }
  }
  if (start < tokens.size()) spans.push_back({start, tokens.size()});
  return spans;
}

// Coarse Penn-style tagset.
enum class PosTag : std::uint8_t {
  NN, NNP, VB, VBD, VBG, JJ, RB, PRP, DT, IN, CC, CD, UH, PUNCT, OTHER
};

inline constexpr int kNumPosTags = 15;

inline constexpr std::array<const char*, kNumPosTags> kPosTagLabels = {
    "NN", "NNP", "VB", "VBD", "VBG", "JJ", "RB", "PRP",
    "DT", "IN", "CC", "CD", "UH", "PUNCT", "OTHER"};

inline const char* pos_tag_label(PosTag t) {
  return kPosTagLabels[static_cast<int>(t)];
}

inline std::optional<PosTag> parse_pos_tag(std::string_view s) {
  for (int i = 0; i < kNumPosTags; ++i) {
    if (s == kPosTagLabels[i]) return static_cast<PosTag>(i);
  }
  return std::nullopt;
}

// Case-folded word -> tag map loaded from a "word<TAB>TAG" file.
// '#' starts a comment line; blank lines are skipped.
class PosLexicon {
 public:
  static PosLexicon load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open lexicon file: " + path);
    PosLexicon lex;
    std::string line;
    std::int64_t lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (line.empty() || line[0] == '#') continue;
      const std::string where = path + ":" + std::to_string(lineno) + ": ";
      std::size_t tab = line.find('\t');
      if (tab == std::string::npos || tab == 0 || tab + 1 >= line.size()) {
        throw ValidationError(where + "expected \"word<TAB>TAG\"");
      }
      std::string word = ascii_lower(line.substr(0, tab));
      std::string tag_str = line.substr(tab + 1);
      if (!tag_str.empty() && tag_str.back() == '\r') tag_str.pop_back();
      auto tag = parse_pos_tag(tag_str);
      if (!tag) throw ValidationError(where + "unknown POS tag \"" + tag_str + "\"");
      if (!lex.map_.emplace(std::move(word), *tag).second) {
        throw ValidationError(where + "duplicate lexicon entry");
      }
    }
    return lex;
  }

  std::optional<PosTag> lookup(const std::string& lowercased_word) const {
    auto it = map_.find(lowercased_word);
    if (it == map_.end()) return std::nullopt;
    return it->second;
  }

  std::size_t size() const { return map_.size(); }

 private:
  std::unordered_map<std::string, PosTag> map_;
};

namespace detail {

inline bool all_digits(std::string_view w) {
  if (w.empty()) return false;
  for (char c : w) {
    if (std::isdigit(static_cast<unsigned char>(c)) == 0) return false;
  }
  return true;
}

inline bool ends_with(std::string_view w, std::string_view suffix) {
  return w.size() >= suffix.size() &&
         w.substr(w.size() - suffix.size()) == suffix;
}

}  // namespace detail

// Deterministic tagger: lexicon lookup (case-folded), then suffix rules,
// then NN. Punctuation is always PUNCT. Sentence-initial capitalization is
// tracked so only mid-sentence capitalized unknowns become NNP.
inline std::vector<PosTag> pos_tag(const std::vector<Token>& tokens,
                                   const PosLexicon& lexicon) {
  std::vector<PosTag> tags;
  tags.reserve(tokens.size());
  bool sentence_initial = true;
  for (const Token& t : tokens) {
    if (t.kind == TokenKind::Punct) {
      tags.push_back(PosTag::PUNCT);
      if (is_sentence_terminal(t)) sentence_initial = true;
      continue;
    }
    PosTag tag;
    const std::string lower = ascii_lower(t.text);
    if (auto hit = lexicon.lookup(lower)) {
      tag = *hit;
    } else if (detail::ends_with(lower, "ly")) {
      tag = PosTag::RB;
    } else if (detail::ends_with(lower, "ing")) {
      tag = PosTag::VBG;
    } else if (detail::ends_with(lower, "ed")) {
      tag = PosTag::VBD;
    } else if (detail::all_digits(t.text)) {
      tag = PosTag::CD;
    } else if (!sentence_initial &&
               std::isupper(static_cast<unsigned char>(t.text[0])) != 0) {
      tag = PosTag::NNP;
    } else {
      tag = PosTag::NN;
    }
    tags.push_back(tag);
    sentence_initial = false;
  }
  return tags;
}

struct TokenizedDocument {
  std::vector<Token> tokens;
  std::vector<Span> sentences;
  std::vector<PosTag> pos;
};

inline TokenizedDocument analyze_text(const std::string& text,
                                      const PosLexicon& lexicon) {
  TokenizedDocument doc;
  doc.tokens = tokenize(text);
  doc.sentences = detect_sentences(doc.tokens);
  doc.pos = pos_tag(doc.tokens, lexicon);
  return doc;
}

}  // namespace agepred
