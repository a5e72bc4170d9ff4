#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "agepred/corpus.hpp"
#include "agepred/ensemble.hpp"
#include "agepred/error.hpp"
#include "agepred/features.hpp"
#include "agepred/maxent.hpp"
#include "agepred/regression.hpp"

namespace agepred {

inline constexpr int kModelSchemaVersion = 1;

inline std::uint64_t fnv1a64(std::string_view data,
                             std::uint64_t h = 0xcbf29ce484222325ULL) {
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

inline std::uint64_t file_hash(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open file for hashing: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return fnv1a64(buf.str());
}

// Directory hash: file names and contents, in name order.
inline std::uint64_t dir_hash(const std::string& dir) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) throw IoError("not a directory: " + dir);
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file()) files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const auto& f : files) {
    h = fnv1a64(f.filename().string(), h);
    std::ifstream in(f, std::ios::binary);
    if (!in) throw IoError("cannot open file for hashing: " + f.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    h = fnv1a64(buf.str(), h);
  }
  return h;
}

// Hashes of the text-processing assets a model was trained with; prediction
// refuses to run against drifted assets.
struct AssetHashes {
  std::uint64_t stopwords = 0;
  std::uint64_t pos_lexicon = 0;
  std::uint64_t liwc = 0;

  friend bool operator==(const AssetHashes&, const AssetHashes&) = default;
};

struct ClassifierArtifact {
  MaxEntModel model;
  FeatureSpace space;
  FeatureConfig config;
  std::int64_t min_df = 10;
  double chi2_critical = 2.71;
  AssetHashes assets;
};

struct RegressorArtifact {
  LassoModel model;
  FeatureSpace space;
  FeatureConfig config;
  std::int64_t min_df = 5;
  AssetHashes assets;
};

struct EnsembleArtifact {
  std::string classifier_path;  // relative to the ensemble file
  std::uint64_t classifier_hash = 0;
  std::string regressor_path;
  std::uint64_t regressor_hash = 0;
  LabelMode mode = LabelMode::Predicted;
};

namespace detail {

// %a round-trips doubles exactly and prints identically across runs.
inline std::string hex_double(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%a", v);
  return buf;
}

inline std::string hex_u64(std::uint64_t v) {
  char buf[24];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

class LineReader {
 public:
  LineReader(std::istream& in, std::string path)
      : in_(in), path_(std::move(path)) {}

  std::string next(const char* what) {
    std::string line;
    if (!std::getline(in_, line)) {
      throw ValidationError(path_ + ": truncated model file, expected " +
                            what);
    }
    ++lineno_;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return line;
  }

  std::vector<std::string> fields(const char* what) {
    std::vector<std::string> out;
    const std::string line = next(what);
    std::size_t start = 0;
    for (;;) {
      std::size_t tab = line.find('\t', start);
      if (tab == std::string::npos) {
        out.push_back(line.substr(start));
        break;
      }
      out.push_back(line.substr(start, tab - start));
      start = tab + 1;
    }
    return out;
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw ValidationError(path_ + ":" + std::to_string(lineno_) + ": " +
                          message);
  }

 private:
  std::istream& in_;
  std::string path_;
  std::int64_t lineno_ = 0;
};

inline double parse_double(LineReader& r, const std::string& s) {
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end == s.c_str() || *end != '\0') r.fail("bad number: " + s);
  return v;
}

inline std::int64_t parse_int(LineReader& r, const std::string& s) {
  char* end = nullptr;
  const long long v = std::strtoll(s.c_str(), &end, 10);
  if (end == s.c_str() || *end != '\0') r.fail("bad integer: " + s);
  return v;
}

inline std::uint64_t parse_hex_u64(LineReader& r, const std::string& s) {
  char* end = nullptr;
  const unsigned long long v = std::strtoull(s.c_str(), &end, 16);
  if (end == s.c_str() || *end != '\0') r.fail("bad hash: " + s);
  return v;
}

inline void write_header(std::ostream& out, const char* kind) {
  out << "agepred-model\t" << kModelSchemaVersion << '\n';
  out << "kind\t" << kind << '\n';
}

inline void expect_header(LineReader& r, const char* kind) {
  auto head = r.fields("schema header");
  if (head.size() != 2 || head[0] != "agepred-model") {
    r.fail("not an agepred model file");
  }
  if (head[1] != std::to_string(kModelSchemaVersion)) {
    r.fail("unsupported schema_version " + head[1] + " (expected " +
           std::to_string(kModelSchemaVersion) + ")");
  }
  auto kind_line = r.fields("kind");
  if (kind_line.size() != 2 || kind_line[0] != "kind" ||
      kind_line[1] != kind) {
    r.fail(std::string("expected model kind ") + kind);
  }
}

inline void write_features_line(std::ostream& out, const FeatureConfig& c) {
  out << "features\t" << (c.unigrams ? 1 : 0) << '\t' << (c.bigrams ? 1 : 0)
      << '\t' << (c.style ? 1 : 0) << '\n';
}

inline FeatureConfig read_features_line(LineReader& r) {
  auto f = r.fields("features line");
  if (f.size() != 4 || f[0] != "features") r.fail("expected features line");
  FeatureConfig c;
  c.unigrams = f[1] == "1";
  c.bigrams = f[2] == "1";
  c.style = f[3] == "1";
  return c;
}

inline void write_assets(std::ostream& out, const AssetHashes& a) {
  out << "assets\t" << hex_u64(a.stopwords) << '\t' << hex_u64(a.pos_lexicon)
      << '\t' << hex_u64(a.liwc) << '\n';
}

inline AssetHashes read_assets(LineReader& r) {
  auto f = r.fields("assets line");
  if (f.size() != 4 || f[0] != "assets") r.fail("expected assets line");
  return {parse_hex_u64(r, f[1]), parse_hex_u64(r, f[2]),
          parse_hex_u64(r, f[3])};
}

inline void write_space(std::ostream& out, const FeatureSpace& space) {
  out << "space\t" << space.size() << '\t' << space.n_docs << '\n';
  for (int id = 0; id < space.size(); ++id) {
    out << feature_kind_label(space.keys[id].kind) << '\t'
        << space.keys[id].name << '\t' << space.doc_freq[id] << '\n';
  }
}

inline FeatureSpace read_space(LineReader& r) {
  auto head = r.fields("space header");
  if (head.size() != 3 || head[0] != "space") r.fail("expected space header");
  const std::int64_t n = parse_int(r, head[1]);
  FeatureSpace space;
  space.n_docs = parse_int(r, head[2]);
  for (std::int64_t id = 0; id < n; ++id) {
    auto f = r.fields("space row");
    if (f.size() != 3) r.fail("expected space row with 3 fields");
    auto kind = parse_feature_kind(f[0]);
    if (!kind) r.fail("unknown feature kind: " + f[0]);
    FeatureKey key{*kind, f[1]};
    space.index.emplace(key, static_cast<int>(space.keys.size()));
    space.keys.push_back(std::move(key));
    space.doc_freq.push_back(parse_int(r, f[2]));
  }
  return space;
}

inline void expect_end(LineReader& r) {
  if (r.next("end marker") != "end") r.fail("expected end marker");
}

}  // namespace detail

inline void save_classifier(const ClassifierArtifact& artifact,
                            const std::string& path) {
  std::ostringstream out;
  detail::write_header(out, "maxent");
  detail::write_features_line(out, artifact.config);
  out << "min_df\t" << artifact.min_df << '\n';
  out << "chi2_critical\t" << detail::hex_double(artifact.chi2_critical)
      << '\n';
  detail::write_assets(out, artifact.assets);
  out << "categories";
  for (auto c : artifact.model.categories) out << '\t' << category_label(c);
  out << '\n';
  out << "C\t" << detail::hex_double(artifact.model.C) << '\n';
  out << "n_features\t" << artifact.model.n_features << '\n';
  detail::write_space(out, artifact.space);
  std::int64_t rows = 0;
  for (std::size_t c = 0; c < artifact.model.categories.size(); ++c) {
    rows += static_cast<std::int64_t>(artifact.model.lambda[c].size());
    if (artifact.model.corr_set[c]) ++rows;
  }
  out << "lambda\t" << rows << '\n';
  for (std::size_t c = 0; c < artifact.model.categories.size(); ++c) {
    // id -1 is the correction feature.
    if (artifact.model.corr_set[c]) {
      out << c << "\t-1\t" << detail::hex_double(artifact.model.lambda_corr[c])
          << '\n';
    }
    for (const auto& [id, v] : artifact.model.lambda[c]) {
      out << c << '\t' << id << '\t' << detail::hex_double(v) << '\n';
    }
  }
  out << "end\n";
  std::ofstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot write model file: " + path);
  file << out.str();
  if (!file) throw IoError("failed writing model file: " + path);
}

inline ClassifierArtifact load_classifier(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw IoError("cannot open model file: " + path);
  detail::LineReader r(file, path);
  detail::expect_header(r, "maxent");
  ClassifierArtifact artifact;
  artifact.config = detail::read_features_line(r);
  auto min_df = r.fields("min_df");
  if (min_df.size() != 2 || min_df[0] != "min_df") r.fail("expected min_df");
  artifact.min_df = detail::parse_int(r, min_df[1]);
  auto crit = r.fields("chi2_critical");
  if (crit.size() != 2 || crit[0] != "chi2_critical") {
    r.fail("expected chi2_critical");
  }
  artifact.chi2_critical = detail::parse_double(r, crit[1]);
  artifact.assets = detail::read_assets(r);
  auto cats = r.fields("categories");
  if (cats.size() < 2 || cats[0] != "categories") r.fail("expected categories");
  artifact.model.categories.clear();
  for (std::size_t i = 1; i < cats.size(); ++i) {
    auto c = parse_category(cats[i]);
    if (!c) r.fail("unknown category: " + cats[i]);
    artifact.model.categories.push_back(*c);
  }
  auto c_line = r.fields("C");
  if (c_line.size() != 2 || c_line[0] != "C") r.fail("expected C");
  artifact.model.C = detail::parse_double(r, c_line[1]);
  auto nf = r.fields("n_features");
  if (nf.size() != 2 || nf[0] != "n_features") r.fail("expected n_features");
  artifact.model.n_features = static_cast<int>(detail::parse_int(r, nf[1]));
  artifact.space = detail::read_space(r);
  const std::size_t n_cats = artifact.model.categories.size();
  artifact.model.lambda.assign(n_cats, {});
  artifact.model.lambda_corr.assign(n_cats, 0.0);
  artifact.model.corr_set.assign(n_cats, 0);
  auto lam = r.fields("lambda header");
  if (lam.size() != 2 || lam[0] != "lambda") r.fail("expected lambda header");
  const std::int64_t rows = detail::parse_int(r, lam[1]);
  for (std::int64_t i = 0; i < rows; ++i) {
    auto f = r.fields("lambda row");
    if (f.size() != 3) r.fail("expected lambda row with 3 fields");
    const std::int64_t c = detail::parse_int(r, f[0]);
    const std::int64_t id = detail::parse_int(r, f[1]);
    const double v = detail::parse_double(r, f[2]);
    if (c < 0 || c >= static_cast<std::int64_t>(n_cats)) {
      r.fail("lambda row category out of range");
    }
    if (id == -1) {
      artifact.model.lambda_corr[static_cast<std::size_t>(c)] = v;
      artifact.model.corr_set[static_cast<std::size_t>(c)] = 1;
    } else if (id >= 0 && id < artifact.model.n_features) {
      artifact.model.lambda[static_cast<std::size_t>(c)].emplace_back(
          static_cast<int>(id), v);
    } else {
      r.fail("lambda row feature id out of range");
    }
  }
  detail::expect_end(r);
  return artifact;
}

inline void save_regressor(const RegressorArtifact& artifact,
                           const std::string& path) {
  std::ostringstream out;
  detail::write_header(out, "lasso");
  detail::write_features_line(out, artifact.config);
  out << "min_df\t" << artifact.min_df << '\n';
  detail::write_assets(out, artifact.assets);
  out << "alpha\t" << detail::hex_double(artifact.model.reg_param) << '\n';
  out << "lr\t" << detail::hex_double(artifact.model.learning_rate) << '\n';
  out << "intercept\t" << detail::hex_double(artifact.model.intercept) << '\n';
  detail::write_space(out, artifact.space);
  out << "weights\t" << artifact.model.weights.size() << '\n';
  for (const auto& [id, v] : artifact.model.weights) {
    out << id << '\t' << detail::hex_double(v) << '\n';
  }
  out << "end\n";
  std::ofstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot write model file: " + path);
  file << out.str();
  if (!file) throw IoError("failed writing model file: " + path);
}

inline RegressorArtifact load_regressor(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw IoError("cannot open model file: " + path);
  detail::LineReader r(file, path);
  detail::expect_header(r, "lasso");
  RegressorArtifact artifact;
  artifact.config = detail::read_features_line(r);
  auto min_df = r.fields("min_df");
  if (min_df.size() != 2 || min_df[0] != "min_df") r.fail("expected min_df");
  artifact.min_df = detail::parse_int(r, min_df[1]);
  artifact.assets = detail::read_assets(r);
  auto alpha = r.fields("alpha");
  if (alpha.size() != 2 || alpha[0] != "alpha") r.fail("expected alpha");
  artifact.model.reg_param = detail::parse_double(r, alpha[1]);
  auto lr = r.fields("lr");
  if (lr.size() != 2 || lr[0] != "lr") r.fail("expected lr");
  artifact.model.learning_rate = detail::parse_double(r, lr[1]);
  auto intercept = r.fields("intercept");
  if (intercept.size() != 2 || intercept[0] != "intercept") {
    r.fail("expected intercept");
  }
  artifact.model.intercept = detail::parse_double(r, intercept[1]);
  artifact.space = detail::read_space(r);
  auto wh = r.fields("weights header");
  if (wh.size() != 2 || wh[0] != "weights") r.fail("expected weights header");
  const std::int64_t rows = detail::parse_int(r, wh[1]);
  for (std::int64_t i = 0; i < rows; ++i) {
    auto f = r.fields("weight row");
    if (f.size() != 2) r.fail("expected weight row with 2 fields");
    artifact.model.weights.emplace_back(
        static_cast<int>(detail::parse_int(r, f[0])),
        detail::parse_double(r, f[1]));
  }
  detail::expect_end(r);
  return artifact;
}

inline void save_ensemble(const EnsembleArtifact& artifact,
                          const std::string& path) {
  std::ostringstream out;
  detail::write_header(out, "ensemble");
  out << "mode\t"
      << (artifact.mode == LabelMode::Predicted ? "predicted" : "gold")
      << '\n';
  out << "classifier\t" << artifact.classifier_path << '\t'
      << detail::hex_u64(artifact.classifier_hash) << '\n';
  out << "regressor\t" << artifact.regressor_path << '\t'
      << detail::hex_u64(artifact.regressor_hash) << '\n';
  out << "end\n";
  std::ofstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot write model file: " + path);
  file << out.str();
  if (!file) throw IoError("failed writing model file: " + path);
}

inline EnsembleArtifact load_ensemble(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw IoError("cannot open model file: " + path);
  detail::LineReader r(file, path);
  detail::expect_header(r, "ensemble");
  EnsembleArtifact artifact;
  auto mode = r.fields("mode");
  if (mode.size() != 2 || mode[0] != "mode") r.fail("expected mode");
  if (mode[1] == "predicted") {
    artifact.mode = LabelMode::Predicted;
  } else if (mode[1] == "gold") {
    artifact.mode = LabelMode::Gold;
  } else {
    r.fail("unknown label mode: " + mode[1]);
  }
  auto cls = r.fields("classifier reference");
  if (cls.size() != 3 || cls[0] != "classifier") {
    r.fail("expected classifier reference");
  }
  artifact.classifier_path = cls[1];
  artifact.classifier_hash = detail::parse_hex_u64(r, cls[2]);
  auto reg = r.fields("regressor reference");
  if (reg.size() != 3 || reg[0] != "regressor") {
    r.fail("expected regressor reference");
  }
  artifact.regressor_path = reg[1];
  artifact.regressor_hash = detail::parse_hex_u64(r, reg[2]);
  detail::expect_end(r);
  return artifact;
}

// Reads the "kind" field without fully parsing the file.
inline std::string model_kind(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw IoError("cannot open model file: " + path);
  detail::LineReader r(file, path);
  auto head = r.fields("schema header");
  if (head.size() != 2 || head[0] != "agepred-model") {
    r.fail("not an agepred model file");
  }
  if (head[1] != std::to_string(kModelSchemaVersion)) {
    r.fail("unsupported schema_version " + head[1] + " (expected " +
           std::to_string(kModelSchemaVersion) + ")");
  }
  auto kind_line = r.fields("kind");
  if (kind_line.size() != 2 || kind_line[0] != "kind") r.fail("expected kind");
  return kind_line[1];
}

}  // namespace agepred
