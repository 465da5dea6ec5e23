// Copyright 2026 The readgrade Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "readgrade/synth.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <string>

#include "json.hpp"
#include "readgrade/errors.hpp"
#include "readgrade/rng.hpp"

namespace readgrade::synth {
namespace {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

constexpr const char* kConsonants = "bdfgklmnprstvz";
constexpr const char* kVowels = "aiou";
constexpr const char* kFunctionWords[] = {"the", "a", "of", "in", "with", "that"};

struct Word {
  std::string text;
  double difficulty;
};

struct Vocabulary {
  std::vector<Word> words;  // ascending difficulty
  std::vector<std::string> names;
};

Vocabulary make_vocabulary(Rng& rng, std::size_t size) {
  const TokenizerConfig config = TokenizerConfig::defaults();
  std::set<std::string> seen;
  auto fresh = [&](int syllables, bool closed) {
    for (int attempt = 1;; ++attempt) {
      if (attempt % 64 == 0) ++syllables;
      std::string w;
      for (int s = 0; s < syllables; ++s) {
        w += kConsonants[rng.below(14)];
        w += kVowels[rng.below(4)];
      }
      if (closed) w += kConsonants[rng.below(14)];
      if (config.stop_words.count(w) || config.pronouns.count(w) || config.abbreviations.count(w + ".") ||
          !seen.insert(w).second) {
        continue;
      }
      return w;
    }
  };
  Vocabulary v;
  for (std::size_t i = 0; i < size; ++i) {
    const double d = (static_cast<double>(i) + 0.5) / static_cast<double>(size);
    int syllables = 1;
    for (int k = 0; k < 3; ++k) syllables += rng.chance(0.3 + 0.3 * d) ? 1 : 0;
    v.words.push_back({fresh(syllables, syllables == 1 || rng.chance(0.4)), d});
  }
  for (int i = 0; i < 16; ++i) {
    std::string name = fresh(2, false);
    name[0] = static_cast<char>(name[0] - 32);
    v.names.push_back(name);
  }
  return v;
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write '" + path.string() + "'");
  out << text;
  if (!out) throw IoError("write failed for '" + path.string() + "'");
}

void write_resources(const fs::path& dir, const Vocabulary& vocab, Rng& rng) {
  std::string gept, vq, bnc, search, synsets;
  std::uint64_t bnc_total = 0;
  for (const char* w : kFunctionWords) {
    gept += std::string(w) + "\tgept1\n";
    vq += std::string(w) + "\tvq3\n";
    bnc += std::string(w) + "\t2000000\n";
    bnc_total += 2000000;
    search += std::string(w) + "\t900000000\n";
    synsets += std::string(w) + "\t3\n";
  }
  for (const auto& word : vocab.words) {
    double d = word.difficulty;
    if (rng.chance(0.1)) d = rng.uniform();
    if (d < 0.3) {
      gept += word.text + "\tgept1\n";
    } else if (d < 0.55) {
      gept += word.text + "\tgept2\n";
    } else if (d < 0.75) {
      gept += word.text + "\tgept3\n";
    }
    if (!rng.chance(0.1)) {
      const int level = 3 + std::min(13, static_cast<int>(word.difficulty * 14.0));
      vq += word.text + "\tvq" + std::to_string(level) + "\n";
    }
    const auto freq = static_cast<std::uint64_t>(
        std::max(1.0, std::round(std::exp(11.0 - 7.0 * word.difficulty + rng.normal(0.0, 0.6)))));
    bnc += word.text + "\t" + std::to_string(freq) + "\n";
    bnc_total += freq;
    const auto hits = static_cast<std::uint64_t>(
        std::max(1.0, std::round(std::exp(17.0 - 8.0 * word.difficulty + rng.normal(0.0, 0.8)))));
    search += word.text + "\t" + std::to_string(hits) + "\n";
    const auto senses = static_cast<int>(
        std::max(1.0, std::round(std::exp(3.2 - 2.8 * word.difficulty + rng.normal(0.0, 0.4)))));
    synsets += word.text + "\t" + std::to_string(senses) + "\n";
  }
  write_file(dir / "gept.tsv", gept);
  write_file(dir / "vq.tsv", vq);
  write_file(dir / "bnc.tsv", "#total\t" + std::to_string(bnc_total) + "\n" + bnc);
  write_file(dir / "search_counts.tsv", search);
  write_file(dir / "synsets.tsv", synsets);
}

struct MentionOut {
  std::size_t sentence, token;
  const char* kind;
};

struct Entity {
  std::string name;
  bool feminine;
  std::vector<MentionOut> mentions;
};

class DocumentWriter {
 public:
  DocumentWriter(Rng& rng, const Vocabulary& vocab, double level)
      : rng_(rng), vocab_(vocab), level_(level) {}

  void sentence(std::size_t index) {
    sentence_ = index;
    tokens_.clear();
    std::string tree = "(S " + subject();
    tree += " " + verb_phrase(0) + ")";
    std::string text;
    for (std::size_t i = 0; i < tokens_.size(); ++i) {
      std::string t = tokens_[i];
      if (i == 0 && t[0] >= 'a' && t[0] <= 'z') t[0] = static_cast<char>(t[0] - 32);
      text += (i ? " " : "") + t;
    }
    // Leaves carry the capitalized surface too.
    if (!tokens_.empty() && tokens_[0][0] >= 'a' && tokens_[0][0] <= 'z') {
      const std::string lower = " " + tokens_[0] + ")";
      std::string upper = tokens_[0];
      upper[0] = static_cast<char>(upper[0] - 32);
      const auto at = tree.find(lower);
      tree.replace(at, lower.size(), " " + upper + ")");
    }
    text_ += (text_.empty() ? "" : " ") + text + ".";
    trees_ += tree + "\n";
  }

  const std::string& text() const { return text_; }
  const std::string& trees() const { return trees_; }

  std::string coref_json() const {
    ordered_json chains = ordered_json::array();
    for (const auto& e : entities_) {
      if (e.mentions.size() < 2) continue;
      ordered_json chain = ordered_json::array();
      for (const auto& m : e.mentions) {
        chain.push_back({{"sentence", m.sentence}, {"start", m.token}, {"end", m.token}, {"kind", m.kind}});
      }
      chains.push_back(chain);
    }
    return chains.dump() + "\n";
  }

 private:
  std::string push(const std::string& tag, const std::string& word) {
    tokens_.push_back(word);
    return "(" + tag + " " + word + ")";
  }

  std::string content_word() {
    const double d = std::clamp(rng_.normal(0.12 + 0.55 * level_, 0.2), 0.0, 0.999);
    const auto i = static_cast<std::size_t>(d * static_cast<double>(vocab_.words.size()));
    return vocab_.words[i].text;
  }

  std::string common_np(const char* det) {
    std::string np = "(NP " + push("DT", det);
    np += " " + push("NN", content_word()) + ")";
    return np;
  }

  std::string subject() {
    if (!entities_.empty() && rng_.chance(0.25 + 0.15 * level_)) {
      Entity& e = entities_[rng_.below(entities_.size())];
      e.mentions.push_back({sentence_, tokens_.size(), "pronoun"});
      return "(NP " + push("PRP", e.feminine ? "she" : "he") + ")";
    }
    if (rng_.chance(0.3)) {
      if (entities_.size() < 4 && (entities_.empty() || rng_.chance(0.5))) {
        entities_.push_back({vocab_.names[rng_.below(vocab_.names.size())], rng_.chance(0.5), {}});
        for (std::size_t i = 0; i + 1 < entities_.size(); ++i) {
          if (entities_[i].name == entities_.back().name) {
            entities_.pop_back();
            break;
          }
        }
      }
      Entity& e = entities_[rng_.below(entities_.size())];
      e.mentions.push_back({sentence_, tokens_.size(), "proper"});
      return "(NP " + push("NNP", e.name) + ")";
    }
    return common_np("the");
  }

  std::string prep_phrase() {
    static const char* const kPreps[] = {"of", "in", "with"};
    std::string pp = "(PP " + push("IN", kPreps[rng_.below(3)]);
    pp += " " + common_np("the") + ")";
    return pp;
  }

  std::string verb_phrase(int depth) {
    std::string vp = "(VP " + push("VBZ", content_word());
    vp += " " + common_np("a");
    if (rng_.chance(0.15 + 0.5 * level_)) vp += " " + prep_phrase();
    if (depth < 3 && rng_.chance(0.1 + 0.45 * level_)) {
      vp += " (SBAR " + push("IN", "that");
      vp += " (S " + common_np("the");
      vp += " " + verb_phrase(depth + 1) + "))";
    }
    return vp + ")";
  }

  Rng& rng_;
  const Vocabulary& vocab_;
  double level_;
  std::size_t sentence_ = 0;
  std::vector<std::string> tokens_;
  std::vector<Entity> entities_;
  std::string text_;
  std::string trees_;
};

}  // namespace

fs::path write_corpus(const fs::path& dir, const CorpusOptions& options) {
  if (options.grades < 2 || options.docs_per_grade < 1) {
    throw ConfigError("synthetic corpus needs at least 2 grades and 1 document per grade");
  }
  Rng rng(options.seed);
  const Vocabulary vocab = make_vocabulary(rng, options.vocabulary);
  for (const char* sub : {"docs", "trees", "coref", "resources"}) fs::create_directories(dir / sub);
  write_resources(dir / "resources", vocab, rng);

  ordered_json documents = ordered_json::array();
  for (int g = 1; g <= options.grades; ++g) {
    const double level = static_cast<double>(g - 1) / static_cast<double>(options.grades - 1);
    for (int i = 0; i < options.docs_per_grade; ++i) {
      char id[32];
      std::snprintf(id, sizeof(id), "g%d_%03d", g, i);
      DocumentWriter writer(rng, vocab, level);
      const auto sentences = static_cast<std::size_t>(4 + 2 * g + static_cast<int>(rng.below(5)));
      for (std::size_t s = 0; s < sentences; ++s) writer.sentence(s);
      write_file(dir / "docs" / (std::string(id) + ".txt"), writer.text() + "\n");
      ordered_json entry = {{"id", id}, {"path", std::string("docs/") + id + ".txt"}, {"grade", g}};
      if (options.trees) {
        write_file(dir / "trees" / (std::string(id) + ".mrg"), writer.trees());
        entry["tree"] = std::string("trees/") + id + ".mrg";
      }
      if (options.coref) {
        write_file(dir / "coref" / (std::string(id) + ".json"), writer.coref_json());
        entry["coref"] = std::string("coref/") + id + ".json";
      }
      documents.push_back(entry);
    }
  }
  ordered_json manifest = {
      {"documents", documents},
      {"resources",
       {{"gept", "resources/gept.tsv"},
        {"vq", "resources/vq.tsv"},
        {"bnc", "resources/bnc.tsv"},
        {"search_counts", "resources/search_counts.tsv"},
        {"synsets", "resources/synsets.tsv"}}}};
  const fs::path path = dir / "manifest.json";
  write_file(path, manifest.dump(2) + "\n");
  return path;
}

features::FeatureRegistry planted_registry(std::size_t count) {
  std::vector<features::FeatureDescriptor> d;
  for (std::size_t i = 1; i <= count; ++i) {
    d.push_back({"x" + std::to_string(i), features::Category::kBaseline, features::Requirement::kNone});
  }
  return features::FeatureRegistry(std::move(d));
}

std::vector<features::FeatureVector> planted_rows(const PlantedOptions& options) {
  Rng rng(options.seed);
  std::vector<features::FeatureVector> rows;
  for (std::size_t r = 0; r < options.rows; ++r) {
    features::FeatureVector v;
    v.doc_id = "row" + std::to_string(r);
    v.values.resize(options.features);
    v.missing.assign(options.features, 0);
    for (auto& x : v.values) x = rng.normal();
    double y = rng.normal(0.0, options.sigma);
    for (const auto& [feature, weight] : options.signal) y += weight * v.values.at(feature - 1);
    v.grade = y;
    rows.push_back(std::move(v));
  }
  return rows;
}

}  // namespace readgrade::synth
