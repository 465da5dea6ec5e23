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

#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "readgrade/tree.hpp"

namespace readgrade {

struct Token {
  std::string surface;
  std::string normalized;  // ASCII case-folded surface
  bool is_stop_word = false;
  bool is_pronoun = false;
  bool is_proper_noun = false;
  std::size_t char_start = 0;  // byte offsets into the source text
  std::size_t char_end = 0;
};

struct Sentence {
  std::vector<Token> tokens;
  std::size_t index = 0;
};

// Closed-class word lists driving tokenization. Entries are stored
// case-folded; abbreviations keep their trailing period ("dr.").
struct TokenizerConfig {
  std::unordered_set<std::string> stop_words;
  std::unordered_set<std::string> pronouns;
  std::unordered_set<std::string> abbreviations;

  // Lists shipped in the data directory.
  static TokenizerConfig defaults();
};

// One entry per line, UTF-8; blank lines and lines starting with '#' are
// skipped. Entries are case-folded.
std::unordered_set<std::string> load_word_list(const std::filesystem::path& path);

// Directory holding the shipped word lists and grammar patterns.
// READGRADE_DATA overrides the compiled-in location.
std::filesystem::path default_data_dir();

// A tokenized, sentence-split document plus its optional annotations.
// Immutable once loading has attached the sidecars.
class Document {
 public:
  Document() = default;
  Document(std::string id, std::vector<Sentence> sentences);

  const std::string& id() const { return id_; }
  const std::optional<int>& grade() const { return grade_; }
  void set_grade(int grade) { grade_ = grade; }

  const std::vector<Sentence>& sentences() const { return sentences_; }
  std::size_t sentence_count() const { return sentences_.size(); }
  std::size_t token_count() const { return token_count_; }
  const std::set<std::string>& distinct_words() const { return distinct_words_; }
  // Distinct words excluding stop words.
  const std::set<std::string>& distinct_content_words() const { return distinct_content_; }

  // Attaches parser output, one tree per sentence. When the counts line up,
  // NNP/NNPS preterminals decide the proper-noun flags.
  void attach_trees(std::vector<syntax::ParseTree> trees);
  const std::optional<std::vector<syntax::ParseTree>>& trees() const { return trees_; }

  void attach_coref_sidecar(std::string json_text) { coref_sidecar_ = std::move(json_text); }
  const std::optional<std::string>& coref_sidecar() const { return coref_sidecar_; }

  void mark_missing(std::string annotation) { missing_.insert(std::move(annotation)); }
  const std::set<std::string>& missing_annotations() const { return missing_; }

  // Stable textual form used for determinism checks.
  std::string serialize() const;

 private:
  std::string id_;
  std::optional<int> grade_;
  std::vector<Sentence> sentences_;
  std::size_t token_count_ = 0;
  std::set<std::string> distinct_words_;
  std::set<std::string> distinct_content_;
  std::optional<std::vector<syntax::ParseTree>> trees_;
  std::optional<std::string> coref_sidecar_;
  std::set<std::string> missing_;
};

// Splits text into sentences and word tokens. Sentences end at '.', '!' or
// '?' followed by whitespace and a capitalized word (or end of text), or at
// a blank line; a period closing a listed abbreviation does not end a
// sentence. Punctuation is not kept as tokens. Throws EmptyDocument when no
// word token remains.
Document tokenize(std::string_view raw_text, const TokenizerConfig& config,
                  std::string id = {});

// CMU-dictionary style pronunciations: `WORD  P1 P2 ...`, stress digits on
// vowel phonemes. Alternate pronunciations `WORD(2)` are ignored.
class PronunciationDict {
 public:
  static PronunciationDict load(const std::filesystem::path& path);
  static PronunciationDict parse(std::string_view text);

  // Vowel-bearing phoneme count, if the word is listed.
  std::optional<int> syllables(std::string_view word) const;
  std::size_t size() const { return entries_.size(); }

 private:
  std::map<std::string, int, std::less<>> entries_;
};

// Dictionary count when available, otherwise the vowel-group heuristic.
// Always returns at least 1.
int count_syllables(std::string_view word, const PronunciationDict* dict = nullptr);

// Vowel-group heuristic alone.
int heuristic_syllables(std::string_view word);

struct BaselineOptions {
  // Reproduces the literal ln|D| / n form instead of |D| / n.
  bool sentence_length_log = false;
};

struct BaselineFeatures {
  double word_number = 0.0;      // ln |D|
  double sentence_length = 0.0;  // |D| / n
  double syllables = 0.0;        // mean syllables over distinct words
};

BaselineFeatures baseline_features(const Document& doc, const PronunciationDict* dict = nullptr,
                                   BaselineOptions options = {});

struct ManifestEntry {
  std::filesystem::path document;
  int grade = 0;
  std::optional<std::filesystem::path> tree;
  std::optional<std::filesystem::path> coref;
  std::string id;
};

struct CorpusManifest {
  std::vector<ManifestEntry> entries;
  std::map<std::string, std::filesystem::path> resources;  // resolved paths
};

// JSON manifest: either an array of {path, grade, tree?, coref?, id?} or an
// object {"documents": [...], "resources": {...}}. Relative paths resolve
// against the manifest's directory. Throws ManifestError on bad grades or
// shape, LoadError if the file cannot be read.
CorpusManifest load_manifest(const std::filesystem::path& path);

// Loads, tokenizes, and attaches sidecars. Missing sidecars are recorded as
// "tree" / "coref" in the document's missing-annotation set.
std::vector<Document> load_corpus(const CorpusManifest& manifest, const TokenizerConfig& config);

std::string read_text_file(const std::filesystem::path& path);

}  // namespace readgrade
