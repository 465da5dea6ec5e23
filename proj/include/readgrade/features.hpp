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
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "readgrade/coref.hpp"
#include "readgrade/corpus.hpp"
#include "readgrade/lexicon.hpp"
#include "readgrade/pattern.hpp"

namespace readgrade::features {

enum class Category { kBaseline, kAoa, kFrequency, kParsing, kGrammar, kSemantic, kCoreference };

std::string_view category_name(Category category);

// Annotation or resource a feature cannot be computed without.
enum class Requirement {
  kNone,
  kTrees,          // parser output (grammar features also need patterns)
  kGept,
  kVq,
  kCorpusFrequency,
  kSearchCounts,
  kSynsets,
};

struct FeatureDescriptor {
  std::string name;
  Category category;
  Requirement requirement;
};

class FeatureRegistry {
 public:
  explicit FeatureRegistry(std::vector<FeatureDescriptor> descriptors);

  // The 47 features in their frozen order.
  static const FeatureRegistry& standard();

  std::size_t size() const { return descriptors_.size(); }
  const std::vector<FeatureDescriptor>& descriptors() const { return descriptors_; }
  const FeatureDescriptor& at(std::size_t i) const { return descriptors_[i]; }
  std::optional<std::size_t> index_of(std::string_view name) const;
  std::vector<std::string> names() const;
  std::vector<std::string> names_in(Category category) const;

  // FNV-1a over the ordered names, as 16 hex digits.
  const std::string& hash() const { return hash_; }

 private:
  std::vector<FeatureDescriptor> descriptors_;
  std::map<std::string, std::size_t, std::less<>> index_;
  std::string hash_;
};

struct FeatureVector {
  std::string doc_id;
  std::vector<double> values;
  std::vector<std::uint8_t> missing;  // 1 = masked; masked values are 0
  std::optional<double> grade;  // regression target; document grades are integral
  bool heuristic_coref = false;
  bool fallback_trees = false;

  bool is_missing(std::size_t i) const { return missing[i] != 0; }
};

// All tables a featurization run can draw on. Absent members mask the
// features that need them.
struct Resources {
  TokenizerConfig tokenizer;
  std::optional<PronunciationDict> pronunciations;
  std::optional<lexicon::LemmaTable> lemmas;
  std::optional<lexicon::GradedLexicon> gept;
  std::optional<lexicon::GradedLexicon> vq;
  std::optional<lexicon::FrequencyTable> corpus_frequency;
  std::optional<lexicon::FrequencyTable> search_counts;
  std::optional<lexicon::SynsetTable> synsets;
  std::vector<syntax::GrammarPattern> grammar_patterns;
  std::size_t lexicon_duplicate_warnings = 0;
};

// Recognized keys: stopwords, pronouns, abbreviations, pronunciations,
// lemmas, gept, vq, bnc, search_counts, synsets, grammar_patterns. Word
// lists and patterns fall back to the shipped defaults when absent.
Resources load_resources(const std::map<std::string, std::filesystem::path>& paths);

enum class TreeFallback { kNone, kFlat };

struct FeaturizeOptions {
  BaselineOptions baseline;
  syntax::GrammarNormalization grammar = syntax::GrammarNormalization::kPerSentence;
  coref::CountNormalization coref_counts = coref::CountNormalization::kPerSentence;
  bool strip_suffixes = true;
  TreeFallback tree_fallback = TreeFallback::kNone;
};

// Computes every registry feature for one document. Features whose
// requirement is unavailable are masked. Propagates AnnotationMismatch.
FeatureVector featurize(const Document& doc, const Resources& resources,
                        const FeaturizeOptions& options = {},
                        const FeatureRegistry& registry = FeatureRegistry::standard());

// Parallel over documents; output order follows the input.
std::vector<FeatureVector> featurize_all(const std::vector<Document>& docs,
                                         const Resources& resources,
                                         const FeaturizeOptions& options = {},
                                         const FeatureRegistry& registry =
                                             FeatureRegistry::standard(),
                                         unsigned jobs = 1);

struct TableShape {
  std::size_t rows = 0;
  std::size_t columns = 0;  // feature columns + grade; the id key column is not counted
};

// CSV: `id`, one column per feature, `grade`. Missing cells are empty;
// numbers use shortest round-trip formatting. Throws IoError.
TableShape export_table(const std::vector<FeatureVector>& vectors,
                        const std::filesystem::path& path,
                        const FeatureRegistry& registry = FeatureRegistry::standard());
std::string format_table(const std::vector<FeatureVector>& vectors,
                         const FeatureRegistry& registry = FeatureRegistry::standard());

// Reads a table written by export_table. The header must match the registry.
std::vector<FeatureVector> import_table(const std::filesystem::path& path,
                                        const FeatureRegistry& registry =
                                            FeatureRegistry::standard());
std::vector<FeatureVector> parse_table(std::string_view csv,
                                       const FeatureRegistry& registry =
                                           FeatureRegistry::standard());

// Shortest decimal that round-trips to the same double.
std::string format_double(double value);

}  // namespace readgrade::features
