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

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "readgrade/corpus.hpp"

namespace readgrade::lexicon {

// Level schemas. Index 0 is the out-of-list level.
const std::vector<std::string>& gept_levels();  // gept0..gept3
const std::vector<std::string>& vq_levels();    // vq0, vq3..vq16

// Optional surface -> lemma map applied to lexicon lookups only.
class LemmaTable {
 public:
  static LemmaTable load(const std::filesystem::path& path);
  void add(std::string surface, std::string lemma);
  std::string_view key(std::string_view word) const;
  std::size_t size() const { return map_.size(); }

 private:
  std::unordered_map<std::string, std::string> map_;
};

class GradedLexicon {
 public:
  GradedLexicon() = default;
  GradedLexicon(std::string name, std::vector<std::string> levels);

  const std::string& name() const { return name_; }
  const std::vector<std::string>& levels() const { return levels_; }

  // Level index of the word; 0 (out-of-list) when unmapped.
  std::size_t level_of(std::string_view word) const;
  std::size_t size() const { return map_.size(); }

  // Keeps the easier (lower-index) level on duplicates. Returns true when
  // the word was already present.
  bool insert(std::string word, std::size_t level);

 private:
  std::string name_;
  std::vector<std::string> levels_;
  std::unordered_map<std::string, std::size_t> map_;
};

struct LexiconLoad {
  GradedLexicon lexicon;
  std::size_t duplicate_warnings = 0;
};

// TSV `word<TAB>level`. Labels outside `levels` raise SchemaError with the
// line number. Duplicate words resolve to the easiest level.
LexiconLoad read_graded_lexicon(std::istream& in, const std::string& source, std::string name,
                                const std::vector<std::string>& levels);
LexiconLoad load_graded_lexicon(const std::filesystem::path& path, std::string name,
                                const std::vector<std::string>& levels);

// Share of the document's m distinct words at each level (indexed like
// lex.levels()). Sums to 1.
std::vector<double> aoa_proportions(const Document& doc, const GradedLexicon& lex,
                                    const LemmaTable* lemmas = nullptr);

// Word counts from a reference corpus or search-result counts. TSV
// `word<TAB>count` with an optional `#total<TAB>N` header; without the
// header the total is the sum of counts.
struct FrequencyTable {
  std::string source;
  std::unordered_map<std::string, std::uint64_t> counts;
  std::uint64_t total_tokens = 1;

  std::uint64_t count(std::string_view word) const;
  // ln(1 / total) - 1, returned when no content word is found.
  double floor_value() const;
};

FrequencyTable read_frequency_table(std::istream& in, const std::string& source);
FrequencyTable load_frequency_table(const std::filesystem::path& path);

// ln( sum_i (n_i / total) / m' ) over the m' distinct non-stop words.
double corpus_frequency_feature(const Document& doc, const FrequencyTable& table,
                                const LemmaTable* lemmas = nullptr);

// ln( sum_i count_i / m' ) over the m' distinct non-stop words.
double search_count_feature(const Document& doc, const FrequencyTable& table,
                            const LemmaTable* lemmas = nullptr);

struct SynsetTable {
  std::unordered_map<std::string, int> counts;
  int count(std::string_view word) const;  // 0 when absent
};

SynsetTable read_synset_table(std::istream& in, const std::string& source);
SynsetTable load_synset_table(const std::filesystem::path& path);

// min(floor(sqrt(ws)), 7); DomainError for ws <= 0.
int synset_bucket(int ws);

// Share of distinct words per bucket wordnet1..wordnet7. Words missing from
// the table belong to no bucket.
std::array<double, 7> semantic_proportions(const Document& doc, const SynsetTable& table,
                                           const LemmaTable* lemmas = nullptr);

}  // namespace readgrade::lexicon
