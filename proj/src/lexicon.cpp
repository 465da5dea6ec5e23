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

#include "readgrade/lexicon.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <utility>

#include "readgrade/errors.hpp"

namespace readgrade::lexicon {
namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  auto space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
  while (b < e && space(s[b])) ++b;
  while (e > b && space(s[e - 1])) --e;
  return std::string(s.substr(b, e - b));
}

std::string lower_ascii(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c + 32);
  }
  return out;
}

// Splits `word<TAB>value`; returns false for blank or comment lines.
bool split_pair(const std::string& line, const std::string& source, std::size_t line_no,
                std::string& word, std::string& value) {
  const std::string content = trim(line);
  if (content.empty() || content.front() == '#') return false;
  const auto tab = content.find('\t');
  if (tab == std::string::npos) throw SchemaError(source, line_no, "expected word<TAB>value");
  word = lower_ascii(trim(content.substr(0, tab)));
  value = trim(content.substr(tab + 1));
  if (word.empty()) throw SchemaError(source, line_no, "empty word");
  return true;
}

template <typename Int>
Int parse_count(const std::string& text, const std::string& source, std::size_t line_no) {
  Int value{};
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw SchemaError(source, line_no, "expected an integer count, got '" + text + "'");
  }
  return value;
}

std::ifstream open(const std::filesystem::path& path, const char* what) {
  std::ifstream in(path);
  if (!in) throw LoadError(path.string(), std::string("cannot open ") + what);
  return in;
}

double log_mean_or_floor(double total, std::size_t words, double floor) {
  if (words == 0 || total <= 0.0) return floor;
  return std::log(total / static_cast<double>(words));
}

}  // namespace

const std::vector<std::string>& gept_levels() {
  static const std::vector<std::string> levels = {"gept0", "gept1", "gept2", "gept3"};
  return levels;
}

const std::vector<std::string>& vq_levels() {
  static const std::vector<std::string> levels = [] {
    std::vector<std::string> out = {"vq0"};
    for (int i = 3; i <= 16; ++i) out.push_back("vq" + std::to_string(i));
    return out;
  }();
  return levels;
}

LemmaTable LemmaTable::load(const std::filesystem::path& path) {
  auto in = open(path, "lemma table");
  LemmaTable table;
  std::string line, word, lemma;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (split_pair(line, path.string(), line_no, word, lemma)) table.add(word, lower_ascii(lemma));
  }
  return table;
}

void LemmaTable::add(std::string surface, std::string lemma) {
  map_.insert_or_assign(std::move(surface), std::move(lemma));
}

std::string_view LemmaTable::key(std::string_view word) const {
  const auto it = map_.find(std::string(word));
  return it == map_.end() ? word : std::string_view(it->second);
}

GradedLexicon::GradedLexicon(std::string name, std::vector<std::string> levels)
    : name_(std::move(name)), levels_(std::move(levels)) {}

std::size_t GradedLexicon::level_of(std::string_view word) const {
  const auto it = map_.find(std::string(word));
  return it == map_.end() ? 0 : it->second;
}

bool GradedLexicon::insert(std::string word, std::size_t level) {
  auto [it, inserted] = map_.emplace(std::move(word), level);
  if (!inserted) it->second = std::min(it->second, level);
  return !inserted;
}

LexiconLoad read_graded_lexicon(std::istream& in, const std::string& source, std::string name,
                                const std::vector<std::string>& levels) {
  LexiconLoad result{GradedLexicon(std::move(name), levels), 0};
  std::string line, word, label;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!split_pair(line, source, line_no, word, label)) continue;
    const auto it = std::find(levels.begin(), levels.end(), label);
    if (it == levels.end()) throw SchemaError(source, line_no, "unknown level '" + label + "'");
    const auto level = static_cast<std::size_t>(it - levels.begin());
    if (result.lexicon.insert(word, level)) ++result.duplicate_warnings;
  }
  return result;
}

LexiconLoad load_graded_lexicon(const std::filesystem::path& path, std::string name,
                                const std::vector<std::string>& levels) {
  auto in = open(path, "lexicon");
  return read_graded_lexicon(in, path.string(), std::move(name), levels);
}

std::vector<double> aoa_proportions(const Document& doc, const GradedLexicon& lex,
                                    const LemmaTable* lemmas) {
  std::vector<std::size_t> counts(lex.levels().size(), 0);
  for (const auto& word : doc.distinct_words()) {
    ++counts[lex.level_of(lemmas ? lemmas->key(word) : std::string_view(word))];
  }
  const double m = static_cast<double>(doc.distinct_words().size());
  std::vector<double> out(counts.size(), 0.0);
  if (m == 0.0) return out;
  for (std::size_t i = 0; i < counts.size(); ++i) out[i] = static_cast<double>(counts[i]) / m;
  return out;
}

std::uint64_t FrequencyTable::count(std::string_view word) const {
  const auto it = counts.find(std::string(word));
  return it == counts.end() ? 0 : it->second;
}

double FrequencyTable::floor_value() const {
  return std::log(1.0 / static_cast<double>(total_tokens)) - 1.0;
}

FrequencyTable read_frequency_table(std::istream& in, const std::string& source) {
  FrequencyTable table;
  table.source = source;
  std::optional<std::uint64_t> declared_total;
  std::uint64_t sum = 0;
  std::uint64_t max_count = 0;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string content = trim(line);
    if (content.rfind("#total", 0) == 0) {
      const auto tab = content.find('\t');
      if (tab == std::string::npos) throw SchemaError(source, line_no, "expected #total<TAB>N");
      declared_total = parse_count<std::uint64_t>(trim(content.substr(tab + 1)), source, line_no);
      continue;
    }
    std::string word, value;
    if (!split_pair(line, source, line_no, word, value)) continue;
    const auto n = parse_count<std::uint64_t>(value, source, line_no);
    if (n < 1) throw SchemaError(source, line_no, "counts must be >= 1");
    table.counts[word] += n;
    sum += n;
    max_count = std::max(max_count, table.counts[word]);
  }
  if (declared_total) {
    if (*declared_total < max_count) {
      throw SchemaError(source, 1, "#total is smaller than the largest count");
    }
    table.total_tokens = std::max<std::uint64_t>(*declared_total, 1);
  } else {
    table.total_tokens = std::max<std::uint64_t>(sum, 1);
  }
  return table;
}

FrequencyTable load_frequency_table(const std::filesystem::path& path) {
  auto in = open(path, "frequency table");
  return read_frequency_table(in, path.string());
}

double corpus_frequency_feature(const Document& doc, const FrequencyTable& table,
                                const LemmaTable* lemmas) {
  double total = 0.0;
  const double corpus_size = static_cast<double>(table.total_tokens);
  for (const auto& word : doc.distinct_content_words()) {
    const auto n = table.count(lemmas ? lemmas->key(word) : std::string_view(word));
    total += static_cast<double>(n) / corpus_size;
  }
  return log_mean_or_floor(total, doc.distinct_content_words().size(), table.floor_value());
}

double search_count_feature(const Document& doc, const FrequencyTable& table,
                            const LemmaTable* lemmas) {
  double total = 0.0;
  for (const auto& word : doc.distinct_content_words()) {
    total += static_cast<double>(table.count(lemmas ? lemmas->key(word) : std::string_view(word)));
  }
  return log_mean_or_floor(total, doc.distinct_content_words().size(), table.floor_value());
}

int SynsetTable::count(std::string_view word) const {
  const auto it = counts.find(std::string(word));
  return it == counts.end() ? 0 : it->second;
}

SynsetTable read_synset_table(std::istream& in, const std::string& source) {
  SynsetTable table;
  std::string line, word, value;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!split_pair(line, source, line_no, word, value)) continue;
    const int n = parse_count<int>(value, source, line_no);
    if (n < 1) throw SchemaError(source, line_no, "synset counts must be >= 1");
    table.counts[word] = n;
  }
  return table;
}

SynsetTable load_synset_table(const std::filesystem::path& path) {
  auto in = open(path, "synset table");
  return read_synset_table(in, path.string());
}

int synset_bucket(int ws) {
  if (ws <= 0) throw DomainError("synset count must be positive, got " + std::to_string(ws));
  int root = 0;
  while ((root + 1) * (root + 1) <= ws && root < 7) ++root;
  return root;
}

std::array<double, 7> semantic_proportions(const Document& doc, const SynsetTable& table,
                                           const LemmaTable* lemmas) {
  std::array<std::size_t, 7> counts{};
  for (const auto& word : doc.distinct_words()) {
    const int ws = table.count(lemmas ? lemmas->key(word) : std::string_view(word));
    if (ws > 0) ++counts[static_cast<std::size_t>(synset_bucket(ws) - 1)];
  }
  std::array<double, 7> out{};
  const double m = static_cast<double>(doc.distinct_words().size());
  if (m == 0.0) return out;
  for (std::size_t i = 0; i < 7; ++i) out[i] = static_cast<double>(counts[i]) / m;
  return out;
}

}  // namespace readgrade::lexicon
