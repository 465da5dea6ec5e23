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

#include <cmath>
#include <sstream>

#include "readgrade/corpus.hpp"
#include "readgrade/errors.hpp"

namespace readgrade {
namespace {

bool is_vowel(char c) {
  return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u' || c == 'y';
}

std::string ascii_letters_lower(std::string_view word) {
  std::string out;
  for (char c : word) {
    if (c >= 'A' && c <= 'Z') out += static_cast<char>(c + 32);
    else if (c >= 'a' && c <= 'z') out += c;
  }
  return out;
}

}  // namespace

PronunciationDict PronunciationDict::load(const std::filesystem::path& path) {
  return parse(read_text_file(path));
}

PronunciationDict PronunciationDict::parse(std::string_view text) {
  PronunciationDict dict;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line.rfind(";;;", 0) == 0 || line.front() == '#') continue;
    std::istringstream fields(line);
    std::string word;
    if (!(fields >> word)) continue;
    if (word.find('(') != std::string::npos) continue;  // alternate pronunciation
    int vowels = 0;
    std::string phoneme;
    while (fields >> phoneme) {
      if (!phoneme.empty() && phoneme.back() >= '0' && phoneme.back() <= '9') ++vowels;
    }
    std::string key;
    for (char c : word) key += (c >= 'A' && c <= 'Z') ? static_cast<char>(c + 32) : c;
    if (vowels > 0) dict.entries_.emplace(std::move(key), vowels);
  }
  return dict;
}

std::optional<int> PronunciationDict::syllables(std::string_view word) const {
  std::string key;
  for (char c : word) key += (c >= 'A' && c <= 'Z') ? static_cast<char>(c + 32) : c;
  const auto it = entries_.find(key);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

int heuristic_syllables(std::string_view word) {
  const std::string w = ascii_letters_lower(word);
  if (w.empty()) return 1;
  int groups = 0;
  bool in_group = false;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const bool vowel = is_vowel(w[i]) && !(i == 0 && w[i] == 'y');
    if (vowel && !in_group) ++groups;
    in_group = vowel;
  }
  // Terminal silent 'e': an 'e' forming its own group after a consonant.
  if (w.size() > 1 && w.back() == 'e' && !is_vowel(w[w.size() - 2]) && groups > 1) --groups;
  return groups < 1 ? 1 : groups;
}

int count_syllables(std::string_view word, const PronunciationDict* dict) {
  if (dict != nullptr) {
    if (const auto n = dict->syllables(word)) return *n;
  }
  return heuristic_syllables(word);
}

BaselineFeatures baseline_features(const Document& doc, const PronunciationDict* dict,
                                   BaselineOptions options) {
  if (doc.token_count() == 0) throw EmptyDocument("document '" + doc.id() + "' is empty");
  BaselineFeatures f;
  const double tokens = static_cast<double>(doc.token_count());
  const double sentences = static_cast<double>(doc.sentence_count());
  f.word_number = std::log(tokens);
  f.sentence_length = options.sentence_length_log ? f.word_number / sentences : tokens / sentences;
  long total = 0;
  for (const auto& word : doc.distinct_words()) total += count_syllables(word, dict);
  f.syllables = static_cast<double>(total) / static_cast<double>(doc.distinct_words().size());
  return f;
}

}  // namespace readgrade
