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

#include "readgrade/classic.hpp"

#include "readgrade/errors.hpp"

namespace readgrade::model {
namespace {

std::size_t letter_count(std::string_view word) {
  std::size_t n = 0;
  for (unsigned char c : word) {
    if ((c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z')) {
      ++n;
    } else if (c >= 0xC0) {  // lead byte of a non-ASCII Latin letter
      ++n;
    }
  }
  return n;
}

}  // namespace

TextCounts text_counts(const Document& doc, const PronunciationDict* dict) {
  if (doc.token_count() == 0) throw EmptyDocument("document '" + doc.id() + "' is empty");
  TextCounts c;
  c.sentences = doc.sentence_count();
  for (const auto& sentence : doc.sentences()) {
    for (const auto& token : sentence.tokens) {
      ++c.words;
      c.syllables += static_cast<std::size_t>(count_syllables(token.normalized, dict));
      c.letters += letter_count(token.surface);
    }
  }
  return c;
}

ClassicScores classic_scores(const TextCounts& counts) {
  if (counts.words == 0 || counts.sentences == 0) throw EmptyDocument("no words to score");
  const double w = static_cast<double>(counts.words);
  const double s = static_cast<double>(counts.sentences);
  const double syl = static_cast<double>(counts.syllables);
  ClassicScores out;
  out.flesch_reading_ease = 206.835 - 1.015 * (w / s) - 84.6 * (syl / w);
  out.flesch_kincaid_grade = 0.39 * (w / s) + 11.8 * (syl / w) - 15.59;
  const double letters_per_100 = 100.0 * static_cast<double>(counts.letters) / w;
  const double sentences_per_100 = 100.0 * s / w;
  out.coleman_liau = 0.0588 * letters_per_100 - 0.296 * sentences_per_100 - 15.8;
  return out;
}

ClassicScores classic_formulas(const Document& doc, const PronunciationDict* dict) {
  return classic_scores(text_counts(doc, dict));
}

}  // namespace readgrade::model
