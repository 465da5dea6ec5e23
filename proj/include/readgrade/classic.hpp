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

#include "readgrade/corpus.hpp"

namespace readgrade::model {

struct TextCounts {
  std::size_t words = 0;
  std::size_t sentences = 0;
  std::size_t syllables = 0;
  std::size_t letters = 0;
};

struct ClassicScores {
  double flesch_reading_ease = 0.0;
  double flesch_kincaid_grade = 0.0;
  double coleman_liau = 0.0;
};

// Word, sentence, syllable, and letter totals over every token.
TextCounts text_counts(const Document& doc, const PronunciationDict* dict = nullptr);

// Flesch Reading Ease 206.835 - 1.015 W/S - 84.6 Syl/W,
// Flesch-Kincaid Grade 0.39 W/S + 11.8 Syl/W - 15.59,
// Coleman-Liau 0.0588 L - 0.296 S - 15.8 with L letters and S sentences per
// 100 words.
ClassicScores classic_scores(const TextCounts& counts);
ClassicScores classic_formulas(const Document& doc, const PronunciationDict* dict = nullptr);

}  // namespace readgrade::model
