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
#include <string_view>
#include <vector>

#include "readgrade/corpus.hpp"

namespace readgrade::coref {

enum class MentionKind { kPronoun, kProperNoun, kNominal };

// Token span [token_start, token_end] (inclusive) inside one sentence.
struct Mention {
  std::size_t sentence_index = 0;
  std::size_t token_start = 0;
  std::size_t token_end = 0;
  MentionKind kind = MentionKind::kNominal;

  friend bool operator==(const Mention&, const Mention&) = default;
};

struct CorefChain {
  Mention antecedent;
  std::vector<Mention> anaphora;  // in document order, all after the antecedent
  bool heuristic = false;
};

// Sidecar JSON: array of chains, each an array of
// {"sentence", "start", "end", "kind"} with kind one of "pronoun",
// "proper", "nominal". Mentions are sorted into document order; the first
// becomes the antecedent. Out-of-range or empty chains raise
// AnnotationMismatch naming the chain.
std::vector<CorefChain> parse_coref_sidecar(std::string_view json_text, const Document& doc);
std::vector<CorefChain> load_coref_sidecar(const std::filesystem::path& path, const Document& doc);

// Fallback when no sidecar exists: repeated proper-noun strings form a
// chain, and a third-person pronoun joins the chain mentioned most recently
// within the previous three sentences. Chains without anaphora are dropped.
std::vector<CorefChain> heuristic_chains(const Document& doc);

enum class CountNormalization { kPerSentence, kRaw };

struct CorefFeatures {
  double pronoun = 0.0;
  double proper_noun = 0.0;
  double antecedent = 0.0;
  double corefer_chain = 0.0;
  double corefer_distance = 0.0;  // in sentences
};

CorefFeatures coref_features(const Document& doc, const std::vector<CorefChain>& chains,
                             CountNormalization counts = CountNormalization::kPerSentence);

}  // namespace readgrade::coref
