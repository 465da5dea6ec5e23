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
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "readgrade/tree.hpp"

namespace readgrade::syntax {

// A small tree-query language in the style of tregex.
//
//   pattern  := atom relation*
//   atom     := LABEL ('|' LABEL)* | '__' | '(' pattern ')'
//   relation := ('<' | '<<' | '.') atom
//
//   A < B    A immediately dominates B
//   A << B   A dominates B
//   A . B    B is the sibling immediately after A
//
// Relations in a chain all constrain the leftmost atom: `VP < VBN < NP` is a
// VP with both a VBN child and an NP child. `__` matches any label. Only
// labeled nodes are matched; words are never bound.
class TreePattern {
 public:
  // Throws PatternSyntaxError with the offending position.
  static TreePattern compile(std::string_view expr);

  // Number of distinct nodes that can be bound to the leftmost atom.
  std::size_t count_matches(const ParseTree& tree, bool strip_suffixes = true) const;

  const std::string& source() const { return source_; }

  enum class Relation { kChild, kDescendant, kNextSibling };

  struct Node {
    std::vector<std::string> labels;  // empty means any label
    std::vector<std::pair<Relation, std::size_t>> relations;
  };

 private:
  std::string source_;
  std::vector<Node> nodes_;
  std::size_t root_ = 0;
};

struct GrammarPattern {
  std::string id;
  int grade = 1;
  TreePattern pattern;
};

// TSV `id<TAB>grade<TAB>expr`; blank lines and '#' comments are skipped.
// Grades outside 1..6 and malformed expressions raise SchemaError.
std::vector<GrammarPattern> read_grammar_patterns(std::istream& in,
                                                  const std::string& source);
std::vector<GrammarPattern> load_grammar_patterns(const std::filesystem::path& path);

enum class GrammarNormalization { kPerSentence, kPer100Words };

// grammarK = matches of all grade-K patterns over all trees, divided by the
// sentence count (or scaled per 100 tokens). Duplicate patterns count twice.
std::array<double, 6> grammar_features(std::span<const ParseTree> trees,
                                       std::span<const GrammarPattern> patterns,
                                       std::size_t sentences, std::size_t tokens,
                                       GrammarNormalization normalization =
                                           GrammarNormalization::kPerSentence,
                                       bool strip_suffixes = true);

}  // namespace readgrade::syntax
