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
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace readgrade::syntax {

// Constituency tree in Penn bracket notation. Words are leaves: a leaf has a
// terminal and no children, every labeled node has at least one child. In
// `(NN cat)` the node NN is a preterminal whose single child is the leaf
// "cat".
struct ParseTree {
  std::string label;
  std::vector<ParseTree> children;
  std::optional<std::string> terminal;

  static ParseTree leaf(std::string word);
  static ParseTree node(std::string label, std::vector<ParseTree> children);

  bool is_leaf() const { return terminal.has_value(); }
  bool is_preterminal() const { return children.size() == 1 && children[0].is_leaf(); }

  friend bool operator==(const ParseTree&, const ParseTree&) = default;
};

// Parses one bracketed tree. Whitespace is insignificant; a trailing
// newline is allowed. Throws TreeSyntaxError with the character offset.
ParseTree parse_bracket_tree(std::string_view text);

// Canonical form: single spaces, no redundant whitespace.
std::string to_bracket_string(const ParseTree& tree);

// Left-to-right terminals.
std::vector<std::string> tree_yield(const ParseTree& tree);

// Strips function tags and indices ("NP-SBJ-1" -> "NP", "NP=2" -> "NP").
// Labels starting with '-' ("-LRB-", "-NONE-") are left alone.
std::string_view base_label(std::string_view label);

// Edges on the longest root-to-terminal path. A bare leaf has height 0.
int tree_height(const ParseTree& tree);

struct PhraseCounts {
  int np = 0;
  int vp = 0;
  int sbar = 0;
  int pp = 0;

  friend bool operator==(const PhraseCounts&, const PhraseCounts&) = default;
};

PhraseCounts phrase_counts(const ParseTree& tree, bool strip_suffixes = true);

// Number of labeled (non-leaf) nodes.
int labeled_node_count(const ParseTree& tree);

struct ParsingFeatures {
  double tree_height = 0.0;
  double np = 0.0;
  double vp = 0.0;
  double sbar = 0.0;
  double pp = 0.0;
};

// Per-sentence means. Throws AnnotationMismatch if trees.size() != sentences.
ParsingFeatures parsing_features(std::span<const ParseTree> trees, std::size_t sentences,
                                 bool strip_suffixes = true);

// One tree per non-blank line.
std::vector<ParseTree> parse_tree_lines(std::string_view text);

// Stand-in tree for a sentence without parser output: (S (X w1) (X w2) ...).
ParseTree flat_tree(std::span<const std::string> words);

}  // namespace readgrade::syntax
