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

#include "readgrade/tree.hpp"

#include <algorithm>
#include <utility>

#include "readgrade/errors.hpp"

namespace readgrade::syntax {
namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }

class BracketReader {
 public:
  explicit BracketReader(std::string_view text) : text_(text) {}

  ParseTree read_root() {
    skip_space();
    if (at_end()) throw TreeSyntaxError(pos_, "empty input");
    if (peek() != '(') throw TreeSyntaxError(pos_, "expected '('");
    ParseTree tree = read_node();
    skip_space();
    if (!at_end()) throw TreeSyntaxError(pos_, "trailing characters after tree");
    return tree;
  }

 private:
  ParseTree read_node() {
    const std::size_t open = pos_;
    ++pos_;  // '('
    skip_space();
    std::string label;
    if (!at_end() && peek() != '(' && peek() != ')') label = read_atom();
    std::vector<ParseTree> children;
    while (true) {
      skip_space();
      if (at_end()) throw TreeSyntaxError(pos_, "unbalanced parentheses: missing ')'");
      const char c = peek();
      if (c == ')') {
        if (children.empty()) throw TreeSyntaxError(open, "empty node");
        ++pos_;
        break;
      }
      if (c == '(') {
        children.push_back(read_node());
      } else {
        children.push_back(ParseTree::leaf(read_atom()));
      }
    }
    return ParseTree::node(std::move(label), std::move(children));
  }

  std::string read_atom() {
    const std::size_t start = pos_;
    while (!at_end() && !is_space(peek()) && peek() != '(' && peek() != ')') ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  void skip_space() {
    while (!at_end() && is_space(peek())) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void write_bracket(const ParseTree& tree, std::string& out) {
  if (tree.is_leaf()) {
    out += *tree.terminal;
    return;
  }
  out += '(';
  out += tree.label;
  for (const auto& child : tree.children) {
    if (!(out.back() == '(' && tree.label.empty())) out += ' ';
    write_bracket(child, out);
  }
  out += ')';
}

void collect_yield(const ParseTree& tree, std::vector<std::string>& out) {
  if (tree.is_leaf()) {
    out.push_back(*tree.terminal);
    return;
  }
  for (const auto& child : tree.children) collect_yield(child, out);
}

void count_phrases(const ParseTree& tree, bool strip, PhraseCounts& counts) {
  if (tree.is_leaf()) return;
  const std::string_view label = strip ? base_label(tree.label) : tree.label;
  if (label == "NP") ++counts.np;
  else if (label == "VP") ++counts.vp;
  else if (label == "SBAR") ++counts.sbar;
  else if (label == "PP") ++counts.pp;
  for (const auto& child : tree.children) count_phrases(child, strip, counts);
}

}  // namespace

ParseTree ParseTree::leaf(std::string word) {
  ParseTree tree;
  tree.terminal = std::move(word);
  return tree;
}

ParseTree ParseTree::node(std::string label, std::vector<ParseTree> children) {
  ParseTree tree;
  tree.label = std::move(label);
  tree.children = std::move(children);
  return tree;
}

ParseTree parse_bracket_tree(std::string_view text) {
  return BracketReader(text).read_root();
}

std::string to_bracket_string(const ParseTree& tree) {
  std::string out;
  write_bracket(tree, out);
  return out;
}

std::vector<std::string> tree_yield(const ParseTree& tree) {
  std::vector<std::string> out;
  collect_yield(tree, out);
  return out;
}

std::string_view base_label(std::string_view label) {
  if (label.empty() || label.front() == '-') return label;
  const auto cut = label.find_first_of("-=");
  return cut == std::string_view::npos ? label : label.substr(0, cut);
}

int tree_height(const ParseTree& tree) {
  if (tree.is_leaf()) return 0;
  int deepest = 0;
  for (const auto& child : tree.children) deepest = std::max(deepest, tree_height(child));
  return deepest + 1;
}

PhraseCounts phrase_counts(const ParseTree& tree, bool strip_suffixes) {
  PhraseCounts counts;
  count_phrases(tree, strip_suffixes, counts);
  return counts;
}

int labeled_node_count(const ParseTree& tree) {
  if (tree.is_leaf()) return 0;
  int count = 1;
  for (const auto& child : tree.children) count += labeled_node_count(child);
  return count;
}

ParsingFeatures parsing_features(std::span<const ParseTree> trees, std::size_t sentences,
                                 bool strip_suffixes) {
  if (trees.size() != sentences) {
    throw AnnotationMismatch("tree sidecar has " + std::to_string(trees.size()) +
                             " trees for " + std::to_string(sentences) + " sentences");
  }
  ParsingFeatures f;
  if (sentences == 0) return f;
  long height = 0;
  PhraseCounts total;
  for (const auto& tree : trees) {
    height += tree_height(tree);
    const PhraseCounts c = phrase_counts(tree, strip_suffixes);
    total.np += c.np;
    total.vp += c.vp;
    total.sbar += c.sbar;
    total.pp += c.pp;
  }
  const double n = static_cast<double>(sentences);
  f.tree_height = static_cast<double>(height) / n;
  f.np = total.np / n;
  f.vp = total.vp / n;
  f.sbar = total.sbar / n;
  f.pp = total.pp / n;
  return f;
}

std::vector<ParseTree> parse_tree_lines(std::string_view text) {
  std::vector<ParseTree> trees;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(start, end - start);
    ++line_no;
    if (std::any_of(line.begin(), line.end(), [](char c) { return !is_space(c); })) {
      try {
        trees.push_back(parse_bracket_tree(line));
      } catch (const TreeSyntaxError& e) {
        throw TreeSyntaxError(e.offset(), "line " + std::to_string(line_no) + ": " + e.what());
      }
    }
    if (end == text.size()) break;
    start = end + 1;
  }
  return trees;
}

ParseTree flat_tree(std::span<const std::string> words) {
  std::vector<ParseTree> children;
  children.reserve(words.size());
  for (const auto& w : words) children.push_back(ParseTree::node("X", {ParseTree::leaf(w)}));
  if (children.empty()) children.push_back(ParseTree::node("X", {ParseTree::leaf("")}));
  return ParseTree::node("S", std::move(children));
}

}  // namespace readgrade::syntax
