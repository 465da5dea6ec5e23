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

#include "readgrade/pattern.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <utility>

#include "readgrade/errors.hpp"

namespace readgrade::syntax {
namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }
bool is_special(char c) { return c == '(' || c == ')' || c == '<' || c == '.' || c == '|'; }

class PatternParser {
 public:
  PatternParser(std::string_view expr, std::vector<TreePattern::Node>& nodes)
      : expr_(expr), nodes_(nodes) {}

  std::size_t parse() {
    skip_space();
    if (at_end()) throw PatternSyntaxError(pos_, "empty pattern");
    const std::size_t root = parse_pattern();
    skip_space();
    if (!at_end()) throw PatternSyntaxError(pos_, "unexpected '" + std::string(1, peek()) + "'");
    return root;
  }

 private:
  std::size_t parse_pattern() {
    const std::size_t head = parse_atom();
    while (true) {
      skip_space();
      if (at_end() || peek() == ')') break;
      TreePattern::Relation relation;
      if (peek() == '<') {
        ++pos_;
        if (!at_end() && peek() == '<') {
          ++pos_;
          relation = TreePattern::Relation::kDescendant;
        } else {
          relation = TreePattern::Relation::kChild;
        }
      } else if (peek() == '.') {
        ++pos_;
        relation = TreePattern::Relation::kNextSibling;
      } else {
        throw PatternSyntaxError(pos_, "expected a relation ('<', '<<' or '.')");
      }
      const std::size_t target = parse_atom();
      nodes_[head].relations.emplace_back(relation, target);
    }
    return head;
  }

  std::size_t parse_atom() {
    skip_space();
    if (at_end()) throw PatternSyntaxError(pos_, "expected a label or '('");
    if (peek() == '(') {
      ++pos_;
      skip_space();
      if (at_end() || peek() == ')') throw PatternSyntaxError(pos_, "expected a label or '('");
      const std::size_t inner = parse_pattern();
      skip_space();
      if (at_end() || peek() != ')') throw PatternSyntaxError(pos_, "expected ')'");
      ++pos_;
      return inner;
    }
    TreePattern::Node node;
    while (true) {
      const std::string label = read_label();
      if (label != "__") node.labels.push_back(label);
      else node.labels.clear();
      skip_space();
      if (at_end() || peek() != '|') break;
      ++pos_;
      skip_space();
    }
    nodes_.push_back(std::move(node));
    return nodes_.size() - 1;
  }

  std::string read_label() {
    const std::size_t start = pos_;
    while (!at_end() && !is_space(peek()) && !is_special(peek())) ++pos_;
    if (pos_ == start) throw PatternSyntaxError(pos_, "expected a label");
    return std::string(expr_.substr(start, pos_ - start));
  }

  void skip_space() {
    while (!at_end() && is_space(peek())) ++pos_;
  }
  bool at_end() const { return pos_ >= expr_.size(); }
  char peek() const { return expr_[pos_]; }

  std::string_view expr_;
  std::vector<TreePattern::Node>& nodes_;
  std::size_t pos_ = 0;
};

// Labeled nodes of a tree in preorder with the sibling structure needed by
// the relations.
struct FlatTree {
  struct Entry {
    std::string_view label;
    std::vector<int> children;  // flat ids of labeled children, -1 for words
    int parent = -1;
    std::size_t position = 0;  // index among the parent's children
    int subtree_end = 0;       // one past the last flat id in this subtree
  };
  std::vector<Entry> entries;

  FlatTree(const ParseTree& tree, bool strip) { add(tree, -1, 0, strip); }

  int add(const ParseTree& tree, int parent, std::size_t position, bool strip) {
    const int id = static_cast<int>(entries.size());
    entries.push_back({});
    entries[id].label = strip ? base_label(tree.label) : std::string_view(tree.label);
    entries[id].parent = parent;
    entries[id].position = position;
    std::vector<int> children;
    for (std::size_t i = 0; i < tree.children.size(); ++i) {
      const auto& child = tree.children[i];
      children.push_back(child.is_leaf() ? -1 : add(child, id, i, strip));
    }
    entries[id].children = std::move(children);
    entries[id].subtree_end = static_cast<int>(entries.size());
    return id;
  }
};

class Matcher {
 public:
  Matcher(const std::vector<TreePattern::Node>& nodes, const FlatTree& flat)
      : nodes_(nodes), flat_(flat), memo_(nodes.size() * flat.entries.size(), -1) {}

  bool matches(std::size_t pnode, int tnode) {
    signed char& slot = memo_[pnode * flat_.entries.size() + static_cast<std::size_t>(tnode)];
    if (slot >= 0) return slot == 1;
    const bool result = evaluate(pnode, tnode);
    slot = result ? 1 : 0;
    return result;
  }

 private:
  bool evaluate(std::size_t pnode, int tnode) {
    const auto& node = nodes_[pnode];
    const auto& entry = flat_.entries[static_cast<std::size_t>(tnode)];
    if (!node.labels.empty() &&
        std::find(node.labels.begin(), node.labels.end(), entry.label) == node.labels.end()) {
      return false;
    }
    for (const auto& [relation, target] : node.relations) {
      if (!satisfies(relation, target, tnode)) return false;
    }
    return true;
  }

  bool satisfies(TreePattern::Relation relation, std::size_t target, int tnode) {
    const auto& entry = flat_.entries[static_cast<std::size_t>(tnode)];
    switch (relation) {
      case TreePattern::Relation::kChild:
        for (int child : entry.children) {
          if (child >= 0 && matches(target, child)) return true;
        }
        return false;
      case TreePattern::Relation::kDescendant:
        for (int d = tnode + 1; d < entry.subtree_end; ++d) {
          if (matches(target, d)) return true;
        }
        return false;
      case TreePattern::Relation::kNextSibling: {
        if (entry.parent < 0) return false;
        const auto& siblings = flat_.entries[static_cast<std::size_t>(entry.parent)].children;
        const std::size_t next = entry.position + 1;
        return next < siblings.size() && siblings[next] >= 0 && matches(target, siblings[next]);
      }
    }
    return false;
  }

  const std::vector<TreePattern::Node>& nodes_;
  const FlatTree& flat_;
  std::vector<signed char> memo_;
};

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && is_space(s[b])) ++b;
  while (e > b && is_space(s[e - 1])) --e;
  return std::string(s.substr(b, e - b));
}

}  // namespace

TreePattern TreePattern::compile(std::string_view expr) {
  TreePattern pattern;
  pattern.source_ = std::string(expr);
  pattern.root_ = PatternParser(expr, pattern.nodes_).parse();
  return pattern;
}

std::size_t TreePattern::count_matches(const ParseTree& tree, bool strip_suffixes) const {
  if (tree.is_leaf()) return 0;
  const FlatTree flat(tree, strip_suffixes);
  Matcher matcher(nodes_, flat);
  std::size_t count = 0;
  for (std::size_t i = 0; i < flat.entries.size(); ++i) {
    if (matcher.matches(root_, static_cast<int>(i))) ++count;
  }
  return count;
}

std::vector<GrammarPattern> read_grammar_patterns(std::istream& in, const std::string& source) {
  std::vector<GrammarPattern> patterns;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string content = trim(line);
    if (content.empty() || content.front() == '#') continue;
    const auto tab1 = content.find('\t');
    const auto tab2 = tab1 == std::string::npos ? tab1 : content.find('\t', tab1 + 1);
    if (tab2 == std::string::npos) {
      throw SchemaError(source, line_no, "expected id<TAB>grade<TAB>expr");
    }
    const std::string id = trim(content.substr(0, tab1));
    const std::string grade_text = trim(content.substr(tab1 + 1, tab2 - tab1 - 1));
    int grade = 0;
    const auto [ptr, ec] =
        std::from_chars(grade_text.data(), grade_text.data() + grade_text.size(), grade);
    if (ec != std::errc() || ptr != grade_text.data() + grade_text.size() || grade < 1 ||
        grade > 6) {
      throw SchemaError(source, line_no, "grade must be an integer in 1..6, got '" + grade_text + "'");
    }
    try {
      patterns.push_back({id, grade, TreePattern::compile(trim(content.substr(tab2 + 1)))});
    } catch (const PatternSyntaxError& e) {
      throw SchemaError(source, line_no, e.what());
    }
  }
  return patterns;
}

std::vector<GrammarPattern> load_grammar_patterns(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw LoadError(path.string(), "cannot open pattern file");
  return read_grammar_patterns(in, path.string());
}

std::array<double, 6> grammar_features(std::span<const ParseTree> trees,
                                       std::span<const GrammarPattern> patterns,
                                       std::size_t sentences, std::size_t tokens,
                                       GrammarNormalization normalization, bool strip_suffixes) {
  if (trees.size() != sentences) {
    throw AnnotationMismatch("tree sidecar has " + std::to_string(trees.size()) +
                             " trees for " + std::to_string(sentences) + " sentences");
  }
  std::array<double, 6> counts{};
  for (const auto& tree : trees) {
    for (const auto& p : patterns) {
      counts[static_cast<std::size_t>(p.grade - 1)] +=
          static_cast<double>(p.pattern.count_matches(tree, strip_suffixes));
    }
  }
  double denominator = static_cast<double>(sentences);
  double scale = 1.0;
  if (normalization == GrammarNormalization::kPer100Words) {
    denominator = static_cast<double>(tokens);
    scale = 100.0;
  }
  if (denominator == 0.0) return {};
  for (auto& c : counts) c = c * scale / denominator;
  return counts;
}

}  // namespace readgrade::syntax
