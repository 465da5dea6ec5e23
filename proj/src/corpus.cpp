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

#include "readgrade/corpus.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <utility>

#include "json.hpp"
#include "readgrade/errors.hpp"

namespace readgrade {
namespace {

using nlohmann::json;

struct CodePoint {
  char32_t value;
  std::size_t length;
};

CodePoint decode_utf8(std::string_view text, std::size_t pos) {
  const auto b0 = static_cast<unsigned char>(text[pos]);
  auto cont = [&](std::size_t i) -> int {
    if (pos + i >= text.size()) return -1;
    const auto b = static_cast<unsigned char>(text[pos + i]);
    return (b & 0xC0) == 0x80 ? (b & 0x3F) : -1;
  };
  if (b0 < 0x80) return {b0, 1};
  if ((b0 & 0xE0) == 0xC0) {
    const int c1 = cont(1);
    if (c1 >= 0) return {static_cast<char32_t>(((b0 & 0x1F) << 6) | c1), 2};
  } else if ((b0 & 0xF0) == 0xE0) {
    const int c1 = cont(1), c2 = cont(2);
    if (c1 >= 0 && c2 >= 0)
      return {static_cast<char32_t>(((b0 & 0x0F) << 12) | (c1 << 6) | c2), 3};
  } else if ((b0 & 0xF8) == 0xF0) {
    const int c1 = cont(1), c2 = cont(2), c3 = cont(3);
    if (c1 >= 0 && c2 >= 0 && c3 >= 0)
      return {static_cast<char32_t>(((b0 & 0x07) << 18) | (c1 << 12) | (c2 << 6) | c3), 4};
  }
  return {0xFFFD, 1};
}

void encode_utf8(char32_t cp, std::string& out) {
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (cp >> 18));
    out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
}

bool is_letter(char32_t cp) {
  if ((cp >= 'a' && cp <= 'z') || (cp >= 'A' && cp <= 'Z')) return true;
  return cp >= 0xC0 && cp <= 0x24F && cp != 0xD7 && cp != 0xF7;
}
bool is_digit(char32_t cp) { return cp >= '0' && cp <= '9'; }
bool is_word_char(char32_t cp) { return is_letter(cp) || is_digit(cp); }
bool is_apostrophe(char32_t cp) { return cp == '\'' || cp == 0x2019; }
bool is_upper(char32_t cp) {
  return (cp >= 'A' && cp <= 'Z') || (cp >= 0xC0 && cp <= 0xDE && cp != 0xD7);
}
char32_t fold(char32_t cp) {
  if (cp >= 'A' && cp <= 'Z') return cp + 32;
  if (cp >= 0xC0 && cp <= 0xDE && cp != 0xD7) return cp + 32;
  return cp;
}

std::string case_fold(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (std::size_t pos = 0; pos < text.size();) {
    const CodePoint cp = decode_utf8(text, pos);
    encode_utf8(fold(cp.value), out);
    pos += cp.length;
  }
  return out;
}

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  auto space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
  while (b < e && space(s[b])) ++b;
  while (e > b && space(s[e - 1])) --e;
  return std::string(s.substr(b, e - b));
}

struct Span {
  std::size_t start;
  std::size_t end;
};

std::vector<Span> scan_words(std::string_view text) {
  std::vector<Span> spans;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const CodePoint cp = decode_utf8(text, pos);
    if (!is_word_char(cp.value)) {
      pos += cp.length;
      continue;
    }
    const std::size_t start = pos;
    char32_t prev = cp.value;
    pos += cp.length;
    while (pos < text.size()) {
      const CodePoint next = decode_utf8(text, pos);
      if (is_word_char(next.value)) {
        prev = next.value;
        pos += next.length;
        continue;
      }
      // Internal apostrophes join letters ("don't"); '.' and ',' join digits
      // ("3.5", "1,000").
      if (pos + next.length < text.size()) {
        const CodePoint after = decode_utf8(text, pos + next.length);
        const bool joins_letters =
            is_apostrophe(next.value) && is_letter(prev) && is_letter(after.value);
        const bool joins_digits =
            (next.value == '.' || next.value == ',') && is_digit(prev) && is_digit(after.value);
        if (joins_letters || joins_digits) {
          prev = after.value;
          pos += next.length + after.length;
          continue;
        }
      }
      break;
    }
    spans.push_back({start, pos});
  }
  return spans;
}

bool has_blank_line(std::string_view gap) {
  bool seen_newline = false;
  for (char c : gap) {
    if (c == '\n') {
      if (seen_newline) return true;
      seen_newline = true;
    } else if (c != ' ' && c != '\t' && c != '\r') {
      seen_newline = false;
    }
  }
  return false;
}

bool is_space_char(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }

}  // namespace

TokenizerConfig TokenizerConfig::defaults() {
  const auto dir = default_data_dir();
  TokenizerConfig config;
  config.stop_words = load_word_list(dir / "stopwords.txt");
  config.pronouns = load_word_list(dir / "pronouns.txt");
  config.abbreviations = load_word_list(dir / "abbreviations.txt");
  return config;
}

std::unordered_set<std::string> load_word_list(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw LoadError(path.string(), "cannot open word list");
  std::unordered_set<std::string> words;
  std::string line;
  while (std::getline(in, line)) {
    const std::string entry = trim(line);
    if (entry.empty() || entry.front() == '#') continue;
    words.insert(case_fold(entry));
  }
  return words;
}

std::filesystem::path default_data_dir() {
  if (const char* env = std::getenv("READGRADE_DATA")) return env;
  return READGRADE_DATA_DIR;
}

Document::Document(std::string id, std::vector<Sentence> sentences)
    : id_(std::move(id)), sentences_(std::move(sentences)) {
  for (const auto& sentence : sentences_) {
    token_count_ += sentence.tokens.size();
    for (const auto& token : sentence.tokens) {
      distinct_words_.insert(token.normalized);
      if (!token.is_stop_word) distinct_content_.insert(token.normalized);
    }
  }
}

void Document::attach_trees(std::vector<syntax::ParseTree> trees) {
  if (trees.size() == sentences_.size()) {
    for (std::size_t i = 0; i < trees.size(); ++i) {
      std::set<std::string> proper;
      std::vector<const syntax::ParseTree*> stack = {&trees[i]};
      while (!stack.empty()) {
        const syntax::ParseTree* node = stack.back();
        stack.pop_back();
        if (node->is_preterminal()) {
          const auto label = syntax::base_label(node->label);
          if (label == "NNP" || label == "NNPS") {
            proper.insert(case_fold(*node->children[0].terminal));
          }
          continue;
        }
        for (const auto& child : node->children) stack.push_back(&child);
      }
      for (auto& token : sentences_[i].tokens) {
        token.is_proper_noun = !token.is_pronoun && proper.count(token.normalized) > 0;
      }
    }
  }
  trees_ = std::move(trees);
}

std::string Document::serialize() const {
  json out;
  out["id"] = id_;
  out["grade"] = grade_ ? json(*grade_) : json(nullptr);
  json sentences = json::array();
  for (const auto& sentence : sentences_) {
    json tokens = json::array();
    for (const auto& t : sentence.tokens) {
      tokens.push_back({t.surface, t.normalized, t.is_stop_word, t.is_pronoun, t.is_proper_noun,
                        t.char_start, t.char_end});
    }
    sentences.push_back(std::move(tokens));
  }
  out["sentences"] = std::move(sentences);
  return out.dump();
}

Document tokenize(std::string_view raw_text, const TokenizerConfig& config, std::string id) {
  const std::vector<Span> words = scan_words(raw_text);
  if (words.empty()) throw EmptyDocument("document '" + id + "' has no word tokens");

  auto ends_sentence = [&](std::size_t k) {
    const Span& cur = words[k];
    const Span& next = words[k + 1];
    const std::string_view gap = raw_text.substr(cur.end, next.start - cur.end);
    if (has_blank_line(gap)) return true;
    const auto terminal = gap.find_first_of(".!?");
    if (terminal == std::string_view::npos) return false;
    bool space_after = false;
    for (std::size_t i = terminal + 1; i < gap.size(); ++i) space_after |= is_space_char(gap[i]);
    if (!space_after) return false;
    if (!is_upper(decode_utf8(raw_text, next.start).value)) return false;
    const bool only_period = gap.find_first_of("!?") == std::string_view::npos;
    if (terminal == 0 && only_period && !config.abbreviations.empty()) {
      // Extend back over dotted sequences such as "e.g".
      std::size_t first = k;
      while (first > 0 && raw_text.substr(words[first - 1].end,
                                          words[first].start - words[first - 1].end) == ".") {
        --first;
      }
      const std::string candidate =
          case_fold(raw_text.substr(words[first].start, cur.end - words[first].start)) + ".";
      if (config.abbreviations.count(candidate) > 0) return false;
    }
    return true;
  };

  std::vector<Sentence> sentences;
  Sentence current;
  for (std::size_t k = 0; k < words.size(); ++k) {
    Token token;
    token.char_start = words[k].start;
    token.char_end = words[k].end;
    token.surface = std::string(raw_text.substr(words[k].start, words[k].end - words[k].start));
    token.normalized = case_fold(token.surface);
    token.is_stop_word = config.stop_words.count(token.normalized) > 0;
    token.is_pronoun = config.pronouns.count(token.normalized) > 0;
    const bool sentence_initial = current.tokens.empty();
    token.is_proper_noun = !sentence_initial && !token.is_pronoun &&
                           is_upper(decode_utf8(token.surface, 0).value);
    current.tokens.push_back(std::move(token));
    if (k + 1 == words.size() || ends_sentence(k)) {
      current.index = sentences.size();
      sentences.push_back(std::move(current));
      current = Sentence{};
    }
  }

  // A capitalized sentence-initial word is taken as a name when the text
  // never uses it in lower case.
  std::set<std::string> lowercase_uses;
  for (const auto& sentence : sentences) {
    for (const auto& token : sentence.tokens) {
      if (!is_upper(decode_utf8(token.surface, 0).value)) lowercase_uses.insert(token.normalized);
    }
  }
  for (auto& sentence : sentences) {
    Token& first = sentence.tokens.front();
    first.is_proper_noun = !first.is_pronoun && !first.is_stop_word &&
                           is_letter(decode_utf8(first.surface, 0).value) &&
                           is_upper(decode_utf8(first.surface, 0).value) &&
                           lowercase_uses.count(first.normalized) == 0;
  }
  return Document(std::move(id), std::move(sentences));
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw LoadError(path.string(), "cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw LoadError(path.string(), "read failed");
  return buffer.str();
}

CorpusManifest load_manifest(const std::filesystem::path& path) {
  const std::string text = read_text_file(path);
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ManifestError(path.string() + ": invalid JSON: " + e.what());
  }
  const auto base = path.parent_path();
  auto resolve = [&](const std::string& p) {
    std::filesystem::path candidate(p);
    return candidate.is_absolute() ? candidate : base / candidate;
  };

  json documents;
  CorpusManifest manifest;
  if (root.is_array()) {
    documents = root;
  } else if (root.is_object() && root.contains("documents") && root["documents"].is_array()) {
    documents = root["documents"];
    if (root.contains("resources")) {
      if (!root["resources"].is_object()) throw ManifestError("'resources' must be an object");
      for (const auto& [key, value] : root["resources"].items()) {
        if (!value.is_string()) throw ManifestError("resource '" + key + "' must be a path");
        manifest.resources[key] = resolve(value.get<std::string>());
      }
    }
  } else {
    throw ManifestError(path.string() + ": expected an array or {documents, resources}");
  }

  for (std::size_t i = 0; i < documents.size(); ++i) {
    const auto& item = documents[i];
    const std::string where = path.string() + ": entry " + std::to_string(i);
    if (!item.is_object() || !item.contains("path") || !item["path"].is_string()) {
      throw ManifestError(where + ": missing 'path'");
    }
    if (!item.contains("grade") || !item["grade"].is_number_integer()) {
      throw ManifestError(where + ": 'grade' must be an integer");
    }
    ManifestEntry entry;
    entry.document = resolve(item["path"].get<std::string>());
    entry.grade = item["grade"].get<int>();
    if (item.contains("tree") && !item["tree"].is_null()) {
      entry.tree = resolve(item["tree"].get<std::string>());
    }
    if (item.contains("coref") && !item["coref"].is_null()) {
      entry.coref = resolve(item["coref"].get<std::string>());
    }
    entry.id = item.contains("id") ? item["id"].get<std::string>()
                                   : entry.document.stem().string();
    manifest.entries.push_back(std::move(entry));
  }
  return manifest;
}

std::vector<Document> load_corpus(const CorpusManifest& manifest, const TokenizerConfig& config) {
  std::vector<Document> docs;
  docs.reserve(manifest.entries.size());
  for (const auto& entry : manifest.entries) {
    const std::string text = read_text_file(entry.document);
    Document doc;
    try {
      doc = tokenize(text, config, entry.id);
    } catch (const EmptyDocument&) {
      throw EmptyDocument("document '" + entry.id + "' (" + entry.document.string() +
                          ") has no word tokens");
    }
    doc.set_grade(entry.grade);
    if (entry.tree) {
      const std::string trees = read_text_file(*entry.tree);
      try {
        doc.attach_trees(syntax::parse_tree_lines(trees));
      } catch (const TreeSyntaxError& e) {
        throw LoadError(entry.tree->string(), "document '" + entry.id + "': " + e.what());
      }
    } else {
      doc.mark_missing("tree");
    }
    if (entry.coref) {
      doc.attach_coref_sidecar(read_text_file(*entry.coref));
    } else {
      doc.mark_missing("coref");
    }
    docs.push_back(std::move(doc));
  }
  return docs;
}

}  // namespace readgrade
