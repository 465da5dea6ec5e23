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

#include "readgrade/coref.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "json.hpp"
#include "readgrade/errors.hpp"

namespace readgrade::coref {
namespace {

using nlohmann::json;

constexpr std::size_t kPronounWindow = 3;

bool third_person(std::string_view word) {
  static const char* const kWords[] = {"he",   "him",  "his",    "himself",   "she",
                                        "her", "hers", "herself", "it",       "its",
                                        "itself", "they", "them",  "their",   "theirs",
                                        "themselves"};
  return std::any_of(std::begin(kWords), std::end(kWords),
                     [&](const char* w) { return word == w; });
}

bool before(const Mention& a, const Mention& b) {
  return std::tie(a.sentence_index, a.token_start, a.token_end) <
         std::tie(b.sentence_index, b.token_start, b.token_end);
}

MentionKind parse_kind(const std::string& kind, std::size_t chain) {
  if (kind == "pronoun") return MentionKind::kPronoun;
  if (kind == "proper" || kind == "properNoun" || kind == "proper_noun") {
    return MentionKind::kProperNoun;
  }
  if (kind == "nominal") return MentionKind::kNominal;
  throw AnnotationMismatch("chain " + std::to_string(chain) + ": unknown mention kind '" + kind +
                           "'");
}

}  // namespace

std::vector<CorefChain> parse_coref_sidecar(std::string_view json_text, const Document& doc) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw AnnotationMismatch("coref sidecar for '" + doc.id() + "' is not valid JSON: " + e.what());
  }
  if (!root.is_array()) throw AnnotationMismatch("coref sidecar must be an array of chains");

  std::vector<CorefChain> chains;
  for (std::size_t c = 0; c < root.size(); ++c) {
    const auto& items = root[c];
    if (!items.is_array() || items.empty()) {
      throw AnnotationMismatch("chain " + std::to_string(c) + " is empty or not an array");
    }
    std::vector<Mention> mentions;
    for (const auto& item : items) {
      Mention m;
      try {
        m.sentence_index = item.at("sentence").get<std::size_t>();
        m.token_start = item.at("start").get<std::size_t>();
        m.token_end = item.at("end").get<std::size_t>();
        m.kind = parse_kind(item.value("kind", std::string("nominal")), c);
      } catch (const json::exception& e) {
        throw AnnotationMismatch("chain " + std::to_string(c) + ": malformed mention: " + e.what());
      }
      if (m.sentence_index >= doc.sentence_count() || m.token_start > m.token_end ||
          m.token_end >= doc.sentences()[m.sentence_index].tokens.size()) {
        throw AnnotationMismatch("chain " + std::to_string(c) + ": mention span sentence " +
                                 std::to_string(m.sentence_index) + " tokens " +
                                 std::to_string(m.token_start) + ".." +
                                 std::to_string(m.token_end) + " is outside document '" +
                                 doc.id() + "'");
      }
      mentions.push_back(m);
    }
    std::stable_sort(mentions.begin(), mentions.end(), before);
    CorefChain chain;
    chain.antecedent = mentions.front();
    chain.anaphora.assign(mentions.begin() + 1, mentions.end());
    chains.push_back(std::move(chain));
  }
  return chains;
}

std::vector<CorefChain> load_coref_sidecar(const std::filesystem::path& path,
                                           const Document& doc) {
  return parse_coref_sidecar(read_text_file(path), doc);
}

std::vector<CorefChain> heuristic_chains(const Document& doc) {
  struct Building {
    std::vector<Mention> mentions;
    Mention last_proper;
  };
  std::vector<Building> building;
  std::map<std::string, std::size_t> by_name;

  for (const auto& sentence : doc.sentences()) {
    for (std::size_t t = 0; t < sentence.tokens.size(); ++t) {
      const Token& token = sentence.tokens[t];
      const Mention here{sentence.index, t, t,
                         token.is_proper_noun ? MentionKind::kProperNoun : MentionKind::kPronoun};
      if (token.is_proper_noun) {
        auto [it, inserted] = by_name.emplace(token.normalized, building.size());
        if (inserted) building.push_back({});
        building[it->second].mentions.push_back(here);
        building[it->second].last_proper = here;
      } else if (token.is_pronoun && third_person(token.normalized)) {
        Building* nearest = nullptr;
        for (auto& chain : building) {
          if (sentence.index - chain.last_proper.sentence_index > kPronounWindow) continue;
          if (nearest == nullptr || before(nearest->last_proper, chain.last_proper)) {
            nearest = &chain;
          }
        }
        if (nearest != nullptr) nearest->mentions.push_back(here);
      }
    }
  }

  std::vector<CorefChain> chains;
  for (auto& b : building) {
    if (b.mentions.size() < 2) continue;
    CorefChain chain;
    chain.antecedent = b.mentions.front();
    chain.anaphora.assign(b.mentions.begin() + 1, b.mentions.end());
    chain.heuristic = true;
    chains.push_back(std::move(chain));
  }
  std::sort(chains.begin(), chains.end(), [](const CorefChain& a, const CorefChain& b) {
    return before(a.antecedent, b.antecedent);
  });
  return chains;
}

CorefFeatures coref_features(const Document& doc, const std::vector<CorefChain>& chains,
                             CountNormalization counts) {
  CorefFeatures f;
  if (doc.token_count() == 0) throw EmptyDocument("document '" + doc.id() + "' is empty");
  std::size_t pronouns = 0;
  std::size_t proper = 0;
  for (const auto& sentence : doc.sentences()) {
    for (const auto& token : sentence.tokens) {
      pronouns += token.is_pronoun ? 1 : 0;
      proper += token.is_proper_noun ? 1 : 0;
    }
  }
  const double divisor =
      counts == CountNormalization::kPerSentence ? static_cast<double>(doc.sentence_count()) : 1.0;
  f.pronoun = static_cast<double>(pronouns) / divisor;
  f.proper_noun = static_cast<double>(proper) / divisor;
  f.antecedent = static_cast<double>(chains.size());
  if (chains.empty()) return f;

  std::size_t anaphora = 0;
  double distance = 0.0;
  for (const auto& chain : chains) {
    anaphora += chain.anaphora.size();
    for (const auto& m : chain.anaphora) {
      distance += static_cast<double>(m.sentence_index - chain.antecedent.sentence_index);
    }
  }
  f.corefer_chain = static_cast<double>(anaphora) / static_cast<double>(chains.size());
  f.corefer_distance = anaphora == 0 ? 0.0 : distance / static_cast<double>(anaphora);
  return f;
}

}  // namespace readgrade::coref
