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

#include "readgrade/features.hpp"

#include <atomic>
#include <charconv>
#include <cstdio>
#include <exception>
#include <fstream>
#include <sstream>
#include <thread>
#include <unordered_map>

#include "readgrade/errors.hpp"

namespace readgrade::features {
namespace {

std::vector<FeatureDescriptor> standard_descriptors() {
  std::vector<FeatureDescriptor> d;
  for (const char* name : {"word_number", "sentence_length", "syllables"}) {
    d.push_back({name, Category::kBaseline, Requirement::kNone});
  }
  for (const auto& level : lexicon::gept_levels()) {
    d.push_back({level, Category::kAoa, Requirement::kGept});
  }
  for (const auto& level : lexicon::vq_levels()) {
    d.push_back({level, Category::kAoa, Requirement::kVq});
  }
  d.push_back({"bnc_frequency", Category::kFrequency, Requirement::kCorpusFrequency});
  d.push_back({"google_search_count", Category::kFrequency, Requirement::kSearchCounts});
  for (const char* name : {"tree_height", "np", "vp", "sbar", "pp"}) {
    d.push_back({name, Category::kParsing, Requirement::kTrees});
  }
  for (int k = 1; k <= 6; ++k) {
    d.push_back({"grammar" + std::to_string(k), Category::kGrammar, Requirement::kTrees});
  }
  for (int k = 1; k <= 7; ++k) {
    d.push_back({"wordnet" + std::to_string(k), Category::kSemantic, Requirement::kSynsets});
  }
  for (const char* name :
       {"pronoun", "proper_noun", "antecedent", "corefer_chain", "corefer_distance"}) {
    d.push_back({name, Category::kCoreference, Requirement::kNone});
  }
  return d;
}

std::string fnv1a_hex(const std::vector<FeatureDescriptor>& descriptors) {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&](unsigned char c) {
    h ^= c;
    h *= 1099511628211ULL;
  };
  for (const auto& d : descriptors) {
    for (char c : d.name) mix(static_cast<unsigned char>(c));
    mix('\n');
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::vector<std::string> sentence_words(const Sentence& sentence) {
  std::vector<std::string> words;
  for (const auto& t : sentence.tokens) words.push_back(t.surface);
  return words;
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::vector<std::string> split_csv_line(std::string_view line) {
  std::vector<std::string> fields;
  std::string field;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        field += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        field += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(field));
      field.clear();
    } else if (c != '\r') {
      field += c;
    }
  }
  fields.push_back(std::move(field));
  return fields;
}

double parse_double(const std::string& text, std::size_t row) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw IoError("feature table row " + std::to_string(row) + ": bad number '" + text + "'");
  }
  return value;
}

}  // namespace

std::string_view category_name(Category category) {
  switch (category) {
    case Category::kBaseline:
      return "baseline";
    case Category::kAoa:
      return "aoa";
    case Category::kFrequency:
      return "frequency";
    case Category::kParsing:
      return "parsing";
    case Category::kGrammar:
      return "grammar";
    case Category::kSemantic:
      return "semantic";
    case Category::kCoreference:
      return "coreference";
  }
  return "unknown";
}

FeatureRegistry::FeatureRegistry(std::vector<FeatureDescriptor> descriptors)
    : descriptors_(std::move(descriptors)) {
  for (std::size_t i = 0; i < descriptors_.size(); ++i) {
    if (!index_.emplace(descriptors_[i].name, i).second) {
      throw ConfigError("duplicate feature name '" + descriptors_[i].name + "'");
    }
  }
  hash_ = fnv1a_hex(descriptors_);
}

const FeatureRegistry& FeatureRegistry::standard() {
  static const FeatureRegistry registry(standard_descriptors());
  return registry;
}

std::optional<std::size_t> FeatureRegistry::index_of(std::string_view name) const {
  const auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::string> FeatureRegistry::names() const {
  std::vector<std::string> out;
  for (const auto& d : descriptors_) out.push_back(d.name);
  return out;
}

std::vector<std::string> FeatureRegistry::names_in(Category category) const {
  std::vector<std::string> out;
  for (const auto& d : descriptors_) {
    if (d.category == category) out.push_back(d.name);
  }
  return out;
}

Resources load_resources(const std::map<std::string, std::filesystem::path>& paths) {
  auto path_for = [&](const std::string& key) -> std::optional<std::filesystem::path> {
    const auto it = paths.find(key);
    if (it == paths.end()) return std::nullopt;
    return it->second;
  };
  const auto data = default_data_dir();
  Resources r;
  r.tokenizer.stop_words = load_word_list(path_for("stopwords").value_or(data / "stopwords.txt"));
  r.tokenizer.pronouns = load_word_list(path_for("pronouns").value_or(data / "pronouns.txt"));
  r.tokenizer.abbreviations =
      load_word_list(path_for("abbreviations").value_or(data / "abbreviations.txt"));
  r.grammar_patterns = syntax::load_grammar_patterns(
      path_for("grammar_patterns").value_or(data / "grammar_patterns.tsv"));
  if (auto p = path_for("pronunciations")) r.pronunciations = PronunciationDict::load(*p);
  if (auto p = path_for("lemmas")) r.lemmas = lexicon::LemmaTable::load(*p);
  if (auto p = path_for("gept")) {
    auto loaded = lexicon::load_graded_lexicon(*p, "gept", lexicon::gept_levels());
    r.lexicon_duplicate_warnings += loaded.duplicate_warnings;
    r.gept = std::move(loaded.lexicon);
  }
  if (auto p = path_for("vq")) {
    auto loaded = lexicon::load_graded_lexicon(*p, "vq", lexicon::vq_levels());
    r.lexicon_duplicate_warnings += loaded.duplicate_warnings;
    r.vq = std::move(loaded.lexicon);
  }
  if (auto p = path_for("bnc")) r.corpus_frequency = lexicon::load_frequency_table(*p);
  if (auto p = path_for("search_counts")) r.search_counts = lexicon::load_frequency_table(*p);
  if (auto p = path_for("synsets")) r.synsets = lexicon::load_synset_table(*p);
  return r;
}

FeatureVector featurize(const Document& doc, const Resources& resources,
                        const FeaturizeOptions& options, const FeatureRegistry& registry) {
  if (doc.token_count() == 0) throw EmptyDocument("document '" + doc.id() + "' is empty");
  FeatureVector out;
  out.doc_id = doc.id();
  if (doc.grade()) out.grade = static_cast<double>(*doc.grade());
  std::unordered_map<std::string, double> computed;
  const lexicon::LemmaTable* lemmas = resources.lemmas ? &*resources.lemmas : nullptr;

  try {
    const auto base = baseline_features(
        doc, resources.pronunciations ? &*resources.pronunciations : nullptr, options.baseline);
    computed["word_number"] = base.word_number;
    computed["sentence_length"] = base.sentence_length;
    computed["syllables"] = base.syllables;

    if (resources.gept) {
      const auto p = lexicon::aoa_proportions(doc, *resources.gept, lemmas);
      for (std::size_t i = 0; i < p.size(); ++i) computed[resources.gept->levels()[i]] = p[i];
    }
    if (resources.vq) {
      const auto p = lexicon::aoa_proportions(doc, *resources.vq, lemmas);
      for (std::size_t i = 0; i < p.size(); ++i) computed[resources.vq->levels()[i]] = p[i];
    }
    if (resources.corpus_frequency) {
      computed["bnc_frequency"] =
          lexicon::corpus_frequency_feature(doc, *resources.corpus_frequency, lemmas);
    }
    if (resources.search_counts) {
      computed["google_search_count"] =
          lexicon::search_count_feature(doc, *resources.search_counts, lemmas);
    }

    std::vector<syntax::ParseTree> fallback;
    const std::vector<syntax::ParseTree>* trees = nullptr;
    if (doc.trees()) {
      trees = &*doc.trees();
    } else if (options.tree_fallback == TreeFallback::kFlat) {
      for (const auto& sentence : doc.sentences()) {
        const auto words = sentence_words(sentence);
        fallback.push_back(syntax::flat_tree(words));
      }
      trees = &fallback;
      out.fallback_trees = true;
    }
    if (trees != nullptr) {
      const auto parsing =
          syntax::parsing_features(*trees, doc.sentence_count(), options.strip_suffixes);
      computed["tree_height"] = parsing.tree_height;
      computed["np"] = parsing.np;
      computed["vp"] = parsing.vp;
      computed["sbar"] = parsing.sbar;
      computed["pp"] = parsing.pp;
      if (!resources.grammar_patterns.empty()) {
        const auto grammar = syntax::grammar_features(
            *trees, resources.grammar_patterns, doc.sentence_count(), doc.token_count(),
            options.grammar, options.strip_suffixes);
        for (std::size_t k = 0; k < grammar.size(); ++k) {
          computed["grammar" + std::to_string(k + 1)] = grammar[k];
        }
      }
    }

    if (resources.synsets) {
      const auto s = lexicon::semantic_proportions(doc, *resources.synsets, lemmas);
      for (std::size_t k = 0; k < s.size(); ++k) computed["wordnet" + std::to_string(k + 1)] = s[k];
    }

    std::vector<coref::CorefChain> chains;
    if (doc.coref_sidecar()) {
      chains = coref::parse_coref_sidecar(*doc.coref_sidecar(), doc);
    } else {
      chains = coref::heuristic_chains(doc);
      out.heuristic_coref = true;
    }
    const auto c = coref::coref_features(doc, chains, options.coref_counts);
    computed["pronoun"] = c.pronoun;
    computed["proper_noun"] = c.proper_noun;
    computed["antecedent"] = c.antecedent;
    computed["corefer_chain"] = c.corefer_chain;
    computed["corefer_distance"] = c.corefer_distance;
  } catch (const AnnotationMismatch& e) {
    throw AnnotationMismatch("document '" + doc.id() + "': " + e.what());
  }

  out.values.assign(registry.size(), 0.0);
  out.missing.assign(registry.size(), 1);
  for (std::size_t i = 0; i < registry.size(); ++i) {
    const auto it = computed.find(registry.at(i).name);
    if (it == computed.end()) continue;
    out.values[i] = it->second;
    out.missing[i] = 0;
  }
  return out;
}

std::vector<FeatureVector> featurize_all(const std::vector<Document>& docs,
                                         const Resources& resources,
                                         const FeaturizeOptions& options,
                                         const FeatureRegistry& registry, unsigned jobs) {
  std::vector<FeatureVector> out(docs.size());
  std::vector<std::exception_ptr> errors(docs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < docs.size(); i = next++) {
      try {
        out[i] = featurize(docs[i], resources, options, registry);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(docs.size())));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

std::string format_double(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, ptr);
}

std::string format_table(const std::vector<FeatureVector>& vectors,
                         const FeatureRegistry& registry) {
  std::string out = "id";
  for (const auto& d : registry.descriptors()) out += "," + d.name;
  out += ",grade\n";
  for (const auto& v : vectors) {
    if (v.values.size() != registry.size()) {
      throw ConfigError("feature vector '" + v.doc_id + "' does not match the registry");
    }
    out += csv_escape(v.doc_id);
    for (std::size_t i = 0; i < registry.size(); ++i) {
      out += ',';
      if (!v.is_missing(i)) out += format_double(v.values[i]);
    }
    out += ',';
    if (v.grade) out += format_double(*v.grade);
    out += '\n';
  }
  return out;
}

TableShape export_table(const std::vector<FeatureVector>& vectors,
                        const std::filesystem::path& path, const FeatureRegistry& registry) {
  const std::string text = format_table(vectors, registry);
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot write feature table '" + path.string() + "'");
  file << text;
  file.close();
  if (!file) throw IoError("write failed for '" + path.string() + "'");
  return {vectors.size(), registry.size() + 1};
}

std::vector<FeatureVector> parse_table(std::string_view csv, const FeatureRegistry& registry) {
  std::vector<FeatureVector> out;
  std::size_t start = 0;
  std::size_t row = 0;
  bool header = true;
  while (start < csv.size()) {
    std::size_t end = csv.find('\n', start);
    if (end == std::string_view::npos) end = csv.size();
    const auto line = csv.substr(start, end - start);
    start = end + 1;
    if (line.empty()) continue;
    const auto fields = split_csv_line(line);
    if (fields.size() != registry.size() + 2) {
      throw IoError("feature table row " + std::to_string(row) + " has " +
                    std::to_string(fields.size()) + " fields, expected " +
                    std::to_string(registry.size() + 2));
    }
    if (header) {
      for (std::size_t i = 0; i < registry.size(); ++i) {
        if (fields[i + 1] != registry.at(i).name) {
          throw IoError("feature table column " + std::to_string(i + 1) + " is '" +
                        fields[i + 1] + "', expected '" + registry.at(i).name + "'");
        }
      }
      header = false;
      continue;
    }
    ++row;
    FeatureVector v;
    v.doc_id = fields[0];
    v.values.assign(registry.size(), 0.0);
    v.missing.assign(registry.size(), 1);
    for (std::size_t i = 0; i < registry.size(); ++i) {
      const auto& cell = fields[i + 1];
      if (cell.empty()) continue;
      v.values[i] = parse_double(cell, row);
      v.missing[i] = 0;
    }
    const auto& grade = fields.back();
    if (!grade.empty()) v.grade = parse_double(grade, row);
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<FeatureVector> import_table(const std::filesystem::path& path,
                                        const FeatureRegistry& registry) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read feature table '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_table(buffer.str(), registry);
}

}  // namespace readgrade::features
