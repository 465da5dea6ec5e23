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

#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "readgrade/classic.hpp"
#include "readgrade/coref.hpp"
#include "readgrade/errors.hpp"
#include "readgrade/features.hpp"
#include "readgrade/model_io.hpp"
#include "readgrade/report.hpp"
#include "readgrade/scoring.hpp"
#include "readgrade/service.hpp"
#include "readgrade/synth.hpp"

namespace readgrade::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

struct Inputs {
  std::vector<Document> docs;
  features::Resources resources;
};

std::map<std::string, fs::path> resource_paths(const RunConfig& config,
                                               const std::map<std::string, fs::path>& base) {
  auto merged = base;
  for (const auto& [key, path] : config.resources) merged[key] = path;
  return merged;
}

Inputs load_inputs(const RunConfig& config) {
  if (config.manifest.empty()) throw ConfigError("--manifest is required");
  const CorpusManifest manifest = load_manifest(config.manifest);
  Inputs in;
  in.resources = features::load_resources(resource_paths(config, manifest.resources));
  in.docs = load_corpus(manifest, in.resources.tokenizer);
  return in;
}

features::FeaturizeOptions featurize_options(const RunConfig& config) {
  features::FeaturizeOptions o;
  o.baseline.sentence_length_log = config.sentence_length_log;
  o.grammar = config.grammar_normalization == "per-100-words"
                  ? syntax::GrammarNormalization::kPer100Words
                  : syntax::GrammarNormalization::kPerSentence;
  o.coref_counts = config.coref_counts == "raw" ? coref::CountNormalization::kRaw
                                                : coref::CountNormalization::kPerSentence;
  o.tree_fallback = config.tree_fallback == "flat" ? features::TreeFallback::kFlat
                                                   : features::TreeFallback::kNone;
  return o;
}

model::CvOptions cv_options(const RunConfig& config) {
  return {config.folds, config.reps, config.seed};
}

model::SelectionOptions selection_options(const RunConfig& config) {
  model::SelectionOptions o;
  o.alpha_enter = config.alpha_enter;
  return o;
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write '" + path.string() + "'");
  out << text;
  if (!out) throw IoError("write failed for '" + path.string() + "'");
}

void prepare_out(const RunConfig& config) {
  fs::create_directories(config.out);
  write_text(config.out / "run_config.json", to_json(config));
}

std::string provenance(const std::vector<Document>& docs,
                       const std::vector<features::FeatureVector>& vectors,
                       const features::Resources& resources) {
  const auto& registry = features::FeatureRegistry::standard();
  const double n = static_cast<double>(std::max<std::size_t>(docs.size(), 1));
  std::size_t no_tree = 0, no_coref = 0, heuristic = 0, fallback = 0;
  ordered_json per_doc = ordered_json::array();
  for (std::size_t i = 0; i < docs.size(); ++i) {
    const auto& missing = docs[i].missing_annotations();
    no_tree += missing.count("tree");
    no_coref += missing.count("coref");
    heuristic += vectors[i].heuristic_coref ? 1 : 0;
    fallback += vectors[i].fallback_trees ? 1 : 0;
    if (!missing.empty()) {
      per_doc.push_back({{"id", docs[i].id()},
                         {"missing", std::vector<std::string>(missing.begin(), missing.end())}});
    }
  }
  ordered_json masked = ordered_json::object();
  for (std::size_t f = 0; f < registry.size(); ++f) {
    std::size_t count = 0;
    for (const auto& v : vectors) count += v.is_missing(f) ? 1 : 0;
    if (count > 0) masked[registry.at(f).name] = count;
  }
  ordered_json j = {{"documents", docs.size()},
                    {"registryHash", registry.hash()},
                    {"missingTreeFraction", static_cast<double>(no_tree) / n},
                    {"missingCorefFraction", static_cast<double>(no_coref) / n},
                    {"heuristicCorefFraction", static_cast<double>(heuristic) / n},
                    {"fallbackTreeFraction", static_cast<double>(fallback) / n},
                    {"lexiconDuplicateWarnings", resources.lexicon_duplicate_warnings},
                    {"maskedFeatureCounts", masked},
                    {"documentsMissingAnnotations", per_doc}};
  return j.dump(2) + "\n";
}

std::vector<features::FeatureVector> rows_for(const RunConfig& config) {
  if (!config.features.empty()) return features::import_table(config.features);
  const Inputs in = load_inputs(config);
  return features::featurize_all(in.docs, in.resources, featurize_options(config),
                                 features::FeatureRegistry::standard(), config.jobs);
}

std::vector<model::ClassicScores> classic_for(const Inputs& in) {
  std::vector<model::ClassicScores> out;
  const PronunciationDict* dict = in.resources.pronunciations ? &*in.resources.pronunciations : nullptr;
  for (const auto& doc : in.docs) out.push_back(model::classic_formulas(doc, dict));
  return out;
}

template <typename T>
void set_if(const ordered_json& j, const char* key, T& target) {
  if (j.contains(key) && !j[key].is_null()) target = j[key].get<T>();
}

}  // namespace

void validate(const RunConfig& c) {
  if (c.folds < 2) throw ConfigError("--folds must be at least 2");
  if (c.reps < 1) throw ConfigError("--reps must be at least 1");
  if (!(c.alpha_enter > 0.0 && c.alpha_enter < 1.0)) throw ConfigError("--alpha-enter must be in (0, 1)");
  if (c.jobs < 1) throw ConfigError("--jobs must be at least 1");
  if (c.grammar_normalization != "per-sentence" && c.grammar_normalization != "per-100-words") {
    throw ConfigError("grammar normalization must be per-sentence or per-100-words");
  }
  if (c.coref_counts != "per-sentence" && c.coref_counts != "raw") {
    throw ConfigError("coref counts must be per-sentence or raw");
  }
  if (c.tree_fallback != "none" && c.tree_fallback != "flat") {
    throw ConfigError("tree fallback must be none or flat");
  }
  if (c.port < 0 || c.port > 65535) throw ConfigError("--port out of range");
  if (c.synth_grades < 2 || c.synth_docs_per_grade < 1) throw ConfigError("bad synthetic corpus size");
}

std::string to_json(const RunConfig& c) {
  ordered_json resources = ordered_json::object();
  for (const auto& [key, path] : c.resources) resources[key] = path.string();
  ordered_json j = {{"manifest", c.manifest.string()},
                    {"out", c.out.string()},
                    {"features", c.features.string()},
                    {"resources", resources},
                    {"seed", c.seed},
                    {"folds", c.folds},
                    {"reps", c.reps},
                    {"alphaEnter", c.alpha_enter},
                    {"jobs", c.jobs},
                    {"sentenceLengthLog", c.sentence_length_log},
                    {"grammarNormalization", c.grammar_normalization},
                    {"corefCounts", c.coref_counts},
                    {"treeFallback", c.tree_fallback}};
  return j.dump(2) + "\n";
}

void apply_config_file(RunConfig& c, const fs::path& path) {
  ordered_json j;
  try {
    j = ordered_json::parse(read_text_file(path));
  } catch (const ordered_json::exception& e) {
    throw ConfigError("config file '" + path.string() + "': " + e.what());
  }
  if (!j.is_object()) throw ConfigError("config file must hold a JSON object");
  try {
    if (j.contains("manifest")) c.manifest = j["manifest"].get<std::string>();
    if (j.contains("out")) c.out = j["out"].get<std::string>();
    if (j.contains("features")) c.features = j["features"].get<std::string>();
    if (j.contains("model")) c.model = j["model"].get<std::string>();
    if (j.contains("resources")) {
      for (const auto& [key, value] : j["resources"].items()) c.resources[key] = value.get<std::string>();
    }
    set_if(j, "seed", c.seed);
    set_if(j, "folds", c.folds);
    set_if(j, "reps", c.reps);
    set_if(j, "alphaEnter", c.alpha_enter);
    set_if(j, "jobs", c.jobs);
    set_if(j, "sentenceLengthLog", c.sentence_length_log);
    set_if(j, "grammarNormalization", c.grammar_normalization);
    set_if(j, "corefCounts", c.coref_counts);
    set_if(j, "treeFallback", c.tree_fallback);
    set_if(j, "host", c.host);
    set_if(j, "port", c.port);
    set_if(j, "parserCommand", c.parser_command);
    set_if(j, "maxChars", c.max_chars);
  } catch (const ordered_json::exception& e) {
    throw ConfigError("config file '" + path.string() + "': " + e.what());
  }
}

int cmd_featurize(const RunConfig& config) {
  validate(config);
  const Inputs in = load_inputs(config);
  const auto vectors = features::featurize_all(in.docs, in.resources, featurize_options(config),
                                               features::FeatureRegistry::standard(), config.jobs);
  prepare_out(config);
  features::export_table(vectors, config.out / "features.csv");
  write_text(config.out / "provenance.json", provenance(in.docs, vectors, in.resources));
  return 0;
}

int cmd_select(const RunConfig& config) {
  validate(config);
  const auto rows = rows_for(config);
  model::RegressionModel m = model::select_model(rows, selection_options(config));
  model::fit_model_thresholds(rows, m);
  report::annotate_trace(rows, *m.trace, cv_options(config));
  prepare_out(config);
  model::save_model(m, config.out / "model.json");
  write_text(config.out / "trace.json", model::serialize_trace(*m.trace));
  report::write_table(report::trace_table(*m.trace), config.out, "table3_selection");
  return 0;
}

int cmd_evaluate(const RunConfig& config) {
  validate(config);
  const Inputs in = load_inputs(config);
  const auto rows = features::featurize_all(in.docs, in.resources, featurize_options(config),
                                            features::FeatureRegistry::standard(), config.jobs);
  const auto classic = classic_for(in);
  auto r = report::evaluate(rows, classic, cv_options(config), selection_options(config));
  prepare_out(config);
  features::export_table(rows, config.out / "features.csv");
  report::write_table(r.categories, config.out, "table1_categories");
  report::write_table(r.features, config.out, "table2_features");
  report::write_table(r.trace, config.out, "table3_selection");
  report::write_table(r.comparison, config.out, "table5_comparison");
  model::save_model(r.chosen, config.out / "model.json");
  return 0;
}

int cmd_compare(const RunConfig& config) {
  validate(config);
  const Inputs in = load_inputs(config);
  const auto rows = features::featurize_all(in.docs, in.resources, featurize_options(config),
                                            features::FeatureRegistry::standard(), config.jobs);
  const auto comparisons =
      report::compare_estimators(rows, classic_for(in), cv_options(config), selection_options(config));
  prepare_out(config);
  report::write_table(report::comparison_table(comparisons), config.out, "table5_comparison");
  return 0;
}

int cmd_score(const RunConfig& config, std::ostream& out) {
  validate(config);
  if (config.model.empty()) throw ConfigError("--model is required");
  if (config.document.empty()) throw ConfigError("--document is required");
  std::map<std::string, fs::path> base;
  if (!config.manifest.empty()) base = load_manifest(config.manifest).resources;
  const auto resources = features::load_resources(resource_paths(config, base));
  const auto m = model::load_model(config.model);
  Document doc = tokenize(read_text_file(config.document), resources.tokenizer,
                          config.document.stem().string());
  if (!config.tree.empty()) doc.attach_trees(syntax::parse_tree_lines(read_text_file(config.tree)));
  if (!config.coref.empty()) doc.attach_coref_sidecar(read_text_file(config.coref));
  const auto result = scoring::score_document(doc, m, resources, featurize_options(config));
  out << scoring::to_json(result, config.model.stem().string());
  return 0;
}

int cmd_serve(const RunConfig& config) {
  validate(config);
  if (config.model.empty()) throw ConfigError("a model path is required (--model or READGRADE_MODEL)");
  std::map<std::string, fs::path> base;
  if (!config.manifest.empty()) base = load_manifest(config.manifest).resources;
  auto snapshot = std::const_pointer_cast<service::Snapshot>(
      service::load_snapshot(config.model.string(), resource_paths(config, base), config.parser_command));
  snapshot->options = featurize_options(config);
  service::ScoringService server(snapshot, config.max_chars);
  std::cerr << "serving on " << config.host << ":" << config.port << "\n";
  if (!server.listen(config.host, config.port)) throw IoError("cannot listen on port " + std::to_string(config.port));
  return 0;
}

int cmd_synth(const RunConfig& config) {
  validate(config);
  synth::CorpusOptions o;
  o.grades = config.synth_grades;
  o.docs_per_grade = config.synth_docs_per_grade;
  o.seed = config.seed;
  const auto manifest = synth::write_corpus(config.out, o);
  std::cerr << "wrote " << manifest.string() << "\n";
  return 0;
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"readgrade: reading difficulty estimation for L2 readers"};
  app.require_subcommand(1);

  struct Flags {
    std::optional<std::string> config, manifest, out, features, model, document, tree, coref;
    std::optional<std::string> grammar, coref_counts, tree_fallback, host, parser;
    std::vector<std::string> resources;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> folds, reps, max_chars;
    std::optional<double> alpha;
    std::optional<unsigned> jobs;
    std::optional<int> port, grades, docs;
    bool sentence_length_log = false;
  } f;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--config", f.config, "JSON config file");
    sub->add_option("--manifest", f.manifest, "corpus manifest");
    sub->add_option("--out", f.out, "output directory");
    sub->add_option("--resource", f.resources, "resource override key=path");
    sub->add_option("--seed", f.seed, "random seed");
    sub->add_option("--folds", f.folds, "cross-validation folds");
    sub->add_option("--reps", f.reps, "cross-validation repetitions");
    sub->add_option("--alpha-enter", f.alpha, "F-test entry threshold");
    sub->add_option("--jobs", f.jobs, "featurization threads");
    sub->add_flag("--sentence-length-log", f.sentence_length_log, "use ln|D| / n");
    sub->add_option("--grammar-normalization", f.grammar, "per-sentence or per-100-words");
    sub->add_option("--coref-counts", f.coref_counts, "per-sentence or raw");
    sub->add_option("--tree-fallback", f.tree_fallback, "none or flat");
  };
  auto* featurize = app.add_subcommand("featurize", "write the feature table");
  auto* select = app.add_subcommand("select", "forward selection and BIC model choice");
  auto* evaluate = app.add_subcommand("evaluate", "category, feature, selection and comparison reports");
  auto* compare = app.add_subcommand("compare", "compare against classic formulas");
  auto* score = app.add_subcommand("score", "score one document");
  auto* serve = app.add_subcommand("serve", "HTTP scoring service");
  auto* synth = app.add_subcommand("synth", "write a synthetic graded corpus");
  for (auto* sub : {featurize, select, evaluate, compare, score, serve, synth}) common(sub);
  select->add_option("--features", f.features, "existing feature table");
  for (auto* sub : {score, serve}) sub->add_option("--model", f.model, "model file");
  score->add_option("--document", f.document, "document text file")->required();
  score->add_option("--tree", f.tree, "tree sidecar");
  score->add_option("--coref", f.coref, "coreference sidecar");
  serve->add_option("--host", f.host, "bind address");
  serve->add_option("--port", f.port, "port");
  serve->add_option("--parser", f.parser, "parser command (one sentence per line)");
  serve->add_option("--max-chars", f.max_chars, "request text limit");
  synth->add_option("--grades", f.grades, "number of grades");
  synth->add_option("--docs-per-grade", f.docs, "documents per grade");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    RunConfig c;
    if (f.config) apply_config_file(c, *f.config);
    if (serve->parsed()) {
      if (const char* env = std::getenv("READGRADE_MODEL"); env && !f.model) c.model = env;
      if (const char* env = std::getenv("READGRADE_PORT"); env && !f.port) c.port = std::atoi(env);
    }
    if (f.manifest) c.manifest = *f.manifest;
    if (f.out) c.out = *f.out;
    if (f.features) c.features = *f.features;
    if (f.model) c.model = *f.model;
    if (f.document) c.document = *f.document;
    if (f.tree) c.tree = *f.tree;
    if (f.coref) c.coref = *f.coref;
    for (const auto& kv : f.resources) {
      const auto eq = kv.find('=');
      if (eq == std::string::npos) throw ConfigError("--resource expects key=path, got '" + kv + "'");
      c.resources[kv.substr(0, eq)] = kv.substr(eq + 1);
    }
    if (f.seed) c.seed = *f.seed;
    if (f.folds) c.folds = *f.folds;
    if (f.reps) c.reps = *f.reps;
    if (f.alpha) c.alpha_enter = *f.alpha;
    if (f.jobs) c.jobs = *f.jobs;
    if (f.sentence_length_log) c.sentence_length_log = true;
    if (f.grammar) c.grammar_normalization = *f.grammar;
    if (f.coref_counts) c.coref_counts = *f.coref_counts;
    if (f.tree_fallback) c.tree_fallback = *f.tree_fallback;
    if (f.host) c.host = *f.host;
    if (f.port) c.port = *f.port;
    if (f.parser) c.parser_command = *f.parser;
    if (f.max_chars) c.max_chars = *f.max_chars;
    if (f.grades) c.synth_grades = *f.grades;
    if (f.docs) c.synth_docs_per_grade = *f.docs;

    if (featurize->parsed()) return cmd_featurize(c);
    if (select->parsed()) return cmd_select(c);
    if (evaluate->parsed()) return cmd_evaluate(c);
    if (compare->parsed()) return cmd_compare(c);
    if (score->parsed()) return cmd_score(c, out);
    if (serve->parsed()) return cmd_serve(c);
    if (synth->parsed()) return cmd_synth(c);
  } catch (const MissingFeature& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace readgrade::cli
