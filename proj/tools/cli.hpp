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

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <ostream>
#include <string>

namespace readgrade::cli {

// Effective settings of one command. Precedence: flags, then the --config
// JSON file, then these defaults.
struct RunConfig {
  std::filesystem::path manifest;
  std::filesystem::path out = "out";
  std::filesystem::path features;  // existing feature table (select)
  std::filesystem::path model;     // score, serve
  std::filesystem::path document;  // score
  std::filesystem::path tree;      // score
  std::filesystem::path coref;     // score
  std::map<std::string, std::filesystem::path> resources;
  std::uint64_t seed = 1;
  std::size_t folds = 5;
  std::size_t reps = 5;
  double alpha_enter = 0.05;
  unsigned jobs = 1;
  bool sentence_length_log = false;
  std::string grammar_normalization = "per-sentence";  // or per-100-words
  std::string coref_counts = "per-sentence";           // or raw
  std::string tree_fallback = "none";                  // or flat
  std::string host = "127.0.0.1";
  int port = 8080;
  std::string parser_command;
  std::size_t max_chars = 200000;
  int synth_grades = 6;
  int synth_docs_per_grade = 40;
};

// Throws ConfigError on out-of-range values or unknown mode names.
void validate(const RunConfig& config);

// Stable JSON rendering, echoed as run_config.json.
std::string to_json(const RunConfig& config);

// Applies keys of a JSON config file onto config.
void apply_config_file(RunConfig& config, const std::filesystem::path& path);

int cmd_featurize(const RunConfig& config);
int cmd_select(const RunConfig& config);
int cmd_evaluate(const RunConfig& config);
int cmd_compare(const RunConfig& config);
int cmd_score(const RunConfig& config, std::ostream& out);
int cmd_serve(const RunConfig& config);
int cmd_synth(const RunConfig& config);

// Parses argv and dispatches. Diagnostics go to err; returns the exit code.
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace readgrade::cli
