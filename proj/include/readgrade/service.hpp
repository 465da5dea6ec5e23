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
#include <map>
#include <memory>
#include <mutex>
#include <string>

#include "readgrade/features.hpp"
#include "readgrade/model.hpp"
#include "readgrade/parser_process.hpp"

namespace httplib {
class Server;
}

namespace readgrade::service {

// Immutable state shared by request handlers.
struct Snapshot {
  model::RegressionModel model;
  std::string model_id = "default";
  features::Resources resources;
  features::FeaturizeOptions options;
  std::shared_ptr<syntax::ParserProcess> parser;  // optional
};

struct Response {
  int status = 200;
  std::string body;
};

inline constexpr std::size_t kDefaultMaxChars = 200000;

class ScoringService {
 public:
  explicit ScoringService(std::shared_ptr<const Snapshot> snapshot,
                          std::size_t max_chars = kDefaultMaxChars);
  ~ScoringService();

  // POST /score with {"text", "modelId"?}. 400 malformed JSON, 413 text over
  // the limit, 422 empty text, unknown modelId, or missing model features.
  Response handle_score(const std::string& body) const;
  // GET /model and GET /health.
  Response handle_model() const;
  Response handle_health() const;

  // Swaps in a new snapshot; in-flight requests keep the old one.
  void reload(std::shared_ptr<const Snapshot> snapshot);
  std::shared_ptr<const Snapshot> snapshot() const;

  // Blocking. bind_port(0) picks a free port for tests; call listen after.
  int bind_port(const std::string& host, int port);
  void listen_after_bind();
  bool listen(const std::string& host, int port);
  void stop();

 private:
  mutable std::mutex mu_;
  std::shared_ptr<const Snapshot> snapshot_;
  std::size_t max_chars_;
  std::unique_ptr<httplib::Server> server_;
};

// Loads the model, resources (via the model's sibling manifest-style map),
// and optional parser command into a snapshot.
std::shared_ptr<const Snapshot> load_snapshot(const std::string& model_path,
                                              const std::map<std::string, std::filesystem::path>& resources,
                                              const std::string& parser_command = {});

}  // namespace readgrade::service
