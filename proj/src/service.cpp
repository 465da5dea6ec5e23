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

#include "readgrade/service.hpp"

#include "httplib.h"
#include "json.hpp"
#include "readgrade/errors.hpp"
#include "readgrade/model_io.hpp"
#include "readgrade/scoring.hpp"

namespace readgrade::service {
namespace {

using nlohmann::ordered_json;

Response error(int status, const std::string& message, ordered_json extra = ordered_json::object()) {
  extra["error"] = message;
  return {status, extra.dump() + "\n"};
}

std::size_t utf8_length(const std::string& s) {
  std::size_t n = 0;
  for (unsigned char c : s) n += (c & 0xC0) != 0x80 ? 1 : 0;
  return n;
}

}  // namespace

ScoringService::ScoringService(std::shared_ptr<const Snapshot> snapshot, std::size_t max_chars)
    : snapshot_(std::move(snapshot)), max_chars_(max_chars) {}

ScoringService::~ScoringService() { stop(); }

std::shared_ptr<const Snapshot> ScoringService::snapshot() const {
  std::lock_guard lock(mu_);
  return snapshot_;
}

void ScoringService::reload(std::shared_ptr<const Snapshot> snapshot) {
  std::lock_guard lock(mu_);
  snapshot_ = std::move(snapshot);
}

Response ScoringService::handle_score(const std::string& body) const {
  const auto snap = snapshot();
  ordered_json request;
  try {
    request = ordered_json::parse(body);
  } catch (const ordered_json::parse_error& e) {
    return error(400, std::string("request is not valid JSON: ") + e.what());
  }
  if (!request.is_object() || !request.contains("text") || !request["text"].is_string()) {
    return error(400, "request needs a string field 'text'");
  }
  const std::string text = request["text"].get<std::string>();
  if (utf8_length(text) > max_chars_) {
    return error(413, "text exceeds " + std::to_string(max_chars_) + " characters");
  }
  if (request.contains("modelId") && request["modelId"].is_string() &&
      request["modelId"].get<std::string>() != snap->model_id) {
    return error(422, "unknown model '" + request["modelId"].get<std::string>() + "'");
  }
  try {
    Document doc = tokenize(text, snap->resources.tokenizer, "request");
    if (snap->parser) {
      doc.attach_trees(snap->parser->parse_document(doc));
    }
    const auto vector = features::featurize(doc, snap->resources, snap->options);
    auto warnings = scoring::featurization_warnings(vector);
    if (!snap->parser && snap->options.tree_fallback == features::TreeFallback::kNone) {
      warnings.insert(warnings.begin(), "no parser configured: parse-dependent features are masked");
    }
    try {
      auto result = scoring::score_vector(vector, snap->model);
      result.warnings = warnings;
      return {200, scoring::to_json(result, snap->model_id)};
    } catch (const MissingFeature& e) {
      return error(422, e.what(), {{"missingFeatures", e.features()}, {"warnings", warnings}});
    }
  } catch (const EmptyDocument& e) {
    return error(422, e.what());
  } catch (const Error& e) {
    return error(422, e.what());
  }
}

Response ScoringService::handle_model() const {
  const auto snap = snapshot();
  ordered_json j = ordered_json::parse(model::serialize_model(snap->model));
  j.erase("selectionTrace");
  j["modelId"] = snap->model_id;
  j["parser"] = snap->parser != nullptr;
  return {200, j.dump(2) + "\n"};
}

Response ScoringService::handle_health() const { return {200, "{\"status\":\"ok\"}\n"}; }

int ScoringService::bind_port(const std::string& host, int port) {
  server_ = std::make_unique<httplib::Server>();
  auto send = [](httplib::Response& res, const Response& r) {
    res.status = r.status;
    res.set_content(r.body, "application/json");
  };
  server_->Post("/score", [this, send](const httplib::Request& req, httplib::Response& res) {
    send(res, handle_score(req.body));
  });
  server_->Get("/model", [this, send](const httplib::Request&, httplib::Response& res) {
    send(res, handle_model());
  });
  server_->Get("/health", [this, send](const httplib::Request&, httplib::Response& res) {
    send(res, handle_health());
  });
  server_->set_payload_max_length(max_chars_ * 4 + 4096);
  if (port == 0) return server_->bind_to_any_port(host);
  return server_->bind_to_port(host, port) ? port : -1;
}

void ScoringService::listen_after_bind() {
  if (server_) server_->listen_after_bind();
}

bool ScoringService::listen(const std::string& host, int port) {
  if (bind_port(host, port) < 0) return false;
  return server_->listen_after_bind();
}

void ScoringService::stop() {
  if (server_) server_->stop();
}

std::shared_ptr<const Snapshot> load_snapshot(const std::string& model_path,
                                              const std::map<std::string, std::filesystem::path>& resources,
                                              const std::string& parser_command) {
  auto snap = std::make_shared<Snapshot>();
  snap->model = model::load_model(model_path);
  snap->model_id = std::filesystem::path(model_path).stem().string();
  snap->resources = features::load_resources(resources);
  if (!parser_command.empty()) snap->parser = std::make_shared<syntax::ParserProcess>(parser_command);
  return snap;
}

}  // namespace readgrade::service
