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

#include "readgrade/scoring.hpp"

#include "json.hpp"
#include "readgrade/errors.hpp"

namespace readgrade::scoring {

std::vector<std::string> featurization_warnings(const features::FeatureVector& vector,
                                                const features::FeatureRegistry& registry) {
  std::vector<std::string> out;
  if (vector.heuristic_coref) out.push_back("coreference chains are heuristic (no sidecar)");
  if (vector.fallback_trees) out.push_back("parse features use flat fallback trees");
  std::string masked;
  for (std::size_t i = 0; i < vector.values.size() && i < registry.size(); ++i) {
    if (vector.is_missing(i)) masked += (masked.empty() ? "" : ", ") + registry.at(i).name;
  }
  if (!masked.empty()) out.push_back("masked features: " + masked);
  return out;
}

ScoreResult score_vector(const features::FeatureVector& vector, const model::RegressionModel& model) {
  ScoreResult r;
  r.intercept = model.intercept;
  r.score = model::predict(model, vector);
  for (std::size_t c = 0; c < model.subset.size(); ++c) {
    const double value = vector.values[model.indices[c]];
    r.features.push_back({model.subset[c], value, model.coefficients[c], value * model.coefficients[c]});
  }
  if (model.thresholds) r.level = model::classify(r.score, *model.thresholds);
  r.warnings = featurization_warnings(vector);
  return r;
}

ScoreResult score_document(const Document& doc, const model::RegressionModel& model,
                           const features::Resources& resources,
                           const features::FeaturizeOptions& options) {
  const auto vector = features::featurize(doc, resources, options);
  return score_vector(vector, model);
}

std::string to_json(const ScoreResult& result, const std::string& model_id) {
  nlohmann::ordered_json j;
  if (!model_id.empty()) j["modelId"] = model_id;
  j["score"] = result.score;
  j["level"] = result.level ? nlohmann::ordered_json(*result.level) : nlohmann::ordered_json(nullptr);
  j["intercept"] = result.intercept;
  j["features"] = nlohmann::ordered_json::array();
  for (const auto& f : result.features) {
    j["features"].push_back({{"name", f.name},
                             {"value", f.value},
                             {"coefficient", f.coefficient},
                             {"contribution", f.contribution}});
  }
  j["warnings"] = result.warnings;
  return j.dump(2) + "\n";
}

}  // namespace readgrade::scoring
