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

#include <optional>
#include <string>
#include <vector>

#include "readgrade/features.hpp"
#include "readgrade/model.hpp"

namespace readgrade::scoring {

struct Contribution {
  std::string name;
  double value = 0.0;
  double coefficient = 0.0;
  double contribution = 0.0;  // value * coefficient
};

struct ScoreResult {
  double score = 0.0;
  double intercept = 0.0;
  std::optional<int> level;
  std::vector<Contribution> features;
  std::vector<std::string> warnings;
};

// Warnings for a featurized document: heuristic coreference, flat fallback
// trees, and any masked registry features.
std::vector<std::string> featurization_warnings(const features::FeatureVector& vector,
                                                const features::FeatureRegistry& registry =
                                                    features::FeatureRegistry::standard());

// featurize -> predict -> classify. Throws MissingFeature naming every
// masked feature the model needs.
ScoreResult score_document(const Document& doc, const model::RegressionModel& model,
                           const features::Resources& resources,
                           const features::FeaturizeOptions& options = {});

ScoreResult score_vector(const features::FeatureVector& vector, const model::RegressionModel& model);

// {"score", "level", "intercept", "features": [...], "warnings": [...]}.
std::string to_json(const ScoreResult& result, const std::string& model_id = {});

}  // namespace readgrade::scoring
