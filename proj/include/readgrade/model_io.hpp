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

#include <filesystem>
#include <string>
#include <string_view>

#include "readgrade/model.hpp"

namespace readgrade::model {

// JSON object {registryHash, subset, intercept, coefficients, thresholds,
// trainingMeta, selectionTrace}. Infinite BIC values are written as the
// string "-inf".
std::string serialize_model(const RegressionModel& model);
std::string serialize_trace(const SelectionTrace& trace);

// Throws ConfigError if the registry hash differs or a subset feature is
// unknown, IoError on malformed JSON.
RegressionModel parse_model(std::string_view text,
                            const FeatureRegistry& registry = FeatureRegistry::standard());

void save_model(const RegressionModel& model, const std::filesystem::path& path);
RegressionModel load_model(const std::filesystem::path& path,
                           const FeatureRegistry& registry = FeatureRegistry::standard());

}  // namespace readgrade::model
