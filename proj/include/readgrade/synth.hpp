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
#include <cstdint>
#include <filesystem>
#include <utility>
#include <vector>

#include "readgrade/features.hpp"

namespace readgrade::synth {

struct CorpusOptions {
  int grades = 6;
  int docs_per_grade = 40;
  std::uint64_t seed = 7;
  std::size_t vocabulary = 1500;
  bool trees = true;
  bool coref = true;
};

// Writes a graded corpus whose harder grades use rarer, later-acquired,
// longer words, longer documents, deeper trees, and longer-range pronoun
// chains. Produces docs/, trees/, coref/, resources/ and manifest.json under
// dir and returns the manifest path. Output is a pure function of options.
std::filesystem::path write_corpus(const std::filesystem::path& dir, const CorpusOptions& options);

struct PlantedOptions {
  std::size_t rows = 200;
  std::size_t features = 10;
  // (1-based feature number, weight)
  std::vector<std::pair<std::size_t, double>> signal = {{3, 2.0}, {8, 0.7}};
  double sigma = 0.1;
  std::uint64_t seed = 1;
};

// Registry x1..xN (category baseline, no requirements).
features::FeatureRegistry planted_registry(std::size_t features);

// Independent standard-normal features with y = sum weight * x + noise.
std::vector<features::FeatureVector> planted_rows(const PlantedOptions& options);

}  // namespace readgrade::synth
