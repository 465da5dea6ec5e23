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

#include <span>
#include <vector>

namespace readgrade::model {

struct LevelThresholds {
  std::vector<int> levels;       // ascending
  std::vector<double> centroids;  // nondecreasing, one per level
  double min_score = 0.0;
  double max_score = 0.0;
  bool pooled = false;  // pool-adjacent-violators merged inverted centroids
};

// Centroid of each level present in gold = mean predicted score of its
// training documents, made monotone by weighted pool-adjacent-violators.
// Throws ConfigError on empty or mismatched input.
LevelThresholds fit_thresholds(std::span<const int> gold, std::span<const double> scores);

// Nearest centroid; below min_score the lowest level, above max_score the
// highest. Equidistant scores go to the lower level.
int classify(double score, const LevelThresholds& th);

// Exact-match fraction.
double accuracy(std::span<const int> gold, std::span<const int> pred);

// Fraction of ordered pairs i != j whose gold and predicted differences
// have the same strict sign. Throws ConfigError for n < 2.
double tad(std::span<const double> gold, std::span<const double> pred);

}  // namespace readgrade::model
