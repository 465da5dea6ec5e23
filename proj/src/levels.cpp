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

#include "readgrade/levels.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "readgrade/errors.hpp"
#include "readgrade/kernels.hpp"

namespace readgrade::model {

LevelThresholds fit_thresholds(std::span<const int> gold, std::span<const double> scores) {
  if (gold.empty()) throw ConfigError("thresholds need training data");
  if (gold.size() != scores.size()) throw ConfigError("gold and score lengths differ");

  std::map<int, std::pair<double, std::size_t>> by_level;
  for (std::size_t i = 0; i < gold.size(); ++i) {
    auto& [total, count] = by_level[gold[i]];
    total += scores[i];
    ++count;
  }

  LevelThresholds th;
  struct Block {
    double mean;
    double weight;
    std::size_t first;
    std::size_t last;
  };
  std::vector<Block> blocks;
  for (const auto& [level, acc] : by_level) {
    const std::size_t i = th.levels.size();
    th.levels.push_back(level);
    blocks.push_back({acc.first / static_cast<double>(acc.second),
                      static_cast<double>(acc.second), i, i});
    while (blocks.size() > 1 && blocks[blocks.size() - 2].mean > blocks.back().mean) {
      const Block top = blocks.back();
      blocks.pop_back();
      Block& below = blocks.back();
      below.mean = (below.mean * below.weight + top.mean * top.weight) / (below.weight + top.weight);
      below.weight += top.weight;
      below.last = top.last;
      th.pooled = true;
    }
  }
  th.centroids.assign(th.levels.size(), 0.0);
  for (const auto& b : blocks) {
    for (std::size_t i = b.first; i <= b.last; ++i) th.centroids[i] = b.mean;
  }
  const auto [lo, hi] = std::minmax_element(scores.begin(), scores.end());
  th.min_score = *lo;
  th.max_score = *hi;
  return th;
}

int classify(double score, const LevelThresholds& th) {
  if (th.levels.empty()) throw ConfigError("thresholds are not fitted");
  if (score <= th.min_score) return th.levels.front();
  if (score >= th.max_score) return th.levels.back();
  std::size_t best = 0;
  double best_distance = std::fabs(score - th.centroids[0]);
  for (std::size_t i = 1; i < th.centroids.size(); ++i) {
    const double d = std::fabs(score - th.centroids[i]);
    if (d < best_distance) {
      best = i;
      best_distance = d;
    }
  }
  return th.levels[best];
}

double accuracy(std::span<const int> gold, std::span<const int> pred) {
  if (gold.size() != pred.size()) throw ConfigError("gold and prediction lengths differ");
  if (gold.empty()) throw ConfigError("accuracy of an empty sample");
  std::size_t hits = 0;
  for (std::size_t i = 0; i < gold.size(); ++i) hits += gold[i] == pred[i] ? 1 : 0;
  return static_cast<double>(hits) / static_cast<double>(gold.size());
}

double tad(std::span<const double> gold, std::span<const double> pred) {
  if (gold.size() != pred.size()) throw ConfigError("gold and prediction lengths differ");
  if (gold.size() < 2) throw ConfigError("TAD needs at least two documents");
  const double n = static_cast<double>(gold.size());
  return 2.0 * static_cast<double>(kernels::concordant_pairs(gold, pred)) / (n * (n - 1.0));
}

}  // namespace readgrade::model
