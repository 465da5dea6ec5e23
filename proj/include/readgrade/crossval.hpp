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
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "readgrade/selection.hpp"

namespace readgrade::model {

struct CvOptions {
  std::size_t folds = 5;
  std::size_t repetitions = 5;
  std::uint64_t seed = 1;
};

// partitions[rep][fold] lists the test positions of that fold, ascending.
// Each repetition shuffles 0..n-1 with a generator seeded from (seed, rep)
// and cuts it into near-equal consecutive parts. ConfigError if n < folds.
using Partition = std::vector<std::vector<std::size_t>>;
std::vector<Partition> cv_partitions(std::size_t n, const CvOptions& options);

// Predictions for a fold's test positions, in the same order. NaN scores
// mark rows the fitted model cannot score; levels may be left empty.
struct FoldPredictions {
  std::vector<double> scores;
  std::vector<int> levels;
};

using FitPredict =
    std::function<FoldPredictions(std::span<const std::size_t> train, std::span<const std::size_t> test)>;

struct FoldMetrics {
  std::size_t repetition = 0;
  std::size_t fold = 0;
  std::size_t scored = 0;
  std::size_t unscored = 0;
  double rmse = 0.0;
  std::optional<double> r;
  std::optional<double> level_rmse;
  std::optional<double> accuracy;
  std::optional<double> tad;
};

struct CvResult {
  std::vector<FoldMetrics> folds;
  double rmse = 0.0;  // means over folds x repetitions
  std::optional<double> r;
  std::optional<double> level_rmse;
  std::optional<double> accuracy;
  std::optional<double> tad;
  std::vector<std::vector<double>> pooled_scores;  // [rep][row]
  std::vector<std::vector<int>> pooled_levels;     // [rep][row], empty without levels
};

CvResult cross_validate(std::span<const double> gold, const FitPredict& fit_predict,
                        const CvOptions& options);

// Pipelines over graded feature rows (all rows must carry a grade).
// A fixed-subset OLS fit; kDrop removes deficient features per fold.
FitPredict ols_pipeline(std::span<const FeatureVector> rows, std::vector<std::string> subset,
                        RankPolicy policy = RankPolicy::kThrow, bool with_levels = true,
                        const FeatureRegistry& registry = FeatureRegistry::standard());

// Forward selection + BIC choice inside every training split.
FitPredict selection_pipeline(std::span<const FeatureVector> rows, SelectionOptions selection,
                              std::vector<std::string> candidates = {}, bool with_levels = true,
                              const FeatureRegistry& registry = FeatureRegistry::standard());

// A precomputed per-row score, oriented by the sign of its training
// correlation with the grade, then thresholded on the training split.
FitPredict score_pipeline(std::span<const double> gold, std::vector<double> scores);

std::vector<double> grades_of(std::span<const FeatureVector> rows);

}  // namespace readgrade::model
