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
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "readgrade/features.hpp"
#include "readgrade/levels.hpp"
#include "readgrade/linalg.hpp"

namespace readgrade::model {

using features::FeatureRegistry;
using features::FeatureVector;

struct SelectionStep {
  std::string added_feature;
  std::vector<std::string> subset;  // cumulative, including added_feature
  std::size_t n = 0;                // rows used by the fit
  double rss = 0.0;
  double r2 = 0.0;
  double bic = 0.0;  // -inf when RSS is 0
  double rmse = 0.0;  // in-sample
  double r = 0.0;     // in-sample; NaN when undefined
  double f_statistic = 0.0;
  double p_value = 1.0;
  bool accepted = false;
  std::optional<double> cv_rmse;
  std::optional<double> cv_r;
  std::string note;
};

struct SelectionTrace {
  std::vector<SelectionStep> steps;
  std::optional<SelectionStep> all;  // every usable feature at once
  std::vector<std::string> skipped;  // "feature: reason"
  double alpha_enter = 0.05;
};

struct TrainingMeta {
  std::string log_base = "e";
  std::string height_convention = "edges-to-deepest-word";
  std::string bic_parameters = "slopes";
  std::string registry_hash;
  std::size_t n = 0;
  std::size_t excluded_rows = 0;  // listwise deletion
  double rss = 0.0;
  double r2 = 0.0;
};

struct RegressionModel {
  double intercept = 0.0;
  std::vector<std::string> subset;
  std::vector<double> coefficients;  // aligned with subset
  std::vector<std::size_t> indices;  // registry positions aligned with subset
  std::vector<std::string> dropped;  // deficient features removed by a pruned fit
  TrainingMeta meta;
  std::optional<LevelThresholds> thresholds;
  std::optional<SelectionTrace> trace;
};

// Response and regressors for the rows that carry a grade and every listed
// feature. Column 0 of x is the intercept.
struct Design {
  Matrix x;
  std::vector<double> y;
  std::vector<std::size_t> rows;  // positions in the input
  std::size_t excluded = 0;
};

bool row_complete(const FeatureVector& row, std::span<const std::size_t> indices);

Design build_design(std::span<const FeatureVector> rows, std::span<const std::size_t> indices);
// Same, restricted to the given input positions.
Design build_design(std::span<const FeatureVector> rows, std::span<const std::size_t> indices,
                    std::span<const std::size_t> positions);

std::vector<std::size_t> resolve(const std::vector<std::string>& subset,
                                 const FeatureRegistry& registry);

// Minimum-RSS fit of grade on the subset. Needs |subset| + 2 complete rows
// (ConfigError). Rank deficiency raises SingularDesign naming the features;
// with RankPolicy::kDrop they are removed and listed in dropped.
RegressionModel fit_ols(std::span<const FeatureVector> rows, const std::vector<std::string>& subset,
                        const FeatureRegistry& registry = FeatureRegistry::standard(),
                        RankPolicy policy = RankPolicy::kThrow);

// Fit on an already assembled design; names label x's columns after the
// intercept.
RegressionModel fit_design(const Design& design, const std::vector<std::string>& subset,
                           std::span<const std::size_t> indices, const FeatureRegistry& registry,
                           RankPolicy policy = RankPolicy::kThrow);

// intercept + sum of coefficient * value. MissingFeature if any subset
// feature is masked.
double predict(const RegressionModel& model, const FeatureVector& row);

// Level thresholds from the model's own predictions on the complete,
// graded rows.
void fit_model_thresholds(std::span<const FeatureVector> rows, RegressionModel& model);

}  // namespace readgrade::model
