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
#include <span>
#include <string>
#include <vector>

#include "readgrade/model.hpp"

namespace readgrade::model {

// n ln(RSS / n) + ln(n) k, k counting slopes only. BicUndefined when RSS is
// 0; DomainError for n < 1 or negative RSS.
double bic(std::size_t n, double rss, std::size_t k);

struct FTest {
  double f = 0.0;
  double p_value = 1.0;
};

// Partial F for adding one regressor: (RSS_old - RSS_new) / (RSS_new /
// (n - k_new - 1)) on 1 and n - k_new - 1 degrees of freedom. RSS_new = 0
// gives F = +inf, p = 0.
FTest partial_f_test(double rss_old, double rss_new, std::size_t n, std::size_t k_new);

// Refits both subsets on the rows complete for new_subset, which must extend
// old_subset by exactly one feature.
FTest increment_f_test(std::span<const FeatureVector> rows, const std::vector<std::string>& old_subset,
                       const std::vector<std::string>& new_subset,
                       const FeatureRegistry& registry = FeatureRegistry::standard());

// Residual variance below this fraction of a candidate's own variance marks
// it as collinear with the current subset.
inline constexpr double kCollinearTolerance = 1e-10;

// Correlation of grade with the residual of candidate regressed on subset
// (with intercept). 0 for collinear candidates.
double semi_partial_r(std::span<const FeatureVector> rows, const std::vector<std::string>& subset,
                      const std::string& candidate,
                      const FeatureRegistry& registry = FeatureRegistry::standard());

struct SelectionOptions {
  double alpha_enter = 0.05;
  std::size_t min_rows = 10;
  bool include_all_row = true;
};

// Greedy forward selection over candidates (all registry features when
// empty). The first pick is the highest |pearson|; later picks the highest
// |semi-partial r|, kept iff the partial F-test p < alpha_enter.
SelectionTrace forward_select(std::span<const FeatureVector> rows,
                              const std::vector<std::string>& candidates = {},
                              const SelectionOptions& options = {},
                              const FeatureRegistry& registry = FeatureRegistry::standard());

// Accepted step with the lowest BIC; ties go to the earlier step.
std::size_t select_by_bic(const SelectionTrace& trace);

// Fits the BIC-chosen subset and attaches the trace.
RegressionModel select_model(std::span<const FeatureVector> rows, const SelectionOptions& options = {},
                             const std::vector<std::string>& candidates = {},
                             const FeatureRegistry& registry = FeatureRegistry::standard());

}  // namespace readgrade::model
