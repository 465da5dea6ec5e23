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
#include <optional>
#include <string>
#include <vector>

#include "readgrade/classic.hpp"
#include "readgrade/crossval.hpp"

namespace readgrade::report {

using features::FeatureVector;

struct Cell {
  std::string text;
  std::optional<double> value;  // numeric cells keep full precision for CSV
};

Cell text_cell(std::string text);
Cell number_cell(double value);
Cell maybe_number(const std::optional<double>& value);

struct Table {
  std::string title;
  std::vector<std::string> header;
  std::vector<std::vector<Cell>> rows;
};

// CSV cells use shortest round-trip numbers; Markdown rounds to 4 places.
std::string to_csv(const Table& table);
std::string to_markdown(const Table& table);

// Per-category OLS under cross-validation, one row per category block.
Table category_table(std::span<const FeatureVector> rows, const model::CvOptions& cv);

// Single-feature regressions: slope and intercept fit on all rows, with both
// in-sample and cross-validated RMSE and r, ordered by cross-validated RMSE.
Table feature_table(std::span<const FeatureVector> rows, const model::CvOptions& cv);

// Fills cv_rmse / cv_r of every step (and the "all" row) by cross-validating
// the step's fixed subset.
void annotate_trace(std::span<const FeatureVector> rows, model::SelectionTrace& trace,
                    const model::CvOptions& cv);

Table trace_table(const model::SelectionTrace& trace);

struct Comparison {
  std::string estimator;
  model::CvResult result;
};

// The BIC-selected model (selection redone inside every training split)
// against the three classic formulas, each thresholded on its training split.
std::vector<Comparison> compare_estimators(std::span<const FeatureVector> rows,
                                           const std::vector<model::ClassicScores>& classic,
                                           const model::CvOptions& cv,
                                           const model::SelectionOptions& selection);
Table comparison_table(const std::vector<Comparison>& comparisons);

struct EvaluationReport {
  Table categories;
  Table features;
  Table trace;
  Table comparison;
  std::vector<Comparison> comparisons;
  model::RegressionModel chosen;
};

EvaluationReport evaluate(std::span<const FeatureVector> rows,
                          const std::vector<model::ClassicScores>& classic,
                          const model::CvOptions& cv, const model::SelectionOptions& selection);

// Writes <stem>.csv and <stem>.md for each table into dir.
void write_table(const Table& table, const std::filesystem::path& dir, const std::string& stem);

}  // namespace readgrade::report
