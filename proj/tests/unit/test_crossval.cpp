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


#include <cmath>
#include <set>

#include "doctest.h"
#include "readgrade/crossval.hpp"
#include "readgrade/errors.hpp"
#include "readgrade/synth.hpp"

using namespace readgrade;
using namespace readgrade::model;

TEST_CASE("partition law") {
  CvOptions options;
  const auto parts = cv_partitions(10, options);
  REQUIRE(parts.size() == 5);
  for (const auto& folds : parts) {
    REQUIRE(folds.size() == 5);
    std::multiset<std::size_t> seen;
    for (const auto& fold : folds) {
      CHECK(fold.size() == 2);
      seen.insert(fold.begin(), fold.end());
    }
    CHECK(seen.size() == 10);
    CHECK(std::set<std::size_t>(seen.begin(), seen.end()).size() == 10);
  }
}

TEST_CASE("uneven folds differ in size by at most one") {
  const auto parts = cv_partitions(103, {});
  for (const auto& folds : parts) {
    std::size_t lo = 1000, hi = 0, total = 0;
    for (const auto& fold : folds) {
      lo = std::min(lo, fold.size());
      hi = std::max(hi, fold.size());
      total += fold.size();
    }
    CHECK(hi - lo <= 1);
    CHECK(total == 103);
  }
  CHECK(parts[0] != parts[1]);
}

TEST_CASE("partition determinism and seeding") {
  CvOptions a;
  CvOptions b;
  b.seed = 2;
  CHECK(cv_partitions(50, a) == cv_partitions(50, a));
  CHECK(cv_partitions(50, a) != cv_partitions(50, b));
}

TEST_CASE("partition errors") {
  CHECK_THROWS_AS(cv_partitions(4, {}), ConfigError);
  CvOptions one;
  one.folds = 1;
  CHECK_THROWS_AS(cv_partitions(10, one), ConfigError);
}

TEST_CASE("noiseless linear data cross-validates exactly") {
  synth::PlantedOptions planted;
  planted.rows = 60;
  planted.sigma = 0.0;
  const auto rows = synth::planted_rows(planted);
  const auto gold = grades_of(rows);
  const auto result = cross_validate(
      gold, ols_pipeline(rows, {"x3", "x8"}, RankPolicy::kThrow, false, synth::planted_registry(10)),
      {});
  CHECK(result.rmse < 1e-9);
  CHECK(result.folds.size() == 25);
  CHECK(!result.level_rmse.has_value());
}

TEST_CASE("identical seeds give identical fold metrics") {
  const auto rows = synth::planted_rows({});
  const auto gold = grades_of(rows);
  const auto reg = synth::planted_registry(10);
  const auto a = cross_validate(gold, ols_pipeline(rows, {"x3"}, RankPolicy::kThrow, false, reg), {});
  const auto b = cross_validate(gold, ols_pipeline(rows, {"x3"}, RankPolicy::kThrow, false, reg), {});
  REQUIRE(a.folds.size() == b.folds.size());
  for (std::size_t i = 0; i < a.folds.size(); ++i) {
    CHECK(a.folds[i].rmse == b.folds[i].rmse);
    CHECK(a.folds[i].r == b.folds[i].r);
  }
  CHECK(a.pooled_scores == b.pooled_scores);
}

TEST_CASE("aggregates are means over folds") {
  const auto rows = synth::planted_rows({});
  const auto gold = grades_of(rows);
  const auto result = cross_validate(
      gold, ols_pipeline(rows, {"x3", "x8"}, RankPolicy::kThrow, false, synth::planted_registry(10)),
      {});
  double sum = 0.0;
  for (const auto& f : result.folds) sum += f.rmse;
  CHECK(result.rmse == doctest::Approx(sum / 25.0).epsilon(1e-14));
}

TEST_CASE("unscoreable rows are counted, not scored") {
  auto rows = synth::planted_rows({});
  for (std::size_t i = 0; i < rows.size(); i += 10) rows[i].missing[2] = 1;
  const auto gold = grades_of(rows);
  const auto result = cross_validate(
      gold, ols_pipeline(rows, {"x3"}, RankPolicy::kThrow, false, synth::planted_registry(10)), {});
  std::size_t unscored = 0;
  for (const auto& f : result.folds) unscored += f.unscored;
  CHECK(unscored == 20 * 5);
}

TEST_CASE("level metrics come with levels") {
  std::vector<features::FeatureVector> rows;
  for (int i = 0; i < 60; ++i) {
    features::FeatureVector v;
    v.doc_id = std::to_string(i);
    const int level = 1 + i % 3;
    v.values = {level + 0.01 * (i % 7)};
    v.missing = {0};
    v.grade = level;
    rows.push_back(v);
  }
  const auto reg = synth::planted_registry(1);
  const auto result =
      cross_validate(grades_of(rows), ols_pipeline(rows, {"x1"}, RankPolicy::kThrow, true, reg), {});
  REQUIRE(result.accuracy.has_value());
  CHECK(*result.accuracy == 1.0);
  CHECK(*result.level_rmse == 0.0);
}

TEST_CASE("score pipeline orients and thresholds a fixed score") {
  std::vector<double> gold, scores;
  for (int i = 0; i < 50; ++i) {
    gold.push_back(1 + i % 5);
    scores.push_back(-10.0 * (1 + i % 5));
  }
  const auto result = cross_validate(gold, score_pipeline(gold, scores), {});
  REQUIRE(result.accuracy.has_value());
  CHECK(*result.accuracy == 1.0);
  CHECK(*result.r == doctest::Approx(1.0));
}

TEST_CASE("grades_of requires grades") {
  std::vector<features::FeatureVector> rows(1);
  CHECK_THROWS_AS(grades_of(rows), ConfigError);
}
