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
#include <limits>

#include "doctest.h"
#include "readgrade/errors.hpp"
#include "readgrade/linalg.hpp"
#include "readgrade/model.hpp"
#include "readgrade/stats.hpp"
#include "readgrade/synth.hpp"

using namespace readgrade;
using namespace readgrade::model;

namespace {

features::FeatureVector row(std::vector<double> values, double grade) {
  features::FeatureVector v;
  v.doc_id = "r";
  v.missing.assign(values.size(), 0);
  v.values = std::move(values);
  v.grade = grade;
  return v;
}

}  // namespace

TEST_CASE("two points fit exactly") {
  const auto reg = synth::planted_registry(1);
  const std::vector<features::FeatureVector> rows = {row({0}, 1), row({1}, 3)};
  const auto m = fit_ols(rows, {"x1"}, reg);
  CHECK(m.intercept == doctest::Approx(1.0));
  CHECK(m.coefficients[0] == doctest::Approx(2.0));
  CHECK(m.meta.rss == doctest::Approx(0.0));
  CHECK(predict(m, row({2}, 0)) == doctest::Approx(5.0));
  CHECK_THROWS_AS(fit_ols(std::span(rows).first(1), {"x1"}, reg), ConfigError);
}

TEST_CASE("fit_ols on a small linear design") {
  const auto reg = synth::planted_registry(1);
  std::vector<features::FeatureVector> rows;
  for (int i = 0; i < 6; ++i) rows.push_back(row({double(i)}, 1.0 + 2.0 * i));
  const auto m = fit_ols(rows, {"x1"}, reg);
  CHECK(m.intercept == doctest::Approx(1.0));
  CHECK(m.coefficients[0] == doctest::Approx(2.0));
  CHECK(m.meta.rss == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(m.meta.n == 6);

  CHECK(predict(m, row({0}, 0)) == doctest::Approx(1.0));
  CHECK(predict(m, row({2}, 0)) == doctest::Approx(5.0));
  auto masked = row({2}, 0);
  masked.missing[0] = 1;
  CHECK_THROWS_AS(predict(m, masked), MissingFeature);
}

TEST_CASE("constant target gives zero slopes") {
  const auto reg = synth::planted_registry(2);
  std::vector<features::FeatureVector> rows;
  for (int i = 0; i < 8; ++i) rows.push_back(row({double(i), double(i * i % 5)}, 4.0));
  const auto m = fit_ols(rows, {"x1", "x2"}, reg);
  CHECK(m.intercept == doctest::Approx(4.0));
  CHECK(std::abs(m.coefficients[0]) < 1e-12);
  CHECK(std::abs(m.coefficients[1]) < 1e-12);
}

TEST_CASE("collinear columns raise or drop") {
  const auto reg = synth::planted_registry(3);
  std::vector<features::FeatureVector> rows;
  for (int i = 0; i < 10; ++i) {
    rows.push_back(row({double(i), 2.0 * i, double((i * 7) % 3)}, 1.0 + i));
  }
  try {
    fit_ols(rows, {"x1", "x2", "x3"}, reg);
    FAIL("expected SingularDesign");
  } catch (const SingularDesign& e) {
    CHECK(e.features() == std::vector<std::string>{"x2"});
  }
  const auto m = fit_ols(rows, {"x1", "x2", "x3"}, reg, RankPolicy::kDrop);
  CHECK(m.dropped == std::vector<std::string>{"x2"});
  CHECK(m.subset == std::vector<std::string>{"x1", "x3"});
  CHECK(m.coefficients[0] == doctest::Approx(1.0));
  CHECK(std::abs(m.coefficients[1]) < 1e-12);
}

TEST_CASE("listwise deletion") {
  const auto reg = synth::planted_registry(1);
  std::vector<features::FeatureVector> rows;
  for (int i = 0; i < 6; ++i) rows.push_back(row({double(i)}, 2.0 * i));
  rows[2].missing[0] = 1;
  rows[4].grade.reset();
  const auto m = fit_ols(rows, {"x1"}, reg);
  CHECK(m.meta.n == 4);
  CHECK(m.meta.excluded_rows == 2);
}

TEST_CASE("unknown feature names are configuration errors") {
  CHECK_THROWS_AS(resolve({"nope"}, synth::planted_registry(2)), ConfigError);
}

TEST_CASE("descriptive statistics") {
  const std::vector<double> a = {1, 2, 3};
  const std::vector<double> up = {2, 4, 6};
  const std::vector<double> down = {3, 2, 1};
  CHECK(mean(a) == 2.0);
  CHECK(rmse(a, a) == 0.0);
  CHECK(rmse(a, up) == doctest::Approx(std::sqrt(14.0 / 3.0)));
  CHECK(pearson(a, a) == 1.0);
  CHECK(pearson(a, up) == doctest::Approx(1.0));
  CHECK(pearson(a, down) == doctest::Approx(-1.0));
  const std::vector<double> flat = {5, 5, 5};
  CHECK_THROWS_AS(pearson(a, flat), UndefinedCorrelation);
  CHECK(total_sum_squares(a) == 2.0);
  CHECK(r_squared(1.0, 2.0) == 0.5);
}

TEST_CASE("incomplete beta and F tail") {
  CHECK(incomplete_beta(1.0, 1.0, 0.3) == doctest::Approx(0.3));
  CHECK(incomplete_beta(2.0, 3.0, 0.0) == 0.0);
  CHECK(incomplete_beta(2.0, 3.0, 1.0) == 1.0);
  // Closed form for a = 2, b = 3.
  const double x = 0.4;
  CHECK(incomplete_beta(2.0, 3.0, x) == doctest::Approx(x * x * (6 - 8 * x + 3 * x * x)).epsilon(1e-12));
  CHECK(f_survival(4.17, 1, 30) == doctest::Approx(0.05).epsilon(0.04));
  CHECK(f_survival(0.0, 3, 10) == 1.0);
  CHECK(f_survival(std::numeric_limits<double>::infinity(), 3, 10) == 0.0);
}
