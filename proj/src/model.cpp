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

#include "readgrade/model.hpp"

#include <cmath>
#include <numeric>

#include "readgrade/errors.hpp"
#include "readgrade/stats.hpp"

namespace readgrade::model {

bool row_complete(const FeatureVector& row, std::span<const std::size_t> indices) {
  if (!row.grade) return false;
  for (std::size_t i : indices) {
    if (row.is_missing(i)) return false;
  }
  return true;
}

Design build_design(std::span<const FeatureVector> rows, std::span<const std::size_t> indices) {
  std::vector<std::size_t> all(rows.size());
  std::iota(all.begin(), all.end(), 0);
  return build_design(rows, indices, all);
}

Design build_design(std::span<const FeatureVector> rows, std::span<const std::size_t> indices,
                    std::span<const std::size_t> positions) {
  Design d;
  for (std::size_t pos : positions) {
    if (row_complete(rows[pos], indices)) {
      d.rows.push_back(pos);
    } else {
      ++d.excluded;
    }
  }
  d.x = Matrix(d.rows.size(), indices.size() + 1);
  d.y.resize(d.rows.size());
  for (std::size_t r = 0; r < d.rows.size(); ++r) {
    const FeatureVector& row = rows[d.rows[r]];
    d.x(r, 0) = 1.0;
    for (std::size_t c = 0; c < indices.size(); ++c) d.x(r, c + 1) = row.values[indices[c]];
    d.y[r] = static_cast<double>(*row.grade);
  }
  return d;
}

std::vector<std::size_t> resolve(const std::vector<std::string>& subset,
                                 const FeatureRegistry& registry) {
  std::vector<std::size_t> out;
  for (const auto& name : subset) {
    const auto i = registry.index_of(name);
    if (!i) throw ConfigError("unknown feature '" + name + "'");
    out.push_back(*i);
  }
  return out;
}

RegressionModel fit_design(const Design& design, const std::vector<std::string>& subset,
                           std::span<const std::size_t> indices, const FeatureRegistry& registry,
                           RankPolicy policy) {
  // Under kDrop the factorization prunes columns past the row count itself.
  const std::size_t needed = policy == RankPolicy::kThrow ? subset.size() + 1 : 2;
  if (design.y.size() < needed) {
    throw ConfigError("fit needs at least " + std::to_string(needed) +
                      " complete rows, found " + std::to_string(design.y.size()));
  }
  std::vector<std::string> names = {"(intercept)"};
  names.insert(names.end(), subset.begin(), subset.end());
  const LeastSquaresFit fit = solve_least_squares(design.x, design.y, names, policy);

  RegressionModel m;
  m.intercept = fit.coefficients[0];
  std::size_t next_dropped = 0;
  for (std::size_t c = 0; c < subset.size(); ++c) {
    if (next_dropped < fit.dropped.size() && fit.dropped[next_dropped] == c + 1) {
      m.dropped.push_back(subset[c]);
      ++next_dropped;
      continue;
    }
    m.subset.push_back(subset[c]);
    m.coefficients.push_back(fit.coefficients[c + 1]);
    m.indices.push_back(indices[c]);
  }
  if (!fit.dropped.empty() && fit.dropped.front() == 0) {
    throw SingularDesign({"(intercept)"});
  }
  m.meta.registry_hash = registry.hash();
  m.meta.n = design.y.size();
  m.meta.excluded_rows = design.excluded;
  m.meta.rss = fit.rss;
  m.meta.r2 = r_squared(fit.rss, total_sum_squares(design.y));
  return m;
}

RegressionModel fit_ols(std::span<const FeatureVector> rows, const std::vector<std::string>& subset,
                        const FeatureRegistry& registry, RankPolicy policy) {
  const auto indices = resolve(subset, registry);
  const Design design = build_design(rows, indices);
  return fit_design(design, subset, indices, registry, policy);
}

double predict(const RegressionModel& model, const FeatureVector& row) {
  std::vector<std::string> missing;
  for (std::size_t c = 0; c < model.indices.size(); ++c) {
    if (model.indices[c] >= row.values.size() || row.is_missing(model.indices[c])) {
      missing.push_back(model.subset[c]);
    }
  }
  if (!missing.empty()) {
    throw MissingFeature(missing, "supply the annotations these features need (tree sidecars, "
                                  "lexicons, or frequency tables)");
  }
  double score = model.intercept;
  for (std::size_t c = 0; c < model.indices.size(); ++c) {
    score += model.coefficients[c] * row.values[model.indices[c]];
  }
  return score;
}

void fit_model_thresholds(std::span<const FeatureVector> rows, RegressionModel& model) {
  std::vector<int> gold;
  std::vector<double> scores;
  for (const auto& row : rows) {
    if (!row_complete(row, model.indices)) continue;
    gold.push_back(static_cast<int>(std::lround(*row.grade)));
    scores.push_back(predict(model, row));
  }
  model.thresholds = fit_thresholds(gold, scores);
}

}  // namespace readgrade::model
