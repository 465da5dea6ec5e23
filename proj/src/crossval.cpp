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

#include "readgrade/crossval.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "readgrade/errors.hpp"
#include "readgrade/stats.hpp"

namespace readgrade::model {
namespace {

// Unbiased draw in [0, bound) that does not depend on the standard
// library's distribution implementation.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

std::optional<double> mean_of(const std::vector<double>& v) {
  if (v.empty()) return std::nullopt;
  return mean(v);
}

FoldPredictions predict_rows(std::span<const FeatureVector> rows, const RegressionModel& m,
                             std::span<const std::size_t> test) {
  FoldPredictions out;
  for (std::size_t pos : test) {
    double s = std::numeric_limits<double>::quiet_NaN();
    bool ok = true;
    for (std::size_t i : m.indices) ok = ok && !rows[pos].is_missing(i);
    if (ok) s = predict(m, rows[pos]);
    out.scores.push_back(s);
    out.levels.push_back(m.thresholds && !std::isnan(s) ? classify(s, *m.thresholds) : 0);
  }
  if (!m.thresholds) out.levels.clear();
  return out;
}

void attach_thresholds(std::span<const FeatureVector> rows, RegressionModel& m,
                       std::span<const std::size_t> train) {
  std::vector<int> gold;
  std::vector<double> scores;
  for (std::size_t pos : train) {
    if (!row_complete(rows[pos], m.indices)) continue;
    gold.push_back(static_cast<int>(std::lround(*rows[pos].grade)));
    scores.push_back(predict(m, rows[pos]));
  }
  m.thresholds = fit_thresholds(gold, scores);
}

std::vector<FeatureVector> gather(std::span<const FeatureVector> rows,
                                  std::span<const std::size_t> positions) {
  std::vector<FeatureVector> out;
  out.reserve(positions.size());
  for (std::size_t pos : positions) out.push_back(rows[pos]);
  return out;
}

}  // namespace

std::vector<Partition> cv_partitions(std::size_t n, const CvOptions& options) {
  if (options.folds < 2) throw ConfigError("cross-validation needs at least 2 folds");
  if (options.repetitions < 1) throw ConfigError("cross-validation needs at least 1 repetition");
  if (n < options.folds) {
    throw ConfigError("cross-validation needs at least " + std::to_string(options.folds) +
                      " rows, found " + std::to_string(n));
  }
  std::vector<Partition> out;
  for (std::size_t rep = 0; rep < options.repetitions; ++rep) {
    std::seed_seq seq{static_cast<std::uint32_t>(options.seed),
                      static_cast<std::uint32_t>(options.seed >> 32),
                      static_cast<std::uint32_t>(rep)};
    std::mt19937_64 rng(seq);
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    for (std::size_t i = n; i > 1; --i) std::swap(order[i - 1], order[bounded(rng, i)]);
    Partition partition(options.folds);
    for (std::size_t f = 0; f < options.folds; ++f) {
      const std::size_t begin = f * n / options.folds;
      const std::size_t end = (f + 1) * n / options.folds;
      partition[f].assign(order.begin() + static_cast<std::ptrdiff_t>(begin),
                          order.begin() + static_cast<std::ptrdiff_t>(end));
      std::sort(partition[f].begin(), partition[f].end());
    }
    out.push_back(std::move(partition));
  }
  return out;
}

CvResult cross_validate(std::span<const double> gold, const FitPredict& fit_predict,
                        const CvOptions& options) {
  const auto partitions = cv_partitions(gold.size(), options);
  CvResult result;
  std::vector<double> rmses, rs, level_rmses, accuracies, tads;
  bool any_levels = false;
  for (std::size_t rep = 0; rep < partitions.size(); ++rep) {
    std::vector<double> pooled(gold.size(), std::numeric_limits<double>::quiet_NaN());
    std::vector<int> pooled_levels(gold.size(), 0);
    for (std::size_t f = 0; f < partitions[rep].size(); ++f) {
      const auto& test = partitions[rep][f];
      std::vector<std::size_t> train;
      for (std::size_t g = 0; g < partitions[rep].size(); ++g) {
        if (g != f) train.insert(train.end(), partitions[rep][g].begin(), partitions[rep][g].end());
      }
      std::sort(train.begin(), train.end());
      const FoldPredictions p = fit_predict(train, test);
      if (p.scores.size() != test.size()) throw ConfigError("pipeline returned the wrong number of scores");
      const bool has_levels = !p.levels.empty();
      any_levels = any_levels || has_levels;

      FoldMetrics m;
      m.repetition = rep;
      m.fold = f;
      std::vector<double> g, s, lv;
      std::vector<int> gi, li;
      for (std::size_t i = 0; i < test.size(); ++i) {
        if (std::isnan(p.scores[i])) {
          ++m.unscored;
          continue;
        }
        g.push_back(gold[test[i]]);
        s.push_back(p.scores[i]);
        pooled[test[i]] = p.scores[i];
        if (has_levels) {
          gi.push_back(static_cast<int>(std::lround(gold[test[i]])));
          li.push_back(p.levels[i]);
          lv.push_back(static_cast<double>(p.levels[i]));
          pooled_levels[test[i]] = p.levels[i];
        }
      }
      m.scored = g.size();
      if (g.empty()) {
        result.folds.push_back(m);
        continue;
      }
      m.rmse = rmse(g, s);
      rmses.push_back(m.rmse);
      if (g.size() >= 2) {
        try {
          m.r = pearson(g, s);
          rs.push_back(*m.r);
        } catch (const UndefinedCorrelation&) {
        }
      }
      if (has_levels) {
        m.level_rmse = rmse(g, lv);
        m.accuracy = accuracy(gi, li);
        level_rmses.push_back(*m.level_rmse);
        accuracies.push_back(*m.accuracy);
        if (g.size() >= 2) {
          m.tad = tad(g, lv);
          tads.push_back(*m.tad);
        }
      }
      result.folds.push_back(m);
    }
    result.pooled_scores.push_back(std::move(pooled));
    if (any_levels) result.pooled_levels.push_back(std::move(pooled_levels));
  }
  if (rmses.empty()) throw ConfigError("no fold produced any scored rows");
  result.rmse = mean(rmses);
  result.r = mean_of(rs);
  result.level_rmse = mean_of(level_rmses);
  result.accuracy = mean_of(accuracies);
  result.tad = mean_of(tads);
  return result;
}

std::vector<double> grades_of(std::span<const FeatureVector> rows) {
  std::vector<double> out;
  for (const auto& row : rows) {
    if (!row.grade) throw ConfigError("row '" + row.doc_id + "' has no grade");
    out.push_back(static_cast<double>(*row.grade));
  }
  return out;
}

FitPredict ols_pipeline(std::span<const FeatureVector> rows, std::vector<std::string> subset,
                        RankPolicy policy, bool with_levels, const FeatureRegistry& registry) {
  return [rows, subset = std::move(subset), policy, with_levels, &registry](
             std::span<const std::size_t> train, std::span<const std::size_t> test) {
    const auto training = gather(rows, train);
    RegressionModel m = fit_ols(training, subset, registry, policy);
    if (with_levels) attach_thresholds(rows, m, train);
    return predict_rows(rows, m, test);
  };
}

FitPredict selection_pipeline(std::span<const FeatureVector> rows, SelectionOptions selection,
                              std::vector<std::string> candidates, bool with_levels,
                              const FeatureRegistry& registry) {
  selection.include_all_row = false;
  return [rows, selection, candidates = std::move(candidates), with_levels, &registry](
             std::span<const std::size_t> train, std::span<const std::size_t> test) {
    const auto training = gather(rows, train);
    RegressionModel m = select_model(training, selection, candidates, registry);
    if (with_levels) attach_thresholds(rows, m, train);
    return predict_rows(rows, m, test);
  };
}

FitPredict score_pipeline(std::span<const double> gold, std::vector<double> scores) {
  return [gold, scores = std::move(scores)](std::span<const std::size_t> train,
                                            std::span<const std::size_t> test) {
    std::vector<double> g, s;
    for (std::size_t pos : train) {
      g.push_back(gold[pos]);
      s.push_back(scores[pos]);
    }
    double sign = 1.0;
    try {
      sign = pearson(g, s) < 0.0 ? -1.0 : 1.0;
    } catch (const UndefinedCorrelation&) {
    }
    std::vector<int> gi;
    for (double v : g) gi.push_back(static_cast<int>(std::lround(v)));
    for (double& v : s) v *= sign;
    const LevelThresholds th = fit_thresholds(gi, s);
    FoldPredictions out;
    for (std::size_t pos : test) {
      out.scores.push_back(sign * scores[pos]);
      out.levels.push_back(classify(sign * scores[pos], th));
    }
    return out;
  };
}

}  // namespace readgrade::model
