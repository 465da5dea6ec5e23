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

#include "readgrade/selection.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "readgrade/errors.hpp"
#include "readgrade/stats.hpp"

namespace readgrade::model {
namespace {

double trace_bic(std::size_t n, double rss, std::size_t k) {
  if (rss == 0.0) return -std::numeric_limits<double>::infinity();
  return bic(n, rss, k);
}

SelectionStep make_step(const RegressionModel& m, const std::string& added) {
  SelectionStep s;
  s.added_feature = added;
  s.subset = m.subset;
  s.n = m.meta.n;
  s.rss = m.meta.rss;
  s.r2 = m.meta.r2;
  s.bic = trace_bic(m.meta.n, m.meta.rss, m.subset.size());
  s.rmse = std::sqrt(m.meta.rss / static_cast<double>(m.meta.n));
  s.r = std::sqrt(std::max(0.0, m.meta.r2));
  return s;
}

std::vector<std::string> with(std::vector<std::string> v, std::string extra) {
  v.push_back(std::move(extra));
  return v;
}

}  // namespace

double bic(std::size_t n, double rss, std::size_t k) {
  if (n < 1) throw DomainError("BIC needs n >= 1");
  if (rss < 0.0 || std::isnan(rss)) throw DomainError("BIC needs a non-negative RSS");
  if (rss == 0.0) throw BicUndefined("BIC undefined for a perfect fit (RSS = 0)");
  const double dn = static_cast<double>(n);
  return dn * std::log(rss / dn) + std::log(dn) * static_cast<double>(k);
}

FTest partial_f_test(double rss_old, double rss_new, std::size_t n, std::size_t k_new) {
  if (n <= k_new + 1) throw ConfigError("F-test needs n > k + 1");
  if (rss_new == 0.0) return {std::numeric_limits<double>::infinity(), 0.0};
  const double df = static_cast<double>(n - k_new - 1);
  const double gain = std::max(0.0, rss_old - rss_new);
  const double f = gain / (rss_new / df);
  return {f, f_survival(f, 1.0, df)};
}

FTest increment_f_test(std::span<const FeatureVector> rows, const std::vector<std::string>& old_subset,
                       const std::vector<std::string>& new_subset, const FeatureRegistry& registry) {
  if (new_subset.size() != old_subset.size() + 1 ||
      !std::equal(old_subset.begin(), old_subset.end(), new_subset.begin())) {
    throw ConfigError("new subset must extend the old subset by one feature");
  }
  const auto new_indices = resolve(new_subset, registry);
  const Design design = build_design(rows, new_indices);
  const RegressionModel new_model = fit_design(design, new_subset, new_indices, registry);
  Design reduced;
  reduced.rows = design.rows;
  reduced.y = design.y;
  reduced.x = Matrix(design.x.rows(), design.x.cols() - 1);
  for (std::size_t c = 0; c + 1 < design.x.cols(); ++c) {
    std::copy(design.x.column(c).begin(), design.x.column(c).end(), reduced.x.column(c).begin());
  }
  const std::vector<std::size_t> old_indices(new_indices.begin(), new_indices.end() - 1);
  const RegressionModel old_model = fit_design(reduced, old_subset, old_indices, registry);
  return partial_f_test(old_model.meta.rss, new_model.meta.rss, new_model.meta.n,
                        new_subset.size());
}

double semi_partial_r(std::span<const FeatureVector> rows, const std::vector<std::string>& subset,
                      const std::string& candidate, const FeatureRegistry& registry) {
  const auto indices = resolve(with(subset, candidate), registry);
  const Design design = build_design(rows, indices);
  const std::size_t n = design.y.size();
  if (n < subset.size() + 3) throw ConfigError("too few complete rows for '" + candidate + "'");

  const auto target = design.x.column(indices.size());
  const std::vector<double> own(target.begin(), target.end());
  const double own_ss = total_sum_squares(own);
  if (own_ss == 0.0) return 0.0;
  Matrix basis(n, indices.size());
  for (std::size_t c = 0; c < indices.size(); ++c) {
    std::copy(design.x.column(c).begin(), design.x.column(c).end(), basis.column(c).begin());
  }
  std::vector<std::string> names = {"(intercept)"};
  names.insert(names.end(), subset.begin(), subset.end());
  const LeastSquaresFit fit = solve_least_squares(basis, own, names, RankPolicy::kDrop);
  if (fit.rss < kCollinearTolerance * own_ss) return 0.0;
  return pearson(design.y, fit.residuals);
}

SelectionTrace forward_select(std::span<const FeatureVector> rows,
                              const std::vector<std::string>& candidates,
                              const SelectionOptions& options, const FeatureRegistry& registry) {
  SelectionTrace trace;
  trace.alpha_enter = options.alpha_enter;
  const std::size_t graded = static_cast<std::size_t>(
      std::count_if(rows.begin(), rows.end(), [](const FeatureVector& v) { return v.grade.has_value(); }));
  if (graded < options.min_rows) {
    throw ConfigError("selection needs at least " + std::to_string(options.min_rows) +
                      " graded rows, found " + std::to_string(graded));
  }

  std::vector<std::string> pool = candidates.empty() ? registry.names() : candidates;
  resolve(pool, registry);

  // Step 1: highest |pearson| with the grade.
  std::vector<std::string> usable;
  std::string first;
  double best = -1.0;
  for (const auto& name : pool) {
    const auto idx = resolve({name}, registry);
    const Design d = build_design(rows, idx);
    if (d.y.size() < options.min_rows) {
      trace.skipped.push_back(name + ": too few complete rows");
      continue;
    }
    double r = 0.0;
    try {
      r = std::fabs(pearson(d.y, d.x.column(1)));
    } catch (const UndefinedCorrelation&) {
      trace.skipped.push_back(name + ": constant");
      continue;
    }
    usable.push_back(name);
    if (r > best) {
      best = r;
      first = name;
    }
  }
  if (first.empty()) throw ConfigError("no candidate feature has usable data");

  std::vector<std::string> subset = {first};
  {
    const RegressionModel m = fit_ols(rows, subset, registry);
    SelectionStep step = make_step(m, first);
    const Design d = build_design(rows, resolve(subset, registry));
    const auto f = partial_f_test(total_sum_squares(d.y), m.meta.rss, m.meta.n, 1);
    step.f_statistic = f.f;
    step.p_value = f.p_value;
    step.accepted = true;
    trace.steps.push_back(std::move(step));
  }
  std::vector<std::string> remaining;
  for (const auto& name : usable) {
    if (name != first) remaining.push_back(name);
  }

  while (!remaining.empty()) {
    // Rank the remaining candidates by |semi-partial r|.
    std::vector<std::pair<double, std::string>> ranked;
    std::vector<std::string> still;
    for (const auto& name : remaining) {
      double sr = 0.0;
      try {
        sr = std::fabs(semi_partial_r(rows, subset, name, registry));
      } catch (const Error& e) {
        trace.skipped.push_back(name + ": " + e.what());
        continue;
      }
      if (sr == 0.0) {
        trace.skipped.push_back(name + ": collinear with the selected features");
        continue;
      }
      ranked.emplace_back(sr, name);
      still.push_back(name);
    }
    remaining = still;
    std::stable_sort(ranked.begin(), ranked.end(),
                     [](const auto& a, const auto& b) { return a.first > b.first; });

    bool progressed = false;
    for (const auto& [sr, name] : ranked) {
      const auto next = with(subset, name);
      RegressionModel m;
      FTest f;
      try {
        m = fit_ols(rows, next, registry);
        f = increment_f_test(rows, subset, next, registry);
      } catch (const SingularDesign& e) {
        trace.skipped.push_back(name + ": " + e.what());
        remaining.erase(std::find(remaining.begin(), remaining.end(), name));
        continue;
      } catch (const ConfigError& e) {
        trace.skipped.push_back(name + ": " + e.what());
        remaining.erase(std::find(remaining.begin(), remaining.end(), name));
        continue;
      }
      SelectionStep step = make_step(m, name);
      step.f_statistic = f.f;
      step.p_value = f.p_value;
      step.accepted = f.p_value < options.alpha_enter;
      if (!step.accepted) {
        step.note = "no significant improvement";
        trace.steps.push_back(std::move(step));
        remaining.clear();
      } else {
        trace.steps.push_back(std::move(step));
        subset = next;
        remaining.erase(std::find(remaining.begin(), remaining.end(), name));
      }
      progressed = true;
      break;
    }
    if (!progressed) break;
  }

  if (options.include_all_row && !usable.empty()) {
    try {
      const RegressionModel m = fit_ols(rows, usable, registry, RankPolicy::kDrop);
      SelectionStep step = make_step(m, "all");
      step.accepted = false;
      if (!m.dropped.empty()) {
        step.note = "dropped as collinear:";
        for (const auto& name : m.dropped) step.note += " " + name;
      }
      trace.all = std::move(step);
    } catch (const Error& e) {
      trace.skipped.push_back(std::string("all: ") + e.what());
    }
  }
  return trace;
}

std::size_t select_by_bic(const SelectionTrace& trace) {
  std::size_t best = trace.steps.size();
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    if (!trace.steps[i].accepted) continue;
    if (best == trace.steps.size() || trace.steps[i].bic < trace.steps[best].bic) best = i;
  }
  if (best == trace.steps.size()) throw ConfigError("selection trace has no accepted step");
  return best;
}

RegressionModel select_model(std::span<const FeatureVector> rows, const SelectionOptions& options,
                             const std::vector<std::string>& candidates,
                             const FeatureRegistry& registry) {
  SelectionTrace trace = forward_select(rows, candidates, options, registry);
  const std::size_t chosen = select_by_bic(trace);
  RegressionModel m = fit_ols(rows, trace.steps[chosen].subset, registry);
  m.trace = std::move(trace);
  return m;
}

}  // namespace readgrade::model
