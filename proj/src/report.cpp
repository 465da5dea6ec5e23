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

#include "readgrade/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>

#include "readgrade/errors.hpp"
#include "readgrade/stats.hpp"

namespace readgrade::report {
namespace {

using features::Category;
using features::FeatureRegistry;
using model::CvOptions;
using model::CvResult;

std::vector<FeatureVector> complete_rows(std::span<const FeatureVector> rows,
                                         const std::vector<std::string>& subset) {
  const auto indices = model::resolve(subset, FeatureRegistry::standard());
  std::vector<FeatureVector> out;
  for (const auto& row : rows) {
    if (model::row_complete(row, indices)) out.push_back(row);
  }
  return out;
}

CvResult fixed_subset_cv(std::span<const FeatureVector> rows, const std::vector<std::string>& subset,
                         const CvOptions& cv, model::RankPolicy policy) {
  const auto usable = complete_rows(rows, subset);
  const auto gold = model::grades_of(usable);
  return model::cross_validate(gold, model::ols_pipeline(usable, subset, policy, false), cv);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string rounded(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (std::isnan(v)) return "nan";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  return buf;
}

struct Block {
  const char* category;
  const char* label;
  std::vector<std::string> names;
};

std::vector<Block> category_blocks() {
  const auto& reg = FeatureRegistry::standard();
  std::vector<std::string> gept, vq;
  for (const auto& name : reg.names_in(Category::kAoa)) {
    (name.rfind("gept", 0) == 0 ? gept : vq).push_back(name);
  }
  return {
      {"Baseline", "baseline-only", reg.names_in(Category::kBaseline)},
      {"AOA", "gept-only", gept},
      {"AOA", "vq-only", vq},
      {"Coreference", "coreference-only", reg.names_in(Category::kCoreference)},
      {"Parsing", "parsing-only", reg.names_in(Category::kParsing)},
      {"Grammar", "grammar-only", reg.names_in(Category::kGrammar)},
      {"Semantic", "wordnet-only", reg.names_in(Category::kSemantic)},
      {"Frequency", "bnc_frequency", {"bnc_frequency"}},
      {"Frequency", "google_search_count", {"google_search_count"}},
  };
}

}  // namespace

Cell text_cell(std::string text) { return {std::move(text), std::nullopt}; }

Cell number_cell(double value) { return {rounded(value), value}; }

Cell maybe_number(const std::optional<double>& value) {
  return value ? number_cell(*value) : text_cell("");
}

std::string to_csv(const Table& table) {
  std::string out;
  for (std::size_t i = 0; i < table.header.size(); ++i) {
    out += (i ? "," : "") + csv_field(table.header[i]);
  }
  out += "\n";
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ",";
      const Cell& c = row[i];
      if (c.value && std::isfinite(*c.value)) {
        out += features::format_double(*c.value);
      } else {
        out += csv_field(c.text);
      }
    }
    out += "\n";
  }
  return out;
}

std::string to_markdown(const Table& table) {
  std::string out = "## " + table.title + "\n\n|";
  for (const auto& h : table.header) out += " " + h + " |";
  out += "\n|";
  for (std::size_t i = 0; i < table.header.size(); ++i) out += " --- |";
  out += "\n";
  for (const auto& row : table.rows) {
    out += "|";
    for (const auto& c : row) out += " " + c.text + " |";
    out += "\n";
  }
  return out;
}

Table category_table(std::span<const FeatureVector> rows, const CvOptions& cv) {
  Table t;
  t.title = "RMSE and correlation by feature category";
  t.header = {"Categories", "Features", "RMSE", "r", "n", "note"};
  for (const auto& block : category_blocks()) {
    std::vector<Cell> row = {text_cell(block.category), text_cell(block.label)};
    try {
      const CvResult res = fixed_subset_cv(rows, block.names, cv, model::RankPolicy::kDrop);
      const auto n = complete_rows(rows, block.names).size();
      row.push_back(number_cell(res.rmse));
      row.push_back(maybe_number(res.r));
      row.push_back(text_cell(std::to_string(n)));
      row.push_back(text_cell(""));
    } catch (const Error& e) {
      row.insert(row.end(), {text_cell(""), text_cell(""), text_cell("0"), text_cell(e.what())});
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

Table feature_table(std::span<const FeatureVector> rows, const CvOptions& cv) {
  struct Entry {
    std::string category, name;
    std::optional<model::RegressionModel> fit;
    std::optional<double> fit_rmse, fit_r, cv_rmse, cv_r;
    std::string note;
  };
  std::vector<Entry> entries;
  const auto& reg = FeatureRegistry::standard();
  for (const auto& d : reg.descriptors()) {
    Entry e{std::string(features::category_name(d.category)), d.name, {}, {}, {}, {}, {}, {}};
    try {
      auto m = model::fit_ols(rows, {d.name}, reg);
      e.fit_rmse = std::sqrt(m.meta.rss / static_cast<double>(m.meta.n));
      e.fit_r = (m.coefficients[0] < 0 ? -1.0 : 1.0) * std::sqrt(std::max(0.0, m.meta.r2));
      e.fit = std::move(m);
      const CvResult res = fixed_subset_cv(rows, {d.name}, cv, model::RankPolicy::kThrow);
      e.cv_rmse = res.rmse;
      e.cv_r = res.r;
    } catch (const SingularDesign&) {
      e.note = "constant feature";
    } catch (const Error& ex) {
      e.note = ex.what();
    }
    entries.push_back(std::move(e));
  }
  std::stable_sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    if (a.cv_rmse.has_value() != b.cv_rmse.has_value()) return a.cv_rmse.has_value();
    return a.cv_rmse && *a.cv_rmse < *b.cv_rmse;
  });

  Table t;
  t.title = "RMSE and correlation of single-feature regressions";
  t.header = {"Rank", "Categories", "Name", "Regression", "slope", "intercept",
              "RMSE", "r", "fit RMSE", "fit r", "note"};
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const Entry& e = entries[i];
    std::vector<Cell> row = {text_cell(std::to_string(i + 1)), text_cell(e.category),
                             text_cell(e.name)};
    if (e.fit) {
      char buf[160];
      const double b = e.fit->coefficients[0];
      const double a = e.fit->intercept;
      std::snprintf(buf, sizeof(buf), "y = %.4g * %s %c %.4g", b, e.name.c_str(), a < 0 ? '-' : '+',
                    std::fabs(a));
      row.push_back(text_cell(buf));
      row.push_back(number_cell(b));
      row.push_back(number_cell(a));
    } else {
      row.insert(row.end(), {text_cell(""), text_cell(""), text_cell("")});
    }
    row.push_back(maybe_number(e.cv_rmse));
    row.push_back(maybe_number(e.cv_r));
    row.push_back(maybe_number(e.fit_rmse));
    row.push_back(maybe_number(e.fit_r));
    row.push_back(text_cell(e.note));
    t.rows.push_back(std::move(row));
  }
  return t;
}

void annotate_trace(std::span<const FeatureVector> rows, model::SelectionTrace& trace,
                    const CvOptions& cv) {
  auto annotate = [&](model::SelectionStep& step, model::RankPolicy policy) {
    try {
      const CvResult res = fixed_subset_cv(rows, step.subset, cv, policy);
      step.cv_rmse = res.rmse;
      step.cv_r = res.r;
    } catch (const Error& e) {
      step.note += (step.note.empty() ? "" : "; ") + std::string("cv: ") + e.what();
    }
  };
  for (auto& step : trace.steps) annotate(step, model::RankPolicy::kThrow);
  if (trace.all) annotate(*trace.all, model::RankPolicy::kDrop);
}

Table trace_table(const model::SelectionTrace& trace) {
  Table t;
  t.title = "Forward selection trace";
  t.header = {"Model", "Added Feature", "RMSE", "r", "BIC", "RSS", "F", "p", "accepted",
              "fit RMSE", "fit r", "n", "note"};
  auto emit = [&](const std::string& label, const model::SelectionStep& s) {
    t.rows.push_back({text_cell(label), text_cell(s.added_feature), maybe_number(s.cv_rmse),
                      maybe_number(s.cv_r), number_cell(s.bic), number_cell(s.rss),
                      number_cell(s.f_statistic), number_cell(s.p_value),
                      text_cell(s.accepted ? "yes" : "no"), number_cell(s.rmse), number_cell(s.r),
                      text_cell(std::to_string(s.n)), text_cell(s.note)});
  };
  for (std::size_t i = 0; i < trace.steps.size(); ++i) emit(std::to_string(i + 1), trace.steps[i]);
  if (trace.all) emit("", *trace.all);
  return t;
}

std::vector<Comparison> compare_estimators(std::span<const FeatureVector> rows,
                                           const std::vector<model::ClassicScores>& classic,
                                           const CvOptions& cv,
                                           const model::SelectionOptions& selection) {
  if (classic.size() != rows.size()) throw ConfigError("classic scores do not match the rows");
  const auto gold = model::grades_of(rows);
  std::vector<Comparison> out;
  auto run_classic = [&](const std::string& name, double model::ClassicScores::*field) {
    std::vector<double> scores;
    for (const auto& c : classic) scores.push_back(c.*field);
    out.push_back({name, model::cross_validate(gold, model::score_pipeline(gold, scores), cv)});
  };
  run_classic("Flesch Reading Ease", &model::ClassicScores::flesch_reading_ease);
  run_classic("Flesch-Kincaid Grade Level", &model::ClassicScores::flesch_kincaid_grade);
  run_classic("Coleman-Liau", &model::ClassicScores::coleman_liau);
  out.push_back({"Proposed (forward selection + BIC)",
                 model::cross_validate(gold, model::selection_pipeline(rows, selection), cv)});
  return out;
}

Table comparison_table(const std::vector<Comparison>& comparisons) {
  Table t;
  t.title = "Comparison between the estimations";
  t.header = {"Estimations", "RMSE", "r", "Accuracy", "TAD", "score RMSE"};
  for (const auto& c : comparisons) {
    const bool proposed = c.estimator.rfind("Proposed", 0) == 0;
    t.rows.push_back({text_cell(c.estimator), maybe_number(c.result.level_rmse),
                      maybe_number(c.result.r), maybe_number(c.result.accuracy),
                      maybe_number(c.result.tad),
                      proposed ? number_cell(c.result.rmse) : text_cell("")});
  }
  return t;
}

EvaluationReport evaluate(std::span<const FeatureVector> rows,
                          const std::vector<model::ClassicScores>& classic, const CvOptions& cv,
                          const model::SelectionOptions& selection) {
  EvaluationReport r;
  r.categories = category_table(rows, cv);
  r.features = feature_table(rows, cv);
  r.chosen = model::select_model(rows, selection);
  model::fit_model_thresholds(rows, r.chosen);
  annotate_trace(rows, *r.chosen.trace, cv);
  r.trace = trace_table(*r.chosen.trace);
  r.comparisons = compare_estimators(rows, classic, cv, selection);
  r.comparison = comparison_table(r.comparisons);
  return r;
}

void write_table(const Table& table, const std::filesystem::path& dir, const std::string& stem) {
  for (const auto& [ext, text] : {std::pair{".csv", to_csv(table)}, std::pair{".md", to_markdown(table)}}) {
    const auto path = dir / (stem + ext);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write '" + path.string() + "'");
    out << text;
  }
}

}  // namespace readgrade::report
