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

#include "readgrade/model_io.hpp"

#include <cmath>
#include <fstream>
#include <limits>

#include "json.hpp"
#include "readgrade/errors.hpp"

namespace readgrade::model {
namespace {

using nlohmann::ordered_json;

ordered_json number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return v;
}

double number_from(const ordered_json& j) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
    if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
    throw IoError("expected a number, got '" + s + "'");
  }
  return j.get<double>();
}

ordered_json step_json(const SelectionStep& s) {
  ordered_json j;
  j["addedFeature"] = s.added_feature;
  j["subset"] = s.subset;
  j["n"] = s.n;
  j["rmse"] = number(s.rmse);
  j["r"] = number(s.r);
  j["bic"] = number(s.bic);
  j["rss"] = number(s.rss);
  j["r2"] = number(s.r2);
  j["fStatistic"] = number(s.f_statistic);
  j["pValue"] = number(s.p_value);
  j["accepted"] = s.accepted;
  if (s.cv_rmse) j["cvRmse"] = number(*s.cv_rmse);
  if (s.cv_r) j["cvR"] = number(*s.cv_r);
  if (!s.note.empty()) j["note"] = s.note;
  return j;
}

SelectionStep step_from(const ordered_json& j) {
  SelectionStep s;
  s.added_feature = j.at("addedFeature").get<std::string>();
  s.subset = j.at("subset").get<std::vector<std::string>>();
  s.n = j.at("n").get<std::size_t>();
  s.rmse = number_from(j.at("rmse"));
  s.r = number_from(j.at("r"));
  s.bic = number_from(j.at("bic"));
  s.rss = number_from(j.at("rss"));
  s.r2 = number_from(j.at("r2"));
  s.f_statistic = number_from(j.at("fStatistic"));
  s.p_value = number_from(j.at("pValue"));
  s.accepted = j.at("accepted").get<bool>();
  if (j.contains("cvRmse")) s.cv_rmse = number_from(j["cvRmse"]);
  if (j.contains("cvR")) s.cv_r = number_from(j["cvR"]);
  s.note = j.value("note", std::string());
  return s;
}

ordered_json trace_json(const SelectionTrace& t) {
  ordered_json j;
  j["alphaEnter"] = t.alpha_enter;
  j["steps"] = ordered_json::array();
  for (const auto& s : t.steps) j["steps"].push_back(step_json(s));
  if (t.all) j["all"] = step_json(*t.all);
  j["skipped"] = t.skipped;
  return j;
}

SelectionTrace trace_from(const ordered_json& j) {
  SelectionTrace t;
  t.alpha_enter = j.value("alphaEnter", 0.05);
  for (const auto& s : j.at("steps")) t.steps.push_back(step_from(s));
  if (j.contains("all")) t.all = step_from(j["all"]);
  if (j.contains("skipped")) t.skipped = j["skipped"].get<std::vector<std::string>>();
  return t;
}

}  // namespace

std::string serialize_trace(const SelectionTrace& trace) { return trace_json(trace).dump(2) + "\n"; }

std::string serialize_model(const RegressionModel& m) {
  ordered_json j;
  j["registryHash"] = m.meta.registry_hash;
  j["subset"] = m.subset;
  j["intercept"] = m.intercept;
  ordered_json coefficients = ordered_json::object();
  for (std::size_t i = 0; i < m.subset.size(); ++i) coefficients[m.subset[i]] = m.coefficients[i];
  j["coefficients"] = coefficients;
  if (m.thresholds) {
    j["thresholds"] = {{"levels", m.thresholds->levels},
                       {"centroids", m.thresholds->centroids},
                       {"minScore", m.thresholds->min_score},
                       {"maxScore", m.thresholds->max_score},
                       {"pooled", m.thresholds->pooled}};
  } else {
    j["thresholds"] = nullptr;
  }
  j["trainingMeta"] = {{"logBase", m.meta.log_base},
                       {"heightConvention", m.meta.height_convention},
                       {"bicParameters", m.meta.bic_parameters},
                       {"registryHash", m.meta.registry_hash},
                       {"n", m.meta.n},
                       {"excludedRows", m.meta.excluded_rows},
                       {"rss", number(m.meta.rss)},
                       {"r2", number(m.meta.r2)}};
  if (!m.dropped.empty()) j["trainingMeta"]["dropped"] = m.dropped;
  j["selectionTrace"] = m.trace ? trace_json(*m.trace) : ordered_json(nullptr);
  return j.dump(2) + "\n";
}

RegressionModel parse_model(std::string_view text, const FeatureRegistry& registry) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const ordered_json::parse_error& e) {
    throw IoError(std::string("model file is not valid JSON: ") + e.what());
  }
  RegressionModel m;
  try {
    const auto hash = j.at("registryHash").get<std::string>();
    if (hash != registry.hash()) {
      throw ConfigError("model registry hash " + hash + " does not match this build's " +
                        registry.hash());
    }
    m.subset = j.at("subset").get<std::vector<std::string>>();
    m.intercept = j.at("intercept").get<double>();
    m.indices = resolve(m.subset, registry);
    const auto& coefficients = j.at("coefficients");
    for (const auto& name : m.subset) m.coefficients.push_back(coefficients.at(name).get<double>());
    if (!j.at("thresholds").is_null()) {
      const auto& t = j["thresholds"];
      LevelThresholds th;
      th.levels = t.at("levels").get<std::vector<int>>();
      th.centroids = t.at("centroids").get<std::vector<double>>();
      th.min_score = t.at("minScore").get<double>();
      th.max_score = t.at("maxScore").get<double>();
      th.pooled = t.value("pooled", false);
      if (th.levels.size() != th.centroids.size() || th.levels.empty()) {
        throw IoError("thresholds need one centroid per level");
      }
      m.thresholds = th;
    }
    const auto& meta = j.at("trainingMeta");
    m.meta.log_base = meta.value("logBase", std::string("e"));
    m.meta.height_convention = meta.value("heightConvention", std::string());
    m.meta.bic_parameters = meta.value("bicParameters", std::string("slopes"));
    m.meta.registry_hash = hash;
    m.meta.n = meta.value("n", std::size_t{0});
    m.meta.excluded_rows = meta.value("excludedRows", std::size_t{0});
    if (meta.contains("rss")) m.meta.rss = number_from(meta["rss"]);
    if (meta.contains("r2")) m.meta.r2 = number_from(meta["r2"]);
    if (meta.contains("dropped")) m.dropped = meta["dropped"].get<std::vector<std::string>>();
    if (j.contains("selectionTrace") && !j["selectionTrace"].is_null()) {
      m.trace = trace_from(j["selectionTrace"]);
    }
  } catch (const ordered_json::exception& e) {
    throw IoError(std::string("malformed model file: ") + e.what());
  }
  return m;
}

void save_model(const RegressionModel& model, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write model '" + path.string() + "'");
  out << serialize_model(model);
  if (!out) throw IoError("write failed for '" + path.string() + "'");
}

RegressionModel load_model(const std::filesystem::path& path, const FeatureRegistry& registry) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read model '" + path.string() + "'");
  const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parse_model(text, registry);
}

}  // namespace readgrade::model
