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

#include "doctest.h"
#include "readgrade/report.hpp"
#include "readgrade/synth.hpp"
#include "test_support.hpp"

using namespace readgrade;
using namespace readgrade::report;

namespace {

struct Evaluated {
  readgrade::testing::TempDir dir{"report"};
  std::vector<features::FeatureVector> rows;
  std::vector<model::ClassicScores> classic;

  Evaluated() {
    synth::CorpusOptions options;
    options.docs_per_grade = 12;
    const auto manifest = load_manifest(synth::write_corpus(dir.path(), options));
    const auto resources = features::load_resources(manifest.resources);
    const auto docs = load_corpus(manifest, resources.tokenizer);
    rows = features::featurize_all(docs, resources);
    const PronunciationDict* dict = resources.pronunciations ? &*resources.pronunciations : nullptr;
    for (const auto& d : docs) classic.push_back(model::classic_formulas(d, dict));
  }
};

}  // namespace

TEST_CASE("table rendering") {
  Table t;
  t.title = "Demo";
  t.header = {"name", "value"};
  t.rows = {{text_cell("a, b"), number_cell(1.0 / 3.0)}, {text_cell("c"), maybe_number({})}};
  const auto csv = to_csv(t);
  CHECK(csv.find("\"a, b\",0.3333333333333333") != std::string::npos);
  const auto md = to_markdown(t);
  CHECK(md.find("| a, b | 0.3333 |") != std::string::npos);
  CHECK(md.find("Demo") != std::string::npos);
}

TEST_CASE("evaluation report shapes") {
  Evaluated e;
  model::CvOptions cv;
  cv.repetitions = 2;
  const auto report = evaluate(e.rows, e.classic, cv, {});

  CHECK(report.categories.rows.size() == 9);
  CHECK(report.categories.rows[0][1].text == "baseline-only");
  CHECK(std::isfinite(*report.categories.rows[0][2].value));
  CHECK(std::isfinite(*report.categories.rows[0][3].value));

  CHECK(report.features.rows.size() == 47);
  for (std::size_t i = 1; i < report.features.rows.size(); ++i) {
    const auto& prev = report.features.rows[i - 1][6].value;
    const auto& cur = report.features.rows[i][6].value;
    if (prev && cur) CHECK(*prev <= *cur);
  }

  CHECK(report.trace.rows.size() >= 2);
  CHECK(report.trace.rows.back()[1].text == "all");

  REQUIRE(report.comparison.rows.size() == 4);
  CHECK(report.comparison.rows[0][0].text == "Flesch Reading Ease");
  CHECK(report.comparison.rows[3][0].text.find("Proposed") == 0);
  CHECK(report.chosen.thresholds.has_value());
}

TEST_CASE("write_table emits csv and markdown") {
  readgrade::testing::TempDir dir("tables");
  Table t{"T", {"a"}, {{number_cell(2.0)}}};
  write_table(t, dir.path(), "demo");
  CHECK(readgrade::testing::slurp(dir / "demo.csv") == "a\n2\n");
  CHECK(std::filesystem::exists(dir / "demo.md"));
}
