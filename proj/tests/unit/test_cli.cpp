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


#include <algorithm>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "json.hpp"
#include "readgrade/errors.hpp"
#include "readgrade/scoring.hpp"
#include "synth_fixture.hpp"

using namespace readgrade;
using readgrade::testing::SynthFixture;
using readgrade::testing::TempDir;
using readgrade::testing::fixture;
using readgrade::testing::slurp;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  args.insert(args.begin(), "readgrade");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::size_t line_count(const std::string& s) {
  return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n'));
}

}  // namespace

TEST_CASE("featurize a three-document manifest") {
  TempDir out("cli3");
  const auto r = run({"featurize", "--manifest", fixture("corpus3/manifest.json").string(), "--out",
                      out.path().string()});
  REQUIRE(r.code == 0);
  CHECK(line_count(slurp(out / "features.csv")) == 4);
  const auto prov = nlohmann::json::parse(slurp(out / "provenance.json"));
  CHECK(prov["documents"] == 3);
  CHECK(prov["missingTreeFraction"].get<double>() == doctest::Approx(1.0 / 3.0));
  CHECK(std::filesystem::exists(out / "run_config.json"));
}

TEST_CASE("a bad tree file fails and names the document") {
  TempDir out("clibad");
  const auto r = run({"featurize", "--manifest", fixture("corpus3/bad_manifest.json").string(),
                      "--out", out.path().string()});
  CHECK(r.code != 0);
  CHECK(r.err.find("d1") != std::string::npos);
  CHECK(r.out.empty());
}

TEST_CASE("featurize and select reruns are byte-identical") {
  SynthFixture fx;
  const std::string manifest = (fx.dir / "manifest.json").string();
  TempDir a("clia"), b("clib");
  REQUIRE(run({"featurize", "--manifest", manifest, "--out", a.path().string()}).code == 0);
  REQUIRE(run({"featurize", "--manifest", manifest, "--out", b.path().string(), "--jobs", "3"}).code == 0);
  CHECK(slurp(a / "features.csv") == slurp(b / "features.csv"));
  CHECK(slurp(a / "provenance.json") == slurp(b / "provenance.json"));

  TempDir sa("clisa"), sb("clisb");
  REQUIRE(run({"select", "--features", (a / "features.csv").string(), "--out", sa.path().string(),
               "--reps", "2"}).code == 0);
  REQUIRE(run({"select", "--features", (b / "features.csv").string(), "--out", sb.path().string(),
               "--reps", "2"}).code == 0);
  for (const char* file : {"model.json", "trace.json", "table3_selection.csv", "table3_selection.md"}) {
    CAPTURE(file);
    CHECK(slurp(sa / file) == slurp(sb / file));
  }
  const auto trace = nlohmann::json::parse(slurp(sa / "trace.json"));
  CHECK(trace["steps"].size() >= 1);
  CHECK(trace.contains("all"));
}

TEST_CASE("select needs enough rows") {
  TempDir corpus("cli5");
  REQUIRE(run({"synth", "--out", corpus.path().string(), "--grades", "5", "--docs-per-grade", "1"}).code == 0);
  TempDir out("cli5out");
  const auto r = run({"select", "--manifest", (corpus / "manifest.json").string(), "--out",
                      out.path().string()});
  CHECK(r.code == 1);
  CHECK(r.err.find("rows") != std::string::npos);
}

TEST_CASE("score prints the same result as the library") {
  SynthFixture fx;
  const auto& entry = fx.manifest.entries[7];
  const auto r = run({"score", "--manifest", (fx.dir / "manifest.json").string(), "--model",
                      (fx.dir / "tree.json").string(), "--document", entry.document.string(),
                      "--tree", entry.tree->string(), "--coref", entry.coref->string()});
  REQUIRE(r.code == 0);
  const auto expected = scoring::score_document(fx.docs[7], fx.tree_model, fx.resources);
  CHECK(nlohmann::json::parse(r.out)["score"].get<double>() == expected.score);

  const auto missing = run({"score", "--manifest", (fx.dir / "manifest.json").string(), "--model",
                            (fx.dir / "tree.json").string(), "--document", entry.document.string()});
  CHECK(missing.code == 1);
  CHECK(missing.err.find("tree_height") != std::string::npos);
}

TEST_CASE("configuration precedence") {
  TempDir dir("clicfg");
  readgrade::testing::write_file(dir / "config.json", R"({"seed": 9, "folds": 3, "reps": 2})");
  cli::RunConfig c;
  cli::apply_config_file(c, dir / "config.json");
  CHECK(c.seed == 9);
  CHECK(c.folds == 3);
  CHECK(c.alpha_enter == 0.05);

  const auto out = dir / "run";
  REQUIRE(run({"featurize", "--config", (dir / "config.json").string(), "--seed", "4", "--manifest",
               fixture("corpus3/manifest.json").string(), "--out", out.string()}).code == 0);
  const auto echoed = nlohmann::json::parse(slurp(out / "run_config.json"));
  CHECK(echoed["seed"] == 4);
  CHECK(echoed["folds"] == 3);
}

TEST_CASE("invalid settings are rejected") {
  cli::RunConfig c;
  c.folds = 1;
  CHECK_THROWS_AS(cli::validate(c), ConfigError);
  c = {};
  c.grammar_normalization = "per-word";
  CHECK_THROWS_AS(cli::validate(c), ConfigError);
  c = {};
  c.alpha_enter = 1.5;
  CHECK_THROWS_AS(cli::validate(c), ConfigError);
  CHECK(run({"featurize", "--coref-counts", "weird", "--manifest",
             fixture("corpus3/manifest.json").string()}).code == 1);
  CHECK(run({"bogus"}).code != 0);
}
