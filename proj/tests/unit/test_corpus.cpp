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
#include "readgrade/errors.hpp"
#include "readgrade/features.hpp"
#include "test_support.hpp"

using namespace readgrade;
using readgrade::testing::doc;
using readgrade::testing::fixture;

TEST_CASE("tokenize splits sentences on terminal punctuation") {
  const Document d = doc("I run. She waits.");
  CHECK(d.sentence_count() == 2);
  CHECK(d.token_count() == 4);
  CHECK(d.sentences()[1].tokens[0].normalized == "she");
  CHECK(d.sentences()[1].tokens[0].is_pronoun);
}

TEST_CASE("abbreviations do not end a sentence") {
  const Document d = doc("Dr. Smith left.");
  CHECK(d.sentence_count() == 1);
  CHECK(doc("Mr. and Mrs. Lee met at 5 p.m. today. Then they left.").sentence_count() == 2);
}

TEST_CASE("empty or punctuation-only text is an empty document") {
  CHECK_THROWS_AS(doc(""), EmptyDocument);
  CHECK_THROWS_AS(doc("  ... !?"), EmptyDocument);
}

TEST_CASE("tokens keep byte offsets into the source") {
  const std::string text = "Cats sleep. Dogs bark!";
  const Document d = doc(text);
  for (const auto& s : d.sentences()) {
    for (const auto& t : s.tokens) CHECK(text.substr(t.char_start, t.char_end - t.char_start) == t.surface);
  }
}

TEST_CASE("distinct words fold case and drop stop words from the content set") {
  const Document d = doc("The cat saw the Cat.");
  CHECK(d.distinct_words() == std::set<std::string>{"cat", "saw", "the"});
  CHECK(d.distinct_content_words().count("the") == 0);
  CHECK(d.distinct_content_words().count("cat") == 1);
}

TEST_CASE("count_syllables follows the pronunciation fixture") {
  const auto dict = PronunciationDict::load(fixture("pronunciations.dict"));
  CHECK(dict.size() == 50);
  std::ifstream in(fixture("syllables_expected.tsv"));
  std::string word;
  int expected = 0;
  int rows = 0;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    fields >> word >> expected;
    CAPTURE(word);
    CHECK(count_syllables(word, &dict) == expected);
    ++rows;
  }
  CHECK(rows == 50);
  CHECK(count_syllables("WATER", &dict) == 2);
  CHECK(count_syllables("promise", &dict) == 2);
}

TEST_CASE("heuristic syllables") {
  CHECK(heuristic_syllables("water") == 2);
  CHECK(heuristic_syllables("a") == 1);
  CHECK(heuristic_syllables("cake") == 1);
  CHECK(heuristic_syllables("the") == 1);
  CHECK(heuristic_syllables("yellow") == 2);
  CHECK(heuristic_syllables("42") == 1);
  CHECK(heuristic_syllables("") == 1);
  CHECK(count_syllables("water") == 2);
}

TEST_CASE("baseline features") {
  SUBCASE("single token") {
    const auto f = baseline_features(doc("Hi."));
    CHECK(f.word_number == 0.0);
    CHECK(f.sentence_length == 1.0);
  }
  SUBCASE("sentence length is tokens per sentence") {
    std::string text;
    for (int s = 0; s < 10; ++s) {
      for (int w = 0; w < 10; ++w) text += "Word" + std::to_string(s * 10 + w) + " ";
      text += ". ";
    }
    const auto d = doc(text);
    REQUIRE(d.token_count() == 100);
    CHECK(baseline_features(d).sentence_length == doctest::Approx(10.0));
    BaselineOptions literal;
    literal.sentence_length_log = true;
    CHECK(baseline_features(d, nullptr, literal).sentence_length ==
          doctest::Approx(std::log(100.0) / 10.0));
  }
  SUBCASE("syllables average over distinct words") {
    const auto dict = PronunciationDict::load(fixture("pronunciations.dict"));
    CHECK(baseline_features(doc("Water a water."), &dict).syllables == doctest::Approx(1.5));
  }
}

TEST_CASE("manifest loading") {
  const auto manifest = load_manifest(fixture("corpus3/manifest.json"));
  REQUIRE(manifest.entries.size() == 3);
  const auto docs = load_corpus(manifest, readgrade::testing::default_config());
  REQUIRE(docs.size() == 3);
  int missing_tree = 0;
  for (const auto& d : docs) missing_tree += d.missing_annotations().count("tree") ? 1 : 0;
  CHECK(missing_tree == 1);
  CHECK(docs[0].trees().has_value());
  CHECK(docs[1].grade() == 2);
}

TEST_CASE("manifest errors") {
  readgrade::testing::TempDir dir("manifest");
  readgrade::testing::write_file(dir / "m.json", R"([{"path": "nope.txt", "grade": 1}])");
  CHECK_THROWS_AS(load_corpus(load_manifest(dir / "m.json"), readgrade::testing::default_config()),
                  LoadError);
  readgrade::testing::write_file(dir / "g.json", R"([{"path": "x.txt", "grade": "two"}])");
  CHECK_THROWS_AS(load_manifest(dir / "g.json"), ManifestError);
  CHECK_THROWS_AS(load_manifest(dir / "absent.json"), LoadError);
}

TEST_CASE("tree count mismatch names the document") {
  const auto manifest = load_manifest(fixture("corpus3/bad_manifest.json"));
  const auto docs = load_corpus(manifest, readgrade::testing::default_config());
  try {
    features::featurize(docs[0], features::Resources{});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("d1") != std::string::npos);
  }
}

TEST_CASE("serialize is stable") {
  CHECK(doc("A b. C d.").serialize() == doc("A b. C d.").serialize());
}
