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
#include "readgrade/synth.hpp"
#include "test_support.hpp"

using namespace readgrade;
using namespace readgrade::features;
using readgrade::testing::TempDir;

namespace {

struct SynthCorpus {
  TempDir dir{"features"};
  CorpusManifest manifest;
  Resources resources;
  std::vector<Document> docs;

  explicit SynthCorpus(int docs_per_grade = 3) {
    synth::CorpusOptions options;
    options.docs_per_grade = docs_per_grade;
    manifest = load_manifest(synth::write_corpus(dir.path(), options));
    resources = load_resources(manifest.resources);
    docs = load_corpus(manifest, resources.tokenizer);
  }
};

}  // namespace

TEST_CASE("standard registry") {
  const auto& r = FeatureRegistry::standard();
  CHECK(r.size() == 47);
  CHECK(r.at(0).name == "word_number");
  CHECK(r.at(46).name == "corefer_distance");
  CHECK(r.index_of("vq3") == 8);
  CHECK(!r.index_of("vq1"));
  CHECK(r.hash().size() == 16);
  CHECK(r.names_in(Category::kParsing).size() == 5);
  CHECK(r.names_in(Category::kGrammar).size() == 6);
  CHECK(r.names_in(Category::kAoa).size() == 19);
  CHECK(r.names_in(Category::kSemantic).size() == 7);
  CHECK(r.names_in(Category::kCoreference).size() == 5);

  const auto names = r.names();
  std::set<std::string> unique(names.begin(), names.end());
  CHECK(unique.size() == 47);

  auto reordered = r.descriptors();
  std::swap(reordered[0], reordered[1]);
  CHECK(FeatureRegistry(reordered).hash() != r.hash());
}

TEST_CASE("fully annotated document yields every feature") {
  SynthCorpus corpus;
  const auto v = featurize(corpus.docs.front(), corpus.resources);
  CHECK(v.values.size() == 47);
  for (std::size_t i = 0; i < 47; ++i) {
    CAPTURE(FeatureRegistry::standard().at(i).name);
    CHECK(!v.is_missing(i));
    CHECK(std::isfinite(v.values[i]));
  }
  CHECK(!v.heuristic_coref);
  CHECK(v.grade == 1.0);
}

TEST_CASE("documents without trees mask parse-dependent features") {
  SynthCorpus corpus;
  const Document bare = tokenize(readgrade::read_text_file(corpus.manifest.entries[0].document),
                                 corpus.resources.tokenizer, "bare");
  const auto v = featurize(bare, corpus.resources);
  std::size_t masked = 0;
  for (std::size_t i = 0; i < 47; ++i) masked += v.is_missing(i) ? 1 : 0;
  CHECK(masked == 11);
  CHECK(v.heuristic_coref);

  FeaturizeOptions fallback;
  fallback.tree_fallback = TreeFallback::kFlat;
  const auto f = featurize(bare, corpus.resources, fallback);
  CHECK(f.fallback_trees);
  CHECK(!f.is_missing(*FeatureRegistry::standard().index_of("tree_height")));
}

TEST_CASE("missing resources mask their features") {
  const auto v = featurize(readgrade::testing::doc("Alice ran home. She waits."), Resources{});
  const auto& r = FeatureRegistry::standard();
  CHECK(v.is_missing(*r.index_of("gept1")));
  CHECK(v.is_missing(*r.index_of("vq16")));
  CHECK(v.is_missing(*r.index_of("bnc_frequency")));
  CHECK(v.is_missing(*r.index_of("wordnet3")));
  CHECK(!v.is_missing(*r.index_of("syllables")));
  CHECK(!v.is_missing(*r.index_of("pronoun")));
}

TEST_CASE("proportion groups sum to one") {
  SynthCorpus corpus;
  const auto& r = FeatureRegistry::standard();
  for (const auto& d : corpus.docs) {
    const auto v = featurize(d, corpus.resources);
    double gept = 0.0, vq = 0.0;
    for (const auto& name : r.names_in(Category::kAoa)) {
      (name.rfind("gept", 0) == 0 ? gept : vq) += v.values[*r.index_of(name)];
    }
    CHECK(gept == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(vq == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("parallel featurization preserves order and values") {
  SynthCorpus corpus;
  const auto serial = featurize_all(corpus.docs, corpus.resources, {}, FeatureRegistry::standard(), 1);
  const auto parallel = featurize_all(corpus.docs, corpus.resources, {}, FeatureRegistry::standard(), 4);
  CHECK(format_table(serial) == format_table(parallel));
}

TEST_CASE("feature table round trip") {
  SynthCorpus corpus;
  TempDir dir("table");
  auto vectors = featurize_all(corpus.docs, corpus.resources);
  vectors[0].missing[3] = 1;
  vectors[0].values[3] = 0.0;
  vectors[1].doc_id = "needs,\"quoting\"";
  const auto shape = export_table(vectors, dir / "f.csv");
  CHECK(shape.rows == vectors.size());
  CHECK(shape.columns == 48);
  const auto back = import_table(dir / "f.csv");
  REQUIRE(back.size() == vectors.size());
  for (std::size_t i = 0; i < back.size(); ++i) {
    CHECK(back[i].doc_id == vectors[i].doc_id);
    CHECK(back[i].values == vectors[i].values);
    CHECK(back[i].missing == vectors[i].missing);
    CHECK(back[i].grade == vectors[i].grade);
  }
  CHECK(format_table(back) == format_table(vectors));

  const auto empty = export_table({}, dir / "e.csv");
  CHECK(empty.rows == 0);
  CHECK(empty.columns == 48);
  CHECK(import_table(dir / "e.csv").empty());
}

TEST_CASE("table header must match the registry") {
  CHECK_THROWS(parse_table("id,word_number,grade\nx,1,1\n"));
}

TEST_CASE("format_double round trips") {
  for (double v : {0.1, 1.0 / 3.0, -7.381209577143745, 1e-300, 12345678.9}) {
    CHECK(std::stod(format_double(v)) == v);
  }
  CHECK(format_double(2.0) == "2");
}
