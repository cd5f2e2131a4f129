#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "dblcat/corpus.hpp"
#include "dblcat/io.hpp"

using namespace dblcat;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

std::string data_path(const std::string& name) {
  // tests run from the build tree; the data files live beside the sources
  for (const std::string prefix : {"data/", "../data/", "../../data/"}) {
    std::ifstream probe(prefix + name);
    if (probe.good()) return prefix + name;
  }
  return "data/" + name;
}

}  // namespace

TEST_CASE("presentations round-trip through JSON") {
  for (const std::string name : {"point", "z2"}) {
    auto p = corpus_presentation(name);
    std::string text = presentation_to_json(*p);
    Presentation back = parse_presentation_json(text);
    CHECK(back == *p);
    // serialization is deterministic
    CHECK(presentation_to_json(back) == text);
  }
}

TEST_CASE("the shipped corpus files are bit-exact serializations") {
  CHECK(slurp(data_path("point.json")) == presentation_to_json(*corpus_presentation("point")));
  CHECK(slurp(data_path("z2.json")) == presentation_to_json(*corpus_presentation("z2")));
}

TEST_CASE("quotient files load with expression relations") {
  QuotientSpec q = load_quotient_file(data_path("z2-abelian.json"));
  REQUIRE(q.extra_relations.size() == 1);
  CHECK(q.extra_relations[0].first == parse_expr("-1 . i[-1]"));
  CHECK(q.extra_relations[0].second == parse_expr("i[-1] . -1"));
  CHECK(*q.base == *corpus_presentation("z2"));
}

TEST_CASE("functor files load and validate") {
  DecoratedFunctorSpec f = load_functor_file(data_path("collapse.json"));
  CHECK(validate_functor(f).ok());
  CHECK(f.cells2.at("-1") == "1");
}

TEST_CASE("corpus names resolve, files win over names") {
  CHECK(resolve_presentation("z2")->cells.size() == 2);
  CHECK(resolve_quotient("z2-abelian").extra_relations.size() == 1);
  CHECK(resolve_functor("collapse").cells2.size() == 2);
  CHECK_THROWS_AS(resolve_presentation("nope"), EngineError);

  std::string tmp = "tmp_pres_override.json";
  {
    std::ofstream out(tmp);
    out << presentation_to_json(*corpus_presentation("point"));
  }
  auto p = resolve_presentation(tmp);
  CHECK(p->cells.size() == 1);
  std::remove(tmp.c_str());
}

TEST_CASE("malformed documents are rejected with IllTyped") {
  CHECK_THROWS_AS(parse_presentation_json("{"), EngineError);
  CHECK_THROWS_AS(parse_presentation_json("{\"objects\": []}"), EngineError);
}

TEST_CASE("quotients and functors serialize deterministically") {
  QuotientSpec q = corpus_quotient("z2-abelian");
  CHECK(quotient_to_json(q) == quotient_to_json(q));
  DecoratedFunctorSpec f = corpus_functor("collapse");
  CHECK(functor_to_json(f) == functor_to_json(f));
}
