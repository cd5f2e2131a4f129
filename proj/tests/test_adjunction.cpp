#include <doctest.h>

#include "dblcat/adjunction.hpp"
#include "dblcat/corpus.hpp"

using namespace dblcat;

TEST_CASE("the first triangle holds on the bundled verticalizations") {
  CHECK(check_triangle_H(corpus_quotient("z2-abelian"), 8).ok());
  CHECK(check_triangle_H(corpus_quotient("point"), 8).ok());
}

TEST_CASE("a corrupted projection table fails the first triangle") {
  QuotientSpec q = corpus_quotient("z2-abelian");
  HorizontalizationResult h = horizontalization(q, 8);
  REQUIRE(h.reps.count("-1") == 1);
  h.reps["-1"] = CellExpr::gen("1");  // the unit no longer includes the class
  ValidationReport report = check_triangle_H_against(q, h, 8);
  CHECK_FALSE(report.ok());
}

TEST_CASE("the second triangle holds on the bundled presentations") {
  CHECK(check_triangle_Q(*corpus_presentation("point"), 6, 30, 0).ok());
  CHECK(check_triangle_Q(*corpus_presentation("z2"), 6, 30, 0).ok());
}

TEST_CASE("a corrupted unit fails the second triangle") {
  const Presentation& z2 = *corpus_presentation("z2");
  QuotientSpec free_q{corpus_presentation("z2"), {}};
  HorizontalizationResult h = horizontalization(free_q, 6);
  REQUIRE(h.reps.count("-1") == 1);
  h.reps["-1"] = CellExpr::gen("1");
  ValidationReport report = check_triangle_Q_against(z2, h, 6, 30, 0);
  CHECK_FALSE(report.ok());
}

TEST_CASE("naturality of the projections across the abelianization") {
  ValidationReport report = check_naturality(corpus_functor("id-z2"), corpus_quotient("z2"),
                                             corpus_quotient("z2-abelian"), 6, 20, 0);
  CHECK(report.ok());
}

TEST_CASE("the identity square is natural") {
  ValidationReport report =
      check_naturality(corpus_functor("id-z2"), corpus_quotient("z2-abelian"),
                       corpus_quotient("z2-abelian"), 6, 20, 0);
  CHECK(report.ok());
}

TEST_CASE("a mutated image table fails the naturality square") {
  QuotientSpec src = corpus_quotient("z2");
  QuotientSpec tgt = corpus_quotient("z2-abelian");
  DecoratedFunctorSpec f = corpus_functor("id-z2");
  HorizontalizationResult h_src = horizontalization(src, 6);
  std::map<std::string, CellExpr> mapped;
  for (const auto& [name, rep] : h_src.reps) mapped[name] = rep;
  REQUIRE(mapped.count("-1") == 1);
  mapped["-1"] = CellExpr::gen("1");
  ValidationReport report = check_naturality_against(f, src, tgt, h_src, mapped, 6, 20, 0);
  CHECK_FALSE(report.ok());
}

TEST_CASE("incompatible quotients are rejected") {
  // the reverse direction has no induced functor: the abelian relation does
  // not hold in the free target
  ValidationReport report = check_naturality(corpus_functor("id-z2"),
                                             corpus_quotient("z2-abelian"),
                                             corpus_quotient("z2"), 6, 10, 0);
  REQUIRE_FALSE(report.ok());
  CHECK(report.violations.front().kind == ViolationKind::CompatibilityError);
}

TEST_CASE("mismatched endpoints are rejected") {
  ValidationReport report = check_naturality(corpus_functor("id-point"), corpus_quotient("z2"),
                                             corpus_quotient("z2-abelian"), 6, 10, 0);
  REQUIRE_FALSE(report.ok());
  CHECK(report.violations.front().kind == ViolationKind::CompatibilityError);
}
