#include <doctest.h>

#include "dblcat/corpus.hpp"
#include "dblcat/quotient.hpp"

using namespace dblcat;

namespace {

QuotientSpec z2_free() { return corpus_quotient("z2"); }
QuotientSpec z2_abelian() { return corpus_quotient("z2-abelian"); }

}  // namespace

TEST_CASE("bundled quotients validate") {
  CHECK(validate_quotient(z2_free()).ok());
  CHECK(validate_quotient(z2_abelian()).ok());
}

TEST_CASE("relation pairs must share a boundary") {
  QuotientSpec bad = z2_free();
  bad.extra_relations.emplace_back(parse_expr("-1"), parse_expr("i[-1]"));
  CHECK_FALSE(validate_quotient(bad).ok());
}

TEST_CASE("with no extra relations the quotient congruence is the free one") {
  CellExpr x = parse_expr("-1 . i[-1]");
  CellExpr y = parse_expr("i[-1] . -1");
  EqualOptions opt;
  opt.budget = 8;
  CHECK(equal_mod(z2_free(), x, x, opt).equal());
  CHECK_FALSE(equal_mod(z2_free(), x, y, opt).equal());
  CHECK(equal(*corpus_presentation("z2"), x, y, opt).distinct() ==
        equal_mod(z2_free(), x, y, opt).distinct());
}

TEST_CASE("the abelianized quotient is the Klein four-group on level 1") {
  EqualOptions opt;
  opt.budget = 8;
  // abab collapses to the identity
  CHECK(equal_mod(z2_abelian(), parse_expr("-1 . i[-1] . -1 . i[-1]"), parse_expr("1"), opt)
            .equal());
  // the two generators stay distinct
  CHECK_FALSE(equal_mod(z2_abelian(), parse_expr("-1 . i[-1]"), parse_expr("1"), opt).equal());
  Verdict v = equal_mod(z2_abelian(), parse_expr("-1"), parse_expr("i[-1]"), opt);
  CHECK_FALSE(v.equal());  // distinct frames
}

TEST_CASE("equal_mod is coarser than the free congruence") {
  std::vector<std::string> words = {"1", "-1", "-1 . i[-1]", "i[-1] . -1",
                                    "-1 . i[-1] . -1 . i[-1]"};
  EqualOptions opt;
  opt.budget = 8;
  const Presentation& base = *corpus_presentation("z2");
  for (const auto& a : words) {
    for (const auto& b : words) {
      if (!(boundary(base, parse_expr(a)) == boundary(base, parse_expr(b)))) continue;
      if (equal(base, parse_expr(a), parse_expr(b), opt).equal()) {
        CHECK(equal_mod(z2_abelian(), parse_expr(a), parse_expr(b), opt).equal());
      }
    }
  }
}

TEST_CASE("horizontalization of the point returns the point exactly") {
  HorizontalizationResult h = horizontalization(corpus_quotient("point"), 8);
  CHECK_FALSE(h.incomplete);
  CHECK(h.derived == *corpus_presentation("point"));
}

TEST_CASE("horizontalization of the abelian quotient recovers the base cells") {
  HorizontalizationResult h = horizontalization(z2_abelian(), 10);
  CHECK_FALSE(h.incomplete);
  REQUIRE(h.derived.cells.size() == 2);
  CHECK(h.derived.cells[0].name == "-1");
  CHECK(h.derived.cells[1].name == "1");
  CHECK(validate_presentation(h.derived).ok());
  // named isomorphism with the base: same tables under the same cell names
  const Presentation& base = *corpus_presentation("z2");
  CHECK(h.derived.identity2 == base.identity2);
  CHECK(h.derived.vcompose_table == base.vcompose_table);
  CHECK(h.derived.hcompose_table == base.hcompose_table);
}

TEST_CASE("the free construction over z2 grows new globular cells and saturates") {
  // the congruence closes the globular layer into the Klein four-group:
  // {1, -1, bab, abab} with bab = i[-1] . -1 . i[-1]
  HorizontalizationResult h = horizontalization(z2_free(), 8);
  CHECK_FALSE(h.incomplete);
  CHECK(h.derived.cells.size() == 4);
  // below saturation the budget truncation is flagged
  CHECK(horizontalization(z2_free(), 6).incomplete);
}

TEST_CASE("check_verticalization accepts the abelian quotient") {
  CHECK(check_verticalization(z2_abelian(), 10).ok());
  CHECK(check_verticalization(corpus_quotient("point"), 8).ok());
}

TEST_CASE("check_verticalization reports new globular cells over the free construction") {
  ValidationReport report = check_verticalization(z2_free(), 8);
  REQUIRE_FALSE(report.ok());
  bool witnessed = false;
  for (const auto& v : report.violations) {
    if (v.kind == ViolationKind::NewGlobularCell) witnessed = true;
  }
  CHECK(witnessed);
}

TEST_CASE("identifying the two base cells is a globular collapse") {
  QuotientSpec collapse = z2_free();
  collapse.extra_relations.emplace_back(parse_expr("-1"), parse_expr("1"));
  ValidationReport report = check_verticalization(collapse, 8);
  REQUIRE_FALSE(report.ok());
  CHECK(report.violations.front().kind == ViolationKind::GlobularCollapse);
}
