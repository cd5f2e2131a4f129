#include <doctest.h>

#include <random>

#include "dblcat/expr.hpp"

using namespace dblcat;

TEST_CASE("grammar fixes the composition structure") {
  CellExpr e = parse_expr("-1 . i[-1] . -1");
  REQUIRE(e.tag() == CellTag::VComp);
  CHECK(e.upper().tag() == CellTag::VComp);
  CHECK(e.lower() == CellExpr::gen("-1"));
  CHECK(e.upper().upper() == CellExpr::gen("-1"));
  CHECK(e.upper().lower() == CellExpr::fid("-1"));
}

TEST_CASE("star binds tighter than dot") {
  CellExpr e = parse_expr("a * b . c");
  REQUIRE(e.tag() == CellTag::VComp);
  CHECK(e.upper().tag() == CellTag::HComp);
  CHECK(e.lower() == CellExpr::gen("c"));
}

TEST_CASE("parentheses override the precedence") {
  CellExpr e = parse_expr("(a . b) * c");
  REQUIRE(e.tag() == CellTag::HComp);
  CHECK(e.after().tag() == CellTag::VComp);
  CHECK(e.before() == CellExpr::gen("c"));
}

TEST_CASE("names may contain digits, signs and underscores") {
  CHECK(parse_expr("x_1+2-3") == CellExpr::gen("x_1+2-3"));
  CHECK(parse_expr("i[alpha_0]") == CellExpr::fid("alpha_0"));
  CHECK(parse_expr("i") == CellExpr::gen("i"));
  CHECK(parse_expr("i2 * i") .tag() == CellTag::HComp);
}

TEST_CASE("syntax errors carry line and column") {
  try {
    parse_expr("a .\n. b");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(parse_expr("(a . b"), ParseError);
  CHECK_THROWS_AS(parse_expr("a )"), ParseError);
  CHECK_THROWS_AS(parse_expr("i[x"), ParseError);
  CHECK_THROWS_AS(parse_expr(""), ParseError);
}

namespace {

CellExpr random_tree(std::mt19937_64& rng, int depth) {
  if (depth == 0 || rng() % 3 == 0) {
    return rng() % 2 == 0 ? CellExpr::gen(rng() % 2 ? "-1" : "1") : CellExpr::fid("-1");
  }
  CellExpr a = random_tree(rng, depth - 1);
  CellExpr b = random_tree(rng, depth - 1);
  return rng() % 2 == 0 ? CellExpr::vcomp(a, b) : CellExpr::hcomp(a, b);
}

}  // namespace

TEST_CASE("printing reparses to the identical tree") {
  std::mt19937_64 rng(0);
  for (int round = 0; round < 500; ++round) {
    CellExpr e = random_tree(rng, 4);
    CHECK(parse_expr(e.str()) == e);
  }
}

TEST_CASE("spine flattening round-trips") {
  std::mt19937_64 rng(1);
  for (int round = 0; round < 100; ++round) {
    CellExpr e = random_tree(rng, 3);
    auto factors = e.vertical_factors();
    CHECK(CellExpr::from_vertical_factors(factors).vertical_factors().size() == factors.size());
    auto elems = e.horizontal_elements();
    CHECK(CellExpr::from_horizontal_elements(elems).horizontal_elements().size() == elems.size());
  }
}
