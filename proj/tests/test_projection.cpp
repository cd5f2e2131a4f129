#include <doctest.h>

#include "dblcat/corpus.hpp"
#include "dblcat/projection.hpp"

using namespace dblcat;

namespace {

ProjectionHandle abelian_handle() { return make_projection(corpus_quotient("z2-abelian"), 10); }

LeafAssignment inclusion(const std::shared_ptr<const Presentation>& p) {
  LeafAssignment f;
  f.target = p;
  for (const auto& c : p->cells) f.gens[c.name] = CellExpr::gen(c.name);
  for (const auto& m : p->decoration.morphisms) f.fids[m.name] = CellExpr::fid(m.name);
  return f;
}

}  // namespace

TEST_CASE("projections require a verified verticalization") {
  CHECK_NOTHROW(make_projection(corpus_quotient("z2-abelian"), 10));
  CHECK_THROWS_AS(make_projection(corpus_quotient("z2"), 8), EngineError);
}

TEST_CASE("generators project to their own classes") {
  ProjectionHandle h = abelian_handle();
  CHECK(project(h, parse_expr("-1")).representative == CellExpr::gen("-1"));
  CHECK(project(h, parse_expr("i[-1]")).representative == CellExpr::fid("-1"));
}

TEST_CASE("the abelianized target identifies the two commutators") {
  ProjectionHandle h = abelian_handle();
  EqualOptions opt;
  opt.budget = 8;
  CellExpr ab = parse_expr("-1 . i[-1]");
  CellExpr ba = parse_expr("i[-1] . -1");
  CHECK(project(h, ab, opt).representative == project(h, ba, opt).representative);
}

TEST_CASE("fullness holds for the abelian target at low filtration") {
  ProjectionHandle h = abelian_handle();
  CHECK(check_fullness(h, 1, 10).ok());
  CHECK(check_fullness(h, 2, 10).ok());
}

TEST_CASE("the fullness detector flags unreachable classes") {
  std::vector<FilteredClass> classes = {
      {"ok", 1, 1},
      {"deep", 1, 2},  // claims H_1 membership but only level-2 preimages
      {"later", 2, 2},
  };
  ValidationReport report = check_fullness_classes(classes, 1);
  REQUIRE_FALSE(report.ok());
  CHECK(report.violations.size() == 1);
  CHECK(report.violations.front().message.find("deep") != std::string::npos);
}

TEST_CASE("identical assignments extend identically") {
  auto z2 = corpus_presentation("z2");
  CHECK(check_determination(*z2, inclusion(z2), inclusion(z2), 6).ok());
}

TEST_CASE("assignments may agree only up to the congruence") {
  auto z2 = corpus_presentation("z2");
  LeafAssignment f1 = inclusion(z2);
  LeafAssignment f2 = inclusion(z2);
  // replace a generator image by a congruent expression
  f2.gens["1"] = parse_expr("-1 . -1");
  CHECK(check_determination(*z2, f1, f2, 6).ok());
}

TEST_CASE("a one-generator mutation is reported by name") {
  auto z2 = corpus_presentation("z2");
  LeafAssignment f1 = inclusion(z2);
  LeafAssignment f2 = inclusion(z2);
  f2.gens["-1"] = CellExpr::gen("1");
  ValidationReport report = check_determination(*z2, f1, f2, 6);
  REQUIRE_FALSE(report.ok());
  CHECK(report.violations.front().message.find("-1") != std::string::npos);
}

TEST_CASE("frame-incompatible assignments are CompatibilityError") {
  auto z2 = corpus_presentation("z2");
  LeafAssignment f1 = inclusion(z2);
  LeafAssignment f2 = inclusion(z2);
  f2.fids["-1"] = CellExpr::gen("-1");  // wrong frame for i[-1]
  ValidationReport report = check_determination(*z2, f1, f2, 6);
  REQUIRE_FALSE(report.ok());
  CHECK(report.violations.front().kind == ViolationKind::CompatibilityError);
}
