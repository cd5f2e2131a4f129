#include <doctest.h>

#include "dblcat/corpus.hpp"
#include "dblcat/functor_map.hpp"
#include "dblcat/projection.hpp"
#include "dblcat/sampling.hpp"

using namespace dblcat;

TEST_CASE("the identity functor maps cells syntactically identically") {
  FreeFunctor id = make_free_functor(corpus_functor("id-z2"));
  ExprSampler sampler(*corpus_presentation("z2"), 0, 8);
  for (int i = 0; i < 200; ++i) {
    CellExpr e = sampler.sample();
    CHECK(map_cell(id, e) == e);
  }
}

TEST_CASE("the collapse functor lands every cell in the identity class") {
  FreeFunctor collapse = make_free_functor(corpus_functor("collapse"));
  const Presentation& point = *corpus_presentation("point");
  ExprSampler sampler(*corpus_presentation("z2"), 1, 6);
  for (int i = 0; i < 50; ++i) {
    CellExpr e = sampler.sample();
    CellExpr image = map_cell(collapse, e);
    CHECK(prenormalize(point, image) == CellExpr::gen("1"));
  }
}

TEST_CASE("mapping preserves shape, boundaries and levels") {
  FreeFunctor collapse = make_free_functor(corpus_functor("collapse"));
  const Presentation& z2 = *corpus_presentation("z2");
  const Presentation& point = *corpus_presentation("point");
  ExprSampler sampler(z2, 2, 8);
  for (int i = 0; i < 100; ++i) {
    CellExpr e = sampler.sample();
    CellExpr image = map_cell(collapse, e);
    CHECK(image.leaf_count() == e.leaf_count());
    CHECK(level(point, image) <= level(z2, e));
    Boundary fr = boundary(z2, e);
    Boundary fi = boundary(point, image);
    CHECK(fi.d == collapse.spec.cells1.at(fr.d));
    CHECK(fi.s == collapse.spec.vertical.at(fr.s));
  }
}

TEST_CASE("mapping commutes with prenormalization up to the congruence") {
  FreeFunctor collapse = make_free_functor(corpus_functor("collapse"));
  const Presentation& z2 = *corpus_presentation("z2");
  const Presentation& point = *corpus_presentation("point");
  ExprSampler sampler(z2, 3, 6);
  for (int i = 0; i < 50; ++i) {
    CellExpr e = sampler.sample();
    CellExpr a = prenormalize(point, map_cell(collapse, e));
    CellExpr b = map_cell(collapse, prenormalize(z2, e));
    CHECK(equal(point, a, b, EqualOptions{6}).equal());
  }
}

TEST_CASE("composition of free functors is syntactic") {
  FreeFunctor id = make_free_functor(corpus_functor("id-z2"));
  FreeFunctor collapse = make_free_functor(corpus_functor("collapse"));
  CHECK(compose_check(id, collapse, 100, 8).ok());
  CHECK(compose_check(id, id, 100, 8).ok());
}

TEST_CASE("endpoint mismatches are CompositionError") {
  FreeFunctor id_point = make_free_functor(corpus_functor("id-point"));
  FreeFunctor id_z2 = make_free_functor(corpus_functor("id-z2"));
  ValidationReport report = compose_check(id_point, id_z2, 10, 6);
  REQUIRE_FALSE(report.ok());
  CHECK(report.violations.front().kind == ViolationKind::CompositionError);
}

TEST_CASE("a mutated composite is caught") {
  FreeFunctor id = make_free_functor(corpus_functor("id-z2"));
  FreeFunctor collapse = make_free_functor(corpus_functor("collapse"));
  DecoratedFunctorSpec wrong = compose_specs(collapse.spec, id.spec);
  wrong.vertical["-1"] = "1";
  wrong.cells2["-1"] = "1";
  // still a valid functor to point, but not the composite
  ValidationReport report = compose_check_against(id, collapse, wrong, 100, 8);
  CHECK(report.ok());  // collapse already sends everything to 1
  wrong = compose_specs(collapse.spec, id.spec);
  FreeFunctor swap = make_free_functor(corpus_functor("id-z2"));
  DecoratedFunctorSpec claimed = swap.spec;
  report = compose_check_against(id, swap, claimed, 100, 8);
  CHECK(report.ok());
  claimed.cells2["-1"] = "1";
  claimed.cells2["1"] = "-1";
  report = compose_check_against(id, swap, claimed, 100, 8);
  CHECK_FALSE(report.ok());
}

TEST_CASE("free functors are characterized by their generator images") {
  CHECK(check_free_characterization(make_free_functor(corpus_functor("id-z2")), 6).ok());
  CHECK(check_free_characterization(make_free_functor(corpus_functor("collapse")), 6).ok());
}

TEST_CASE("an assignment disagreeing with the functor on one 2-cell is reported") {
  FreeFunctor id = make_free_functor(corpus_functor("id-z2"));
  auto z2 = corpus_presentation("z2");
  LeafAssignment from_functor;
  from_functor.target = id.spec.target;
  for (const auto& c : z2->cells) from_functor.gens[c.name] = map_cell(id, CellExpr::gen(c.name));
  for (const auto& m : z2->decoration.morphisms) {
    from_functor.fids[m.name] = map_cell(id, CellExpr::fid(m.name));
  }
  LeafAssignment mutated = from_functor;
  mutated.gens["-1"] = CellExpr::gen("1");
  ValidationReport report = check_determination(*z2, from_functor, mutated, 6);
  REQUIRE_FALSE(report.ok());
  CHECK(report.violations.front().message.find("-1") != std::string::npos);
}
