#include "dblcat/functor_map.hpp"

#include "dblcat/freegg.hpp"
#include "dblcat/projection.hpp"
#include "dblcat/sampling.hpp"

namespace dblcat {

FreeFunctor make_free_functor(DecoratedFunctorSpec spec) {
  ValidationReport report = validate_functor(spec);
  if (!report.ok()) {
    throw EngineError(ViolationKind::LawViolation,
                      "functor spec does not validate:\n" + report.str());
  }
  return FreeFunctor{std::move(spec)};
}

CellExpr map_cell(const FreeFunctor& f, const CellExpr& e) {
  switch (e.tag()) {
    case CellTag::Gen: {
      auto it = f.spec.cells2.find(e.name());
      if (it == f.spec.cells2.end()) {
        throw EngineError(ViolationKind::UnknownName, "no image for 2-cell '" + e.name() + "'");
      }
      return CellExpr::gen(it->second);
    }
    case CellTag::FId: {
      auto it = f.spec.vertical.find(e.name());
      if (it == f.spec.vertical.end()) {
        throw EngineError(ViolationKind::UnknownName,
                          "no image for vertical morphism '" + e.name() + "'");
      }
      return CellExpr::fid(it->second);
    }
    case CellTag::VComp:
      return CellExpr::vcomp(map_cell(f, e.upper()), map_cell(f, e.lower()));
    case CellTag::HComp:
      return CellExpr::hcomp(map_cell(f, e.after()), map_cell(f, e.before()));
  }
  throw EngineError(ViolationKind::IllTyped, "empty expression");
}

ValidationReport compose_check_against(const FreeFunctor& inner, const FreeFunctor& outer,
                                       const DecoratedFunctorSpec& claimed, int samples,
                                       int budget, std::uint64_t seed) {
  ValidationReport report;
  if (!(*inner.spec.target == *outer.spec.source)) {
    report.add(ViolationKind::CompositionError, "functor endpoints do not match");
    return report;
  }
  FreeFunctor composite{claimed};
  ExprSampler sampler(*inner.spec.source, seed, budget);
  for (int i = 0; i < samples; ++i) {
    CellExpr e = sampler.sample();
    CellExpr two_step = map_cell(outer, map_cell(inner, e));
    CellExpr one_step = map_cell(composite, e);
    if (!(two_step == one_step)) {
      report.add(ViolationKind::Disagreement,
                 "composite image differs at '" + e.str() + "': " + one_step.str() + " vs " +
                     two_step.str());
    }
  }
  return report;
}

ValidationReport compose_check(const FreeFunctor& inner, const FreeFunctor& outer, int samples,
                               int budget, std::uint64_t seed) {
  if (!(*inner.spec.target == *outer.spec.source)) {
    ValidationReport report;
    report.add(ViolationKind::CompositionError, "functor endpoints do not match");
    return report;
  }
  return compose_check_against(inner, outer, compose_specs(outer.spec, inner.spec), samples,
                               budget, seed);
}

ValidationReport check_free_characterization(const FreeFunctor& f, int budget) {
  ValidationReport report;
  const Presentation& src = *f.spec.source;

  // the horizontalization of the free functor restricts to the spec itself
  for (const auto& c : src.cells) {
    CellExpr image = map_cell(f, CellExpr::gen(c.name));
    if (image.tag() != CellTag::Gen || image.name() != f.spec.cells2.at(c.name)) {
      report.add(ViolationKind::Disagreement,
                 "free functor does not restrict to the spec at 2-cell '" + c.name + "'");
    }
  }
  for (const auto& m : src.decoration.morphisms) {
    CellExpr image = map_cell(f, CellExpr::fid(m.name));
    if (image.tag() != CellTag::FId || image.name() != f.spec.vertical.at(m.name)) {
      report.add(ViolationKind::Disagreement,
                 "free functor does not send i[" + m.name + "] to the formal identity of its image");
    }
  }

  // any leaf assignment agreeing with the spec on the generators extends to
  // the same functor on enumerated cells
  LeafAssignment mine;
  mine.target = f.spec.target;
  for (const auto& c : src.cells) mine.gens[c.name] = map_cell(f, CellExpr::gen(c.name));
  for (const auto& m : src.decoration.morphisms) {
    mine.fids[m.name] = map_cell(f, CellExpr::fid(m.name));
  }
  report.merge(check_determination(src, mine, mine, budget));
  return report;
}

}  // namespace dblcat
