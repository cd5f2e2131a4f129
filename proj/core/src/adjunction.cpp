#include "dblcat/adjunction.hpp"

#include <algorithm>
#include <functional>
#include <memory>

#include "dblcat/closure.hpp"
#include "dblcat/functor_map.hpp"
#include "dblcat/sampling.hpp"

namespace dblcat {

namespace {

// Replace every derived-presentation generator by its class representative
// over the base; formal identities pass through (shared decoration).
CellExpr splice(const CellExpr& e, const std::map<std::string, CellExpr>& reps) {
  switch (e.tag()) {
    case CellTag::Gen: {
      auto it = reps.find(e.name());
      if (it == reps.end()) {
        throw EngineError(ViolationKind::UnknownName,
                          "no representative for derived cell '" + e.name() + "'");
      }
      return it->second;
    }
    case CellTag::FId:
      return e;
    case CellTag::VComp:
      return CellExpr::vcomp(splice(e.upper(), reps), splice(e.lower(), reps));
    case CellTag::HComp:
      return CellExpr::hcomp(splice(e.after(), reps), splice(e.before(), reps));
  }
  throw EngineError(ViolationKind::IllTyped, "empty expression");
}

// Rename base generators into the bounded horizontalization presentation:
// each leaf becomes the derived cell naming its class.
CellExpr retag(const CellExpr& e, CongruenceEngine& engine) {
  switch (e.tag()) {
    case CellTag::Gen:
      return CellExpr::gen(engine.class_representative(engine.add(e)).str());
    case CellTag::FId:
      return e;
    case CellTag::VComp:
      return CellExpr::vcomp(retag(e.upper(), engine), retag(e.lower(), engine));
    case CellTag::HComp:
      return CellExpr::hcomp(retag(e.after(), engine), retag(e.before(), engine));
  }
  throw EngineError(ViolationKind::IllTyped, "empty expression");
}

}  // namespace

ValidationReport check_triangle_H_against(const QuotientSpec& q,
                                          const HorizontalizationResult& h, int budget) {
  ValidationReport report;
  report.incomplete = h.incomplete;

  EqualOptions opt;
  opt.budget = budget;
  CongruenceEngine engine(*q.base, q.extra_relations, opt);
  engine.saturate();

  // unit then projection fixes every globular class
  for (const auto& [name, rep] : h.reps) {
    CellExpr back = engine.class_representative(engine.add(rep));
    if (back.str() != name) {
      report.add(ViolationKind::Disagreement,
                 "projection moves derived cell '" + name + "' to '" + back.str() + "'");
    }
  }
  // and intertwines the induced composition tables
  auto check_table = [&](const auto& table, CellTag tag, const char* which) {
    for (const auto& [key, result] : table) {
      CellExpr lhs = tag == CellTag::VComp
                         ? CellExpr::vcomp(h.reps.at(key.first), h.reps.at(key.second))
                         : CellExpr::hcomp(h.reps.at(key.first), h.reps.at(key.second));
      int il = engine.add(lhs);
      int ir = engine.add(h.reps.at(result));
      engine.saturate();
      if (!engine.same(il, ir)) {
        report.add(ViolationKind::Disagreement,
                   std::string(which) + " table entry (" + key.first + ", " + key.second +
                       ") is not respected by the projection");
      }
    }
  };
  check_table(h.derived.vcompose_table, CellTag::VComp, "vertical");
  check_table(h.derived.hcompose_table, CellTag::HComp, "horizontal");
  for (const auto& [f, id] : h.derived.identity2) {
    int il = engine.add(CellExpr::gen(q.base->identity_cell_of(f)));
    int ir = engine.add(h.reps.at(id));
    engine.saturate();
    if (!engine.same(il, ir)) {
      report.add(ViolationKind::Disagreement, "identity 2-cell of '" + f + "' is not fixed");
    }
  }
  return report;
}

ValidationReport check_triangle_H(const QuotientSpec& q, int budget) {
  return check_triangle_H_against(q, horizontalization(q, budget), budget);
}

ValidationReport check_triangle_Q_against(const Presentation& b,
                                          const HorizontalizationResult& h, int budget,
                                          int samples, std::uint64_t seed) {
  ValidationReport report;
  report.incomplete = h.incomplete;

  EqualOptions opt;
  opt.budget = budget;
  CongruenceEngine engine(b, {}, opt);
  engine.saturate();

  ExprSampler sampler(b, seed, std::max(2, budget / 2));
  for (int i = 0; i < samples; ++i) {
    CellExpr e = sampler.sample();
    if (e.leaf_count() > budget) continue;
    CellExpr tagged = retag(e, engine);
    boundary(h.derived, tagged);  // the re-tagged cell lives over the derived base
    CellExpr back = splice(tagged, h.reps);
    Verdict v = equal(b, e, back, EqualOptions{budget});
    if (!v.equal()) {
      report.add(ViolationKind::Disagreement,
                 "unit then projection moved cell '" + e.str() + "' to '" + back.str() + "' (" +
                     v.str() + ")");
    }
  }
  return report;
}

ValidationReport check_triangle_Q(const Presentation& b, int budget, int samples,
                                  std::uint64_t seed) {
  QuotientSpec free_q{std::make_shared<Presentation>(b), {}};
  return check_triangle_Q_against(b, horizontalization(free_q, budget), budget, samples, seed);
}

ValidationReport check_naturality_against(const DecoratedFunctorSpec& f,
                                          const QuotientSpec& q_src, const QuotientSpec& q_tgt,
                                          const HorizontalizationResult& h_src,
                                          const std::map<std::string, CellExpr>& mapped_reps,
                                          int budget, int samples, std::uint64_t seed) {
  ValidationReport report;
  report.incomplete = h_src.incomplete;
  FreeFunctor ff{f};

  // induced map on cells over the derived source: generators through their
  // image classes, formal identities through the decoration map
  std::function<CellExpr(const CellExpr&)> induced = [&](const CellExpr& e) -> CellExpr {
    switch (e.tag()) {
      case CellTag::Gen:
        return mapped_reps.at(e.name());
      case CellTag::FId:
        return CellExpr::fid(f.vertical.at(e.name()));
      case CellTag::VComp:
        return CellExpr::vcomp(induced(e.upper()), induced(e.lower()));
      case CellTag::HComp:
        return CellExpr::hcomp(induced(e.after()), induced(e.before()));
    }
    throw EngineError(ViolationKind::IllTyped, "empty expression");
  };

  ExprSampler sampler(h_src.derived, seed, std::max(2, budget / 2));
  for (int i = 0; i < samples; ++i) {
    CellExpr cell = sampler.sample();  // a cell of Q over the derived source
    if (cell.leaf_count() > budget) continue;
    // route one: project to the source target, then map
    CellExpr via_projection = map_cell(ff, splice(cell, h_src.reps));
    // route two: map the derived cell, then project in the target
    CellExpr via_functor = induced(cell);
    Verdict v = equal_mod(q_tgt, via_projection, via_functor, EqualOptions{budget});
    if (!v.equal()) {
      report.add(ViolationKind::Disagreement,
                 "naturality square fails at '" + cell.str() + "' (" + v.str() + ")");
    }
  }
  (void)q_src;
  return report;
}

ValidationReport check_naturality(const DecoratedFunctorSpec& f, const QuotientSpec& q_src,
                                  const QuotientSpec& q_tgt, int budget, int samples,
                                  std::uint64_t seed) {
  ValidationReport report;
  if (!f.source || !q_src.base || !(*f.source == *q_src.base) || !f.target || !q_tgt.base ||
      !(*f.target == *q_tgt.base)) {
    report.add(ViolationKind::CompatibilityError,
               "functor endpoints do not match the quotient bases");
    return report;
  }
  ValidationReport spec_report = validate_functor(f);
  if (!spec_report.ok()) {
    report.add(ViolationKind::CompatibilityError, "functor spec does not validate");
    report.merge(spec_report);
    return report;
  }
  FreeFunctor ff{f};

  // the functor must descend to the quotients
  for (const auto& [l, r] : q_src.extra_relations) {
    Verdict v = equal_mod(q_tgt, map_cell(ff, l), map_cell(ff, r), EqualOptions{budget});
    if (!v.equal()) {
      report.add(ViolationKind::CompatibilityError,
                 "no induced functor: image of relation " + l.str() + " = " + r.str() +
                     " is not an equality in the target (" + v.str() + ")");
    }
  }
  if (!report.ok()) return report;

  HorizontalizationResult h_src = horizontalization(q_src, budget);
  HorizontalizationResult h_tgt = horizontalization(q_tgt, budget);

  EqualOptions opt;
  opt.budget = budget;
  CongruenceEngine tgt_engine(*q_tgt.base, q_tgt.extra_relations, opt);
  tgt_engine.saturate();
  std::map<std::string, CellExpr> mapped_reps;
  for (const auto& [name, rep] : h_src.reps) {
    mapped_reps[name] = tgt_engine.class_representative(tgt_engine.add(map_cell(ff, rep)));
  }
  ValidationReport inner = check_naturality_against(f, q_src, q_tgt, h_src, mapped_reps, budget,
                                                    samples, seed);
  inner.incomplete = inner.incomplete || h_tgt.incomplete;
  report.merge(inner);
  return report;
}

}  // namespace dblcat
