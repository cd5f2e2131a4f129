#include "dblcat/projection.hpp"

#include <algorithm>
#include <set>

#include "dblcat/closure.hpp"

namespace dblcat {

ProjectionHandle make_projection(QuotientSpec target, int budget) {
  ValidationReport report = check_verticalization(target, budget);
  if (!report.ok()) {
    throw EngineError(ViolationKind::LawViolation,
                      "target is not a verticalization:\n" + report.str());
  }
  return ProjectionHandle{std::move(target), budget};
}

Projected project(const ProjectionHandle& h, const CellExpr& e, const EqualOptions& opt) {
  EqualOptions eo = opt;
  eo.budget = std::max(opt.budget, prenormalize(*h.target.base, e).leaf_count());
  CongruenceEngine engine(*h.target.base, h.target.extra_relations, eo);
  int id = engine.add(e);
  engine.saturate();
  return Projected{engine.class_representative(id), engine.class_min_level(id)};
}

ValidationReport check_fullness_classes(const std::vector<FilteredClass>& classes, int k) {
  ValidationReport report;
  for (const auto& c : classes) {
    if (c.filtration_index > k) continue;
    if (c.min_member_level > k) {
      report.add(ViolationKind::Disagreement,
                 "class '" + c.representative + "' sits in H_" +
                     std::to_string(c.filtration_index) + " but its least preimage level is " +
                     std::to_string(c.min_member_level));
    }
  }
  return report;
}

ValidationReport check_fullness(const ProjectionHandle& h, int k, int budget) {
  const Presentation& base = *h.target.base;
  EqualOptions opt;
  opt.budget = budget;
  CongruenceEngine engine(base, h.target.extra_relations, opt);
  engine.saturate();

  ValidationReport report;
  report.incomplete = engine.truncated();

  // intrinsic horizontal filtration of the target, computed on classes:
  // H_1 holds the globular classes and the horizontal identity classes,
  // V_n closes under vertical composition, H_{n+1} collects horizontal
  // composites of V_n morphisms.
  std::set<int> h_layer;
  for (int root : engine.canonical_classes()) {
    if (is_globular(base, engine.frame(root))) h_layer.insert(root);
  }
  for (const auto& m : base.decoration.morphisms) {
    h_layer.insert(engine.find(engine.add(CellExpr::fid(m.name))));
  }

  std::map<int, int> filtration_index;  // class -> least n with class in H_n
  auto note_layer = [&](const std::set<int>& layer, int n) {
    for (int c : layer) filtration_index.emplace(c, n);
  };
  note_layer(h_layer, 1);

  auto close_under = [&](std::set<int> seed, CellTag tag) {
    std::set<int> out = std::move(seed);
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<int> snapshot(out.begin(), out.end());
      for (int x : snapshot) {
        for (int y : snapshot) {
          if (!engine.composable(tag, x, y)) continue;
          auto c = engine.compose_classes(tag, x, y);
          if (!c) {
            report.incomplete = true;
            continue;
          }
          if (out.insert(engine.find(*c)).second) grew = true;
        }
      }
    }
    return out;
  };

  std::set<int> v_layer = close_under(h_layer, CellTag::VComp);
  for (int n = 2; n <= k; ++n) {
    h_layer = close_under(v_layer, CellTag::HComp);
    note_layer(h_layer, n);
    v_layer = close_under(h_layer, CellTag::VComp);
  }

  std::vector<FilteredClass> classes;
  for (const auto& [root, n] : filtration_index) {
    int canonical = engine.find(root);
    classes.push_back(FilteredClass{engine.class_representative(canonical).str(), n,
                                    engine.class_min_level(canonical)});
  }
  report.merge(check_fullness_classes(classes, k));
  return report;
}

CellExpr LeafAssignment::apply(const CellExpr& e) const {
  switch (e.tag()) {
    case CellTag::Gen: {
      auto it = gens.find(e.name());
      if (it == gens.end()) {
        throw EngineError(ViolationKind::UnknownName,
                          "assignment lacks generator '" + e.name() + "'");
      }
      return it->second;
    }
    case CellTag::FId: {
      auto it = fids.find(e.name());
      if (it == fids.end()) {
        throw EngineError(ViolationKind::UnknownName,
                          "assignment lacks formal identity '" + e.name() + "'");
      }
      return it->second;
    }
    case CellTag::VComp:
      return CellExpr::vcomp(apply(e.upper()), apply(e.lower()));
    case CellTag::HComp:
      return CellExpr::hcomp(apply(e.after()), apply(e.before()));
  }
  throw EngineError(ViolationKind::IllTyped, "empty expression");
}

ValidationReport check_determination(const Presentation& b, const LeafAssignment& f1,
                                     const LeafAssignment& f2, int budget) {
  ValidationReport report;
  const Presentation& target = *f1.target;

  auto compare_leaf = [&](const CellExpr& leaf, const char* what) {
    CellExpr a, b2;
    try {
      a = f1.apply(leaf);
      b2 = f2.apply(leaf);
    } catch (const EngineError& e) {
      report.add(e.kind(), e.what());
      return;
    }
    try {
      if (!(boundary(target, a) == boundary(target, b2))) {
        report.add(ViolationKind::CompatibilityError,
                   std::string(what) + " '" + leaf.str() + "' maps to mismatched frames");
        return;
      }
    } catch (const EngineError& e) {
      report.add(ViolationKind::CompatibilityError,
                 std::string(what) + " '" + leaf.str() + "': " + e.what());
      return;
    }
    if (!(a == b2)) {
      Verdict v = equal(target, a, b2, EqualOptions{budget});
      if (!v.equal()) {
        report.add(ViolationKind::Disagreement, "assignments disagree on " + std::string(what) +
                                                    " '" + leaf.str() + "'");
      }
    }
  };
  for (const auto& c : b.cells) compare_leaf(CellExpr::gen(c.name), "generator");
  for (const auto& m : b.decoration.morphisms) compare_leaf(CellExpr::fid(m.name), "formal identity");
  if (!report.ok()) return report;

  // structural extensions over the enumerated universe
  EqualOptions opt;
  opt.budget = budget;
  CongruenceEngine universe(b, {}, opt);
  universe.saturate();
  report.incomplete = universe.truncated();
  for (int id = 0; id < universe.node_count(); ++id) {
    const CellExpr& e = universe.expr(id);
    CellExpr a = f1.apply(e);
    CellExpr b2 = f2.apply(e);
    if (a == b2) continue;
    Verdict v = equal(target, a, b2, EqualOptions{budget});
    if (!v.equal()) {
      report.add(ViolationKind::Disagreement, "extensions disagree on cell '" + e.str() + "'");
    }
  }
  return report;
}

}  // namespace dblcat
