#include "dblcat/quotient.hpp"

#include <algorithm>

#include "dblcat/closure.hpp"

namespace dblcat {

ValidationReport validate_quotient(const QuotientSpec& q) {
  ValidationReport report;
  if (!q.base) {
    report.add(ViolationKind::MissingEntry, "quotient has no base presentation");
    return report;
  }
  report.merge(validate_presentation(*q.base));
  for (const auto& [l, r] : q.extra_relations) {
    try {
      Boundary bl = boundary(*q.base, l);
      Boundary br = boundary(*q.base, r);
      if (!(bl == br)) {
        report.add(ViolationKind::CompatibilityError,
                   "relation pair has mismatched boundaries: " + l.str() + " vs " + r.str());
      }
    } catch (const EngineError& e) {
      report.add(e.kind(), std::string("relation pair: ") + e.what());
    }
  }
  return report;
}

Verdict equal_mod(const QuotientSpec& q, const CellExpr& x, const CellExpr& y,
                  const EqualOptions& opt) {
  EqualOptions eo = opt;
  eo.budget = std::max({opt.budget, prenormalize(*q.base, x).leaf_count(),
                        prenormalize(*q.base, y).leaf_count()});
  CongruenceEngine engine(*q.base, q.extra_relations, eo);
  return engine.query(x, y);
}

HorizontalizationResult horizontalization(const QuotientSpec& q, int budget) {
  const Presentation& base = *q.base;
  EqualOptions opt;
  opt.budget = budget;
  CongruenceEngine engine(base, q.extra_relations, opt);
  engine.saturate();

  HorizontalizationResult out;
  out.incomplete = engine.truncated();
  Presentation& derived = out.derived;
  derived.objects = base.objects;
  derived.decoration = base.decoration;
  derived.horizontal = base.horizontal;
  derived.mode = base.mode;
  derived.coherence = base.coherence;

  // materializing composites can merge classes; iterate to a fixpoint before
  // naming anything
  auto globular_classes = [&]() {
    std::vector<int> out_classes;
    for (int root : engine.canonical_classes()) {
      if (is_globular(base, engine.frame(root))) out_classes.push_back(root);
    }
    return out_classes;
  };
  while (true) {
    std::size_t before = static_cast<std::size_t>(engine.node_count()) +
                         engine.canonical_classes().size();
    for (int x : globular_classes()) {
      for (int y : globular_classes()) {
        for (CellTag tag : {CellTag::VComp, CellTag::HComp}) {
          if (engine.composable(tag, engine.find(x), engine.find(y))) {
            engine.compose_classes(tag, engine.find(x), engine.find(y));
          }
        }
      }
    }
    engine.saturate();
    std::size_t after = static_cast<std::size_t>(engine.node_count()) +
                        engine.canonical_classes().size();
    if (after == before) break;
  }
  out.incomplete = out.incomplete || engine.truncated();

  std::vector<int> globular = globular_classes();
  std::map<int, std::string> name_of;
  for (int root : globular) {
    CellExpr rep = engine.class_representative(root);
    std::string name = rep.str();
    derived.cells.push_back({name, engine.frame(root).d, engine.frame(root).c});
    name_of[root] = name;
    out.reps[name] = rep;
  }
  std::sort(derived.cells.begin(), derived.cells.end(),
            [](const TwoCellData& a, const TwoCellData& b) { return a.name < b.name; });
  auto name_of_class = [&](int canonical) -> const std::string* {
    auto it = name_of.find(engine.find(canonical));
    return it == name_of.end() ? nullptr : &it->second;
  };

  for (const auto& f : base.horizontal.morphisms) {
    int id_class = engine.find(engine.add(CellExpr::gen(base.identity_cell_of(f.name))));
    const std::string* name = name_of_class(id_class);
    if (!name) {
      out.incomplete = true;
      continue;
    }
    derived.identity2[f.name] = *name;
  }

  auto fill_table = [&](CellTag tag, auto& table) {
    for (int x : globular) {
      for (int y : globular) {
        if (!engine.composable(tag, x, y)) continue;
        auto composite = engine.compose_classes(tag, x, y);
        if (!composite) {
          out.incomplete = true;
          continue;
        }
        const std::string* name = name_of_class(*composite);
        if (!name) {
          out.incomplete = true;  // composite class surfaced past the budget
          continue;
        }
        table[{name_of.at(x), name_of.at(y)}] = *name;
      }
    }
  };
  fill_table(CellTag::VComp, derived.vcompose_table);
  fill_table(CellTag::HComp, derived.hcompose_table);

  // saturation test: every composable pair of classes must resolve inside
  // the budget, otherwise unseen classes may hide past it
  std::vector<int> all = engine.canonical_classes();
  for (int x : all) {
    for (int y : all) {
      for (CellTag tag : {CellTag::VComp, CellTag::HComp}) {
        if (!engine.composable(tag, x, y)) continue;
        if (engine.class_min_size(x) + engine.class_min_size(y) > budget) {
          out.incomplete = true;
        }
      }
    }
  }
  return out;
}

ValidationReport check_verticalization(const QuotientSpec& q, int budget) {
  ValidationReport report = validate_quotient(q);
  if (!report.ok()) return report;
  const Presentation& base = *q.base;

  HorizontalizationResult h = horizontalization(q, budget);
  report.incomplete = h.incomplete;

  // base 2-cells must remain pairwise distinct
  EqualOptions opt;
  opt.budget = budget;
  CongruenceEngine engine(base, q.extra_relations, opt);
  engine.saturate();
  std::map<int, std::string> base_cell_of_class;
  for (const auto& c : base.cells) {
    int root = engine.find(engine.add(CellExpr::gen(c.name)));
    auto [it, inserted] = base_cell_of_class.emplace(root, c.name);
    if (!inserted) {
      report.add(ViolationKind::GlobularCollapse,
                 "globular collapse: base 2-cells '" + it->second + "' and '" + c.name +
                     "' fall in one class");
    }
  }

  // every globular class must be named by a base 2-cell
  for (const auto& [name, rep] : h.reps) {
    int root = engine.find(engine.add(rep));
    if (!base_cell_of_class.count(root)) {
      report.add(ViolationKind::NewGlobularCell,
                 "new globular cell: class of '" + rep.str() + "' (level " +
                     std::to_string(engine.class_min_level(root)) + ", size " +
                     std::to_string(engine.class_min_size(root)) +
                     ") is not named by any base 2-cell");
    }
  }
  if (!report.ok()) return report;

  // induced tables must agree with the base tables under renaming
  auto base_name = [&](const std::string& derived_name) {
    int root = engine.find(engine.add(h.reps.at(derived_name)));
    return base_cell_of_class.at(root);
  };
  for (const auto& [key, result] : h.derived.vcompose_table) {
    auto expect = base.vcompose(base_name(key.first), base_name(key.second));
    if (!expect || *expect != base_name(result)) {
      report.add(ViolationKind::Disagreement,
                 "induced vertical composition disagrees with the base at (" + key.first + ", " +
                     key.second + ")");
    }
  }
  for (const auto& [key, result] : h.derived.hcompose_table) {
    auto expect = base.hcompose(base_name(key.first), base_name(key.second));
    if (!expect || *expect != base_name(result)) {
      report.add(ViolationKind::Disagreement,
                 "induced horizontal composition disagrees with the base at (" + key.first +
                     ", " + key.second + ")");
    }
  }
  for (const auto& [f, id] : h.derived.identity2) {
    if (base_name(id) != base.identity_cell_of(f)) {
      report.add(ViolationKind::Disagreement,
                 "induced identity 2-cell disagrees with the base at " + f);
    }
  }
  return report;
}

}  // namespace dblcat
