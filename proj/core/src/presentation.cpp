#include "dblcat/presentation.hpp"

#include <algorithm>
#include <set>

namespace dblcat {

const TwoCellData* Presentation::find_cell(const std::string& name) const {
  for (const auto& c : cells) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

const TwoCellData& Presentation::cell(const std::string& name) const {
  const TwoCellData* c = find_cell(name);
  if (!c) throw EngineError(ViolationKind::UnknownName, "unknown 2-cell '" + name + "'");
  return *c;
}

const std::string& Presentation::identity_cell_of(const std::string& one_cell) const {
  auto it = identity2.find(one_cell);
  if (it == identity2.end()) {
    throw EngineError(ViolationKind::UnknownName,
                      "no identity 2-cell for 1-cell '" + one_cell + "'");
  }
  return it->second;
}

std::optional<std::string> Presentation::vcompose(const std::string& upper,
                                                  const std::string& lower) const {
  auto it = vcompose_table.find({upper, lower});
  if (it == vcompose_table.end()) return std::nullopt;
  return it->second;
}

std::optional<std::string> Presentation::hcompose(const std::string& second,
                                                  const std::string& first) const {
  auto it = hcompose_table.find({second, first});
  if (it == hcompose_table.end()) return std::nullopt;
  return it->second;
}

bool Presentation::is_identity_cell(const std::string& cell_name) const {
  for (const auto& [f, id] : identity2) {
    if (id == cell_name) return true;
  }
  return false;
}

bool Presentation::is_unit_square(const std::string& cell_name) const {
  for (const auto& [f, id] : identity2) {
    if (id == cell_name && horizontal.is_identity(f)) return true;
  }
  return false;
}

namespace {

void check_interchange(const Presentation& p, ValidationReport& report) {
  // (b' • b) ∗ (a' • a) = (b' ∗ a') • (b ∗ a) over every typable quadruple
  for (const auto& a : p.cells) {
    for (const auto& ap : p.cells) {
      if (ap.dom != a.cod) continue;  // ap • a
      for (const auto& b : p.cells) {
        auto ba = p.hcompose(b.name, a.name);
        if (!ba) continue;
        for (const auto& bp : p.cells) {
          if (bp.dom != b.cod) continue;
          auto bpap = p.hcompose(bp.name, ap.name);
          if (!bpap) continue;
          auto lhs_v = p.vcompose(*bpap, *ba);
          auto vb = p.vcompose(bp.name, b.name);
          auto va = p.vcompose(ap.name, a.name);
          if (!lhs_v || !vb || !va) continue;  // gaps reported elsewhere
          auto rhs = p.hcompose(*vb, *va);
          if (!rhs) continue;
          if (*lhs_v != *rhs) {
            report.add(ViolationKind::LawViolation,
                       "interchange fails at (" + bp.name + ", " + b.name + ", " + ap.name +
                           ", " + a.name + "): " + *lhs_v + " ≠ " + *rhs);
          }
        }
      }
    }
  }
}

void check_weak_coherence(const Presentation& p, ValidationReport& report) {
  const Coherence& coh = *p.coherence;
  const FinCategory& h1 = p.horizontal;

  auto inverse_of = [&](const std::string& c) -> std::optional<std::string> {
    const TwoCellData& data = p.cell(c);
    for (const auto& y : p.cells) {
      if (y.dom != data.cod || y.cod != data.dom) continue;
      auto left = p.vcompose(y.name, c);
      auto right = p.vcompose(c, y.name);
      if (left && right && *left == p.identity_cell_of(data.dom) &&
          *right == p.identity_cell_of(data.cod)) {
        return y.name;
      }
    }
    return std::nullopt;
  };

  auto check_component = [&](const std::string& which, const std::string& f,
                             const std::string& comp, const std::string& want_dom,
                             const std::string& want_cod) {
    const TwoCellData* c = p.find_cell(comp);
    if (!c) {
      report.add(ViolationKind::UnknownName, which + " component at " + f +
                                                 " names unknown 2-cell '" + comp + "'");
      return;
    }
    if (c->dom != want_dom || c->cod != want_cod) {
      report.add(ViolationKind::IllTyped, which + " component at " + f + " is ill-framed");
      return;
    }
    if (!inverse_of(comp)) {
      report.add(ViolationKind::LawViolation,
                 which + " component '" + comp + "' at " + f + " is not invertible");
    }
  };

  for (const auto& f : h1.morphisms) {
    auto lit = coh.lambda.find(f.name);
    auto rit = coh.rho.find(f.name);
    if (lit == coh.lambda.end()) {
      report.add(ViolationKind::MissingEntry, "missing lambda component at " + f.name);
    } else {
      std::string dom = h1.compose_or_throw(h1.identity_of(f.cod), f.name);
      check_component("lambda", f.name, lit->second, dom, f.name);
    }
    if (rit == coh.rho.end()) {
      report.add(ViolationKind::MissingEntry, "missing rho component at " + f.name);
    } else {
      std::string dom = h1.compose_or_throw(f.name, h1.identity_of(f.dom));
      check_component("rho", f.name, rit->second, dom, f.name);
    }
  }
  for (const auto& f : h1.morphisms) {
    for (const auto& g : h1.morphisms) {
      if (g.dom != f.cod) continue;
      for (const auto& h : h1.morphisms) {
        if (h.dom != g.cod) continue;
        auto it = coh.associator.find({f.name, g.name, h.name});
        if (it == coh.associator.end()) {
          report.add(ViolationKind::MissingEntry, "missing associator component at (" + f.name +
                                                      ", " + g.name + ", " + h.name + ")");
          continue;
        }
        std::string hg = h1.compose_or_throw(h.name, g.name);
        std::string gf = h1.compose_or_throw(g.name, f.name);
        check_component("associator", f.name + "," + g.name + "," + h.name, it->second,
                        h1.compose_or_throw(hg, f.name), h1.compose_or_throw(h.name, gf));
      }
    }
  }
  if (!report.ok()) return;

  // naturality of the unitors
  for (const auto& x : p.cells) {
    const std::string& f = x.dom;
    const std::string& fp = x.cod;
    const std::string a = h1.morphism(f).dom;
    const std::string b = h1.morphism(f).cod;
    auto whisker_l = p.hcompose(p.identity_cell_of(h1.identity_of(b)), x.name);
    auto nat_l1 = whisker_l ? p.vcompose(coh.lambda.at(fp), *whisker_l) : std::nullopt;
    auto nat_l2 = p.vcompose(x.name, coh.lambda.at(f));
    if (nat_l1 && nat_l2 && *nat_l1 != *nat_l2) {
      report.add(ViolationKind::LawViolation, "lambda is not natural at " + x.name);
    }
    auto whisker_r = p.hcompose(x.name, p.identity_cell_of(h1.identity_of(a)));
    auto nat_r1 = whisker_r ? p.vcompose(coh.rho.at(fp), *whisker_r) : std::nullopt;
    auto nat_r2 = p.vcompose(x.name, coh.rho.at(f));
    if (nat_r1 && nat_r2 && *nat_r1 != *nat_r2) {
      report.add(ViolationKind::LawViolation, "rho is not natural at " + x.name);
    }
  }

  // naturality of the associator
  for (const auto& x : p.cells) {
    for (const auto& y : p.cells) {
      auto yx = p.hcompose(y.name, x.name);
      if (!yx) continue;
      for (const auto& z : p.cells) {
        auto zy = p.hcompose(z.name, y.name);
        auto z_yx = p.hcompose(z.name, *yx);
        if (!zy || !z_yx) continue;
        auto zy_x = p.hcompose(*zy, x.name);
        if (!zy_x) continue;
        const auto& ax = coh.associator.at({x.dom, y.dom, z.dom});
        const auto& ax2 = coh.associator.at({x.cod, y.cod, z.cod});
        auto lhs = p.vcompose(ax2, *zy_x);
        auto rhs = p.vcompose(*z_yx, ax);
        if (lhs && rhs && *lhs != *rhs) {
          report.add(ViolationKind::LawViolation, "associator is not natural at (" + z.name +
                                                      ", " + y.name + ", " + x.name + ")");
        }
      }
    }
  }

  // triangle
  for (const auto& f : h1.morphisms) {
    for (const auto& g : h1.morphisms) {
      if (g.dom != f.cod) continue;
      const std::string idb = h1.identity_of(f.cod);
      const auto& assoc = coh.associator.at({f.name, idb, g.name});
      auto lam = p.hcompose(p.identity_cell_of(g.name), coh.lambda.at(f.name));
      auto lhs = lam ? p.vcompose(*lam, assoc) : std::nullopt;
      auto rhs = p.hcompose(coh.rho.at(g.name), p.identity_cell_of(f.name));
      if (lhs && rhs && *lhs != *rhs) {
        report.add(ViolationKind::LawViolation,
                   "triangle fails at (" + f.name + ", " + g.name + ")");
      }
    }
  }

  // pentagon
  for (const auto& f : h1.morphisms) {
    for (const auto& g : h1.morphisms) {
      if (g.dom != f.cod) continue;
      for (const auto& h : h1.morphisms) {
        if (h.dom != g.cod) continue;
        for (const auto& k : h1.morphisms) {
          if (k.dom != h.cod) continue;
          std::string gf = h1.compose_or_throw(g.name, f.name);
          std::string hg = h1.compose_or_throw(h.name, g.name);
          std::string kh = h1.compose_or_throw(k.name, h.name);
          auto lhs = p.vcompose(coh.associator.at({gf, h.name, k.name}),
                                coh.associator.at({f.name, g.name, kh}));
          auto w1 = p.hcompose(p.identity_cell_of(k.name),
                               coh.associator.at({f.name, g.name, h.name}));
          auto w2 = p.hcompose(coh.associator.at({g.name, h.name, k.name}),
                               p.identity_cell_of(f.name));
          auto inner = w2 ? p.vcompose(coh.associator.at({f.name, hg, k.name}), *w2)
                          : std::nullopt;
          auto rhs = (w1 && inner) ? p.vcompose(*w1, *inner) : std::nullopt;
          if (lhs && rhs && *lhs != *rhs) {
            report.add(ViolationKind::LawViolation,
                       "pentagon fails at (" + f.name + ", " + g.name + ", " + h.name + ", " +
                           k.name + ")");
          }
        }
      }
    }
  }
}

}  // namespace

ValidationReport validate_presentation(const Presentation& p) {
  ValidationReport report;

  std::set<std::string> objs(p.objects.begin(), p.objects.end());
  if (objs.size() != p.objects.size()) {
    report.add(ViolationKind::NameClash, "duplicate object names");
  }
  auto same_objects = [&](const FinCategory& cat, const char* which) {
    std::set<std::string> theirs(cat.objects.begin(), cat.objects.end());
    if (theirs != objs) {
      report.add(ViolationKind::DecorationMismatch,
                 std::string(which) + " does not share the presentation's object set");
    }
  };
  same_objects(p.decoration, "decoration");
  same_objects(p.horizontal, "horizontal layer");

  ValidationReport dec = validate_category(p.decoration);
  for (auto& v : dec.violations) v.message = "decoration: " + v.message;
  report.merge(dec);
  ValidationReport hor = validate_category(p.horizontal);
  for (auto& v : hor.violations) v.message = "horizontal: " + v.message;
  report.merge(hor);
  if (!report.ok()) return report;

  std::set<std::string> cell_names;
  for (const auto& c : p.cells) {
    if (!cell_names.insert(c.name).second) {
      report.add(ViolationKind::NameClash, "duplicate 2-cell '" + c.name + "'");
    }
    const MorphismData* dom = p.horizontal.find_morphism(c.dom);
    const MorphismData* cod = p.horizontal.find_morphism(c.cod);
    if (!dom || !cod) {
      report.add(ViolationKind::UnknownName,
                 "2-cell '" + c.name + "' has an unknown 1-cell boundary");
      continue;
    }
    if (dom->dom != cod->dom || dom->cod != cod->cod) {
      report.add(ViolationKind::IllTyped, "2-cell '" + c.name + "' is not between parallel 1-cells");
    }
  }
  if (!report.ok()) return report;

  for (const auto& f : p.horizontal.morphisms) {
    auto it = p.identity2.find(f.name);
    if (it == p.identity2.end()) {
      report.add(ViolationKind::MissingEntry, "1-cell '" + f.name + "' has no identity 2-cell");
      continue;
    }
    const TwoCellData* id = p.find_cell(it->second);
    if (!id) {
      report.add(ViolationKind::UnknownName, "identity 2-cell '" + it->second + "' is unknown");
    } else if (id->dom != f.name || id->cod != f.name) {
      report.add(ViolationKind::IllTyped,
                 "identity 2-cell of '" + f.name + "' is not an endo-cell of it");
    }
  }
  if (!report.ok()) return report;

  // vcompose: table typing, totality, and category laws per hom-set
  for (const auto& [key, result] : p.vcompose_table) {
    const TwoCellData* u = p.find_cell(key.first);
    const TwoCellData* l = p.find_cell(key.second);
    const TwoCellData* r = p.find_cell(result);
    if (!u || !l || !r) {
      report.add(ViolationKind::UnknownName, "vcompose entry (" + key.first + ", " + key.second +
                                                 ") mentions an unknown 2-cell");
      continue;
    }
    if (u->dom != l->cod) {
      report.add(ViolationKind::IllTyped,
                 "vcompose entry (" + u->name + ", " + l->name + ") is not composable");
    } else if (r->dom != l->dom || r->cod != u->cod) {
      report.add(ViolationKind::IllTyped,
                 "vcompose (" + u->name + ", " + l->name + ") = " + r->name + " breaks dom/cod");
    }
  }
  for (const auto& u : p.cells) {
    for (const auto& l : p.cells) {
      if (u.dom != l.cod) continue;
      if (!p.vcompose(u.name, l.name)) {
        report.add(ViolationKind::MissingEntry,
                   "no vertical composite for (" + u.name + ", " + l.name + ")");
      }
    }
  }
  if (!report.ok()) return report;

  for (const auto& x : p.cells) {
    const std::string& id_dom = p.identity_cell_of(x.dom);
    const std::string& id_cod = p.identity_cell_of(x.cod);
    if (*p.vcompose(x.name, id_dom) != x.name || *p.vcompose(id_cod, x.name) != x.name) {
      report.add(ViolationKind::LawViolation,
                 "identity 2-cells are not neutral at '" + x.name + "'");
    }
  }
  for (const auto& z : p.cells) {
    for (const auto& y : p.cells) {
      if (y.cod != z.dom) continue;
      for (const auto& x : p.cells) {
        if (x.cod != y.dom) continue;
        auto left = p.vcompose(*p.vcompose(z.name, y.name), x.name);
        auto right = p.vcompose(z.name, *p.vcompose(y.name, x.name));
        if (*left != *right) {
          report.add(ViolationKind::LawViolation, "vertical associativity fails at (" + z.name +
                                                      ", " + y.name + ", " + x.name + ")");
        }
      }
    }
  }

  // hcompose: typing, totality, functoriality
  for (const auto& [key, result] : p.hcompose_table) {
    const TwoCellData* b = p.find_cell(key.first);
    const TwoCellData* a = p.find_cell(key.second);
    const TwoCellData* r = p.find_cell(result);
    if (!b || !a || !r) {
      report.add(ViolationKind::UnknownName, "hcompose entry (" + key.first + ", " + key.second +
                                                 ") mentions an unknown 2-cell");
      continue;
    }
    auto dom = p.horizontal.compose(b->dom, a->dom);
    auto cod = p.horizontal.compose(b->cod, a->cod);
    if (!dom || !cod) {
      report.add(ViolationKind::IllTyped,
                 "hcompose entry (" + b->name + ", " + a->name + ") is not composable");
    } else if (r->dom != *dom || r->cod != *cod) {
      report.add(ViolationKind::IllTyped,
                 "hcompose (" + b->name + ", " + a->name + ") = " + r->name + " breaks dom/cod");
    }
  }
  for (const auto& b : p.cells) {
    for (const auto& a : p.cells) {
      if (!p.horizontal.compose(p.cell(b.name).dom, p.cell(a.name).dom)) continue;
      if (!p.hcompose(b.name, a.name)) {
        report.add(ViolationKind::MissingEntry,
                   "no horizontal composite for (" + b.name + ", " + a.name + ")");
      }
    }
  }
  if (!report.ok()) return report;

  for (const auto& g : p.horizontal.morphisms) {
    for (const auto& f : p.horizontal.morphisms) {
      if (f.cod != g.dom) continue;
      std::string gf = p.horizontal.compose_or_throw(g.name, f.name);
      if (*p.hcompose(p.identity_cell_of(g.name), p.identity_cell_of(f.name)) !=
          p.identity_cell_of(gf)) {
        report.add(ViolationKind::LawViolation,
                   "hcompose does not preserve identity 2-cells at (" + g.name + ", " + f.name + ")");
      }
    }
  }
  check_interchange(p, report);

  if (p.mode == Mode::Strict) {
    for (const auto& x : p.cells) {
      const MorphismData& f = p.horizontal.morphism(x.dom);
      const std::string unit_dom = p.identity_cell_of(p.horizontal.identity_of(f.dom));
      const std::string unit_cod = p.identity_cell_of(p.horizontal.identity_of(f.cod));
      if (*p.hcompose(x.name, unit_dom) != x.name || *p.hcompose(unit_cod, x.name) != x.name) {
        report.add(ViolationKind::LawViolation, "strict unit law fails at '" + x.name + "'");
      }
    }
    for (const auto& c : p.cells) {
      for (const auto& b : p.cells) {
        auto cb = p.hcompose(c.name, b.name);
        if (!cb) continue;
        for (const auto& a : p.cells) {
          auto ba = p.hcompose(b.name, a.name);
          if (!ba) continue;
          if (*p.hcompose(*cb, a.name) != *p.hcompose(c.name, *ba)) {
            report.add(ViolationKind::LawViolation, "strict horizontal associativity fails at (" +
                                                        c.name + ", " + b.name + ", " + a.name + ")");
          }
        }
      }
    }
    if (p.coherence) {
      for (const auto& [f, comp] : p.coherence->lambda) {
        if (!p.is_identity_cell(comp)) {
          report.add(ViolationKind::LawViolation,
                     "strict mode lambda component at " + f + " is not an identity");
        }
      }
      for (const auto& [f, comp] : p.coherence->rho) {
        if (!p.is_identity_cell(comp)) {
          report.add(ViolationKind::LawViolation,
                     "strict mode rho component at " + f + " is not an identity");
        }
      }
      for (const auto& [key, comp] : p.coherence->associator) {
        if (!p.is_identity_cell(comp)) {
          report.add(ViolationKind::LawViolation, "strict mode associator component is not an identity");
        }
      }
    }
  } else {
    if (!p.coherence) {
      report.add(ViolationKind::MissingEntry, "weak mode requires coherence component tables");
    } else {
      check_weak_coherence(p, report);
    }
  }
  return report;
}

namespace {

template <typename M>
const std::string* lookup(const M& m, const std::string& k) {
  auto it = m.find(k);
  return it == m.end() ? nullptr : &it->second;
}

}  // namespace

ValidationReport validate_functor(const DecoratedFunctorSpec& g) {
  ValidationReport report;
  if (!g.source || !g.target) {
    report.add(ViolationKind::MissingEntry, "functor spec lacks source or target");
    return report;
  }
  const Presentation& s = *g.source;
  const Presentation& t = *g.target;

  for (const auto& o : s.objects) {
    const std::string* img = lookup(g.objects, o);
    if (!img) {
      report.add(ViolationKind::MissingEntry, "object '" + o + "' has no image");
    } else if (!t.horizontal.has_object(*img)) {
      report.add(ViolationKind::UnknownName, "object image '" + *img + "' is unknown");
    }
  }
  if (!report.ok()) return report;

  // decoration: the vertical map must act over the shared object map
  for (const auto& m : s.decoration.morphisms) {
    const std::string* img = lookup(g.vertical, m.name);
    if (!img) {
      report.add(ViolationKind::MissingEntry, "vertical morphism '" + m.name + "' has no image");
      continue;
    }
    const MorphismData* tm = t.decoration.find_morphism(*img);
    if (!tm) {
      report.add(ViolationKind::UnknownName, "vertical image '" + *img + "' is unknown");
      continue;
    }
    if (tm->dom != g.objects.at(m.dom) || tm->cod != g.objects.at(m.cod)) {
      report.add(ViolationKind::DecorationMismatch,
                 "vertical image of '" + m.name + "' does not follow the object map");
    }
  }
  for (const auto& m : s.horizontal.morphisms) {
    const std::string* img = lookup(g.cells1, m.name);
    if (!img) {
      report.add(ViolationKind::MissingEntry, "1-cell '" + m.name + "' has no image");
      continue;
    }
    const MorphismData* tm = t.horizontal.find_morphism(*img);
    if (!tm) {
      report.add(ViolationKind::UnknownName, "1-cell image '" + *img + "' is unknown");
      continue;
    }
    if (tm->dom != g.objects.at(m.dom) || tm->cod != g.objects.at(m.cod)) {
      report.add(ViolationKind::IllTyped, "1-cell image of '" + m.name + "' breaks endpoints");
    }
  }
  for (const auto& c : s.cells) {
    const std::string* img = lookup(g.cells2, c.name);
    if (!img) {
      report.add(ViolationKind::MissingEntry, "2-cell '" + c.name + "' has no image");
      continue;
    }
    const TwoCellData* tc = t.find_cell(*img);
    if (!tc) {
      report.add(ViolationKind::UnknownName, "2-cell image '" + *img + "' is unknown");
      continue;
    }
    if (tc->dom != g.cells1.at(c.dom) || tc->cod != g.cells1.at(c.cod)) {
      report.add(ViolationKind::IllTyped, "2-cell image of '" + c.name + "' breaks dom/cod");
    }
  }
  if (!report.ok()) return report;

  for (const auto& o : s.objects) {
    if (g.vertical.at(s.decoration.identity_of(o)) !=
        t.decoration.identity_of(g.objects.at(o))) {
      report.add(ViolationKind::LawViolation,
                 "vertical identities are not preserved at '" + o + "'");
    }
    if (g.cells1.at(s.horizontal.identity_of(o)) != t.horizontal.identity_of(g.objects.at(o))) {
      report.add(ViolationKind::LawViolation, "identity 1-cells are not preserved at '" + o + "'");
    }
  }
  for (const auto& [key, r] : s.decoration.compose_table) {
    if (g.vertical.at(r) !=
        t.decoration.compose_or_throw(g.vertical.at(key.first), g.vertical.at(key.second))) {
      report.add(ViolationKind::LawViolation, "vertical composition is not preserved at (" +
                                                  key.first + ", " + key.second + ")");
    }
  }
  for (const auto& [key, r] : s.horizontal.compose_table) {
    if (g.cells1.at(r) !=
        t.horizontal.compose_or_throw(g.cells1.at(key.first), g.cells1.at(key.second))) {
      report.add(ViolationKind::LawViolation, "1-cell composition is not preserved at (" +
                                                  key.first + ", " + key.second + ")");
    }
  }
  for (const auto& [f, id] : s.identity2) {
    if (g.cells2.at(id) != t.identity_cell_of(g.cells1.at(f))) {
      report.add(ViolationKind::LawViolation, "identity 2-cells are not preserved at '" + f + "'");
    }
  }
  for (const auto& [key, r] : s.vcompose_table) {
    auto img = t.vcompose(g.cells2.at(key.first), g.cells2.at(key.second));
    if (!img || *img != g.cells2.at(r)) {
      report.add(ViolationKind::LawViolation, "vertical 2-cell composition is not preserved at (" +
                                                  key.first + ", " + key.second + ")");
    }
  }
  for (const auto& [key, r] : s.hcompose_table) {
    auto img = t.hcompose(g.cells2.at(key.first), g.cells2.at(key.second));
    if (!img || *img != g.cells2.at(r)) {
      report.add(ViolationKind::LawViolation,
                 "horizontal 2-cell composition is not preserved at (" + key.first + ", " +
                     key.second + ")");
    }
  }
  if (s.mode == Mode::Weak && t.mode == Mode::Weak && s.coherence && t.coherence) {
    for (const auto& [f, comp] : s.coherence->lambda) {
      if (g.cells2.at(comp) != t.coherence->lambda.at(g.cells1.at(f))) {
        report.add(ViolationKind::LawViolation, "lambda components are not preserved at " + f);
      }
    }
    for (const auto& [f, comp] : s.coherence->rho) {
      if (g.cells2.at(comp) != t.coherence->rho.at(g.cells1.at(f))) {
        report.add(ViolationKind::LawViolation, "rho components are not preserved at " + f);
      }
    }
    for (const auto& [key, comp] : s.coherence->associator) {
      auto img_key = std::make_tuple(g.cells1.at(std::get<0>(key)), g.cells1.at(std::get<1>(key)),
                                     g.cells1.at(std::get<2>(key)));
      if (g.cells2.at(comp) != t.coherence->associator.at(img_key)) {
        report.add(ViolationKind::LawViolation, "associator components are not preserved");
      }
    }
  }
  return report;
}

DecoratedFunctorSpec compose_specs(const DecoratedFunctorSpec& outer,
                                   const DecoratedFunctorSpec& inner) {
  if (!inner.target || !outer.source || !(*inner.target == *outer.source)) {
    throw EngineError(ViolationKind::CompositionError,
                      "functor endpoints do not match for composition");
  }
  DecoratedFunctorSpec out;
  out.source = inner.source;
  out.target = outer.target;
  auto chain = [](const std::map<std::string, std::string>& first,
                  const std::map<std::string, std::string>& second) {
    std::map<std::string, std::string> r;
    for (const auto& [k, v] : first) r[k] = second.at(v);
    return r;
  };
  out.objects = chain(inner.objects, outer.objects);
  out.vertical = chain(inner.vertical, outer.vertical);
  out.cells1 = chain(inner.cells1, outer.cells1);
  out.cells2 = chain(inner.cells2, outer.cells2);
  return out;
}

DecoratedFunctorSpec identity_functor(std::shared_ptr<const Presentation> p) {
  DecoratedFunctorSpec f;
  f.source = p;
  f.target = p;
  for (const auto& o : p->objects) f.objects[o] = o;
  for (const auto& m : p->decoration.morphisms) f.vertical[m.name] = m.name;
  for (const auto& m : p->horizontal.morphisms) f.cells1[m.name] = m.name;
  for (const auto& c : p->cells) f.cells2[c.name] = c.name;
  return f;
}

}  // namespace dblcat
