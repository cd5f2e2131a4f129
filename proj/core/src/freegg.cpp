#include "dblcat/freegg.hpp"

#include <algorithm>

#include "dblcat/closure.hpp"
#include "dblcat/sampling.hpp"

namespace dblcat {

bool Boundary::operator<(const Boundary& o) const {
  return std::tie(d, c, s, t) < std::tie(o.d, o.c, o.s, o.t);
}

std::string Boundary::str() const {
  return "(d=" + d + ", c=" + c + ", s=" + s + ", t=" + t + ")";
}

namespace {

Boundary leaf_boundary(const Presentation& b, const CellExpr& e) {
  if (e.tag() == CellTag::Gen) {
    const TwoCellData& cell = b.cell(e.name());
    const MorphismData& dom1 = b.horizontal.morphism(cell.dom);
    return Boundary{cell.dom, cell.cod, b.decoration.identity_of(dom1.dom),
                    b.decoration.identity_of(dom1.cod)};
  }
  const MorphismData& alpha = b.decoration.morphism(e.name());
  return Boundary{b.horizontal.identity_of(alpha.dom), b.horizontal.identity_of(alpha.cod),
                  e.name(), e.name()};
}

Boundary boundary_at(const Presentation& b, const CellExpr& e, const std::string& path) {
  switch (e.tag()) {
    case CellTag::Gen:
    case CellTag::FId:
      return leaf_boundary(b, e);
    case CellTag::VComp: {
      Boundary up = boundary_at(b, e.upper(), path + "/upper");
      Boundary lo = boundary_at(b, e.lower(), path + "/lower");
      if (up.d != lo.c) {
        throw EngineError(ViolationKind::CompatibilityError,
                          "vertical composite at '" + path + "': d(upper)=" + up.d +
                              " ≠ c(lower)=" + lo.c);
      }
      return Boundary{lo.d, up.c, b.decoration.compose_or_throw(up.s, lo.s),
                      b.decoration.compose_or_throw(up.t, lo.t)};
    }
    case CellTag::HComp: {
      Boundary af = boundary_at(b, e.after(), path + "/after");
      Boundary be = boundary_at(b, e.before(), path + "/before");
      if (be.t != af.s) {
        throw EngineError(ViolationKind::CompatibilityError,
                          "horizontal composite at '" + path + "': t(before)=" + be.t +
                              " ≠ s(after)=" + af.s);
      }
      return Boundary{b.horizontal.compose_or_throw(af.d, be.d),
                      b.horizontal.compose_or_throw(af.c, be.c), be.s, af.t};
    }
  }
  throw EngineError(ViolationKind::IllTyped, "empty expression");
}

}  // namespace

Boundary boundary(const Presentation& b, const CellExpr& e) {
  if (!e.valid()) throw EngineError(ViolationKind::IllTyped, "empty expression");
  // The horizontal sides fold through the 1-cell projection; endpoints come
  // from the chain ends. Both are evaluation boundaries over the leaves.
  return boundary_at(b, e, "");
}

bool is_globular(const Presentation& b, const Boundary& frame) {
  return b.decoration.is_identity(frame.s) && b.decoration.is_identity(frame.t);
}

namespace {

int flevel(const CellExpr& e);

int elevel(const CellExpr& e) {
  std::vector<CellExpr> carriers = e.horizontal_elements();
  bool all_leaves = true;
  int deepest = 1;
  for (const auto& c : carriers) {
    if (!c.is_leaf()) all_leaves = false;
    deepest = std::max(deepest, flevel(c));
  }
  if (all_leaves) return 1;
  return deepest + 1;
}

int flevel(const CellExpr& e) {
  switch (e.tag()) {
    case CellTag::Gen:
    case CellTag::FId:
      return 1;
    case CellTag::VComp:
      return std::max(flevel(e.upper()), flevel(e.lower()));
    case CellTag::HComp:
      return elevel(e);
  }
  return 1;
}

}  // namespace

int level(const Presentation& b, const CellExpr& e) {
  boundary(b, e);  // well-formedness
  return flevel(e);
}

namespace {

bool is_gen(const CellExpr& e) { return e.tag() == CellTag::Gen; }
bool is_fid(const CellExpr& e) { return e.tag() == CellTag::FId; }

CellExpr prenorm(const Presentation& b, const CellExpr& e);

CellExpr prenorm_leaf(const Presentation& b, const CellExpr& e) {
  if (e.tag() == CellTag::FId && b.decoration.is_identity(e.name())) {
    const MorphismData& alpha = b.decoration.morphism(e.name());
    return CellExpr::gen(b.identity_cell_of(b.horizontal.identity_of(alpha.dom)));
  }
  return e;
}

CellExpr prenorm_vertical(const Presentation& b, const CellExpr& e) {
  std::vector<CellExpr> factors;
  for (const auto& child : {e.upper(), e.lower()}) {
    CellExpr n = prenorm(b, child);
    auto part = n.vertical_factors();
    factors.insert(factors.end(), part.begin(), part.end());
  }
  bool changed = true;
  while (changed) {
    changed = false;
    // fold adjacent leaf pairs through the composition tables
    for (std::size_t i = 0; i + 1 < factors.size(); ++i) {
      const CellExpr& u = factors[i];
      const CellExpr& l = factors[i + 1];
      if (is_gen(u) && is_gen(l)) {
        auto r = b.vcompose(u.name(), l.name());
        if (!r) {
          throw EngineError(ViolationKind::MissingEntry,
                            "vcompose gap at (" + u.name() + ", " + l.name() + ")");
        }
        factors[i] = CellExpr::gen(*r);
        factors.erase(factors.begin() + static_cast<long>(i) + 1);
        changed = true;
        break;
      }
      if (is_fid(u) && is_fid(l)) {
        std::string r = b.decoration.compose_or_throw(u.name(), l.name());
        factors[i] = prenorm_leaf(b, CellExpr::fid(r));
        factors.erase(factors.begin() + static_cast<long>(i) + 1);
        changed = true;
        break;
      }
    }
    if (changed) continue;
    // identity 2-cells are the categorical identities of the quotient
    for (std::size_t i = 0; i < factors.size() && factors.size() > 1; ++i) {
      if (is_gen(factors[i]) && b.is_identity_cell(factors[i].name())) {
        factors.erase(factors.begin() + static_cast<long>(i));
        changed = true;
        break;
      }
    }
  }
  if (factors.size() == 1) return factors[0];
  return CellExpr::from_vertical_factors(factors);
}

CellExpr prenorm_horizontal(const Presentation& b, const CellExpr& e) {
  std::vector<CellExpr> elems;
  for (const auto& child : {e.after(), e.before()}) {
    CellExpr n = prenorm(b, child);
    if (b.mode == Mode::Strict) {
      auto part = n.horizontal_elements();
      elems.insert(elems.end(), part.begin(), part.end());
    } else {
      elems.push_back(n);  // weak mode keeps the given tree shape
    }
  }
  bool changed = true;
  while (changed) {
    changed = false;
    if (b.mode == Mode::Strict) {
      // horizontal identity squares are strict units
      for (std::size_t i = 0; i < elems.size() && elems.size() > 1; ++i) {
        const CellExpr& x = elems[i];
        bool unit = is_fid(x) || (is_gen(x) && b.is_unit_square(x.name()));
        if (unit) {
          elems.erase(elems.begin() + static_cast<long>(i));
          changed = true;
          break;
        }
      }
      if (changed) continue;
    }
    for (std::size_t i = 0; i + 1 < elems.size(); ++i) {
      const CellExpr& second = elems[i];
      const CellExpr& first = elems[i + 1];
      if (is_gen(second) && is_gen(first)) {
        auto r = b.hcompose(second.name(), first.name());
        if (!r) {
          throw EngineError(ViolationKind::MissingEntry,
                            "hcompose gap at (" + second.name() + ", " + first.name() + ")");
        }
        elems[i] = CellExpr::gen(*r);
        elems.erase(elems.begin() + static_cast<long>(i) + 1);
        changed = true;
        break;
      }
      if (is_fid(second) && is_fid(first)) {
        // well-formedness forces the same vertical morphism
        elems.erase(elems.begin() + static_cast<long>(i) + 1);
        changed = true;
        break;
      }
    }
  }
  if (elems.size() == 1) return elems[0];
  return CellExpr::from_horizontal_elements(elems);
}

CellExpr prenorm(const Presentation& b, const CellExpr& e) {
  switch (e.tag()) {
    case CellTag::Gen:
      return e;
    case CellTag::FId:
      return prenorm_leaf(b, e);
    case CellTag::VComp:
      return prenorm_vertical(b, e);
    case CellTag::HComp:
      return prenorm_horizontal(b, e);
  }
  return e;
}

}  // namespace

CellExpr prenormalize(const Presentation& b, const CellExpr& e) {
  boundary(b, e);  // reject ill-typed input before rewriting
  return prenorm(b, e);
}

CellExpr formal_identity(const Presentation& b, const std::string& alpha) {
  b.decoration.morphism(alpha);
  return prenormalize(b, CellExpr::fid(alpha));
}

std::string Verdict::str() const {
  switch (kind) {
    case Kind::Equal: return "Equal";
    case Kind::Distinct: return "Distinct(" + std::to_string(bound) + ")";
    case Kind::Unknown: return "Unknown(" + std::to_string(bound) + ")";
  }
  return "?";
}

Verdict equal(const Presentation& b, const CellExpr& x, const CellExpr& y,
              const EqualOptions& opt) {
  EqualOptions eo = opt;
  eo.budget = std::max({opt.budget, prenormalize(b, x).leaf_count(),
                        prenormalize(b, y).leaf_count()});
  CongruenceEngine engine(b, {}, eo);
  return engine.query(x, y);
}

std::vector<CellClass> enumerate_cells(const Presentation& b, const Boundary& frame,
                                       int max_size, int max_level, const EqualOptions& opt) {
  if (!b.horizontal.find_morphism(frame.d) || !b.horizontal.find_morphism(frame.c) ||
      !b.decoration.find_morphism(frame.s) || !b.decoration.find_morphism(frame.t)) {
    throw EngineError(ViolationKind::UnknownName, "frame names an unknown morphism");
  }
  EqualOptions eo = opt;
  eo.budget = std::max(opt.budget, max_size);
  CongruenceEngine engine(b, {}, eo);
  engine.saturate();

  std::map<int, CellClass> grouped;
  for (int id = 0; id < engine.node_count(); ++id) {
    if (!(engine.frame(id) == frame)) continue;
    if (engine.size_of(id) > max_size || engine.level_of(id) > max_level) continue;
    CellClass& cls = grouped[engine.find(id)];
    cls.members.push_back(engine.expr(id));
  }
  std::vector<CellClass> out;
  for (auto& [root, cls] : grouped) {
    cls.representative = engine.class_representative(root);
    cls.min_level = engine.class_min_level(root);
    cls.min_size = engine.class_min_size(root);
    out.push_back(std::move(cls));
  }
  std::sort(out.begin(), out.end(), [](const CellClass& a, const CellClass& b2) {
    return a.representative.str() < b2.representative.str();
  });
  return out;
}

ValidationReport check_double_axioms(const Presentation& b, const AxiomCheckOptions& opt) {
  ValidationReport report;

  // Table-level compatibility of the two compositions: interchange and unit
  // preservation inside the presented bicategory.
  {
    ValidationReport tables = validate_presentation(b);
    for (const auto& v : tables.violations) {
      if (v.kind == ViolationKind::LawViolation) report.violations.push_back(v);
    }
  }

  EqualOptions eo;
  eo.budget = opt.budget;
  CongruenceEngine engine(b, {}, eo);
  engine.saturate();
  auto same = [&](const CellExpr& x, const CellExpr& y) {
    int ix = engine.add(x);
    int iy = engine.add(y);
    engine.saturate();
    return engine.same(ix, iy);
  };

  // i_∞ is a functor: composites of formal identities match identities of
  // composites, and decoration identities land on identity 2-cells.
  for (const auto& beta : b.decoration.morphisms) {
    for (const auto& alpha : b.decoration.morphisms) {
      if (alpha.cod != beta.dom) continue;
      CellExpr lhs = formal_identity(b, b.decoration.compose_or_throw(beta.name, alpha.name));
      CellExpr rhs = CellExpr::vcomp(CellExpr::fid(beta.name), CellExpr::fid(alpha.name));
      if (!same(lhs, rhs)) {
        report.add(ViolationKind::LawViolation,
                   "formal identity functor breaks at (" + beta.name + ", " + alpha.name + ")");
      }
    }
  }
  for (const auto& o : b.objects) {
    CellExpr id_cell = CellExpr::gen(b.identity_cell_of(b.horizontal.identity_of(o)));
    if (!(formal_identity(b, b.decoration.identity_of(o)) == id_cell)) {
      report.add(ViolationKind::LawViolation,
                 "formal identity of id_" + o + " is not the identity 2-cell");
    }
  }

  ExprSampler sampler(b, opt.seed, std::max(2, opt.budget / 2));
  int done = 0;
  int attempts = 0;
  while (done < opt.interchange_samples && attempts < opt.interchange_samples * 50) {
    ++attempts;
    CellExpr psi2, psi1, phi2, phi1;
    if (!sampler.sample_interchange(psi2, psi1, phi2, phi1)) continue;
    CellExpr lhs = CellExpr::vcomp(CellExpr::hcomp(psi2, psi1), CellExpr::hcomp(phi2, phi1));
    if (lhs.leaf_count() > opt.budget) continue;
    CellExpr rhs = CellExpr::hcomp(CellExpr::vcomp(psi2, phi2), CellExpr::vcomp(psi1, phi1));
    ++done;
    if (!same(lhs, rhs)) {
      report.add(ViolationKind::LawViolation, "interchange instance fails: " + lhs.str() +
                                                  "  vs  " + rhs.str());
    }
  }
  if (done < opt.interchange_samples) {
    report.incomplete = true;  // sampler could not produce enough instances
  }

  // unit laws, strict associativity on the nose, s/t functoriality and
  // boundary invariance over sampled cells
  for (int i = 0; i < opt.interchange_samples; ++i) {
    CellExpr e = sampler.sample();
    if (e.leaf_count() + 1 > opt.budget) continue;
    Boundary fr = boundary(b, e);
    CellExpr unit_lo = CellExpr::vcomp(e, CellExpr::gen(b.identity_cell_of(fr.d)));
    CellExpr unit_up = CellExpr::vcomp(CellExpr::gen(b.identity_cell_of(fr.c)), e);
    if (!same(unit_lo, e) || !same(unit_up, e)) {
      report.add(ViolationKind::LawViolation, "vertical unit law fails at " + e.str());
    }
    if (b.mode == Mode::Strict) {
      CellExpr hunit_before = CellExpr::hcomp(e, CellExpr::fid(fr.s));
      CellExpr hunit_after = CellExpr::hcomp(CellExpr::fid(fr.t), e);
      if (!(prenormalize(b, hunit_before) == prenormalize(b, e)) ||
          !(prenormalize(b, hunit_after) == prenormalize(b, e))) {
        report.add(ViolationKind::LawViolation, "strict horizontal unit law fails at " + e.str());
      }
    }
    if (!(boundary(b, prenormalize(b, e)) == fr)) {
      report.add(ViolationKind::LawViolation, "prenormalize moved the boundary of " + e.str());
    }
    if (e.tag() == CellTag::VComp) {
      Boundary up = boundary(b, e.upper());
      Boundary lo = boundary(b, e.lower());
      if (fr.s != b.decoration.compose_or_throw(up.s, lo.s) ||
          fr.t != b.decoration.compose_or_throw(up.t, lo.t)) {
        report.add(ViolationKind::LawViolation, "source/target functoriality fails at " + e.str());
      }
    }
  }
  if (b.mode == Mode::Strict) {
    // associativity of ∗ is definitional: both association orders share one
    // flattened form
    for (int i = 0; i < 20; ++i) {
      CellExpr x = sampler.sample();
      CellExpr y = sampler.sample();
      CellExpr z = sampler.sample();
      Boundary bx = boundary(b, x);
      Boundary by = boundary(b, y);
      Boundary bz = boundary(b, z);
      if (bx.t != by.s || by.t != bz.s) continue;
      CellExpr l = CellExpr::hcomp(CellExpr::hcomp(z, y), x);
      CellExpr r = CellExpr::hcomp(z, CellExpr::hcomp(y, x));
      if (!(prenormalize(b, l) == prenormalize(b, r))) {
        report.add(ViolationKind::LawViolation, "horizontal associativity fails at " + l.str());
      }
    }
  }

  for (const auto& a : engine.anomalies()) {
    report.add(ViolationKind::LawViolation, "congruence anomaly: " + a);
  }
  return report;
}

}  // namespace dblcat
