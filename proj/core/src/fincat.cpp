#include "dblcat/fincat.hpp"

#include <algorithm>
#include <set>

namespace dblcat {

bool FinCategory::has_object(const std::string& name) const {
  return std::find(objects.begin(), objects.end(), name) != objects.end();
}

const MorphismData* FinCategory::find_morphism(const std::string& name) const {
  for (const auto& m : morphisms) {
    if (m.name == name) return &m;
  }
  return nullptr;
}

const MorphismData& FinCategory::morphism(const std::string& name) const {
  const MorphismData* m = find_morphism(name);
  if (!m) throw EngineError(ViolationKind::UnknownName, "unknown morphism '" + name + "'");
  return *m;
}

const std::string& FinCategory::identity_of(const std::string& object) const {
  auto it = identities.find(object);
  if (it == identities.end()) {
    throw EngineError(ViolationKind::UnknownName, "no identity for object '" + object + "'");
  }
  return it->second;
}

bool FinCategory::is_identity(const std::string& morphism) const {
  for (const auto& [obj, id] : identities) {
    if (id == morphism) return true;
  }
  return false;
}

std::optional<std::string> FinCategory::compose(const std::string& g,
                                                const std::string& f) const {
  auto it = compose_table.find({g, f});
  if (it == compose_table.end()) return std::nullopt;
  return it->second;
}

std::string FinCategory::compose_or_throw(const std::string& g, const std::string& f) const {
  auto r = compose(g, f);
  if (!r) {
    throw EngineError(ViolationKind::MissingEntry,
                      "no composite for (" + g + ", " + f + ")");
  }
  return *r;
}

ValidationReport validate_category(const FinCategory& cat) {
  ValidationReport report;

  std::set<std::string> objs;
  for (const auto& o : cat.objects) {
    if (!objs.insert(o).second) {
      report.add(ViolationKind::NameClash, "duplicate object '" + o + "'");
    }
  }
  std::set<std::string> names;
  for (const auto& m : cat.morphisms) {
    if (!names.insert(m.name).second) {
      report.add(ViolationKind::NameClash, "duplicate morphism '" + m.name + "'");
    }
    if (!objs.count(m.dom)) {
      report.add(ViolationKind::UnknownName,
                 "morphism '" + m.name + "' has unknown dom '" + m.dom + "'");
    }
    if (!objs.count(m.cod)) {
      report.add(ViolationKind::UnknownName,
                 "morphism '" + m.name + "' has unknown cod '" + m.cod + "'");
    }
  }
  if (!report.ok()) return report;  // later checks assume resolvable names

  for (const auto& o : cat.objects) {
    auto it = cat.identities.find(o);
    if (it == cat.identities.end()) {
      report.add(ViolationKind::MissingEntry, "object '" + o + "' has no identity");
      continue;
    }
    const MorphismData* id = cat.find_morphism(it->second);
    if (!id) {
      report.add(ViolationKind::UnknownName,
                 "identity '" + it->second + "' of '" + o + "' is not a morphism");
    } else if (id->dom != o || id->cod != o) {
      report.add(ViolationKind::IllTyped,
                 "identity '" + id->name + "' of '" + o + "' is not an endomorphism");
    }
  }
  for (const auto& [obj, id] : cat.identities) {
    if (!objs.count(obj)) {
      report.add(ViolationKind::UnknownName, "identity listed for unknown object '" + obj + "'");
    }
  }

  for (const auto& [key, result] : cat.compose_table) {
    const MorphismData* g = cat.find_morphism(key.first);
    const MorphismData* f = cat.find_morphism(key.second);
    const MorphismData* r = cat.find_morphism(result);
    if (!g || !f || !r) {
      report.add(ViolationKind::UnknownName,
                 "compose entry (" + key.first + ", " + key.second + ") -> " + result +
                     " mentions an unknown morphism");
      continue;
    }
    if (f->cod != g->dom) {
      report.add(ViolationKind::IllTyped,
                 "compose entry (" + g->name + ", " + f->name + ") is not composable");
      continue;
    }
    if (r->dom != f->dom || r->cod != g->cod) {
      report.add(ViolationKind::IllTyped, "compose (" + g->name + ", " + f->name + ") = " +
                                              r->name + " breaks dom/cod");
    }
  }

  for (const auto& g : cat.morphisms) {
    for (const auto& f : cat.morphisms) {
      if (f.cod != g.dom) continue;
      if (!cat.compose(g.name, f.name)) {
        report.add(ViolationKind::MissingEntry,
                   "no composite for composable pair (" + g.name + ", " + f.name + ")");
      }
    }
  }
  if (!report.ok()) return report;

  for (const auto& f : cat.morphisms) {
    const std::string& id_dom = cat.identity_of(f.dom);
    const std::string& id_cod = cat.identity_of(f.cod);
    if (cat.compose_or_throw(f.name, id_dom) != f.name) {
      report.add(ViolationKind::LawViolation,
                 "right identity fails: " + f.name + " ∘ " + id_dom + " ≠ " + f.name);
    }
    if (cat.compose_or_throw(id_cod, f.name) != f.name) {
      report.add(ViolationKind::LawViolation,
                 "left identity fails: " + id_cod + " ∘ " + f.name + " ≠ " + f.name);
    }
  }

  for (const auto& h : cat.morphisms) {
    for (const auto& g : cat.morphisms) {
      if (g.cod != h.dom) continue;
      for (const auto& f : cat.morphisms) {
        if (f.cod != g.dom) continue;
        std::string left = cat.compose_or_throw(cat.compose_or_throw(h.name, g.name), f.name);
        std::string right = cat.compose_or_throw(h.name, cat.compose_or_throw(g.name, f.name));
        if (left != right) {
          report.add(ViolationKind::LawViolation,
                     "associativity fails at (" + h.name + ", " + g.name + ", " + f.name +
                         "): " + left + " ≠ " + right);
        }
      }
    }
  }
  return report;
}

}  // namespace dblcat
