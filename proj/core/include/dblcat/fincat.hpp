#ifndef DBLCAT_FINCAT_HPP
#define DBLCAT_FINCAT_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dblcat/report.hpp"

namespace dblcat {

struct MorphismData {
  std::string name;
  std::string dom;
  std::string cod;
  bool operator==(const MorphismData&) const = default;
};

// A finite category given by explicit tables. Composition is stored as
// compose[{g, f}] = g∘f, defined exactly when cod(f) = dom(g).
struct FinCategory {
  std::vector<std::string> objects;
  std::vector<MorphismData> morphisms;
  std::map<std::string, std::string> identities;  // object -> morphism name
  std::map<std::pair<std::string, std::string>, std::string> compose_table;

  bool operator==(const FinCategory&) const = default;

  bool has_object(const std::string& name) const;
  const MorphismData* find_morphism(const std::string& name) const;
  const MorphismData& morphism(const std::string& name) const;  // throws UnknownName
  const std::string& identity_of(const std::string& object) const;
  bool is_identity(const std::string& morphism) const;
  std::optional<std::string> compose(const std::string& g, const std::string& f) const;
  // g∘f with both names checked and the entry required. Throws on gaps.
  std::string compose_or_throw(const std::string& g, const std::string& f) const;
};

ValidationReport validate_category(const FinCategory& cat);

}  // namespace dblcat

#endif
