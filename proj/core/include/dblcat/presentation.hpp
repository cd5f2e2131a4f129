#ifndef DBLCAT_PRESENTATION_HPP
#define DBLCAT_PRESENTATION_HPP

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "dblcat/fincat.hpp"
#include "dblcat/report.hpp"

namespace dblcat {

struct TwoCellData {
  std::string name;
  std::string dom;  // 1-cell
  std::string cod;  // 1-cell
  bool operator==(const TwoCellData&) const = default;
};

enum class Mode { Strict, Weak };

// Component tables for the unitors and associator in weak mode. Each
// component names an invertible globular 2-cell.
struct Coherence {
  std::map<std::string, std::string> lambda;  // 1-cell -> 2-cell
  std::map<std::string, std::string> rho;     // 1-cell -> 2-cell
  // (h, g, f) with f first in the chain -> component at h∘g∘f
  std::map<std::tuple<std::string, std::string, std::string>, std::string> associator;
  bool operator==(const Coherence&) const = default;
};

// A decorated bicategory as finite data: a decoration category (vertical
// morphisms), a 1-cell layer with horizontal composition, and globular
// 2-cells with both composition tables.
struct Presentation {
  std::vector<std::string> objects;
  FinCategory decoration;
  FinCategory horizontal;
  std::vector<TwoCellData> cells;
  std::map<std::string, std::string> identity2;  // 1-cell -> identity 2-cell
  // vcompose[{u, l}] = u • l, defined when dom(u) = cod(l)
  std::map<std::pair<std::string, std::string>, std::string> vcompose_table;
  // hcompose[{b, a}] = b ∗ a with a first in the chain
  std::map<std::pair<std::string, std::string>, std::string> hcompose_table;
  Mode mode = Mode::Strict;
  std::optional<Coherence> coherence;

  bool operator==(const Presentation&) const = default;

  const TwoCellData* find_cell(const std::string& name) const;
  const TwoCellData& cell(const std::string& name) const;  // throws UnknownName
  const std::string& identity_cell_of(const std::string& one_cell) const;
  std::optional<std::string> vcompose(const std::string& upper, const std::string& lower) const;
  std::optional<std::string> hcompose(const std::string& second, const std::string& first) const;
  // 2-cells that are identities of some 1-cell
  bool is_identity_cell(const std::string& cell_name) const;
  // 2-cells that are identities of an identity 1-cell (unit squares for ∗)
  bool is_unit_square(const std::string& cell_name) const;
};

ValidationReport validate_presentation(const Presentation& p);

// A decorated bifunctor between presentations: one object map shared by the
// functor and its decoration, plus maps on vertical morphisms, 1-cells and
// 2-cells.
struct DecoratedFunctorSpec {
  std::shared_ptr<const Presentation> source;
  std::shared_ptr<const Presentation> target;
  std::map<std::string, std::string> objects;
  std::map<std::string, std::string> vertical;
  std::map<std::string, std::string> cells1;
  std::map<std::string, std::string> cells2;
};

ValidationReport validate_functor(const DecoratedFunctorSpec& g);

// Component-wise composition; throws CompositionError when the endpoints do
// not match.
DecoratedFunctorSpec compose_specs(const DecoratedFunctorSpec& outer,
                                   const DecoratedFunctorSpec& inner);

DecoratedFunctorSpec identity_functor(std::shared_ptr<const Presentation> p);

}  // namespace dblcat

#endif
