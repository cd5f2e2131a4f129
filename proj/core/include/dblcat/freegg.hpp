#ifndef DBLCAT_FREEGG_HPP
#define DBLCAT_FREEGG_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "dblcat/expr.hpp"
#include "dblcat/presentation.hpp"
#include "dblcat/report.hpp"

namespace dblcat {

// Four-sided frame of a cell: d, c horizontal 1-cells; s, t vertical
// morphisms with dom(s)=dom(d), cod(s)=dom(c), dom(t)=cod(d), cod(t)=cod(c).
struct Boundary {
  std::string d;
  std::string c;
  std::string s;
  std::string t;
  bool operator==(const Boundary&) const = default;
  bool operator<(const Boundary&) const;
  std::string str() const;
};

Boundary boundary(const Presentation& b, const CellExpr& e);

// Whether the frame is globular: s and t are identity vertical morphisms.
bool is_globular(const Presentation& b, const Boundary& frame);

// Least filtration index of the raw expression: leaves sit at 1, a vertical
// composite takes the max of its factors, and a horizontal composite stays
// at 1 over bare leaves but rises to (max factor level)+1 once a factor
// carries a top-level vertical composite.
int level(const Presentation& b, const CellExpr& e);

// Exhaustive oriented rewrite to a canonical form: composition tables fold
// adjacent globular leaves and formal identities, formal identities of
// identity vertical morphisms become identity 2-cells, identity squares are
// dropped from spines, and both spines are flattened left. Terminating,
// idempotent, boundary-preserving. Weak mode keeps horizontal trees and
// unit squares in place; those identifications run through the closure.
CellExpr prenormalize(const Presentation& b, const CellExpr& e);

// FId(α), prenormalized, so identities of the decoration land on identity
// 2-cells.
CellExpr formal_identity(const Presentation& b, const std::string& alpha);

struct Verdict {
  enum class Kind { Equal, Distinct, Unknown };
  Kind kind;
  int bound = 0;
  std::vector<std::string> trace;  // closure steps for Equal

  bool equal() const { return kind == Kind::Equal; }
  bool distinct() const { return kind == Kind::Distinct; }
  bool unknown() const { return kind == Kind::Unknown; }
  std::string str() const;
};

struct EqualOptions {
  int budget = 10;                  // max leaf count in the closure universe
  std::size_t max_nodes = 400000;   // hard cap; tripping it yields Unknown
  int max_rounds = 256;
};

// Semidecision of x ≈ y under the defining congruence: distinct boundaries
// are immediately Distinct, coinciding prenormal forms are Equal, otherwise
// a bounded congruence closure over all expressions of size <= budget
// decides. Distinct and Unknown verdicts are relative to the bound.
Verdict equal(const Presentation& b, const CellExpr& x, const CellExpr& y,
              const EqualOptions& opt = {});

struct CellClass {
  CellExpr representative;  // least prenormal form found
  int min_level = 0;
  int min_size = 0;
  std::vector<CellExpr> members;
};

// All congruence classes meeting the frame within the size and level bounds,
// grouped by the closure oracle.
std::vector<CellClass> enumerate_cells(const Presentation& b, const Boundary& frame,
                                       int max_size, int max_level,
                                       const EqualOptions& opt = {});

struct AxiomCheckOptions {
  int budget = 8;
  int interchange_samples = 200;
  std::uint64_t seed = 0;
};

// Double-category laws checked on the free construction: table-level
// interchange and unit functoriality, sampled interchange instances through
// the closure, unit laws, source/target functoriality, functoriality of the
// formal identity, and boundary invariance of the congruence.
ValidationReport check_double_axioms(const Presentation& b,
                                     const AxiomCheckOptions& opt = {});

}  // namespace dblcat

#endif
