#ifndef DBLCAT_PROJECTION_HPP
#define DBLCAT_PROJECTION_HPP

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "dblcat/expr.hpp"
#include "dblcat/freegg.hpp"
#include "dblcat/quotient.hpp"

namespace dblcat {

// Canonical projection onto a verified verticalization. Targets are
// quotient-presented, so projecting interprets the same expression in the
// coarser congruence.
struct ProjectionHandle {
  QuotientSpec target;
  int verified_budget = 0;
};

// Runs check_verticalization at the given budget; throws LawViolation when
// the target is not a verticalization.
ProjectionHandle make_projection(QuotientSpec target, int budget);

struct Projected {
  CellExpr representative;
  int min_level = 0;
};

Projected project(const ProjectionHandle& h, const CellExpr& e,
                  const EqualOptions& opt = {});

// Verifies that every class in the k-th term of the target's intrinsic
// horizontal filtration has a preimage expression of level <= k.
ValidationReport check_fullness(const ProjectionHandle& h, int k, int budget);

// Detector core, separated so the law can be exercised on assembled data:
// classes carry their intrinsic filtration index and the least level over
// the members found.
struct FilteredClass {
  std::string representative;
  int filtration_index = 0;  // intrinsic H_k index
  int min_member_level = 0;
};
ValidationReport check_fullness_classes(const std::vector<FilteredClass>& classes, int k);

// An assignment of target expressions to every generator leaf: globular
// 2-cells and formal identities.
struct LeafAssignment {
  std::shared_ptr<const Presentation> target;
  std::map<std::string, CellExpr> gens;
  std::map<std::string, CellExpr> fids;

  CellExpr apply(const CellExpr& e) const;  // structural extension
};

// If the two assignments agree on every generator, their structural
// extensions agree on all enumerated cells up to the budget; disagreements
// are reported with the generator or a witness cell.
ValidationReport check_determination(const Presentation& b, const LeafAssignment& f1,
                                     const LeafAssignment& f2, int budget);

}  // namespace dblcat

#endif
