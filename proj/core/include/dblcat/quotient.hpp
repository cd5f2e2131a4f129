#ifndef DBLCAT_QUOTIENT_HPP
#define DBLCAT_QUOTIENT_HPP

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "dblcat/expr.hpp"
#include "dblcat/freegg.hpp"
#include "dblcat/presentation.hpp"

namespace dblcat {

// A verticalization candidate: the free construction over `base` modulo
// `extra_relations`. Every pair must share a boundary.
struct QuotientSpec {
  std::shared_ptr<const Presentation> base;
  std::vector<std::pair<CellExpr, CellExpr>> extra_relations;
};

// Checks the pairs are well-formed with equal boundaries.
ValidationReport validate_quotient(const QuotientSpec& q);

// Same semantics as equal, with the extra pairs generating the congruence.
Verdict equal_mod(const QuotientSpec& q, const CellExpr& x, const CellExpr& y,
                  const EqualOptions& opt = {});

struct HorizontalizationResult {
  Presentation derived;
  bool incomplete = false;
  // derived 2-cell name -> class representative expression over the base
  std::map<std::string, CellExpr> reps;
};

// The decorated bicategory of globular classes found by bounded enumeration,
// with induced composition tables. `incomplete` is set when the budget
// truncates class saturation or a table entry cannot be resolved.
HorizontalizationResult horizontalization(const QuotientSpec& q, int budget);

// Compares horizontalization(q) against q.base: reports merged base cells
// (globular collapse), new globular classes with witnesses, and induced
// table entries that disagree with the base tables.
ValidationReport check_verticalization(const QuotientSpec& q, int budget);

}  // namespace dblcat

#endif
