#ifndef DBLCAT_FUNCTOR_MAP_HPP
#define DBLCAT_FUNCTOR_MAP_HPP

#include <cstdint>

#include "dblcat/expr.hpp"
#include "dblcat/presentation.hpp"
#include "dblcat/report.hpp"

namespace dblcat {

// The free double functor of a validated decorated bifunctor: structural
// leaf relabeling, Gen(g) ↦ Gen(spec g) and FId(α) ↦ FId(spec* α).
struct FreeFunctor {
  DecoratedFunctorSpec spec;
};

FreeFunctor make_free_functor(DecoratedFunctorSpec spec);  // validates

CellExpr map_cell(const FreeFunctor& f, const CellExpr& e);

// Samples cells of the source and checks map_cell(outer ∘ inner, e) equals
// map_cell(outer, map_cell(inner, e)) syntactically.
ValidationReport compose_check(const FreeFunctor& inner, const FreeFunctor& outer,
                               int samples, int budget, std::uint64_t seed = 0);

// Direct check against a claimed composite spec; mismatches are reported.
ValidationReport compose_check_against(const FreeFunctor& inner, const FreeFunctor& outer,
                                       const DecoratedFunctorSpec& claimed, int samples,
                                       int budget, std::uint64_t seed = 0);

// The free functor restricted to the source presentation equals the spec on
// every generator, and any leaf assignment agreeing with it extends to the
// same functor on enumerated cells.
ValidationReport check_free_characterization(const FreeFunctor& f, int budget);

}  // namespace dblcat

#endif
