#ifndef DBLCAT_ADJUNCTION_HPP
#define DBLCAT_ADJUNCTION_HPP

#include <cstdint>
#include <map>
#include <string>

#include "dblcat/expr.hpp"
#include "dblcat/presentation.hpp"
#include "dblcat/quotient.hpp"
#include "dblcat/report.hpp"

namespace dblcat {

// First triangle: including a globular class of the horizontalization back
// into the free construction and projecting returns the same class, and the
// induced composition tables agree with projection of composites.
ValidationReport check_triangle_H(const QuotientSpec& q, int budget);
// Detector core against externally supplied horizontalization data.
ValidationReport check_triangle_H_against(const QuotientSpec& q,
                                          const HorizontalizationResult& h, int budget);

// Second triangle: sampled cells, re-tagged into the bounded
// horizontalization presentation and spliced back through the projection,
// are congruent to themselves.
ValidationReport check_triangle_Q(const Presentation& b, int budget, int samples = 50,
                                  std::uint64_t seed = 0);
// Detector core against an externally supplied unit table (class
// representative per 2-cell of the free construction's horizontalization).
ValidationReport check_triangle_Q_against(const Presentation& b,
                                          const HorizontalizationResult& h, int budget,
                                          int samples, std::uint64_t seed);

// Naturality of the projections: for an induced functor between two
// quotient targets, projecting then mapping agrees with mapping re-tagged
// cells then projecting, under the target congruence.
ValidationReport check_naturality(const DecoratedFunctorSpec& f, const QuotientSpec& q_src,
                                  const QuotientSpec& q_tgt, int budget, int samples = 30,
                                  std::uint64_t seed = 0);
// Detector core against an externally supplied image table for the derived
// source cells.
ValidationReport check_naturality_against(const DecoratedFunctorSpec& f,
                                          const QuotientSpec& q_src, const QuotientSpec& q_tgt,
                                          const HorizontalizationResult& h_src,
                                          const std::map<std::string, CellExpr>& mapped_reps,
                                          int budget, int samples, std::uint64_t seed);

}  // namespace dblcat

#endif
