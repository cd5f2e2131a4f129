#ifndef DBLCAT_SAMPLING_HPP
#define DBLCAT_SAMPLING_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "dblcat/expr.hpp"
#include "dblcat/freegg.hpp"
#include "dblcat/presentation.hpp"

namespace dblcat {

// Seeded generator of well-formed cell expressions, grown by composing a
// pool that starts from the generator leaves.
class ExprSampler {
 public:
  ExprSampler(const Presentation& b, std::uint64_t seed, int max_size = 8);

  CellExpr sample();
  // A quadruple (psi2, psi1, phi2, phi1) forming a valid interchange
  // instance; pieces are drawn from the pool by rejection.
  bool sample_interchange(CellExpr& psi2, CellExpr& psi1, CellExpr& phi2, CellExpr& phi1);

  const std::vector<CellExpr>& pool() const { return pool_; }

 private:
  void grow();
  const Presentation& base_;
  std::mt19937_64 rng_;
  int max_size_;
  std::vector<CellExpr> pool_;
  std::vector<Boundary> frames_;
};

}  // namespace dblcat

#endif
