#include "dblcat/sampling.hpp"

namespace dblcat {

ExprSampler::ExprSampler(const Presentation& b, std::uint64_t seed, int max_size)
    : base_(b), rng_(seed), max_size_(max_size) {
  for (const auto& c : b.cells) pool_.push_back(CellExpr::gen(c.name));
  for (const auto& m : b.decoration.morphisms) pool_.push_back(CellExpr::fid(m.name));
  for (const auto& e : pool_) frames_.push_back(boundary(base_, e));
  for (int i = 0; i < 64; ++i) grow();
}

void ExprSampler::grow() {
  std::uniform_int_distribution<std::size_t> pick(0, pool_.size() - 1);
  std::size_t i = pick(rng_);
  std::size_t j = pick(rng_);
  const CellExpr& x = pool_[i];
  const CellExpr& y = pool_[j];
  if (x.leaf_count() + y.leaf_count() > max_size_) return;
  bool vertical = (rng_() & 1u) != 0;
  if (vertical) {
    if (frames_[i].d != frames_[j].c) return;
    pool_.push_back(CellExpr::vcomp(x, y));
  } else {
    if (frames_[j].t != frames_[i].s) return;
    pool_.push_back(CellExpr::hcomp(x, y));
  }
  frames_.push_back(boundary(base_, pool_.back()));
}

CellExpr ExprSampler::sample() {
  grow();
  std::uniform_int_distribution<std::size_t> pick(0, pool_.size() - 1);
  return pool_[pick(rng_)];
}

bool ExprSampler::sample_interchange(CellExpr& psi2, CellExpr& psi1, CellExpr& phi2,
                                     CellExpr& phi1) {
  grow();
  std::uniform_int_distribution<std::size_t> pick(0, pool_.size() - 1);
  for (int attempt = 0; attempt < 200; ++attempt) {
    std::size_t a = pick(rng_);
    std::size_t b = pick(rng_);
    if (frames_[b].t != frames_[a].s) continue;  // phi2 ∗ phi1
    std::size_t c = pick(rng_);
    std::size_t d = pick(rng_);
    if (frames_[d].t != frames_[c].s) continue;  // psi2 ∗ psi1
    if (frames_[b].c != frames_[d].d || frames_[a].c != frames_[c].d) continue;
    phi2 = pool_[a];
    phi1 = pool_[b];
    psi2 = pool_[c];
    psi1 = pool_[d];
    return true;
  }
  return false;
}

}  // namespace dblcat
