#ifndef DBLCAT_EVAL_HPP
#define DBLCAT_EVAL_HPP

#include <functional>
#include <memory>
#include <string>
#include <utility>

#include "dblcat/report.hpp"

namespace dblcat {

// Binary concatenation trees over a carrier X equipped with endpoint maps
// s,t : X -> Y. A tree is an evaluation of its leaf sequence; the sequence
// x_1,...,x_k is compatible when t(x_i) = s(x_{i+1}), the composite runs
// x_k ∗ ... ∗ x_1, and the induced endpoints are s(x_1) and t(x_k).
template <typename X>
class EvalTree {
 public:
  static EvalTree leaf(X value) {
    return EvalTree(std::make_shared<Node>(Node{std::move(value), nullptr, nullptr, 1}));
  }
  // `second` continues the chain started by `first`.
  static EvalTree node(EvalTree second, EvalTree first) {
    int n = second.leaf_count() + first.leaf_count();
    return EvalTree(std::make_shared<Node>(
        Node{X{}, std::move(second.node_), std::move(first.node_), n}));
  }

  bool is_leaf() const { return node_->second == nullptr; }
  const X& value() const { return node_->value; }
  EvalTree second() const { return EvalTree(node_->second); }
  EvalTree first() const { return EvalTree(node_->first); }
  int leaf_count() const { return node_->leaves; }

  template <typename F>
  void for_each_leaf(F&& f) const {  // in chain order
    if (is_leaf()) {
      f(value());
    } else {
      first().for_each_leaf(f);
      second().for_each_leaf(f);
    }
  }

 private:
  struct Node {
    X value;
    std::shared_ptr<const Node> second;
    std::shared_ptr<const Node> first;
    int leaves;
  };
  explicit EvalTree(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

// Endpoints (s̃, t̃) of an evaluation; checks adjacent compatibility and
// reports the leaf index of the first mismatch.
template <typename X, typename Y>
std::pair<Y, Y> boundaries(const EvalTree<X>& tree,
                           const std::function<Y(const X&)>& s,
                           const std::function<Y(const X&)>& t) {
  if (tree.is_leaf()) return {s(tree.value()), t(tree.value())};
  auto left = boundaries<X, Y>(tree.first(), s, t);
  auto right = boundaries<X, Y>(tree.second(), s, t);
  if (!(left.second == right.first)) {
    throw EngineError(ViolationKind::CompatibilityError,
                      "incompatible adjacent leaves at index " +
                          std::to_string(tree.first().leaf_count()));
  }
  return {left.first, right.second};
}

// Concatenation Ψ ∗ Φ; the junction t̃(Φ) = s̃(Ψ) must hold.
template <typename X, typename Y>
EvalTree<X> concat(const EvalTree<X>& second, const EvalTree<X>& first,
                   const std::function<Y(const X&)>& s,
                   const std::function<Y(const X&)>& t) {
  auto lb = boundaries<X, Y>(first, s, t);
  auto rb = boundaries<X, Y>(second, s, t);
  if (!(lb.second == rb.first)) {
    throw EngineError(ViolationKind::CompatibilityError,
                      "junction mismatch in concatenation");
  }
  return EvalTree<X>::node(second, first);
}

// Leafwise relabeling along a compatible pair (phi, psi): same tree shape,
// endpoints intertwined by psi, commuting with concatenation.
template <typename X, typename XP>
EvalTree<XP> mu(const EvalTree<X>& tree, const std::function<XP(const X&)>& phi) {
  if (tree.is_leaf()) return EvalTree<XP>::leaf(phi(tree.value()));
  return EvalTree<XP>::node(mu(tree.second(), phi), mu(tree.first(), phi));
}

// Checks that (phi, psi) is a compatible pair on the given leaves: both
// naming squares s'∘phi = psi∘s and t'∘phi = psi∘t commute.
template <typename X, typename XP, typename Y, typename YP>
void require_compatible_pair(const EvalTree<X>& tree,
                             const std::function<XP(const X&)>& phi,
                             const std::function<YP(const Y&)>& psi,
                             const std::function<Y(const X&)>& s,
                             const std::function<Y(const X&)>& t,
                             const std::function<YP(const XP&)>& sp,
                             const std::function<YP(const XP&)>& tp) {
  tree.for_each_leaf([&](const X& x) {
    if (!(sp(phi(x)) == psi(s(x))) || !(tp(phi(x)) == psi(t(x)))) {
      throw EngineError(ViolationKind::CompatibilityError,
                        "pair of maps is not compatible on a leaf");
    }
  });
}

}  // namespace dblcat

#endif
