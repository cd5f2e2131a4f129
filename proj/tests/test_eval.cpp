#include <doctest.h>

#include <functional>
#include <random>
#include <vector>

#include "dblcat/corpus.hpp"
#include "dblcat/eval.hpp"
#include "dblcat/freegg.hpp"

using namespace dblcat;

namespace {

// test carrier: arrows i -> i+1 over the integers
struct Arrow {
  int at;
};

const std::function<int(const Arrow&)> src = [](const Arrow& a) { return a.at; };
const std::function<int(const Arrow&)> tgt = [](const Arrow& a) { return a.at + 1; };

// every full binary tree over the compatible chain starting at `start`
std::vector<EvalTree<Arrow>> all_evaluations(int start, int len) {
  std::vector<EvalTree<Arrow>> out;
  if (len == 1) {
    out.push_back(EvalTree<Arrow>::leaf(Arrow{start}));
    return out;
  }
  for (int cut = 1; cut < len; ++cut) {
    for (const auto& first : all_evaluations(start, cut)) {
      for (const auto& second : all_evaluations(start + cut, len - cut)) {
        out.push_back(EvalTree<Arrow>::node(second, first));
      }
    }
  }
  return out;
}

}  // namespace

TEST_CASE("single leaves and short chains have the expected endpoints") {
  auto leaf = EvalTree<Arrow>::leaf(Arrow{3});
  auto ends = boundaries<Arrow, int>(leaf, src, tgt);
  CHECK(ends.first == 3);
  CHECK(ends.second == 4);

  auto two = concat<Arrow, int>(EvalTree<Arrow>::leaf(Arrow{4}), leaf, src, tgt);
  auto ends2 = boundaries<Arrow, int>(two, src, tgt);
  CHECK(ends2.first == 3);
  CHECK(ends2.second == 5);
}

TEST_CASE("endpoints do not depend on the parenthesization") {
  for (int len = 1; len <= 6; ++len) {
    auto evals = all_evaluations(0, len);
    for (const auto& tree : evals) {
      auto ends = boundaries<Arrow, int>(tree, src, tgt);
      CHECK(ends.first == 0);
      CHECK(ends.second == len);
    }
  }
}

TEST_CASE("incompatible junctions are rejected with an index") {
  auto bad = EvalTree<Arrow>::node(EvalTree<Arrow>::leaf(Arrow{7}),
                                   EvalTree<Arrow>::leaf(Arrow{0}));
  CHECK_THROWS_AS((boundaries<Arrow, int>(bad, src, tgt)), EngineError);
  CHECK_THROWS_AS((concat<Arrow, int>(EvalTree<Arrow>::leaf(Arrow{9}),
                                      EvalTree<Arrow>::leaf(Arrow{0}), src, tgt)),
                  EngineError);
}

TEST_CASE("concatenation is not associative as trees") {
  auto x = EvalTree<Arrow>::leaf(Arrow{0});
  auto y = EvalTree<Arrow>::leaf(Arrow{1});
  auto z = EvalTree<Arrow>::leaf(Arrow{2});
  auto left = EvalTree<Arrow>::node(z, EvalTree<Arrow>::node(y, x));
  auto right = EvalTree<Arrow>::node(EvalTree<Arrow>::node(z, y), x);
  CHECK(left.second().is_leaf());
  CHECK_FALSE(right.second().is_leaf());
  // yet both evaluate the same chain
  auto le = boundaries<Arrow, int>(left, src, tgt);
  auto re = boundaries<Arrow, int>(right, src, tgt);
  CHECK(le == re);
}

TEST_CASE("the leafwise lift intertwines endpoints and commutes with concatenation") {
  // phi shifts a chain by 10, psi acts accordingly on endpoints
  const std::function<Arrow(const Arrow&)> phi = [](const Arrow& a) { return Arrow{a.at + 10}; };
  const std::function<int(const int&)> psi = [](const int& y) { return y + 10; };

  std::mt19937_64 rng(0);
  for (int round = 0; round < 50; ++round) {
    int len = 1 + static_cast<int>(rng() % 5);
    auto evals = all_evaluations(0, len);
    const auto& tree = evals[rng() % evals.size()];
    require_compatible_pair<Arrow, Arrow, int, int>(tree, phi, psi, src, tgt, src, tgt);

    auto lifted = mu<Arrow, Arrow>(tree, phi);
    auto ends = boundaries<Arrow, int>(tree, src, tgt);
    auto lifted_ends = boundaries<Arrow, int>(lifted, src, tgt);
    CHECK(lifted_ends.first == psi(ends.first));
    CHECK(lifted_ends.second == psi(ends.second));

    if (round % 2 == 0) {
      auto more = all_evaluations(len, 1 + static_cast<int>(rng() % 3));
      const auto& tail = more[rng() % more.size()];
      auto joined = concat<Arrow, int>(tail, tree, src, tgt);
      auto lift_then_join =
          concat<Arrow, int>(mu<Arrow, Arrow>(tail, phi), mu<Arrow, Arrow>(tree, phi), src, tgt);
      auto join_then_lift = mu<Arrow, Arrow>(joined, phi);
      auto a = boundaries<Arrow, int>(lift_then_join, src, tgt);
      auto b = boundaries<Arrow, int>(join_then_lift, src, tgt);
      CHECK(a == b);
      CHECK(lift_then_join.leaf_count() == join_then_lift.leaf_count());
    }
  }
}

TEST_CASE("cell expressions instantiate the carrier") {
  auto z2 = corpus_presentation("z2");
  const std::function<std::string(const CellExpr&)> es = [&](const CellExpr& e) {
    return boundary(*z2, e).s;
  };
  const std::function<std::string(const CellExpr&)> et = [&](const CellExpr& e) {
    return boundary(*z2, e).t;
  };
  CellExpr a = CellExpr::gen("-1");
  CellExpr b = CellExpr::fid("-1");
  CellExpr word = CellExpr::vcomp(a, b);  // endpoints -1 on both sides

  auto chain = concat<CellExpr, std::string>(EvalTree<CellExpr>::leaf(word),
                                             EvalTree<CellExpr>::leaf(b), es, et);
  auto ends = boundaries<CellExpr, std::string>(chain, es, et);
  CHECK(ends.first == "-1");
  CHECK(ends.second == "-1");
  // matches the engine's own frame of the corresponding horizontal composite
  Boundary fr = boundary(*z2, CellExpr::hcomp(word, b));
  CHECK(fr.s == ends.first);
  CHECK(fr.t == ends.second);
}
