#include <doctest.h>

#include <set>
#include <string>
#include <vector>

#include "dblcat/corpus.hpp"
#include "dblcat/freegg.hpp"

using namespace dblcat;

namespace {

const Presentation& z2() { return *corpus_presentation("z2"); }
const Presentation& point() { return *corpus_presentation("point"); }

// independent oracle: normal forms in the free product Z/2 * Z/2, words over
// a = the globular generator, b = the formal identity, both involutions
std::string reduce_word(std::string word) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < word.size(); ++i) {
      if (word[i] == word[i + 1]) {
        word.erase(i, 2);
        changed = true;
        break;
      }
    }
  }
  return word;
}

// the corresponding expression: a -> Gen(-1), b -> FId(-1), empty -> Gen(1)
CellExpr word_expr(const std::string& word) {
  if (word.empty()) return CellExpr::gen("1");
  CellExpr acc = word[0] == 'a' ? CellExpr::gen("-1") : CellExpr::fid("-1");
  for (std::size_t i = 1; i < word.size(); ++i) {
    acc = CellExpr::vcomp(acc, word[i] == 'a' ? CellExpr::gen("-1") : CellExpr::fid("-1"));
  }
  return acc;
}

}  // namespace

TEST_CASE("boundaries of generators and formal identities") {
  CHECK(boundary(z2(), CellExpr::gen("-1")) == Boundary{"id_a", "id_a", "1", "1"});
  CHECK(boundary(z2(), CellExpr::fid("-1")) == Boundary{"id_a", "id_a", "-1", "-1"});
  CHECK(boundary(z2(), parse_expr("i[-1] . -1")) == Boundary{"id_a", "id_a", "-1", "-1"});
}

TEST_CASE("ill-typed nodes name the offending path") {
  // -1 * -1 needs t(before) = s(after); both generators are globular so this
  // is fine, but i[-1] * -1 joins -1 to 1
  CHECK_NOTHROW(boundary(z2(), parse_expr("-1 * -1")));
  try {
    boundary(z2(), parse_expr("1 . (i[-1] * -1)"));
    FAIL("expected a compatibility error");
  } catch (const EngineError& e) {
    CHECK(e.kind() == ViolationKind::CompatibilityError);
    CHECK(std::string(e.what()).find("/lower") != std::string::npos);
  }
  CHECK_THROWS_AS(boundary(z2(), CellExpr::gen("missing")), EngineError);
}

TEST_CASE("filtration levels follow the stratification") {
  CHECK(level(z2(), parse_expr("-1")) == 1);
  CHECK(level(z2(), parse_expr("-1 * -1")) == 1);
  CHECK(level(z2(), parse_expr("-1 . i[-1]")) == 1);
  CHECK(level(z2(), parse_expr("(-1 . i[-1]) * i[-1]")) == 2);
  CHECK(level(z2(), parse_expr("((-1 . i[-1]) * i[-1]) . i[-1]")) == 2);
  // an evaluation over level-2 vertical chains
  CHECK(level(z2(), parse_expr("(((-1 . i[-1]) * i[-1]) . i[-1]) * i[1]")) == 3);
}

TEST_CASE("levels are monotone under subterm embedding") {
  CellExpr inner = parse_expr("-1 . i[-1]");
  CellExpr outer = CellExpr::hcomp(inner, CellExpr::fid("-1"));
  CHECK(level(z2(), inner) <= level(z2(), outer));
}

TEST_CASE("prenormalize folds the composition tables") {
  CHECK(prenormalize(z2(), parse_expr("-1 . -1")) == CellExpr::gen("1"));
  CHECK(prenormalize(z2(), parse_expr("-1 * -1")) == CellExpr::gen("1"));
  CHECK(prenormalize(z2(), parse_expr("i[-1] . i[-1]")) == CellExpr::gen("1"));
  CHECK(prenormalize(z2(), parse_expr("i[1]")) == CellExpr::gen("1"));
  // identity squares vanish from horizontal spines
  CHECK(prenormalize(z2(), parse_expr("-1 * i[1]")) == CellExpr::gen("-1"));
  // identity 2-cells vanish from vertical spines
  CHECK(prenormalize(z2(), parse_expr("(-1 . i[-1]) . 1")) ==
        prenormalize(z2(), parse_expr("-1 . i[-1]")));
}

TEST_CASE("prenormalize is idempotent and preserves boundaries and size ordering") {
  std::vector<std::string> sources = {
      "-1", "i[-1]", "-1 . i[-1]", "i[-1] . -1 . i[-1]", "(-1 . i[-1]) * i[-1]",
      "(-1 . i[-1]) * (i[-1] . -1)", "(-1 . i[-1] . -1) * i[-1]", "1 . 1 . 1", "i[1] * i[1]"};
  for (const auto& src : sources) {
    CellExpr e = parse_expr(src);
    CellExpr n = prenormalize(z2(), e);
    CHECK(prenormalize(z2(), n) == n);
    CHECK(boundary(z2(), n) == boundary(z2(), e));
    CHECK(n.leaf_count() <= e.leaf_count());
  }
}

TEST_CASE("formal identities form a functor") {
  CHECK(formal_identity(z2(), "1") == CellExpr::gen("1"));
  CHECK(formal_identity(z2(), "-1") == CellExpr::fid("-1"));
  CHECK_THROWS_AS(formal_identity(z2(), "nope"), EngineError);
  Verdict v = equal(z2(), formal_identity(z2(), "1"),
                    CellExpr::vcomp(CellExpr::fid("-1"), CellExpr::fid("-1")));
  CHECK(v.equal());
}

TEST_CASE("equality: fast path and interchange instances") {
  CellExpr x = parse_expr("-1 . i[-1]");
  CHECK(equal(z2(), x, x).equal());

  // relation 1 as stated: (psi2 * psi1) . (phi2 * phi1) vs (psi2 . phi2) * (psi1 . phi1)
  CellExpr lhs = parse_expr("(-1 * 1) . (1 * -1)");
  CellExpr rhs = parse_expr("(-1 . 1) * (1 . -1)");
  Verdict v = equal(z2(), lhs, rhs);
  CHECK(v.equal());
}

TEST_CASE("a nontrivial interchange instance crosses spine shapes") {
  // the two sides only meet through relation 1, not through prenormalization
  CellExpr lhs = parse_expr("((-1 . i[-1]) * (i[-1] . -1)) . ((-1 . i[-1]) * (i[-1] . -1))");
  CellExpr rhs = parse_expr("((-1 . i[-1]) . (-1 . i[-1])) * ((i[-1] . -1) . (i[-1] . -1))");
  CHECK_FALSE(prenormalize(z2(), lhs) == prenormalize(z2(), rhs));
  Verdict v = equal(z2(), lhs, rhs, EqualOptions{8});
  CHECK(v.equal());
  CHECK_FALSE(v.trace.empty());
}

TEST_CASE("level-1 endomorphisms: involution collapses and residual distinctions") {
  // words up to length 4: the involution collapses
  CHECK(equal(z2(), word_expr("aa"), word_expr("")).equal());
  CHECK(equal(z2(), word_expr("bb"), word_expr("")).equal());
  CHECK(equal(z2(), word_expr("aa"), word_expr("bb")).equal());

  EqualOptions opt;
  opt.budget = 8;
  // distinctions surviving the congruence at this bound
  std::vector<std::pair<std::string, std::string>> apart = {
      {"a", "b"},   {"ab", "ba"},   {"bab", "a"},    {"abab", ""},
      {"ab", "bb"}, {"bab", "aba"}, {"abab", "bab"},
  };
  for (const auto& [x, y] : apart) {
    CHECK_FALSE(equal(z2(), word_expr(x), word_expr(y), opt).equal());
  }
}

TEST_CASE("higher cells identify the two four-letter commutator words") {
  // bab ∗ bab collapses to an identity square by interchange and the unit
  // laws, which conjugates ab past ba; the congruence therefore identifies
  // abab with baba even though both are level-1 words
  EqualOptions opt;
  opt.budget = 8;
  CellExpr w = CellExpr::hcomp(word_expr("bab"), word_expr("bab"));
  CHECK(equal(z2(), w, word_expr(""), opt).equal());
  CHECK(equal(z2(), word_expr("abab"), word_expr("baba"), opt).equal());
}

TEST_CASE("boundary mismatch is immediately distinct") {
  Verdict v = equal(z2(), parse_expr("-1"), parse_expr("i[-1]"));
  CHECK(v.distinct());
}

TEST_CASE("tiny node caps yield Unknown") {
  EqualOptions opt;
  opt.budget = 8;
  opt.max_nodes = 4;
  Verdict v = equal(z2(), word_expr("ab"), word_expr("ba"), opt);
  CHECK(v.unknown());
}

TEST_CASE("enumeration over the point collapses to one class per frame") {
  auto classes = enumerate_cells(point(), Boundary{"id_a", "id_a", "1", "1"}, 6, 100);
  REQUIRE(classes.size() == 1);
  CHECK(classes.front().representative == CellExpr::gen("1"));
}

TEST_CASE("level-1 enumeration groups the short words") {
  auto classes = enumerate_cells(z2(), Boundary{"id_a", "id_a", "1", "1"}, 4, 1,
                                 EqualOptions{8});
  // reduced words of even degree in the formal identity and length <= 4:
  // "", a, bab, abab, baba
  std::set<std::string> reduced;
  std::vector<std::string> words = {""};
  for (int len = 1; len <= 4; ++len) {
    std::vector<std::string> next;
    for (const auto& w : words) {
      if (static_cast<int>(w.size()) == len - 1) {
        next.push_back(w + "a");
        next.push_back(w + "b");
      }
    }
    words.insert(words.end(), next.begin(), next.end());
  }
  for (const auto& w : words) {
    std::string r = reduce_word(w);
    int b_degree = 0;
    for (char c : r) b_degree += c == 'b';
    if (b_degree % 2 == 0) reduced.insert(r);
  }
  CHECK(reduced.size() == 5);
  // abab and baba share a class through the higher-cell identification, so
  // the five reduced words fall into four classes
  CHECK(classes.size() == 4);
  for (const auto& w : reduced) {
    bool found = false;
    for (const auto& cls : classes) {
      if (equal(z2(), cls.representative, word_expr(w), EqualOptions{8}).equal()) found = true;
    }
    CHECK(found);
  }
}

TEST_CASE("enumeration rejects unknown frames") {
  CHECK_THROWS_AS(enumerate_cells(z2(), Boundary{"nope", "id_a", "1", "1"}, 4, 1),
                  EngineError);
}

TEST_CASE("double-category axioms hold over the bundled presentations") {
  AxiomCheckOptions opt;
  opt.budget = 6;
  opt.interchange_samples = 40;
  CHECK(check_double_axioms(point(), opt).ok());
  CHECK(check_double_axioms(z2(), opt).ok());
}

TEST_CASE("a corrupted rule set is detected") {
  Presentation bad = z2();
  bad.hcompose_table[{"-1", "-1"}] = "-1";
  AxiomCheckOptions opt;
  opt.budget = 6;
  opt.interchange_samples = 20;
  CHECK_FALSE(check_double_axioms(bad, opt).ok());
}

TEST_CASE("equal verdicts imply equal boundaries") {
  std::vector<std::string> sources = {"-1", "i[-1]", "-1 . i[-1]", "i[-1] . -1",
                                      "-1 . -1",  "i[-1] . i[-1]"};
  for (const auto& a : sources) {
    for (const auto& b : sources) {
      Verdict v = equal(z2(), parse_expr(a), parse_expr(b), EqualOptions{6});
      if (v.equal()) {
        CHECK(boundary(z2(), parse_expr(a)) == boundary(z2(), parse_expr(b)));
      }
    }
  }
}
