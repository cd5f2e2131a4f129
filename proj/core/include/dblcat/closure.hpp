#ifndef DBLCAT_CLOSURE_HPP
#define DBLCAT_CLOSURE_HPP

#include <deque>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dblcat/expr.hpp"
#include "dblcat/freegg.hpp"
#include "dblcat/presentation.hpp"

namespace dblcat {

// Bounded congruence closure over prenormal cell expressions. The universe
// covers every prenormal form of size <= budget reachable by composition;
// classes merge across instances of the defining relations applied in both
// directions, and across the congruence rules for both compositions via
// hashed signatures. A fixpoint inside the bounded universe supports a
// Distinct verdict relative to the size bound; tripping a resource cap
// leaves the run truncated and verdicts Unknown.
class CongruenceEngine {
 public:
  CongruenceEngine(const Presentation& base,
                   std::vector<std::pair<CellExpr, CellExpr>> extra_pairs,
                   EqualOptions opt);

  // Interns the prenormal form of e (with subterms); returns its node id.
  int add(const CellExpr& e);
  void saturate();
  bool truncated() const { return truncated_; }

  int find(int node) const;
  bool same(int x, int y) const { return find(x) == find(y); }
  Verdict query(const CellExpr& x, const CellExpr& y);

  const CellExpr& expr(int node) const { return nodes_[node].expr; }
  const Boundary& frame(int node) const { return nodes_[node].frame; }
  int size_of(int node) const { return nodes_[node].size; }
  int level_of(int node) const { return nodes_[node].level; }

  CellExpr class_representative(int node) const;  // least (size, print) member
  int class_min_level(int node) const;
  int class_min_size(int node) const;
  const std::vector<int>& class_members(int node) const;
  std::vector<int> canonical_classes() const;
  int node_count() const { return static_cast<int>(nodes_.size()); }

  // Class of the composite of two classes, built from small members; nullopt
  // when every build would exceed the budget (a truncation witness).
  std::optional<int> compose_classes(CellTag tag, int x, int y);
  // Whether a composite of the two classes is frame-compatible.
  bool composable(CellTag tag, int x, int y) const;

  std::vector<std::string> explain(int x, int y) const;
  const std::vector<std::string>& anomalies() const { return anomalies_; }

  const Presentation& base() const { return base_; }
  int budget() const { return opt_.budget; }

 private:
  struct NodeRec {
    CellExpr expr;
    std::string print;
    Boundary frame;
    int size = 0;
    int level = 0;
    CellTag tag = CellTag::Gen;
    // every split of the top spine as (earlier-part, later-part) node ids;
    // each yields a congruence signature
    std::vector<std::pair<int, int>> splits;
    bool relations_done = false;
  };
  struct ClassRec {
    std::vector<int> members;
    int best_print = -1;
    int min_level_member = -1;
    std::vector<int> build_members;  // small diverse members used for products
    std::vector<int> parents;        // nodes with a split child in this class
  };
  struct Edge {
    int a;
    int b;
    std::string reason;
  };
  using SigKey = std::tuple<CellTag, int, int>;

  int intern(const CellExpr& prenormal);
  void unite(int x, int y, const char* reason);
  void register_signature(int node, const std::pair<int, int>& split,
                          std::deque<std::tuple<int, int, const char*>>* queue);
  void note_build_member(ClassRec& cls, int node);
  void product_pass(bool& changed);
  void relation_pass(bool& changed);
  void interchange_instances(int node, bool& changed);
  void weak_unit_instances(int node, bool& changed);
  void weak_assoc_instances(int node, bool& changed);
  void add_instance(int node, const CellExpr& other_raw, const char* reason, bool& changed);
  std::optional<std::string> coherence_inverse(const std::string& cell);
  bool over_cap() const { return nodes_.size() > opt_.max_nodes; }

  const Presentation& base_;
  std::vector<std::pair<CellExpr, CellExpr>> extra_pairs_;
  EqualOptions opt_;
  bool truncated_ = false;
  bool changed_since_saturation_ = true;

  std::vector<NodeRec> nodes_;
  std::unordered_map<std::string, int> by_print_;
  mutable std::vector<int> uf_;
  std::map<int, ClassRec> classes_;  // keyed by canonical id
  std::map<SigKey, int> signatures_;
  std::set<SigKey> products_done_;
  std::vector<Edge> proof_edges_;
  std::vector<std::vector<std::pair<int, int>>> proof_adj_;  // node -> (peer, edge index)
  std::vector<std::string> anomalies_;
  std::map<std::string, std::string> inverse_cache_;
};

}  // namespace dblcat

#endif
