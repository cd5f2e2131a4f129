#ifndef DBLCAT_EXPR_HPP
#define DBLCAT_EXPR_HPP

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "dblcat/report.hpp"

namespace dblcat {

enum class CellTag : unsigned char { Gen, FId, VComp, HComp };

// Immutable cell expression over a presentation: leaves are named globular
// generators Gen(g) and formal horizontal identities FId(α); nodes are
// VComp(upper, lower) = upper • lower and HComp(after, before) =
// after ∗ before with `before` first in the chain.
class CellExpr {
 public:
  CellExpr() = default;

  static CellExpr gen(std::string name);
  static CellExpr fid(std::string name);
  static CellExpr vcomp(CellExpr upper, CellExpr lower);
  static CellExpr hcomp(CellExpr after, CellExpr before);

  bool valid() const { return node_ != nullptr; }
  CellTag tag() const { return node_->tag; }
  bool is_leaf() const { return node_->tag == CellTag::Gen || node_->tag == CellTag::FId; }
  const std::string& name() const { return node_->name; }

  CellExpr upper() const { return CellExpr(node_->a); }   // VComp
  CellExpr lower() const { return CellExpr(node_->b); }   // VComp
  CellExpr after() const { return CellExpr(node_->a); }   // HComp
  CellExpr before() const { return CellExpr(node_->b); }  // HComp

  int leaf_count() const { return node_->leaves; }
  std::string str() const;  // canonical print, reparses to the same tree
  bool operator==(const CellExpr& other) const;
  bool operator!=(const CellExpr& other) const { return !(*this == other); }

  // Factors of the maximal VComp spine, syntax order (outermost upper first;
  // the last entry composes first).
  std::vector<CellExpr> vertical_factors() const;
  // Elements of the maximal HComp spine, syntax order (reverse chain order).
  std::vector<CellExpr> horizontal_elements() const;

  // Rebuild left-nested spines from syntax-ordered parts.
  static CellExpr from_vertical_factors(const std::vector<CellExpr>& factors);
  static CellExpr from_horizontal_elements(const std::vector<CellExpr>& elements);

 private:
  struct Node {
    CellTag tag;
    std::string name;
    std::shared_ptr<const Node> a;
    std::shared_ptr<const Node> b;
    int leaves;
  };
  explicit CellExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static CellExpr make(CellTag tag, std::string name, CellExpr a, CellExpr b);
  void print_to(std::string& out, int parent_level) const;

  std::shared_ptr<const Node> node_;
};

// Grammar: expr := vchain; vchain := hchain ('.' hchain)* left-associative;
// hchain := atom ('*' atom)* left-associative; atom := NAME | 'i[' NAME ']'
// | '(' expr ')'. NAME = [A-Za-z0-9_+-]+ and '*' binds tighter than '.'.
CellExpr parse_expr(std::string_view src);

}  // namespace dblcat

#endif
