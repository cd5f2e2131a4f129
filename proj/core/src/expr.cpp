#include "dblcat/expr.hpp"

#include <cctype>

namespace dblcat {

CellExpr CellExpr::make(CellTag tag, std::string name, CellExpr a, CellExpr b) {
  int leaves = 1;
  if (a.node_ && b.node_) leaves = a.leaf_count() + b.leaf_count();
  return CellExpr(std::make_shared<Node>(
      Node{tag, std::move(name), std::move(a.node_), std::move(b.node_), leaves}));
}

CellExpr CellExpr::gen(std::string name) {
  return make(CellTag::Gen, std::move(name), CellExpr(), CellExpr());
}

CellExpr CellExpr::fid(std::string name) {
  return make(CellTag::FId, std::move(name), CellExpr(), CellExpr());
}

CellExpr CellExpr::vcomp(CellExpr upper, CellExpr lower) {
  return make(CellTag::VComp, "", std::move(upper), std::move(lower));
}

CellExpr CellExpr::hcomp(CellExpr after, CellExpr before) {
  return make(CellTag::HComp, "", std::move(after), std::move(before));
}

bool CellExpr::operator==(const CellExpr& other) const {
  if (node_ == other.node_) return true;
  if (!node_ || !other.node_) return false;
  if (node_->tag != other.node_->tag || node_->leaves != other.node_->leaves) return false;
  if (is_leaf()) return node_->name == other.node_->name;
  return CellExpr(node_->a) == CellExpr(other.node_->a) &&
         CellExpr(node_->b) == CellExpr(other.node_->b);
}

// precedence levels: 0 = vchain, 1 = hchain, 2 = atom
void CellExpr::print_to(std::string& out, int parent_level) const {
  switch (node_->tag) {
    case CellTag::Gen:
      out += node_->name;
      return;
    case CellTag::FId:
      out += "i[";
      out += node_->name;
      out += ']';
      return;
    case CellTag::VComp: {
      bool parens = parent_level > 0;
      if (parens) out += '(';
      CellExpr(node_->a).print_to(out, 0);
      out += " . ";
      // a right-nested lower side needs parentheses to reparse identically
      CellExpr(node_->b).print_to(out, node_->b->tag == CellTag::VComp ? 1 : 0);
      if (parens) out += ')';
      return;
    }
    case CellTag::HComp: {
      bool parens = parent_level > 1;
      if (parens) out += '(';
      CellExpr(node_->a).print_to(out, 1);
      out += " * ";
      CellExpr(node_->b).print_to(out, 2);
      if (parens) out += ')';
      return;
    }
  }
}

std::string CellExpr::str() const {
  std::string out;
  print_to(out, 0);
  return out;
}

std::vector<CellExpr> CellExpr::vertical_factors() const {
  std::vector<CellExpr> out;
  if (tag() != CellTag::VComp) {
    out.push_back(*this);
    return out;
  }
  auto u = upper().vertical_factors();
  auto l = lower().vertical_factors();
  out.insert(out.end(), u.begin(), u.end());
  out.insert(out.end(), l.begin(), l.end());
  return out;
}

std::vector<CellExpr> CellExpr::horizontal_elements() const {
  std::vector<CellExpr> out;
  if (tag() != CellTag::HComp) {
    out.push_back(*this);
    return out;
  }
  auto a = after().horizontal_elements();
  auto b = before().horizontal_elements();
  out.insert(out.end(), a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

CellExpr CellExpr::from_vertical_factors(const std::vector<CellExpr>& factors) {
  CellExpr acc = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) acc = vcomp(acc, factors[i]);
  return acc;
}

CellExpr CellExpr::from_horizontal_elements(const std::vector<CellExpr>& elements) {
  CellExpr acc = elements.front();
  for (std::size_t i = 1; i < elements.size(); ++i) acc = hcomp(acc, elements[i]);
  return acc;
}

namespace {

bool name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '+' || c == '-';
}

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  CellExpr run() {
    CellExpr e = vchain();
    skip_ws();
    if (pos_ != src_.size()) fail("trailing input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) {
    throw ParseError(what + " at line " + std::to_string(line_) + ", column " +
                         std::to_string(col_),
                     line_, col_);
  }

  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) advance();
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == c) {
      advance();
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < src_.size() ? src_[pos_] : '\0';
  }

  std::string name() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < src_.size() && name_char(src_[pos_])) advance();
    if (pos_ == start) fail("expected a name");
    return std::string(src_.substr(start, pos_ - start));
  }

  CellExpr vchain() {
    CellExpr acc = hchain();
    while (eat('.')) acc = CellExpr::vcomp(acc, hchain());
    return acc;
  }

  CellExpr hchain() {
    CellExpr acc = atom();
    while (true) {
      skip_ws();
      if (pos_ < src_.size() && src_[pos_] == '*') {
        advance();
        acc = CellExpr::hcomp(acc, atom());
      } else {
        break;
      }
    }
    return acc;
  }

  CellExpr atom() {
    if (eat('(')) {
      CellExpr e = vchain();
      if (!eat(')')) fail("expected ')'");
      return e;
    }
    char c = peek();
    if (c == 'i') {
      // lookahead: 'i[' starts a formal identity, a bare name otherwise
      std::size_t save_pos = pos_;
      int save_line = line_, save_col = col_;
      std::string n = name();
      if (n == "i" && peek() == '[') {
        eat('[');
        std::string inner = name();
        if (!eat(']')) fail("expected ']'");
        return CellExpr::fid(inner);
      }
      pos_ = save_pos;
      line_ = save_line;
      col_ = save_col;
      return CellExpr::gen(name());
    }
    if (c == '\0') fail("unexpected end of input");
    if (!name_char(c)) fail(std::string("unexpected character '") + c + "'");
    return CellExpr::gen(name());
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

}  // namespace

CellExpr parse_expr(std::string_view src) { return Parser(src).run(); }

}  // namespace dblcat
