#include "dblcat/closure.hpp"

#include <algorithm>
#include <array>
#include <queue>

namespace dblcat {

namespace {

// representative order: fewest leaves, then lowest level, then print
bool rep_less(int size_a, int level_a, const std::string& a, int size_b, int level_b,
              const std::string& b) {
  if (size_a != size_b) return size_a < size_b;
  if (level_a != level_b) return level_a < level_b;
  return a < b;
}

constexpr std::size_t kBuildMembers = 4;

}  // namespace

CongruenceEngine::CongruenceEngine(const Presentation& base,
                                   std::vector<std::pair<CellExpr, CellExpr>> extra_pairs,
                                   EqualOptions opt)
    : base_(base), extra_pairs_(std::move(extra_pairs)), opt_(opt) {
  for (const auto& c : base_.cells) add(CellExpr::gen(c.name));
  for (const auto& m : base_.decoration.morphisms) add(CellExpr::fid(m.name));
  for (const auto& [l, r] : extra_pairs_) {
    int il = add(l);
    int ir = add(r);
    unite(il, ir, "relation");
  }
}

int CongruenceEngine::find(int node) const {
  int root = node;
  while (uf_[root] != root) root = uf_[root];
  while (uf_[node] != root) {
    int next = uf_[node];
    uf_[node] = root;
    node = next;
  }
  return root;
}

int CongruenceEngine::add(const CellExpr& e) { return intern(prenormalize(base_, e)); }

void CongruenceEngine::note_build_member(ClassRec& cls, int node) {
  auto& bm = cls.build_members;
  if (std::find(bm.begin(), bm.end(), node) != bm.end()) return;
  bm.push_back(node);
  std::sort(bm.begin(), bm.end(), [&](int l, int r) {
    return rep_less(nodes_[l].size, nodes_[l].level, nodes_[l].print, nodes_[r].size,
                    nodes_[r].level, nodes_[r].print);
  });
  if (bm.size() > kBuildMembers) bm.resize(kBuildMembers);
}

void CongruenceEngine::register_signature(int node, const std::pair<int, int>& split,
                                          std::deque<std::tuple<int, int, const char*>>* queue) {
  SigKey sig{nodes_[node].tag, find(split.first), find(split.second)};
  auto [it, inserted] = signatures_.emplace(sig, node);
  if (!inserted && !same(it->second, node)) {
    if (queue) {
      queue->emplace_back(node, it->second, "congruence");
    } else {
      unite(node, it->second, "congruence");
    }
  }
}

int CongruenceEngine::intern(const CellExpr& p) {
  std::string key = p.str();
  if (auto it = by_print_.find(key); it != by_print_.end()) return it->second;

  // split spines into node ids before the node itself exists; sub-spines of
  // a prenormal spine are prenormal
  std::vector<std::pair<int, int>> splits;
  if (!p.is_leaf()) {
    bool flat = base_.mode == Mode::Strict || p.tag() == CellTag::VComp;
    std::vector<CellExpr> parts = p.tag() == CellTag::VComp ? p.vertical_factors()
                                                            : p.horizontal_elements();
    if (!flat) {
      parts = {p.after(), p.before()};
    }
    auto combine = [&](std::vector<CellExpr> slice) {
      return p.tag() == CellTag::VComp ? CellExpr::from_vertical_factors(slice)
                                       : CellExpr::from_horizontal_elements(slice);
    };
    for (std::size_t j = 1; j < parts.size(); ++j) {
      int first_part = intern(combine({parts.begin(), parts.begin() + j}));
      int second_part = intern(combine({parts.begin() + j, parts.end()}));
      splits.emplace_back(first_part, second_part);
    }
  }

  int id = static_cast<int>(nodes_.size());
  NodeRec rec;
  rec.expr = p;
  rec.print = std::move(key);
  rec.frame = boundary(base_, p);
  rec.size = p.leaf_count();
  rec.level = level(base_, p);
  rec.tag = p.tag();
  rec.splits = std::move(splits);
  nodes_.push_back(std::move(rec));
  by_print_.emplace(nodes_.back().print, id);
  uf_.push_back(id);
  proof_adj_.emplace_back();
  ClassRec cls;
  cls.members = {id};
  cls.best_print = id;
  cls.min_level_member = id;
  cls.build_members = {id};
  classes_.emplace(id, std::move(cls));
  changed_since_saturation_ = true;

  for (const auto& split : nodes_[id].splits) {
    classes_.at(find(split.first)).parents.push_back(id);
    classes_.at(find(split.second)).parents.push_back(id);
  }
  // registration may unite this node with an existing signature holder
  for (auto split : std::vector<std::pair<int, int>>(nodes_[id].splits)) {
    register_signature(id, split, nullptr);
  }
  return id;
}

void CongruenceEngine::unite(int x, int y, const char* reason) {
  std::deque<std::tuple<int, int, const char*>> queue;
  queue.emplace_back(x, y, reason);
  while (!queue.empty()) {
    auto [a, b, why] = queue.front();
    queue.pop_front();
    int ra = find(a);
    int rb = find(b);
    if (ra == rb) continue;

    int edge = static_cast<int>(proof_edges_.size());
    proof_edges_.push_back({a, b, why});
    proof_adj_[a].push_back({b, edge});
    proof_adj_[b].push_back({a, edge});
    changed_since_saturation_ = true;

    if (!(nodes_[ra].frame == nodes_[rb].frame)) {
      anomalies_.push_back("classes with different frames merged: " + nodes_[ra].print +
                           " vs " + nodes_[rb].print + " (" + why + ")");
    }

    if (classes_.at(ra).members.size() < classes_.at(rb).members.size()) std::swap(ra, rb);
    ClassRec absorbed = std::move(classes_.at(rb));
    classes_.erase(rb);
    uf_[rb] = ra;
    ClassRec& big = classes_.at(ra);

    auto better = [&](int cand, int cur, auto cmp) { return cmp(cand, cur) ? cand : cur; };
    big.best_print = better(absorbed.best_print, big.best_print, [&](int l, int r) {
      return rep_less(nodes_[l].size, nodes_[l].level, nodes_[l].print, nodes_[r].size,
                      nodes_[r].level, nodes_[r].print);
    });
    big.min_level_member =
        better(absorbed.min_level_member, big.min_level_member, [&](int l, int r) {
          if (nodes_[l].level != nodes_[r].level) return nodes_[l].level < nodes_[r].level;
          return rep_less(nodes_[l].size, nodes_[l].level, nodes_[l].print, nodes_[r].size,
                          nodes_[r].level, nodes_[r].print);
        });
    big.members.insert(big.members.end(), absorbed.members.begin(), absorbed.members.end());
    for (int m : absorbed.build_members) note_build_member(big, m);

    // re-register every split signature of the absorbed class's parents
    for (int parent : absorbed.parents) {
      for (const auto& split : nodes_[parent].splits) {
        register_signature(parent, split, &queue);
      }
    }
    big.parents.insert(big.parents.end(), absorbed.parents.begin(), absorbed.parents.end());
  }
}

bool CongruenceEngine::composable(CellTag tag, int x, int y) const {
  const Boundary& fx = nodes_[find(x)].frame;
  const Boundary& fy = nodes_[find(y)].frame;
  if (tag == CellTag::VComp) return fx.d == fy.c;
  return fy.t == fx.s;  // x after, y before
}

std::optional<int> CongruenceEngine::compose_classes(CellTag tag, int x, int y) {
  int cx = find(x);
  int cy = find(y);
  if (!composable(tag, cx, cy)) return std::nullopt;
  // copy the build members: interning below can merge and erase the classes
  std::vector<int> xs = classes_.at(cx).build_members;
  std::vector<int> ys = classes_.at(cy).build_members;
  xs.push_back(classes_.at(cx).min_level_member);
  ys.push_back(classes_.at(cy).min_level_member);
  int result = -1;
  for (int ma : xs) {
    for (int mb : ys) {
      if (nodes_[ma].size + nodes_[mb].size > opt_.budget) continue;
      CellExpr raw = tag == CellTag::VComp ? CellExpr::vcomp(nodes_[ma].expr, nodes_[mb].expr)
                                           : CellExpr::hcomp(nodes_[ma].expr, nodes_[mb].expr);
      int nid = add(raw);
      SigKey sig{tag, cx, cy};
      auto [sit, inserted] = signatures_.emplace(sig, nid);
      if (!inserted && !same(sit->second, nid)) unite(nid, sit->second, "congruence");
      if (result >= 0 && !same(result, nid)) unite(result, nid, "congruence");
      result = nid;
    }
  }
  if (result < 0) return std::nullopt;
  return find(result);
}

void CongruenceEngine::product_pass(bool& changed) {
  std::vector<int> roots = canonical_classes();
  for (int i : roots) {
    if (over_cap()) return;
    for (int j : roots) {
      for (CellTag tag : {CellTag::VComp, CellTag::HComp}) {
        int ci = find(i);
        int cj = find(j);
        SigKey key{tag, ci, cj};
        if (products_done_.count(key)) continue;
        if (!composable(tag, ci, cj)) {
          products_done_.insert(key);
          continue;
        }
        std::size_t nodes_before = nodes_.size();
        std::size_t edges_before = proof_edges_.size();
        compose_classes(tag, ci, cj);
        if (nodes_.size() != nodes_before || proof_edges_.size() != edges_before) changed = true;
        products_done_.insert(key);
      }
    }
  }
}

void CongruenceEngine::add_instance(int node, const CellExpr& other_raw, const char* reason,
                                    bool& changed) {
  CellExpr p = prenormalize(base_, other_raw);
  if (p.leaf_count() > opt_.budget) return;  // outside the bounded universe
  int oid = intern(p);
  if (!same(node, oid)) {
    unite(node, oid, reason);
    changed = true;
  }
}

void CongruenceEngine::interchange_instances(int node, bool& changed) {
  // Instances rewrite whole expressions; redexes inside longer spines are
  // reached through their split subterms. Degenerate matches pad one slot
  // with an identity square or identity 2-cell, since prenormalization may
  // have erased the unit that exposed the redex.
  const CellExpr expr = nodes_[node].expr;
  auto frame_of = [&](const CellExpr& e) { return boundary(base_, e); };

  // all ways of reading e as after ∗ before, including unit padding
  auto hsplits = [&](const CellExpr& e) {
    std::vector<std::pair<CellExpr, CellExpr>> out;
    if (e.tag() == CellTag::HComp) {
      std::vector<CellExpr> he = e.horizontal_elements();
      for (std::size_t j = 1; j < he.size(); ++j) {
        out.emplace_back(CellExpr::from_horizontal_elements({he.begin(), he.begin() + j}),
                         CellExpr::from_horizontal_elements({he.begin() + j, he.end()}));
      }
    }
    Boundary fr = frame_of(e);
    out.emplace_back(e, CellExpr::fid(fr.s));
    out.emplace_back(CellExpr::fid(fr.t), e);
    return out;
  };
  // all ways of reading e as upper • lower, including unit padding
  auto vsplits = [&](const CellExpr& e) {
    std::vector<std::pair<CellExpr, CellExpr>> out;
    if (e.tag() == CellTag::VComp) {
      std::vector<CellExpr> vf = e.vertical_factors();
      for (std::size_t j = 1; j < vf.size(); ++j) {
        out.emplace_back(CellExpr::from_vertical_factors({vf.begin(), vf.begin() + j}),
                         CellExpr::from_vertical_factors({vf.begin() + j, vf.end()}));
      }
    }
    Boundary fr = frame_of(e);
    out.emplace_back(e, CellExpr::gen(base_.identity_cell_of(fr.d)));
    out.emplace_back(CellExpr::gen(base_.identity_cell_of(fr.c)), e);
    return out;
  };

  // (Q2 ∗ Q1) • (P2 ∗ P1)  ->  (Q2 • P2) ∗ (Q1 • P1)
  std::vector<CellExpr> factors = expr.vertical_factors();
  if (factors.size() == 2) {
    for (const auto& [q2, q1] : hsplits(factors[0])) {
      for (const auto& [p2, p1] : hsplits(factors[1])) {
        if (!(frame_of(p1).c == frame_of(q1).d) || !(frame_of(p2).c == frame_of(q2).d)) continue;
        CellExpr merged = CellExpr::hcomp(CellExpr::vcomp(q2, p2), CellExpr::vcomp(q1, p1));
        add_instance(node, merged, "interchange", changed);
      }
    }
  }

  // (Q2 • P2) ∗ (Q1 • P1)  ->  (Q2 ∗ Q1) • (P2 ∗ P1)
  if (expr.tag() == CellTag::HComp) {
    std::vector<CellExpr> he = expr.horizontal_elements();
    for (std::size_t j = 1; j < he.size(); ++j) {
      CellExpr apart = CellExpr::from_horizontal_elements({he.begin(), he.begin() + j});
      CellExpr bpart = CellExpr::from_horizontal_elements({he.begin() + j, he.end()});
      for (const auto& [q2, p2] : vsplits(apart)) {
        for (const auto& [q1, p1] : vsplits(bpart)) {
          if (!(frame_of(q1).t == frame_of(q2).s) || !(frame_of(p1).t == frame_of(p2).s)) {
            continue;
          }
          CellExpr split = CellExpr::vcomp(CellExpr::hcomp(q2, q1), CellExpr::hcomp(p2, p1));
          add_instance(node, split, "interchange", changed);
        }
      }
    }
  }
}

std::optional<std::string> CongruenceEngine::coherence_inverse(const std::string& cell) {
  auto it = inverse_cache_.find(cell);
  if (it != inverse_cache_.end()) return it->second;
  const TwoCellData& data = base_.cell(cell);
  for (const auto& y : base_.cells) {
    if (y.dom != data.cod || y.cod != data.dom) continue;
    auto left = base_.vcompose(y.name, cell);
    auto right = base_.vcompose(cell, y.name);
    if (left && right && *left == base_.identity_cell_of(data.dom) &&
        *right == base_.identity_cell_of(data.cod)) {
      inverse_cache_[cell] = y.name;
      return y.name;
    }
  }
  return std::nullopt;
}

void CongruenceEngine::weak_unit_instances(int node, bool& changed) {
  if (!base_.coherence) return;
  const Boundary fr = nodes_[node].frame;
  const CellExpr e = nodes_[node].expr;
  auto lam = base_.coherence->lambda.find(fr.c);
  auto lam_d = base_.coherence->lambda.find(fr.d);
  if (lam != base_.coherence->lambda.end() && lam_d != base_.coherence->lambda.end()) {
    auto inv = coherence_inverse(lam_d->second);
    if (inv) {
      CellExpr conj = CellExpr::vcomp(
          CellExpr::vcomp(CellExpr::gen(lam->second),
                          CellExpr::hcomp(CellExpr::fid(fr.t), e)),
          CellExpr::gen(*inv));
      add_instance(node, conj, "left unitor", changed);
    }
  }
  auto rho = base_.coherence->rho.find(fr.c);
  auto rho_d = base_.coherence->rho.find(fr.d);
  if (rho != base_.coherence->rho.end() && rho_d != base_.coherence->rho.end()) {
    auto inv = coherence_inverse(rho_d->second);
    if (inv) {
      CellExpr conj = CellExpr::vcomp(
          CellExpr::vcomp(CellExpr::gen(rho->second),
                          CellExpr::hcomp(e, CellExpr::fid(fr.s))),
          CellExpr::gen(*inv));
      add_instance(node, conj, "right unitor", changed);
    }
  }
}

void CongruenceEngine::weak_assoc_instances(int node, bool& changed) {
  if (!base_.coherence) return;
  const CellExpr e = nodes_[node].expr;
  if (e.tag() != CellTag::HComp) return;
  // Θ ∗ (Ψ ∗ Φ) conjugated by associator components matches (Θ ∗ Ψ) ∗ Φ
  CellExpr theta = e.after();
  CellExpr inner = e.before();
  if (inner.tag() != CellTag::HComp) return;
  CellExpr psi = inner.after();
  CellExpr phi = inner.before();
  Boundary bphi = boundary(base_, phi);
  Boundary bpsi = boundary(base_, psi);
  Boundary btheta = boundary(base_, theta);
  auto a_cod = base_.coherence->associator.find({bphi.c, bpsi.c, btheta.c});
  auto a_dom = base_.coherence->associator.find({bphi.d, bpsi.d, btheta.d});
  if (a_cod == base_.coherence->associator.end() ||
      a_dom == base_.coherence->associator.end()) {
    return;
  }
  CellExpr lhs = CellExpr::vcomp(CellExpr::gen(a_cod->second), e);
  CellExpr rhs = CellExpr::vcomp(CellExpr::hcomp(CellExpr::hcomp(theta, psi), phi),
                                 CellExpr::gen(a_dom->second));
  int il = add(lhs);
  int ir = add(rhs);
  if (!same(il, ir)) {
    unite(il, ir, "associator");
    changed = true;
  }
}

void CongruenceEngine::relation_pass(bool& changed) {
  for (int id = 0; id < static_cast<int>(nodes_.size()); ++id) {
    if (over_cap()) return;
    if (nodes_[id].relations_done) continue;
    nodes_[id].relations_done = true;
    interchange_instances(id, changed);
    if (base_.mode == Mode::Weak) {
      weak_unit_instances(id, changed);
      weak_assoc_instances(id, changed);
    }
  }
}

void CongruenceEngine::saturate() {
  if (!changed_since_saturation_) return;
  int round = 0;
  while (round < opt_.max_rounds) {
    if (over_cap()) {
      truncated_ = true;
      return;
    }
    bool changed = false;
    product_pass(changed);
    if (over_cap()) {
      truncated_ = true;
      return;
    }
    relation_pass(changed);
    if (!changed) {
      changed_since_saturation_ = false;
      return;
    }
    ++round;
  }
  truncated_ = true;
}

Verdict CongruenceEngine::query(const CellExpr& x, const CellExpr& y) {
  Boundary bx = boundary(base_, x);
  Boundary by = boundary(base_, y);
  if (!(bx == by)) {
    return Verdict{Verdict::Kind::Distinct, opt_.budget,
                   {"boundaries differ: " + bx.str() + " vs " + by.str()}};
  }
  int ix = add(x);
  int iy = add(y);
  if (ix == iy) return Verdict{Verdict::Kind::Equal, opt_.budget, {"prenormal forms coincide"}};
  saturate();
  if (same(ix, iy)) return Verdict{Verdict::Kind::Equal, opt_.budget, explain(ix, iy)};
  if (truncated_) return Verdict{Verdict::Kind::Unknown, opt_.budget, {}};
  return Verdict{Verdict::Kind::Distinct, opt_.budget, {}};
}

CellExpr CongruenceEngine::class_representative(int node) const {
  return nodes_[classes_.at(find(node)).best_print].expr;
}

int CongruenceEngine::class_min_level(int node) const {
  return nodes_[classes_.at(find(node)).min_level_member].level;
}

int CongruenceEngine::class_min_size(int node) const {
  return nodes_[classes_.at(find(node)).best_print].size;
}

const std::vector<int>& CongruenceEngine::class_members(int node) const {
  return classes_.at(find(node)).members;
}

std::vector<int> CongruenceEngine::canonical_classes() const {
  std::vector<int> out;
  out.reserve(classes_.size());
  for (const auto& [root, cls] : classes_) out.push_back(root);
  return out;
}

std::vector<std::string> CongruenceEngine::explain(int x, int y) const {
  if (x == y) return {"identical nodes"};
  std::vector<int> prev(nodes_.size(), -1);
  std::vector<int> via(nodes_.size(), -1);
  std::queue<int> frontier;
  frontier.push(x);
  prev[x] = x;
  while (!frontier.empty()) {
    int cur = frontier.front();
    frontier.pop();
    if (cur == y) break;
    for (const auto& [peer, edge] : proof_adj_[cur]) {
      if (prev[peer] >= 0) continue;
      prev[peer] = cur;
      via[peer] = edge;
      frontier.push(peer);
    }
  }
  std::vector<std::string> steps;
  if (prev[y] < 0) return steps;
  for (int cur = y; cur != x; cur = prev[cur]) {
    const Edge& e = proof_edges_[via[cur]];
    steps.push_back(e.reason + ": " + nodes_[e.a].print + "  ~  " + nodes_[e.b].print);
  }
  std::reverse(steps.begin(), steps.end());
  if (steps.size() > 20) {
    steps.resize(20);
    steps.push_back("...");
  }
  return steps;
}

}  // namespace dblcat
