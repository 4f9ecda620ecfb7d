#include "envop/tree.hpp"

#include <algorithm>
#include <sstream>

namespace envop {

int GeneratorSet::add(GeneratorInfo g) {
  if (byname_.count(g.name))
    throw input_error("duplicate generator name: " + g.name);
  if (g.arity < 1) throw input_error("generator arity must be >= 1");
  int id = static_cast<int>(gens_.size());
  byname_[g.name] = id;
  gens_.push_back(std::move(g));
  return id;
}

int GeneratorSet::find(const std::string& name) const {
  auto it = byname_.find(name);
  return it == byname_.end() ? -1 : it->second;
}

TreeMonomial TreeMonomial::corolla(int gen, int arity) {
  std::vector<Node> nodes;
  nodes.push_back({gen, arity});
  for (int i = 0; i < arity; ++i) nodes.push_back({-1, 0});
  return from_preorder(std::move(nodes));
}

TreeMonomial TreeMonomial::from_preorder(std::vector<Node> nodes) {
  // validate: preorder walk must consume exactly the node list
  long remaining = 1;
  for (const Node& n : nodes) {
    if (remaining <= 0) throw input_error("malformed tree preorder");
    remaining -= 1;
    remaining += n.nchild;
    if (n.gen < 0 && n.nchild != 0) throw input_error("leaf with children");
  }
  if (remaining != 0) throw input_error("malformed tree preorder");
  TreeMonomial t;
  t.nodes_ = std::move(nodes);
  return t;
}

int TreeMonomial::arity() const {
  int n = 0;
  for (const Node& nd : nodes_)
    if (nd.gen < 0) ++n;
  return n;
}

int TreeMonomial::weight() const {
  int n = 0;
  for (const Node& nd : nodes_)
    if (nd.gen >= 0) ++n;
  return n;
}

int TreeMonomial::generator_weight(const GeneratorSet& gens) const {
  int w = 0;
  for (const Node& nd : nodes_)
    if (nd.gen >= 0) w += gens[nd.gen].weight;
  return w;
}

namespace {

/// Size of the subtree (in nodes) rooted at preorder index i.
std::size_t subtree_size(const std::vector<TreeMonomial::Node>& nodes,
                         std::size_t i) {
  long remaining = 1;
  std::size_t j = i;
  while (remaining > 0) {
    remaining -= 1;
    remaining += nodes[j].nchild;
    ++j;
  }
  return j - i;
}

/// Preorder index of the k-th leaf (1-based).
std::size_t leaf_index(const std::vector<TreeMonomial::Node>& nodes, int k) {
  int seen = 0;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i].gen < 0) {
      ++seen;
      if (seen == k) return i;
    }
  }
  throw input_error("slot out of range");
}

}  // namespace

std::string TreeMonomial::to_string(const GeneratorSet& gens) const {
  std::ostringstream os;
  std::size_t pos = 0;
  std::function<void()> emit = [&]() {
    const Node& n = nodes_[pos++];
    if (n.gen < 0) {
      os << "*";
      return;
    }
    os << gens[n.gen].name << "(";
    for (int c = 0; c < n.nchild; ++c) {
      if (c) os << ",";
      emit();
    }
    os << ")";
  };
  emit();
  return os.str();
}

TreeMonomial graft(const TreeMonomial& outer, int slot, const TreeMonomial& inner) {
  if (slot < 1 || slot > outer.arity())
    throw input_error("graft: slot out of range");
  std::vector<TreeMonomial::Node> nodes = outer.nodes();
  std::size_t at = leaf_index(nodes, slot);
  nodes.erase(nodes.begin() + static_cast<long>(at));
  nodes.insert(nodes.begin() + static_cast<long>(at), inner.nodes().begin(),
               inner.nodes().end());
  return TreeMonomial::from_preorder(std::move(nodes));
}

PathData path_sequence(const TreeMonomial& m) {
  PathData out;
  std::vector<int> stack;  // generator ids on the current root path
  std::size_t pos = 0;
  std::function<void()> walk = [&]() {
    const auto& n = m.nodes()[pos++];
    if (n.gen < 0) {
      out.degrees.push_back(static_cast<int>(stack.size()));
      out.words.push_back(stack);
      return;
    }
    stack.push_back(n.gen);
    for (int c = 0; c < n.nchild; ++c) walk();
    stack.pop_back();
  };
  walk();
  return out;
}

MonomialOrder MonomialOrder::default_for(int ngens) {
  MonomialOrder ord;
  ord.generator_rank.resize(static_cast<std::size_t>(ngens));
  for (int i = 0; i < ngens; ++i) ord.generator_rank[static_cast<std::size_t>(i)] = i;
  return ord;
}

int compare(const TreeMonomial& m1, const TreeMonomial& m2,
            const MonomialOrder& ord) {
  if (m1.arity() != m2.arity())
    throw input_error("compare: arity mismatch");
  PathData p1 = path_sequence(m1), p2 = path_sequence(m2);
  for (std::size_t i = 0; i < p1.degrees.size(); ++i) {
    if (p1.degrees[i] != p2.degrees[i])
      return p1.degrees[i] > p2.degrees[i] ? 1 : -1;
  }
  for (std::size_t i = 0; i < p1.words.size(); ++i) {
    const auto& w1 = p1.words[i];
    const auto& w2 = p2.words[i];
    for (std::size_t j = 0; j < w1.size(); ++j) {
      int r1 = ord.rank_of(w1[j]), r2 = ord.rank_of(w2[j]);
      if (r1 != r2) return r1 < r2 ? 1 : -1;  // smaller rank = larger
    }
  }
  // identical path data on possibly distinct shapes: structural tiebreak
  auto c = m1.nodes() <=> m2.nodes();
  if (c == std::strong_ordering::equal) return 0;
  return c == std::strong_ordering::greater ? 1 : -1;
}

namespace {

/// Attempts to match pattern d (starting at its preorder root) against the
/// host subtree rooted at host index hi. Records host indices of matched
/// internal vertices in occ.
bool match_at(const std::vector<TreeMonomial::Node>& d, std::size_t di,
              const std::vector<TreeMonomial::Node>& host, std::size_t hi,
              std::vector<int>& occ) {
  const auto& dn = d[di];
  if (dn.gen < 0) return true;  // pattern leaf absorbs the host subtree
  const auto& hn = host[hi];
  if (hn.gen != dn.gen || hn.nchild != dn.nchild) return false;
  occ.push_back(static_cast<int>(hi));
  std::size_t dc = di + 1, hc = hi + 1;
  for (int c = 0; c < dn.nchild; ++c) {
    if (!match_at(d, dc, host, hc, occ)) return false;
    dc += subtree_size(d, dc);
    hc += subtree_size(host, hc);
  }
  return true;
}

}  // namespace

std::vector<Occurrence> divides(const TreeMonomial& d, const TreeMonomial& m) {
  std::vector<Occurrence> out;
  if (d.is_unit()) return out;  // the unit pattern is not a meaningful divisor
  const auto& dn = d.nodes();
  const auto& mn = m.nodes();
  for (std::size_t v = 0; v < mn.size(); ++v) {
    if (mn[v].gen < 0) continue;
    std::vector<int> occ;
    if (match_at(dn, 0, mn, v, occ)) out.push_back({std::move(occ)});
  }
  return out;
}

TreeMonomial replace_occurrence(const TreeMonomial& m, const TreeMonomial& d,
                                const Occurrence& occ, const TreeMonomial& r) {
  if (r.arity() != d.arity())
    throw input_error("replace_occurrence: replacement arity mismatch");
  if (occ.vertex_of.empty())
    throw input_error("replace_occurrence: empty occurrence");
  const auto& dn = d.nodes();
  const auto& mn = m.nodes();
  std::size_t v = static_cast<std::size_t>(occ.vertex_of[0]);

  // hanger ranges: for each pattern leaf, the host subtree it matched
  std::vector<std::pair<std::size_t, std::size_t>> hangers;
  std::function<void(std::size_t, std::size_t)> collect = [&](std::size_t di,
                                                              std::size_t hi) {
    if (dn[di].gen < 0) {
      hangers.emplace_back(hi, hi + subtree_size(mn, hi));
      return;
    }
    std::size_t dc = di + 1, hc = hi + 1;
    for (int c = 0; c < dn[di].nchild; ++c) {
      collect(dc, hc);
      dc += subtree_size(dn, dc);
      hc += subtree_size(mn, hc);
    }
  };
  collect(0, v);

  // plug the replacement's leaves with the hangers, in leaf order
  std::vector<TreeMonomial::Node> plugged;
  std::size_t next_hanger = 0;
  for (const auto& n : r.nodes()) {
    if (n.gen < 0) {
      auto [b, e] = hangers.at(next_hanger++);
      plugged.insert(plugged.end(), mn.begin() + static_cast<long>(b),
                     mn.begin() + static_cast<long>(e));
    } else {
      plugged.push_back(n);
    }
  }

  std::vector<TreeMonomial::Node> out;
  out.insert(out.end(), mn.begin(), mn.begin() + static_cast<long>(v));
  out.insert(out.end(), plugged.begin(), plugged.end());
  std::size_t vend = v + subtree_size(mn, v);
  out.insert(out.end(), mn.begin() + static_cast<long>(vend), mn.end());
  return TreeMonomial::from_preorder(std::move(out));
}

void enumerate_monomials_pruned(
    const GeneratorSet& gens, int arity,
    const std::function<bool(const TreeMonomial&)>& prune,
    const std::function<void(const TreeMonomial&)>& yield) {
  if (arity < 1) return;
  // expand leaves left to right so each monomial is produced once
  std::function<void(const TreeMonomial&, int)> rec = [&](const TreeMonomial& t,
                                                          int next_leaf) {
    int a = t.arity();
    if (next_leaf > a) {
      if (a == arity) yield(t);
      return;
    }
    // leave this leaf closed
    rec(t, next_leaf + 1);
    // or expand it with a generator corolla
    for (int g = 0; g < gens.size(); ++g) {
      int ga = gens[g].arity;
      if (ga < 2) continue;
      if (a + ga - 1 > arity) continue;
      TreeMonomial t2 = graft(t, next_leaf, TreeMonomial::corolla(g, ga));
      if (prune && prune(t2)) continue;
      rec(t2, next_leaf);
    }
  };
  TreeMonomial u = TreeMonomial::unit();
  if (!(prune && prune(u))) rec(u, 1);
}

std::vector<TreeMonomial> enumerate_monomials(const GeneratorSet& gens, int arity) {
  std::vector<TreeMonomial> out;
  enumerate_monomials_pruned(gens, arity, nullptr,
                             [&](const TreeMonomial& t) { out.push_back(t); });
  return out;
}

}  // namespace envop
