#include "envop/rewriting.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace envop {

OperadElement OperadElement::monomial(const TreeMonomial& m, const Rational& c) {
  OperadElement e;
  e.add_term(m, c);
  return e;
}

int OperadElement::arity() const {
  if (terms_.empty()) throw internal_error("arity of the zero element");
  return terms_.begin()->first.arity();
}

void OperadElement::add_term(const TreeMonomial& m, const Rational& c) {
  if (c == 0) return;
  if (!terms_.empty() && terms_.begin()->first.arity() != m.arity())
    throw input_error("inhomogeneous element: arity mismatch");
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

OperadElement OperadElement::operator+(const OperadElement& o) const {
  OperadElement r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

OperadElement OperadElement::operator-(const OperadElement& o) const {
  OperadElement r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
  return r;
}

OperadElement OperadElement::operator*(const Rational& c) const {
  OperadElement r;
  if (c == 0) return r;
  for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
  return r;
}

const TreeMonomial& OperadElement::leading_monomial(const MonomialOrder& ord) const {
  if (terms_.empty()) throw internal_error("leading monomial of zero");
  const TreeMonomial* best = &terms_.begin()->first;
  for (const auto& [m, c] : terms_)
    if (compare(m, *best, ord) > 0) best = &m;
  return *best;
}

const Rational& OperadElement::coeff(const TreeMonomial& m) const {
  static const Rational zero(0);
  auto it = terms_.find(m);
  return it == terms_.end() ? zero : it->second;
}

std::string OperadElement::to_string(const GeneratorSet& gens) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
      first = false;
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    if (a != 1) os << a.get_str() << "*";
    os << m.to_string(gens);
  }
  return os.str();
}

namespace {

std::optional<Occurrence> first_occurrence(const TreeMonomial& d,
                                           const TreeMonomial& m) {
  auto occ = divides(d, m);
  if (occ.empty()) return std::nullopt;
  return occ.front();
}

struct DivisorHit {
  std::size_t rule;
  Occurrence occ;
};

std::optional<DivisorHit> find_divisor(const TreeMonomial& m,
                                       const RewritingSystem& sys) {
  for (std::size_t i = 0; i < sys.rules.size(); ++i) {
    if (sys.rules[i].lm.weight() > m.weight()) continue;
    auto occ = first_occurrence(sys.rules[i].lm, m);
    if (occ) return DivisorHit{i, *occ};
  }
  return std::nullopt;
}

/// One rewriting step of monomial m by rule r at occurrence occ:
/// the element that m is replaced with.
OperadElement rewrite_once(const TreeMonomial& m, const Rule& r,
                           const Occurrence& occ) {
  OperadElement out;
  for (const auto& [t, c] : r.tail.terms())
    out.add_term(replace_occurrence(m, r.lm, occ, t), c);
  return out;
}

}  // namespace

OperadElement reduce(const OperadElement& e, const RewritingSystem& sys) {
  OperadElement cur = e;
  std::set<TreeMonomial> known_normal;
  while (true) {
    // the ord-largest reducible monomial
    const TreeMonomial* target = nullptr;
    std::optional<DivisorHit> hit;
    for (const auto& [m, c] : cur.terms()) {
      if (known_normal.count(m)) continue;
      if (target && compare(m, *target, sys.order) < 0) continue;
      auto h = find_divisor(m, sys);
      if (h) {
        target = &m;
        hit = h;
      } else {
        known_normal.insert(m);
      }
    }
    if (!target) return cur;
    Rational c = cur.coeff(*target);
    TreeMonomial m = *target;
    cur.add_term(m, -c);
    cur = cur + rewrite_once(m, sys.rules[hit->rule], hit->occ) * c;
  }
}

namespace {

struct Overlay {
  TreeMonomial m;
  Occurrence occA, occB;
  bool exact_root = false;  // full coincidence at the root
};

using Node = TreeMonomial::Node;

/// Superimposes pattern B with its root at vertex v of pattern A. On
/// success the common multiple and both occurrences are returned.
std::optional<Overlay> overlay(const TreeMonomial& A, std::size_t v,
                               const TreeMonomial& B) {
  const auto& an = A.nodes();
  const auto& bn = B.nodes();

  auto subtree_end = [](const std::vector<Node>& nodes, std::size_t i) {
    long remaining = 1;
    std::size_t j = i;
    while (remaining > 0) {
      remaining -= 1;
      remaining += nodes[j].nchild;
      ++j;
    }
    return j;
  };

  std::vector<Node> out;
  std::vector<int> mapA(an.size(), -1), mapB(bn.size(), -1);
  bool extended = false;

  std::function<void(const std::vector<Node>&, std::size_t, std::size_t,
                     std::vector<int>&)>
      copy_subtree = [&](const std::vector<Node>& nodes, std::size_t i,
                         std::size_t end, std::vector<int>& map) {
        for (std::size_t k = i; k < end; ++k) {
          if (nodes[k].gen >= 0) map[k] = static_cast<int>(out.size());
          out.push_back(nodes[k]);
        }
      };

  // prefix of A before v
  copy_subtree(an, 0, v, mapA);

  std::function<bool(std::size_t, std::size_t)> merge = [&](std::size_t ai,
                                                            std::size_t bi) -> bool {
    const Node& a = an[ai];
    const Node& b = bn[bi];
    if (a.gen >= 0 && b.gen >= 0) {
      if (a.gen != b.gen || a.nchild != b.nchild) return false;
      mapA[ai] = static_cast<int>(out.size());
      mapB[bi] = static_cast<int>(out.size());
      out.push_back(a);
      std::size_t ac = ai + 1, bc = bi + 1;
      for (int c = 0; c < a.nchild; ++c) {
        if (!merge(ac, bc)) return false;
        ac = subtree_end(an, ac);
        bc = subtree_end(bn, bc);
      }
      return true;
    }
    if (a.gen >= 0 && b.gen < 0) {
      // B's leaf absorbs A's subtree
      copy_subtree(an, ai, subtree_end(an, ai), mapA);
      return true;
    }
    if (a.gen < 0 && b.gen >= 0) {
      // B extends below A's leaf
      extended = true;
      copy_subtree(bn, bi, subtree_end(bn, bi), mapB);
      return true;
    }
    out.push_back(a);  // both leaves
    return true;
  };

  if (!merge(v, 0)) return std::nullopt;

  // suffix of A after the subtree at v
  std::size_t vend = subtree_end(an, v);
  copy_subtree(an, vend, an.size(), mapA);

  Overlay o;
  o.m = TreeMonomial::from_preorder(std::move(out));
  for (std::size_t i = 0; i < an.size(); ++i)
    if (an[i].gen >= 0) o.occA.vertex_of.push_back(mapA[i]);
  for (std::size_t i = 0; i < bn.size(); ++i)
    if (bn[i].gen >= 0) o.occB.vertex_of.push_back(mapB[i]);
  o.exact_root = (v == 0 && !extended && o.m == A && o.m == B);
  return o;
}

}  // namespace

std::vector<CriticalPair> s_polynomials(const Rule& r1, const Rule& r2,
                                        const RewritingSystem& sys) {
  std::vector<CriticalPair> out;
  const auto& an = r1.lm.nodes();
  bool same_rule = (r1.lm == r2.lm) && (r1.tail == r2.tail);
  for (std::size_t v = 0; v < an.size(); ++v) {
    if (an[v].gen < 0) continue;
    auto o = overlay(r1.lm, v, r2.lm);
    if (!o) continue;
    if (o->exact_root && same_rule) continue;  // trivial self coincidence
    OperadElement s = rewrite_once(o->m, r1, o->occA) -
                      rewrite_once(o->m, r2, o->occB);
    out.push_back({o->m, std::move(s)});
  }
  return out;
}

namespace {

bool monomial_less(const TreeMonomial& a, const TreeMonomial& b,
                   const MonomialOrder& ord) {
  if (a.arity() != b.arity()) return a.arity() < b.arity();
  int c = compare(a, b, ord);
  if (c != 0) return c < 0;
  return false;
}

Rule make_rule(const OperadElement& e, const MonomialOrder& ord) {
  const TreeMonomial& lm = e.leading_monomial(ord);
  Rational lc = e.coeff(lm);
  OperadElement tail;
  for (const auto& [m, c] : e.terms())
    if (!(m == lm)) tail.add_term(m, -c / lc);
  return Rule{lm, tail};
}

}  // namespace

RewritingSystem buchberger(const GeneratorSet& gens,
                           const std::vector<OperadElement>& relations,
                           const MonomialOrder& ord, int arity_bound) {
  RewritingSystem sys;
  sys.gens = gens;
  sys.order = ord;
  sys.arity_bound = arity_bound;

  // seed: reduce each relation by the rules admitted so far
  std::vector<OperadElement> seeds = relations;
  std::sort(seeds.begin(), seeds.end(), [&](const OperadElement& a,
                                            const OperadElement& b) {
    if (a.is_zero() || b.is_zero()) return b.is_zero() < a.is_zero();
    return monomial_less(a.leading_monomial(ord), b.leading_monomial(ord), ord);
  });
  for (const auto& rel : seeds) {
    if (rel.is_zero()) continue;
    if (rel.arity() > arity_bound) continue;
    OperadElement r = reduce(rel, sys);
    if (r.is_zero()) continue;  // duplicate or consequence
    sys.rules.push_back(make_rule(r, ord));
  }

  // bounded completion
  std::size_t processed = 0;  // pairs (i,j) with i,j < processed are done
  while (processed < sys.rules.size()) {
    std::size_t upto = sys.rules.size();
    std::vector<CriticalPair> pairs;
    for (std::size_t i = 0; i < upto; ++i)
      for (std::size_t j = 0; j < upto; ++j) {
        if (i < processed && j < processed) continue;
        for (auto& cp : s_polynomials(sys.rules[i], sys.rules[j], sys))
          if (cp.common_multiple.arity() <= arity_bound)
            pairs.push_back(std::move(cp));
      }
    processed = upto;
    std::sort(pairs.begin(), pairs.end(), [&](const CriticalPair& a,
                                              const CriticalPair& b) {
      if (!(a.common_multiple == b.common_multiple))
        return monomial_less(a.common_multiple, b.common_multiple, ord);
      return false;
    });
    for (const auto& cp : pairs) {
      OperadElement r = reduce(cp.s_polynomial, sys);
      if (!r.is_zero()) sys.rules.push_back(make_rule(r, ord));
    }
  }

  // inter-reduction: drop redundant rules, normalize tails
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < sys.rules.size(); ++i) {
      Rule r = sys.rules[i];
      RewritingSystem others = sys;
      others.rules.erase(others.rules.begin() + static_cast<long>(i));
      OperadElement e = OperadElement::monomial(r.lm) - r.tail;
      OperadElement red = reduce(e, others);
      if (red.is_zero()) {
        sys.rules.erase(sys.rules.begin() + static_cast<long>(i));
        changed = true;
        break;
      }
      Rule nr = make_rule(red, ord);
      if (!(nr.lm == r.lm) || !(nr.tail == r.tail)) {
        sys.rules[i] = nr;
        changed = true;
      }
    }
  }

  std::sort(sys.rules.begin(), sys.rules.end(), [&](const Rule& a, const Rule& b) {
    if (!(a.lm == b.lm)) return monomial_less(a.lm, b.lm, ord);
    return false;
  });
  sys.saturated = true;
  return sys;
}

std::vector<TreeMonomial> normal_monomials(const RewritingSystem& sys, int arity) {
  std::vector<TreeMonomial> out;
  auto prune = [&](const TreeMonomial& t) {
    for (const auto& r : sys.rules)
      if (!divides(r.lm, t).empty()) return true;
    return false;
  };
  enumerate_monomials_pruned(sys.gens, arity, prune,
                             [&](const TreeMonomial& t) { out.push_back(t); });
  return out;
}

long normal_monomial_count(const RewritingSystem& sys, int arity) {
  long n = 0;
  auto prune = [&](const TreeMonomial& t) {
    for (const auto& r : sys.rules)
      if (!divides(r.lm, t).empty()) return true;
    return false;
  };
  enumerate_monomials_pruned(sys.gens, arity, prune,
                             [&](const TreeMonomial&) { ++n; });
  return n;
}

std::string dump(const RewritingSystem& sys) {
  std::ostringstream os;
  for (const auto& r : sys.rules) {
    os << r.lm.to_string(sys.gens) << " -> " << r.tail.to_string(sys.gens)
       << "\n";
  }
  return os.str();
}

}  // namespace envop
