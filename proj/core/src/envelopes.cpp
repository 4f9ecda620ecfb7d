#include "envop/envelopes.hpp"

#include <functional>
#include <map>
#include <sstream>

namespace envop {

bool is_good_sequence(const std::vector<int>& k) {
  int n = static_cast<int>(k.size());
  long sum = 0;
  for (int x : k) {
    if (x < 0) return false;
    sum += x;
  }
  if (sum != n - 1) return false;
  long partial = 0;
  for (int i = 1; i < n; ++i) {
    partial += k[static_cast<std::size_t>(i - 1)];
    if (partial < i) return false;
  }
  return true;
}

int raney_shift(const std::vector<int>& k) {
  int n = static_cast<int>(k.size());
  if (n == 0) throw input_error("raney_shift: empty sequence");
  long sum = 0;
  for (int x : k) {
    if (x < 0) throw input_error("raney_shift: negative entry");
    sum += x;
  }
  if (sum != n - 1) throw input_error("raney_shift: entries must sum to n-1");
  for (int r = 0; r < n; ++r) {
    std::vector<int> rot;
    for (int i = 0; i < n; ++i)
      rot.push_back(k[static_cast<std::size_t>((i + r) % n)]);
    if (is_good_sequence(rot)) return r;
  }
  throw internal_error("raney_shift: no good rotation found");
}

std::vector<std::vector<int>> good_sequences(int n) {
  std::vector<std::vector<int>> out;
  if (n < 1) return out;
  std::vector<int> cur;
  long sum = 0;
  std::function<void()> rec = [&]() {
    int i = static_cast<int>(cur.size());
    if (i == n) {
      if (sum == n - 1) out.push_back(cur);
      return;
    }
    for (int v = 0; sum + v <= n - 1; ++v) {
      // partial-sum pruning: k_1+...+k_i >= i for i < n
      if (i + 1 < n && sum + v < i + 1) continue;
      cur.push_back(v);
      sum += v;
      rec();
      sum -= v;
      cur.pop_back();
    }
  };
  rec();
  return out;
}

Rational raney_weighted_count(const std::vector<long>& dims, int n) {
  if (static_cast<int>(dims.size()) < n)
    throw input_error("raney_weighted_count: dims must cover weights 0..n-1");
  Rational total(0);
  for (const auto& k : good_sequences(n)) {
    Rational prod(1);
    for (int x : k) prod *= Rational(dims[static_cast<std::size_t>(x)]);
    total += prod;
  }
  return total;
}

Rational lagrange_dim(const TruncatedSeries& g, int n) {
  if (n < 1) throw input_error("lagrange_dim: n must be >= 1");
  if (g.order() < n - 1)
    throw input_error("lagrange_dim: series order too small");
  TruncatedSeries p = power(g, n);
  return p.coeff(n - 1) / Rational(n);
}

std::string word_text(const Word& w, const std::vector<std::string>& names) {
  if (w.empty()) return "1";
  std::ostringstream os;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) os << "*";
    os << names.at(static_cast<std::size_t>(w[i]));
  }
  return os.str();
}

namespace {

Envelope build_envelope(const CompletedAlgebra& a, int arity_bound,
                        bool minimal) {
  if (arity_bound < 1) throw input_error("arity bound must be >= 1");
  if (a.weight_bound() < arity_bound - 1)
    throw input_error(
        "algebra is not completed far enough for the requested envelope "
        "bound");
  const auto& names = a.presentation().gen_names;

  Envelope e;
  e.pres.name =
      (minimal ? "u_min(" : "u_max(") + a.presentation().name + ")";
  std::vector<std::vector<int>> genid(
      static_cast<std::size_t>(arity_bound));  // per weight, per basis index
  for (int w = 1; w <= arity_bound - 1; ++w) {
    const auto& b = a.basis(w);
    for (std::size_t i = 0; i < b.size(); ++i) {
      int id = e.pres.gens.add({word_text(b[i], names), w + 1, w, 0});
      genid[static_cast<std::size_t>(w)].push_back(id);
      e.gen_source.emplace_back(w, static_cast<int>(i));
    }
  }

  for (int w1 = 1; w1 <= arity_bound - 2; ++w1)
    for (int w2 = 1; w1 + w2 <= arity_bound - 1; ++w2) {
      const auto& b1s = a.basis(w1);
      const auto& b2s = a.basis(w2);
      for (std::size_t i1 = 0; i1 < b1s.size(); ++i1)
        for (std::size_t i2 = 0; i2 < b2s.size(); ++i2) {
          int g1 = genid[static_cast<std::size_t>(w1)][i1];
          int g2 = genid[static_cast<std::size_t>(w2)][i2];
          TreeMonomial t1 = TreeMonomial::corolla(g1, w1 + 1);
          TreeMonomial t2 = TreeMonomial::corolla(g2, w2 + 1);
          OperadElement rel = OperadElement::monomial(graft(t1, 1, t2));
          WordElement p = a.multiply(b1s[i1], b2s[i2]);
          for (const auto& [w, c] : p.terms()) {
            int k = a.basis_index(w);
            if (k < 0)
              throw internal_error("product did not expand in the basis");
            rel.add_term(TreeMonomial::corolla(
                             genid[static_cast<std::size_t>(w1 + w2)]
                                  [static_cast<std::size_t>(k)],
                             w1 + w2 + 1),
                         -c);
          }
          e.pres.relations.push_back(std::move(rel));
          if (minimal)
            for (int i = 2; i <= w1 + 1; ++i)
              e.pres.relations.push_back(
                  OperadElement::monomial(graft(t1, i, t2)));
        }
    }
  return e;
}

}  // namespace

Envelope u_max(const CompletedAlgebra& a, int arity_bound) {
  return build_envelope(a, arity_bound, false);
}

Envelope u_min(const CompletedAlgebra& a, int arity_bound) {
  return build_envelope(a, arity_bound, true);
}

namespace {

OperadPresentation quadratic_envelope(const AlgebraPresentation& a,
                                      bool minimal) {
  a.validate();
  if (!a.is_quadratic())
    throw input_error("quadratic envelope presentation needs a quadratic "
                      "algebra");
  OperadPresentation p;
  p.name = (minimal ? "u_min(" : "u_max(") + a.name + ")";
  for (int g = 0; g < a.ngens(); ++g)
    p.gens.add({a.gen_names[static_cast<std::size_t>(g)], 2, 1, 0});
  for (const auto& rel : a.relations) {
    if (rel.is_zero()) continue;
    OperadElement r;
    for (const auto& [w, c] : rel.terms())
      r.add_term(graft(TreeMonomial::corolla(w[0], 2), 1,
                       TreeMonomial::corolla(w[1], 2)),
                 c);
    p.relations.push_back(std::move(r));
  }
  if (minimal)
    for (int g1 = 0; g1 < a.ngens(); ++g1)
      for (int g2 = 0; g2 < a.ngens(); ++g2)
        p.relations.push_back(OperadElement::monomial(
            graft(TreeMonomial::corolla(g1, 2), 2,
                  TreeMonomial::corolla(g2, 2))));
  return p;
}

}  // namespace

OperadPresentation u_max_quadratic(const AlgebraPresentation& a) {
  return quadratic_envelope(a, false);
}

OperadPresentation u_min_quadratic(const AlgebraPresentation& a) {
  return quadratic_envelope(a, true);
}

std::vector<TreeMonomial> u_max_basis(const GeneratorSet& gens, int arity) {
  // leftmost-leaf condition: in preorder, no internal vertex directly
  // follows another as its first child
  auto prune = [](const TreeMonomial& t) {
    const auto& nodes = t.nodes();
    for (std::size_t i = 0; i + 1 < nodes.size(); ++i)
      if (nodes[i].gen >= 0 && nodes[i + 1].gen >= 0) return true;
    return false;
  };
  std::vector<TreeMonomial> out;
  enumerate_monomials_pruned(gens, arity, prune,
                             [&](const TreeMonomial& t) { out.push_back(t); });
  return out;
}

std::vector<int> raney_tensor(const TreeMonomial& t) {
  const auto& nodes = t.nodes();
  std::vector<int> factors;
  // parent generator per leaf position, -1 when not a leftmost input
  std::size_t pos = 0;
  std::function<void(int, bool)> walk = [&](int parent_gen, bool first_child) {
    const auto& n = nodes[pos++];
    if (n.gen < 0) {
      factors.push_back(first_child ? parent_gen : -1);
      return;
    }
    // every internal vertex must have a leaf as its leftmost input
    if (nodes[pos].gen >= 0)
      throw input_error("tree is not in leftmost-leaf basis form");
    for (int c = 0; c < n.nchild; ++c) walk(n.gen, c == 0);
  };
  walk(-1, false);
  return factors;
}

TreeMonomial raney_tensor_inverse(const std::vector<int>& factors,
                                  const GeneratorSet& gens) {
  std::size_t pos = 0;
  std::function<TreeMonomial(std::size_t)> build =
      [&](std::size_t len) -> TreeMonomial {
    if (len == 1) {
      int f = factors.at(pos++);
      if (f != -1)
        throw input_error("raney_tensor_inverse: malformed factor sequence");
      return TreeMonomial::unit();
    }
    int g = factors.at(pos++);
    if (g < 0)
      throw input_error("raney_tensor_inverse: malformed factor sequence");
    int arity = gens[g].arity;
    // split the rest into arity-1 complete blocks (ballot decomposition)
    std::vector<std::size_t> lens;
    std::size_t scan = pos;
    for (int b = 0; b < arity - 1; ++b) {
      long weight = 0;
      std::size_t l = 0;
      while (true) {
        if (scan + l >= factors.size())
          throw input_error("raney_tensor_inverse: truncated sequence");
        int f = factors[scan + l];
        weight += f < 0 ? 0 : gens[f].arity - 1;
        ++l;
        if (weight == static_cast<long>(l) - 1) break;
      }
      lens.push_back(l);
      scan += l;
    }
    TreeMonomial t = TreeMonomial::corolla(g, arity);
    std::vector<TreeMonomial> children;
    for (std::size_t l : lens) children.push_back(build(l));
    for (int i = arity; i >= 2; --i)
      t = graft(t, i, children[static_cast<std::size_t>(i - 2)]);
    return t;
  };
  TreeMonomial t = build(factors.size());
  if (pos != factors.size())
    throw input_error("raney_tensor_inverse: trailing factors");
  return t;
}

std::vector<long> AlgebraTable::dims() const {
  std::vector<long> out;
  for (const auto& l : labels) out.push_back(static_cast<long>(l.size()));
  return out;
}

std::vector<std::vector<TreeMonomial>> envelope_corolla_basis(
    const Envelope& env, int weight_bound) {
  std::vector<std::vector<TreeMonomial>> basis(
      static_cast<std::size_t>(weight_bound) + 1);
  basis[0].push_back(TreeMonomial::unit());
  // generator ids are added weight by weight in the algebra's basis
  // order, so id order within a weight is the algebra's order
  for (int g = 0; g < env.pres.gens.size(); ++g) {
    int w = env.gen_source[static_cast<std::size_t>(g)].first;
    if (w <= weight_bound)
      basis[static_cast<std::size_t>(w)].push_back(
          TreeMonomial::corolla(g, env.pres.gens[g].arity));
  }
  return basis;
}

AlgebraTable forget_to_algebra(
    const CompletedOperad& p, int weight_bound,
    const std::vector<std::vector<TreeMonomial>>* basis_override) {
  if (p.arity_bound() < weight_bound + 1)
    throw input_error("operad is not completed far enough for the requested "
                      "weight bound");
  AlgebraTable t;
  t.weight_bound = weight_bound;
  std::vector<std::vector<TreeMonomial>> basis;
  for (int w = 0; w <= weight_bound; ++w) {
    if (basis_override) {
      basis.push_back(basis_override->at(static_cast<std::size_t>(w)));
    } else {
      basis.push_back(p.basis(w + 1));
    }
    std::vector<std::string> labels;
    for (const auto& m : basis.back())
      labels.push_back(m.to_string(p.presentation().gens));
    t.labels.push_back(std::move(labels));
  }
  std::vector<std::map<TreeMonomial, int>> index(
      static_cast<std::size_t>(weight_bound) + 1);
  for (int w = 0; w <= weight_bound; ++w) {
    const auto& b = basis[static_cast<std::size_t>(w)];
    for (std::size_t i = 0; i < b.size(); ++i)
      index[static_cast<std::size_t>(w)][b[i]] = static_cast<int>(i);
  }

  t.prod.resize(static_cast<std::size_t>(weight_bound));
  for (int w1 = 1; w1 <= weight_bound; ++w1) {
    auto& row = t.prod[static_cast<std::size_t>(w1 - 1)];
    row.resize(static_cast<std::size_t>(weight_bound));
    for (int w2 = 1; w2 <= weight_bound; ++w2) {
      auto& cell = row[static_cast<std::size_t>(w2 - 1)];
      if (w1 + w2 > weight_bound) continue;
      const auto& b1 = basis[static_cast<std::size_t>(w1)];
      const auto& b2 = basis[static_cast<std::size_t>(w2)];
      const auto& btarget = basis[static_cast<std::size_t>(w1 + w2)];
      cell.resize(b1.size());
      for (std::size_t i = 0; i < b1.size(); ++i) {
        cell[i].resize(b2.size());
        for (std::size_t j = 0; j < b2.size(); ++j) {
          std::vector<Rational> coeffs(btarget.size(), Rational(0));
          OperadElement e = p.compose(b1[i], 1, b2[j]);
          for (const auto& [m, c] : e.terms()) {
            auto it = index[static_cast<std::size_t>(w1 + w2)].find(m);
            if (it == index[static_cast<std::size_t>(w1 + w2)].end())
              throw internal_error("composition did not expand in the basis");
            coeffs[static_cast<std::size_t>(it->second)] = c;
          }
          cell[i][j] = std::move(coeffs);
        }
      }
    }
  }
  return t;
}

AlgebraTable algebra_table(const CompletedAlgebra& a, int weight_bound) {
  if (a.weight_bound() < weight_bound)
    throw input_error("algebra is not completed far enough for the requested "
                      "weight bound");
  AlgebraTable t;
  t.weight_bound = weight_bound;
  for (int w = 0; w <= weight_bound; ++w) {
    std::vector<std::string> labels;
    for (const auto& b : a.basis(w))
      labels.push_back(word_text(b, a.presentation().gen_names));
    t.labels.push_back(std::move(labels));
  }
  t.prod.resize(static_cast<std::size_t>(weight_bound));
  for (int w1 = 1; w1 <= weight_bound; ++w1) {
    auto& row = t.prod[static_cast<std::size_t>(w1 - 1)];
    row.resize(static_cast<std::size_t>(weight_bound));
    for (int w2 = 1; w2 <= weight_bound; ++w2) {
      auto& cell = row[static_cast<std::size_t>(w2 - 1)];
      if (w1 + w2 > weight_bound) continue;
      const auto& b1 = a.basis(w1);
      const auto& b2 = a.basis(w2);
      cell.resize(b1.size());
      for (std::size_t i = 0; i < b1.size(); ++i) {
        cell[i].resize(b2.size());
        for (std::size_t j = 0; j < b2.size(); ++j) {
          std::vector<Rational> coeffs(a.basis(w1 + w2).size(), Rational(0));
          WordElement e = a.multiply(b1[i], b2[j]);
          for (const auto& [w, c] : e.terms()) {
            int k = a.basis_index(w);
            if (k < 0)
              throw internal_error("product did not expand in the basis");
            coeffs[static_cast<std::size_t>(k)] = c;
          }
          cell[i][j] = std::move(coeffs);
        }
      }
    }
  }
  return t;
}

bool same_structure(const AlgebraTable& a, const AlgebraTable& b) {
  if (a.weight_bound != b.weight_bound) return false;
  if (a.dims() != b.dims()) return false;
  return a.prod == b.prod;
}

}  // namespace envop
