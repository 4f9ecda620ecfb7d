#include "envop/duality.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "envop/matrix.hpp"

namespace envop {

TruncatedSeries AlgebraDual::euler_series(int order) const {
  if (order >= static_cast<int>(dims.size()))
    throw input_error("series order exceeds the computed weight bound");
  TruncatedSeries s(order);
  for (int w = 0; w <= order; ++w) {
    Rational c(dims[static_cast<std::size_t>(w)]);
    s.set_coeff(w, w % 2 == 0 ? c : -c);
  }
  return s;
}

AlgebraDual quadratic_dual_algebra(const AlgebraQuadraticData& q,
                                   int weight_bound) {
  if (weight_bound < 0) throw input_error("weight bound must be >= 0");
  AlgebraDual out;
  std::size_t n = static_cast<std::size_t>(q.ngens);

  out.dims.push_back(1);
  if (weight_bound >= 1) out.dims.push_back(static_cast<long>(n));
  for (int w = 2; w <= weight_bound; ++w) {
    std::size_t ambient = 1;
    for (int i = 0; i < w; ++i) ambient *= n;
    // start from the full space and intersect the shifted relation layers
    std::vector<std::vector<Rational>> cur =
        annihilator(std::vector<std::vector<Rational>>{}, ambient);
    for (int i = 1; i <= w - 1 && !cur.empty(); ++i) {
      // V^(i-1) (x) R (x) V^(w-i-1): one vector per relation and per
      // choice of the outer letters
      std::vector<std::vector<Rational>> layer;
      std::size_t outer = ambient / (n * n);
      std::vector<int> letters(static_cast<std::size_t>(w - 2), 0);
      for (std::size_t combo = 0; combo < outer; ++combo) {
        // decode combo into the w-2 outer letters, leftmost fastest
        std::size_t c = combo;
        for (auto& l : letters) {
          l = static_cast<int>(c % n);
          c /= n;
        }
        for (const auto& r : q.relation_vectors) {
          std::vector<Rational> v(ambient, Rational(0));
          for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) {
              const Rational& coef = r[a * n + b];
              if (coef == 0) continue;
              // assemble the word with (a, b) at positions i, i+1
              std::size_t idx = 0;
              std::size_t next_letter = 0;
              for (int pos = 1; pos <= w; ++pos) {
                std::size_t letter;
                if (pos == i) {
                  letter = a;
                } else if (pos == i + 1) {
                  letter = b;
                } else {
                  letter = static_cast<std::size_t>(
                      letters[next_letter++]);
                }
                idx = idx * n + letter;
              }
              v[idx] = coef;
            }
          layer.push_back(std::move(v));
        }
      }
      cur = intersect(cur, layer, ambient);
    }
    out.dims.push_back(static_cast<long>(cur.size()));
  }

  out.dual_presentation.name = "dual";
  out.dual_presentation.gen_names = q.names;
  out.dual_presentation.gen_weights.assign(n, 1);
  auto ann = annihilator(q.relation_vectors, n * n);
  for (const auto& v : ann) {
    WordElement rel;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        const Rational& c = v[a * n + b];
        if (c != 0)
          rel.add_term({static_cast<int>(a), static_cast<int>(b)}, c);
      }
    out.dual_presentation.relations.push_back(std::move(rel));
  }
  return out;
}

long OperadDualDims::dim(int arity, int weight) const {
  auto it = dims.find({arity, weight});
  return it == dims.end() ? 0 : it->second;
}

long OperadDualDims::total(int arity) const {
  long t = 0;
  for (const auto& [key, d] : dims)
    if (key.first == arity) t += d;
  return t;
}

TruncatedSeries OperadDualDims::euler_series(int order) const {
  if (order > arity_bound)
    throw input_error("series order exceeds the computed arity bound");
  TruncatedSeries s(order);
  for (const auto& [key, d] : dims) {
    auto [n, w] = key;
    if (n > order) continue;
    Rational c = s.coeff(n);
    c += (w % 2 == 0 ? Rational(d) : Rational(-d));
    s.set_coeff(n, c);
  }
  return s;
}

OperadDualDims quadratic_dual_operad_dims(const OperadPresentation& p,
                                          int arity_bound) {
  p.validate();
  if (!p.is_quadratic())
    throw input_error("quadratic dual needs a quadratic operad presentation");
  if (arity_bound < 1) throw input_error("arity bound must be >= 1");

  OperadDualDims out;
  out.arity_bound = arity_bound;

  // two-vertex monomials grouped by arity
  std::map<int, std::vector<TreeMonomial>> w2mono;
  for (int g1 = 0; g1 < p.gens.size(); ++g1)
    for (int g2 = 0; g2 < p.gens.size(); ++g2)
      for (int i = 1; i <= p.gens[g1].arity; ++i) {
        TreeMonomial m = graft(TreeMonomial::corolla(g1, p.gens[g1].arity), i,
                               TreeMonomial::corolla(g2, p.gens[g2].arity));
        w2mono[m.arity()].push_back(m);
      }
  std::map<int, std::map<TreeMonomial, int>> w2index;
  for (auto& [a, list] : w2mono) {
    std::sort(list.begin(), list.end());
    for (std::size_t i = 0; i < list.size(); ++i)
      w2index[a][list[i]] = static_cast<int>(i);
  }

  // annihilator of the relation span, per arity
  std::map<int, std::vector<std::vector<Rational>>> ann_r;
  for (auto& [a, list] : w2mono) {
    std::vector<std::vector<Rational>> rel_vectors;
    for (const auto& rel : p.relations) {
      if (rel.is_zero() || rel.arity() != a) continue;
      std::vector<Rational> v(list.size(), Rational(0));
      for (const auto& [m, c] : rel.terms())
        v[static_cast<std::size_t>(w2index[a][m])] = c;
      rel_vectors.push_back(std::move(v));
    }
    ann_r[a] = annihilator(rel_vectors, list.size());
  }

  // hole generators, one per two-vertex arity
  GeneratorSet ext = p.gens;
  std::map<int, int> hole;
  for (const auto& [a, list] : w2mono)
    hole[a] = ext.add({"#" + std::to_string(a), a, 0, 0});

  for (int n = 1; n <= arity_bound; ++n) {
    std::map<int, std::vector<TreeMonomial>> by_weight;
    for (const auto& m : enumerate_monomials(p.gens, n))
      by_weight[m.weight()].push_back(m);
    for (auto& [w, monos] : by_weight) {
      std::sort(monos.begin(), monos.end());
      if (w <= 1) {
        out.dims[{n, w}] = static_cast<long>(monos.size());
        continue;
      }
      std::map<TreeMonomial, int> col;
      for (std::size_t i = 0; i < monos.size(); ++i)
        col[monos[i]] = static_cast<int>(i);

      // bucket (monomial, internal edge) by the one-hole context; the
      // entry sign is the suspension (bar collapse) sign of the edge
      struct Entry {
        int mono_col;
        int q_index;
        int sign;
      };
      std::map<TreeMonomial, std::pair<int, std::vector<Entry>>> contexts;
      for (const auto& m : monos) {
        const auto& nodes = m.nodes();
        // parent index, slot, and preceding-internal count of every node
        std::vector<int> parent(nodes.size(), -1), slot(nodes.size(), 0);
        std::vector<int> preceding(nodes.size(), 0);
        std::size_t pos = 0;
        int internal_seen = 0;
        std::function<void(int)> walk = [&](int par) {
          std::size_t here = pos++;
          parent[here] = par;
          preceding[here] = internal_seen;
          if (nodes[here].gen >= 0) ++internal_seen;
          for (int c = 0; c < nodes[here].nchild; ++c) {
            slot[pos] = c + 1;
            walk(static_cast<int>(here));
          }
        };
        walk(-1);
        for (std::size_t v = 1; v < nodes.size(); ++v) {
          if (nodes[v].gen < 0) continue;
          std::size_t u = static_cast<std::size_t>(parent[v]);
          TreeMonomial q =
              graft(TreeMonomial::corolla(nodes[u].gen, nodes[u].nchild),
                    slot[v],
                    TreeMonomial::corolla(nodes[v].gen, nodes[v].nchild));
          int qa = q.arity();
          Occurrence occ{{static_cast<int>(u), static_cast<int>(v)}};
          TreeMonomial ctx = replace_occurrence(
              m, q, occ, TreeMonomial::corolla(hole[qa], qa));
          auto& bucket = contexts[ctx];
          bucket.first = qa;
          bucket.second.push_back(
              {col[m], w2index[qa][q], preceding[v] % 2 == 0 ? 1 : -1});
        }
      }

      std::vector<std::vector<Rational>> rows;
      for (const auto& [ctx, bucket] : contexts) {
        const auto& [qa, entries] = bucket;
        for (const auto& phi : ann_r[qa]) {
          std::vector<Rational> row(monos.size(), Rational(0));
          bool nonzero = false;
          for (const auto& e : entries) {
            row[static_cast<std::size_t>(e.mono_col)] +=
                Rational(e.sign) * phi[static_cast<std::size_t>(e.q_index)];
            if (row[static_cast<std::size_t>(e.mono_col)] != 0)
              nonzero = true;
          }
          if (nonzero) rows.push_back(std::move(row));
        }
      }
      long d = static_cast<long>(monos.size());
      if (!rows.empty())
        d -= static_cast<long>(rank(Matrix<Rational>::from_rows(rows)));
      out.dims[{n, w}] = d;
    }
  }
  return out;
}

}  // namespace envop
