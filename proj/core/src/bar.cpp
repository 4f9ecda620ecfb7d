#include "envop/bar.hpp"

#include <functional>
#include <map>
#include <sstream>

#include "envop/envelopes.hpp"

namespace envop {

ChainComplex bar_complex_algebra(const CompletedAlgebra& a, int weight_bound) {
  if (weight_bound > a.weight_bound())
    throw input_error("algebra is not completed far enough for the requested "
                      "bar bound");
  ChainComplex c;
  c.operad = false;
  c.first_n = 0;
  const auto& names = a.presentation().gen_names;

  for (int w = 0; w <= weight_bound; ++w) {
    BarBlock block;
    block.n = w;
    // bases per syzygy degree: tuples of positive-weight normal words
    std::vector<std::vector<std::vector<Word>>> basis(
        static_cast<std::size_t>(w) + 1);
    std::vector<Word> cur;
    std::function<void(int)> rec = [&](int remaining) {
      if (remaining == 0) {
        basis[cur.size()].push_back(cur);
        return;
      }
      for (int u = 1; u <= remaining; ++u)
        for (const auto& b : a.basis(u)) {
          cur.push_back(b);
          rec(remaining - u);
          cur.pop_back();
        }
    };
    rec(w);

    std::vector<std::map<std::vector<Word>, int>> index(basis.size());
    for (std::size_t s = 0; s < basis.size(); ++s)
      for (std::size_t i = 0; i < basis[s].size(); ++i)
        index[s][basis[s][i]] = static_cast<int>(i);

    for (std::size_t s = 0; s < basis.size(); ++s) {
      std::vector<std::string> labels;
      for (const auto& tuple : basis[s]) {
        std::ostringstream os;
        os << "[";
        for (std::size_t i = 0; i < tuple.size(); ++i) {
          if (i) os << "|";
          os << word_text(tuple[i], names);
        }
        os << "]";
        labels.push_back(os.str());
      }
      block.labels.push_back(std::move(labels));
    }

    block.d.emplace_back();  // no differential out of degree 0
    for (std::size_t s = 1; s < basis.size(); ++s) {
      Matrix<Rational> d(basis[s - 1].size(), basis[s].size());
      for (std::size_t col = 0; col < basis[s].size(); ++col) {
        const auto& tuple = basis[s][col];
        for (std::size_t i = 1; i < s; ++i) {
          Rational sign = (i % 2 == 1) ? Rational(1) : Rational(-1);
          WordElement prod = a.multiply(tuple[i - 1], tuple[i]);
          for (const auto& [word, coef] : prod.terms()) {
            std::vector<Word> merged;
            for (std::size_t j = 0; j < tuple.size(); ++j) {
              if (j == i - 1) {
                merged.push_back(word);
              } else if (j != i) {
                merged.push_back(tuple[j]);
              }
            }
            auto it = index[s - 1].find(merged);
            if (it == index[s - 1].end())
              throw internal_error("bar merge left the basis");
            d(static_cast<std::size_t>(it->second), col) += sign * coef;
          }
        }
      }
      block.d.push_back(std::move(d));
    }
    c.blocks.push_back(std::move(block));
  }
  return c;
}

ChainComplex bar_complex_operad(const CompletedOperad& p, int arity_bound) {
  if (arity_bound > p.arity_bound())
    throw input_error("operad is not completed far enough for the requested "
                      "bar bound");
  ChainComplex c;
  c.operad = true;
  c.first_n = 1;

  // one bar generator per positive-weight normal basis monomial
  GeneratorSet bargens;
  std::vector<TreeMonomial> bar_source;
  std::map<TreeMonomial, int> bar_id;
  for (int a = 2; a <= arity_bound; ++a)
    for (const auto& b : p.basis(a)) {
      int id = bargens.add({b.to_string(p.presentation().gens), a,
                            b.generator_weight(p.presentation().gens), 0});
      bar_source.push_back(b);
      bar_id[b] = id;
    }

  for (int n = 1; n <= arity_bound; ++n) {
    BarBlock block;
    block.n = n;
    std::vector<std::vector<TreeMonomial>> basis;
    for (const auto& t : enumerate_monomials(bargens, n)) {
      std::size_t s = static_cast<std::size_t>(t.weight());
      if (basis.size() <= s) basis.resize(s + 1);
      basis[s].push_back(t);
    }
    if (basis.empty()) basis.resize(1);
    std::vector<std::map<TreeMonomial, int>> index(basis.size());
    for (std::size_t s = 0; s < basis.size(); ++s) {
      std::sort(basis[s].begin(), basis[s].end());
      for (std::size_t i = 0; i < basis[s].size(); ++i)
        index[s][basis[s][i]] = static_cast<int>(i);
      std::vector<std::string> labels;
      for (const auto& t : basis[s]) labels.push_back(t.to_string(bargens));
      block.labels.push_back(std::move(labels));
    }

    block.d.emplace_back();
    for (std::size_t s = 1; s < basis.size(); ++s) {
      Matrix<Rational> d(basis[s - 1].size(), basis[s].size());
      for (std::size_t col = 0; col < basis[s].size(); ++col) {
        const auto& t = basis[s][col];
        const auto& nodes = t.nodes();
        std::vector<int> parent(nodes.size(), -1), slot(nodes.size(), 0);
        std::vector<int> preceding(nodes.size(), 0);
        {
          std::size_t pos = 0;
          int internal_seen = 0;
          std::function<void(int)> walk = [&](int par) {
            std::size_t here = pos++;
            parent[here] = par;
            preceding[here] = internal_seen;
            if (nodes[here].gen >= 0) ++internal_seen;
            for (int ch = 0; ch < nodes[here].nchild; ++ch) {
              slot[pos] = ch + 1;
              walk(static_cast<int>(here));
            }
          };
          walk(-1);
        }
        for (std::size_t v = 1; v < nodes.size(); ++v) {
          if (nodes[v].gen < 0) continue;
          std::size_t u = static_cast<std::size_t>(parent[v]);
          Rational sign = (preceding[v] % 2 == 0) ? Rational(1) : Rational(-1);
          const TreeMonomial& lu =
              bar_source[static_cast<std::size_t>(nodes[u].gen)];
          const TreeMonomial& lv =
              bar_source[static_cast<std::size_t>(nodes[v].gen)];
          OperadElement composed = p.compose(lu, slot[v], lv);
          TreeMonomial q =
              graft(TreeMonomial::corolla(nodes[u].gen, nodes[u].nchild),
                    slot[v],
                    TreeMonomial::corolla(nodes[v].gen, nodes[v].nchild));
          Occurrence occ{{static_cast<int>(u), static_cast<int>(v)}};
          for (const auto& [m, coef] : composed.terms()) {
            auto idm = bar_id.find(m);
            if (idm == bar_id.end())
              throw internal_error("collapse left the bar label basis");
            TreeMonomial collapsed = replace_occurrence(
                t, q, occ, TreeMonomial::corolla(idm->second, m.arity()));
            auto it = index[s - 1].find(collapsed);
            if (it == index[s - 1].end())
              throw internal_error("collapse left the bar tree basis");
            d(static_cast<std::size_t>(it->second), col) += sign * coef;
          }
        }
      }
      block.d.push_back(std::move(d));
    }
    c.blocks.push_back(std::move(block));
  }
  return c;
}

namespace {

Matrix<Rational> matmul(const Matrix<Rational>& a, const Matrix<Rational>& b) {
  if (a.cols() != b.rows()) throw internal_error("matmul: shape mismatch");
  Matrix<Rational> out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

Matrix<Fp> to_fp(const Matrix<Rational>& m) {
  Matrix<Fp> out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      out(i, j) = Fp::from_rational(m(i, j));
  return out;
}

}  // namespace

void verify_d_squared(const ChainComplex& c) {
  for (const auto& block : c.blocks)
    for (std::size_t s = 2; s < block.d.size(); ++s) {
      if (block.d[s - 1].rows() == 0 || block.d[s].cols() == 0) continue;
      Matrix<Rational> sq = matmul(block.d[s - 1], block.d[s]);
      for (std::size_t i = 0; i < sq.rows(); ++i)
        for (std::size_t j = 0; j < sq.cols(); ++j)
          if (sq(i, j) != 0) {
            std::ostringstream os;
            os << "bar differential does not square to zero at n=" << block.n
               << ", s=" << s;
            throw internal_error(os.str());
          }
    }
}

HomologyTable homology_ranks(const ChainComplex& c, bool rational) {
  verify_d_squared(c);
  HomologyTable h;
  h.operad = c.operad;
  h.first_n = c.first_n;
  for (const auto& block : c.blocks) {
    std::size_t ns = block.labels.size();
    std::vector<long> dims(ns), ranks(ns + 1, 0), hom(ns);
    for (std::size_t s = 0; s < ns; ++s) {
      dims[s] = block.dim(static_cast<int>(s));
      if (s >= 1) {
        const auto& m = block.d[s];
        if (m.rows() == 0 || m.cols() == 0) {
          ranks[s] = 0;
        } else if (rational) {
          ranks[s] = static_cast<long>(rank(m));
        } else {
          ranks[s] = static_cast<long>(rank(to_fp(m)));
        }
      }
    }
    long euler = 0;
    for (std::size_t s = 0; s < ns; ++s) {
      hom[s] = dims[s] - ranks[s] - ranks[s + 1];
      euler += (s % 2 == 0 ? dims[s] : -dims[s]);
    }
    h.chain_dims.push_back(std::move(dims));
    h.homology_dims.push_back(std::move(hom));
    h.euler.push_back(euler);
  }
  return h;
}

KoszulVerdict koszulness_verdict(const HomologyTable& h) {
  KoszulVerdict v;
  for (std::size_t b = 0; b < h.homology_dims.size(); ++b) {
    int n = h.first_n + static_cast<int>(b);
    for (std::size_t s = 0; s < h.homology_dims[b].size(); ++s) {
      if (static_cast<int>(s) == h.diagonal_s(n)) continue;
      if (h.homology_dims[b][s] != 0) {
        v.koszul = false;
        v.bad_n = n;
        v.bad_s = static_cast<int>(s);
        return v;
      }
    }
  }
  return v;
}

std::vector<long> dual_from_diagonal(const HomologyTable& h) {
  std::vector<long> out;
  for (std::size_t b = 0; b < h.homology_dims.size(); ++b) {
    int n = h.first_n + static_cast<int>(b);
    int s = h.diagonal_s(n);
    long d = 0;
    if (s >= 0 && s < static_cast<int>(h.homology_dims[b].size()))
      d = h.homology_dims[b][static_cast<std::size_t>(s)];
    out.push_back(d);
  }
  return out;
}

}  // namespace envop
