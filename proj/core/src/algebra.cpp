#include "envop/algebra.hpp"

#include <algorithm>
#include <functional>

namespace envop {

CompletedAlgebra::CompletedAlgebra(AlgebraPresentation pres, int weight_bound,
                                   WordOrder ord)
    : pres_(std::move(pres)), ord_(std::move(ord)), weight_bound_(weight_bound) {
  if (weight_bound < 0) throw input_error("weight bound must be >= 0");
  pres_.validate();
  // every letter has weight >= 1, so a word of weight <= bound has length
  // <= bound; the length bound makes the completion weight-exact
  sys_ = word_buchberger(pres_.ngens(), pres_.gen_names, pres_.relations, ord_,
                         weight_bound);

  basis_.resize(static_cast<std::size_t>(weight_bound_) + 1);
  auto reducible_suffix = [&](const Word& w) {
    for (const auto& r : sys_.rules) {
      if (r.lm.size() > w.size()) continue;
      bool ok = true;
      for (std::size_t j = 0; j < r.lm.size(); ++j)
        if (w[w.size() - r.lm.size() + j] != r.lm[j]) {
          ok = false;
          break;
        }
      if (ok) return true;
    }
    return false;
  };
  Word cur;
  std::function<void(int)> rec = [&](int weight) {
    basis_[static_cast<std::size_t>(weight)].push_back(cur);
    for (int g = 0; g < pres_.ngens(); ++g) {
      int nw = weight + pres_.gen_weights[static_cast<std::size_t>(g)];
      if (nw > weight_bound_) continue;
      cur.push_back(g);
      if (!reducible_suffix(cur)) rec(nw);
      cur.pop_back();
    }
  };
  rec(0);
  for (auto& b : basis_)
    std::sort(b.begin(), b.end(), [&](const Word& a, const Word& c) {
      return word_compare(a, c, ord_) < 0;
    });
}

const std::vector<Word>& CompletedAlgebra::basis(int weight) const {
  if (weight < 0 || weight > weight_bound_)
    throw input_error("weight outside the completed range");
  return basis_[static_cast<std::size_t>(weight)];
}

long CompletedAlgebra::dim(int weight) const {
  return static_cast<long>(basis(weight).size());
}

std::vector<long> CompletedAlgebra::dims() const {
  std::vector<long> out;
  for (int w = 0; w <= weight_bound_; ++w) out.push_back(dim(w));
  return out;
}

TruncatedSeries CompletedAlgebra::hilbert_series(int order) const {
  if (order > weight_bound_)
    throw input_error("series order exceeds the completed weight bound");
  TruncatedSeries s(order);
  for (int w = 0; w <= order; ++w) s.set_coeff(w, Rational(dim(w)));
  return s;
}

WordElement CompletedAlgebra::multiply(const Word& u, const Word& v) const {
  Word uv = u;
  uv.insert(uv.end(), v.begin(), v.end());
  if (pres_.word_weight(uv) > weight_bound_)
    throw input_error("product weight exceeds the completed bound");
  return word_reduce(WordElement::monomial(uv), sys_);
}

int CompletedAlgebra::basis_index(const Word& w) const {
  int weight = pres_.word_weight(w);
  if (weight > weight_bound_) return -1;
  const auto& b = basis_[static_cast<std::size_t>(weight)];
  auto it = std::find(b.begin(), b.end(), w);
  return it == b.end() ? -1 : static_cast<int>(it - b.begin());
}

}  // namespace envop
