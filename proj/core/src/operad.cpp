#include "envop/operad.hpp"

#include <algorithm>

namespace envop {

CompletedOperad::CompletedOperad(OperadPresentation pres, int arity_bound,
                                 MonomialOrder ord)
    : pres_(std::move(pres)), ord_(std::move(ord)), arity_bound_(arity_bound) {
  if (arity_bound < 1) throw input_error("arity bound must be >= 1");
  pres_.validate();
  for (int g = 0; g < pres_.gens.size(); ++g)
    if (pres_.gens[g].arity < 2)
      throw input_error("operad generator " + pres_.gens[g].name +
                        " has arity < 2 (the operad must be reduced)");
  sys_ = buchberger(pres_.gens, pres_.relations, ord_, arity_bound_);
  basis_.resize(static_cast<std::size_t>(arity_bound_) + 1);
  for (int n = 1; n <= arity_bound_; ++n)
    basis_[static_cast<std::size_t>(n)] = normal_monomials(sys_, n);
  for (auto& b : basis_)
    std::sort(b.begin(), b.end(),
              [&](const TreeMonomial& a, const TreeMonomial& c) {
                return compare(a, c, ord_) < 0;
              });
}

CompletedOperad::CompletedOperad(OperadPresentation pres, int arity_bound)
    : CompletedOperad(pres, arity_bound,
                      MonomialOrder::default_for(pres.gens.size())) {}

const std::vector<TreeMonomial>& CompletedOperad::basis(int arity) const {
  if (arity < 1 || arity > arity_bound_)
    throw input_error("arity outside the completed range");
  return basis_[static_cast<std::size_t>(arity)];
}

long CompletedOperad::dim(int arity) const {
  return static_cast<long>(basis(arity).size());
}

std::vector<long> CompletedOperad::dims() const {
  std::vector<long> out(static_cast<std::size_t>(arity_bound_) + 1, 0);
  for (int n = 1; n <= arity_bound_; ++n)
    out[static_cast<std::size_t>(n)] = dim(n);
  return out;
}

TruncatedSeries CompletedOperad::hilbert_series(int order) const {
  if (order > arity_bound_)
    throw input_error("series order exceeds the completed arity bound");
  TruncatedSeries s(order);
  for (int n = 1; n <= order; ++n) s.set_coeff(n, Rational(dim(n)));
  return s;
}

OperadElement CompletedOperad::compose(const TreeMonomial& a, int slot,
                                       const TreeMonomial& b) const {
  TreeMonomial g = graft(a, slot, b);
  if (g.arity() > arity_bound_)
    throw input_error("composition arity exceeds the completed bound");
  return reduce(OperadElement::monomial(g), sys_);
}

int CompletedOperad::basis_index(const TreeMonomial& m) const {
  int n = m.arity();
  if (n > arity_bound_) return -1;
  const auto& b = basis_[static_cast<std::size_t>(n)];
  auto it = std::find(b.begin(), b.end(), m);
  return it == b.end() ? -1 : static_cast<int>(it - b.begin());
}

}  // namespace envop
