#pragma once

#include <vector>

#include "envop/presentation.hpp"
#include "envop/series.hpp"

namespace envop {

/// An operad presentation completed (up to an arity bound) to a tree
/// rewriting system, with fixed normal-monomial bases per arity.
class CompletedOperad {
public:
  CompletedOperad(OperadPresentation pres, int arity_bound,
                  MonomialOrder ord);
  CompletedOperad(OperadPresentation pres, int arity_bound);

  const OperadPresentation& presentation() const { return pres_; }
  const RewritingSystem& system() const { return sys_; }
  int arity_bound() const { return arity_bound_; }

  /// Normal tree monomials of the given arity (1 <= n <= bound), in
  /// increasing monomial order; basis(1) = { id }.
  const std::vector<TreeMonomial>& basis(int arity) const;
  long dim(int arity) const;
  std::vector<long> dims() const;  // indices 1..arity_bound (index 0 unused)

  /// Series sum dim(n) t^n, truncated at the given order (<= bound).
  TruncatedSeries hilbert_series(int order) const;

  /// Normal form of the partial composition a o_slot b.
  OperadElement compose(const TreeMonomial& a, int slot,
                        const TreeMonomial& b) const;

  /// Index of a normal monomial in basis(its arity), or -1.
  int basis_index(const TreeMonomial& m) const;

private:
  OperadPresentation pres_;
  MonomialOrder ord_;
  RewritingSystem sys_;
  int arity_bound_;
  std::vector<std::vector<TreeMonomial>> basis_;  // per arity
};

}  // namespace envop
