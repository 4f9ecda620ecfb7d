#pragma once

#include <map>
#include <optional>
#include <vector>

#include "envop/tree.hpp"

namespace envop {

/// Sparse rational linear combination of tree monomials, homogeneous in
/// arity. Zero coefficients are never stored.
class OperadElement {
public:
  OperadElement() = default;

  static OperadElement monomial(const TreeMonomial& m, const Rational& c = 1);

  bool is_zero() const { return terms_.empty(); }
  int arity() const;  // arity of the support (throws on zero element)
  const std::map<TreeMonomial, Rational>& terms() const { return terms_; }

  void add_term(const TreeMonomial& m, const Rational& c);
  OperadElement operator+(const OperadElement& o) const;
  OperadElement operator-(const OperadElement& o) const;
  OperadElement operator*(const Rational& c) const;
  bool operator==(const OperadElement& o) const { return terms_ == o.terms_; }

  /// Leading monomial with respect to ord.
  const TreeMonomial& leading_monomial(const MonomialOrder& ord) const;
  const Rational& coeff(const TreeMonomial& m) const;

  std::string to_string(const GeneratorSet& gens) const;

private:
  std::map<TreeMonomial, Rational> terms_;
};

/// A rewriting rule lm -> tail, stored as the monic element lm - tail.
struct Rule {
  TreeMonomial lm;
  OperadElement tail;  // lower terms; rule element is lm - tail
};

/// A (possibly bound-limited) Groebner basis of an operad ideal.
struct RewritingSystem {
  GeneratorSet gens;
  MonomialOrder order;
  std::vector<Rule> rules;
  int arity_bound = 0;       // completion certified up to this arity
  bool saturated = false;    // no S-polynomial survivors within the bound
};

/// Long division: the normal form of e modulo the rules of sys.
OperadElement reduce(const OperadElement& e, const RewritingSystem& sys);

/// One S-polynomial per small common multiple of the two leading
/// monomials (overlapping occurrences sharing at least one vertex).
/// Results are paired with the common multiple for ordering.
struct CriticalPair {
  TreeMonomial common_multiple;
  OperadElement s_polynomial;
};
std::vector<CriticalPair> s_polynomials(const Rule& r1, const Rule& r2,
                                        const RewritingSystem& sys);

/// Bounded Buchberger completion. Deterministic: critical pairs are
/// processed by arity of the common multiple, then by the monomial order.
/// Rules are inter-reduced afterwards.
RewritingSystem buchberger(const GeneratorSet& gens,
                           const std::vector<OperadElement>& relations,
                           const MonomialOrder& ord, int arity_bound);

/// Count (or list) tree monomials of the given arity not divisible by any
/// rule's leading monomial.
long normal_monomial_count(const RewritingSystem& sys, int arity);
std::vector<TreeMonomial> normal_monomials(const RewritingSystem& sys, int arity);

/// Canonical text dump of a rewriting system for golden-file tests.
std::string dump(const RewritingSystem& sys);

}  // namespace envop
