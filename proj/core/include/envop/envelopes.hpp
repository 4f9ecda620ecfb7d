#pragma once

#include <utility>
#include <vector>

#include "envop/algebra.hpp"
#include "envop/operad.hpp"

namespace envop {

/// ---- Raney combinatorics -------------------------------------------

/// k has length n, sums to n-1, and every proper partial sum
/// k_1 + ... + k_i is >= i.
bool is_good_sequence(const std::vector<int>& k);

/// Smallest rotation index r such that rotating k left by r is good;
/// requires sum(k) = len(k) - 1.
int raney_shift(const std::vector<int>& k);

/// All good sequences of length n, in lexicographic order.
std::vector<std::vector<int>> good_sequences(int n);

/// Sum over good sequences of length n of the products
/// dims[k_1] * ... * dims[k_n]; dims must cover weights 0..n-1.
Rational raney_weighted_count(const std::vector<long>& dims, int n);

/// (1/n) [u^(n-1)] g(u)^n for a series g with g(0) = 1; the
/// dimension-level Lagrange count of the weighted trees.
Rational lagrange_dim(const TruncatedSeries& g, int n);

/// ---- Envelope constructions ----------------------------------------

/// An envelope operad presentation whose generators are indexed by the
/// positive-weight normal basis of the algebra: the weight-w basis word
/// b gives a generator of arity w+1 named after b.
struct Envelope {
  OperadPresentation pres;
  std::vector<std::pair<int, int>> gen_source;  // per generator: (weight, basis index)
};

/// Max-envelope: relations b1 o_1 b2 - (b1 * b2 in normal form), for all
/// basis pairs fitting under the arity bound.
Envelope u_max(const CompletedAlgebra& a, int arity_bound);

/// Min-envelope: the max-envelope relations plus b1 o_i b2 for i >= 2.
Envelope u_min(const CompletedAlgebra& a, int arity_bound);

/// Quadratic presentations on the generator space V = A(1), valid for
/// quadratic algebras; used for duality and bar computations.
OperadPresentation u_max_quadratic(const AlgebraPresentation& a);
OperadPresentation u_min_quadratic(const AlgebraPresentation& a);

/// Tree monomials of the given arity in which the leftmost input of
/// every internal vertex is a leaf.
std::vector<TreeMonomial> u_max_basis(const GeneratorSet& gens, int arity);

/// ---- Raney tensor correspondence -----------------------------------

/// For a leftmost-leaf tree monomial: factor per leaf, the parent's
/// generator id when the leaf is its parent's leftmost input, -1 (unit)
/// otherwise. Throws input_error when t is not in leftmost-leaf form.
std::vector<int> raney_tensor(const TreeMonomial& t);

/// Inverse of raney_tensor; factors reference gens.
TreeMonomial raney_tensor_inverse(const std::vector<int>& factors,
                                  const GeneratorSet& gens);

/// ---- Forgetful functor ---------------------------------------------

/// The underlying algebra of an operad: weight-w component P(w+1),
/// product = normal form of composition at the first slot.
struct AlgebraTable {
  int weight_bound = 0;
  std::vector<std::vector<std::string>> labels;  // per weight 0..bound
  // prod[w1-1][w2-1][i][j] = coefficients over the weight-(w1+w2)
  // basis; empty vector when w1+w2 exceeds the bound
  std::vector<std::vector<std::vector<std::vector<std::vector<Rational>>>>>
      prod;

  std::vector<long> dims() const;
};

/// Corolla basis of an envelope per weight 0..bound, positioned by the
/// source algebra's basis order; feeds forget_to_algebra so the two
/// structure-constant tables are directly comparable.
std::vector<std::vector<TreeMonomial>> envelope_corolla_basis(
    const Envelope& env, int weight_bound);

/// Basis per weight defaults to the operad's normal bases; an override
/// fixes positions (e.g. to align with an algebra's basis order).
AlgebraTable forget_to_algebra(
    const CompletedOperad& p, int weight_bound,
    const std::vector<std::vector<TreeMonomial>>* basis_override = nullptr);

/// The same table computed directly from a completed algebra.
AlgebraTable algebra_table(const CompletedAlgebra& a, int weight_bound);

/// Structure-constant equality (labels are ignored).
bool same_structure(const AlgebraTable& a, const AlgebraTable& b);

/// Joins a word's letters with '*' ("1" for the empty word).
std::string word_text(const Word& w, const std::vector<std::string>& names);

}  // namespace envop
