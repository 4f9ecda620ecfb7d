#pragma once

#include <string>
#include <vector>

#include "envop/algebra.hpp"
#include "envop/matrix.hpp"
#include "envop/operad.hpp"

namespace envop {

/// One block of a bar complex: fixed weight (algebras) or arity
/// (operads), graded by the syzygy degree s.
struct BarBlock {
  int n = 0;
  std::vector<std::vector<std::string>> labels;  // basis labels per s
  std::vector<Matrix<Rational>> d;  // d[s]: degree s -> s-1; d[0] is empty

  long dim(int s) const {
    return s < 0 || s >= static_cast<int>(labels.size())
               ? 0
               : static_cast<long>(labels[static_cast<std::size_t>(s)].size());
  }
};

struct ChainComplex {
  bool operad = false;
  int first_n = 0;               // 0 for algebras, 1 for operads
  std::vector<BarBlock> blocks;  // block i has n = first_n + i
};

/// Bar complex of a completed algebra: the weight-w, syzygy-s component
/// is spanned by tensors of s positive-weight normal basis words with
/// weights summing to w; the differential merges adjacent factors with
/// the classical alternating sign.
ChainComplex bar_complex_algebra(const CompletedAlgebra& a, int weight_bound);

/// Bar complex of a completed operad: the arity-n, syzygy-s component is
/// spanned by trees with s internal vertices labeled by normal basis
/// monomials; the differential collapses internal edges, composing the
/// two labels, with sign (-1)^(vertices strictly preceding the lower
/// vertex in preorder).
ChainComplex bar_complex_operad(const CompletedOperad& p, int arity_bound);

/// Exact matrix check of d o d = 0; throws internal_error on failure.
void verify_d_squared(const ChainComplex& c);

struct HomologyTable {
  bool operad = false;
  int first_n = 0;
  std::vector<std::vector<long>> chain_dims;     // per n, per s
  std::vector<std::vector<long>> homology_dims;  // per n, per s
  std::vector<long> euler;                       // per n

  /// Diagonal syzygy degree: s = n for algebras, s = n-1 for operads
  /// (quadratic presentations with weight-one generators).
  int diagonal_s(int n) const { return operad ? n - 1 : n; }
};

/// Ranks over the rationals (exact) or over the configured prime field
/// (fast path). Verifies d o d = 0 first.
HomologyTable homology_ranks(const ChainComplex& c, bool rational = true);

struct KoszulVerdict {
  bool koszul = true;
  int bad_n = -1;
  int bad_s = -1;
};

/// Concentration of the homology on the diagonal.
KoszulVerdict koszulness_verdict(const HomologyTable& h);

/// Diagonal homology dims per n (the quadratic dual, when the input is
/// quadratic).
std::vector<long> dual_from_diagonal(const HomologyTable& h);

}  // namespace envop
