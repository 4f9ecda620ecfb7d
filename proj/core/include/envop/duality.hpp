#pragma once

#include <map>
#include <utility>
#include <vector>

#include "envop/presentation.hpp"
#include "envop/series.hpp"

namespace envop {

/// Quadratic dual of a quadratic algebra, at the dimension level plus a
/// presentation of the dual algebra by the annihilator relations.
struct AlgebraDual {
  std::vector<long> dims;                   // per weight 0..bound
  AlgebraPresentation dual_presentation;    // generators V*, relations ann(R)

  /// Euler series: sum (-1)^w dim(w) t^w (homological degree w per
  /// weight-w component).
  TruncatedSeries euler_series(int order) const;
};

/// Weight-w component computed as the intersection of the subspaces
/// V^(i-1) (x) R (x) V^(w-i-1) inside V^(x w).
AlgebraDual quadratic_dual_algebra(const AlgebraQuadraticData& q,
                                   int weight_bound);

/// Quadratic dual of a quadratic operad, at the dimension level.
struct OperadDualDims {
  int arity_bound = 0;
  std::map<std::pair<int, int>, long> dims;  // (arity, weight) -> dim

  long dim(int arity, int weight) const;
  long total(int arity) const;

  /// Euler series: coefficient of t^n is sum_w (-1)^w dim(n, w).
  TruncatedSeries euler_series(int order) const;
};

/// For each arity and weight, the dimension of the component of the
/// quadratic cooperad C(X, R): linear constraints force, for every way
/// of singling out an internal edge (a one-hole context), the two-vertex
/// part to lie in R.
OperadDualDims quadratic_dual_operad_dims(const OperadPresentation& p,
                                          int arity_bound);

}  // namespace envop
