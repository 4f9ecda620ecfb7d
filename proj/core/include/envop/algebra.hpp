#pragma once

#include <vector>

#include "envop/presentation.hpp"
#include "envop/series.hpp"

namespace envop {

/// An algebra presentation completed (up to a weight bound) to a word
/// rewriting system, with fixed normal-word bases per weight.
class CompletedAlgebra {
public:
  CompletedAlgebra(AlgebraPresentation pres, int weight_bound,
                   WordOrder ord = {});

  const AlgebraPresentation& presentation() const { return pres_; }
  const WordSystem& system() const { return sys_; }
  int weight_bound() const { return weight_bound_; }

  /// Normal words of the given weight (0 <= w <= bound), in increasing
  /// deglex order; basis(0) = { empty word }.
  const std::vector<Word>& basis(int weight) const;
  long dim(int weight) const;
  std::vector<long> dims() const;  // indices 0..weight_bound

  /// Hilbert series sum dim(w) t^w, truncated at the given order
  /// (order <= weight_bound required).
  TruncatedSeries hilbert_series(int order) const;

  /// Normal form of the concatenation of two normal words.
  WordElement multiply(const Word& u, const Word& v) const;

  /// Index of a normal word in basis(weight of w), or -1.
  int basis_index(const Word& w) const;

private:
  AlgebraPresentation pres_;
  WordOrder ord_;
  WordSystem sys_;
  int weight_bound_;
  std::vector<std::vector<Word>> basis_;  // per weight
};

}  // namespace envop
