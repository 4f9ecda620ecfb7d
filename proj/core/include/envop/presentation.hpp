#pragma once

#include <string>
#include <vector>

#include "envop/rewriting.hpp"
#include "envop/words.hpp"

namespace envop {

/// A weight-graded associative algebra given by generators and relations.
/// Connectedness is built in: there are no weight-0 generators and the
/// unit is implicit.
struct AlgebraPresentation {
  std::string name;
  std::vector<std::string> gen_names;
  std::vector<int> gen_weights;           // per generator, >= 1
  std::vector<WordElement> relations;     // weight-homogeneous

  int ngens() const { return static_cast<int>(gen_names.size()); }
  int word_weight(const Word& w) const;

  /// Throws input_error on weight-0 generators, unknown letters, or a
  /// weight-inhomogeneous relation (reporting the two weights found).
  void validate() const;

  /// All generators of weight 1 and all relations of weight 2.
  bool is_quadratic() const;
};

/// A reduced connected ns operad given by generators and relations; the
/// operad unit is implicit and never appears in relations.
struct OperadPresentation {
  std::string name;
  GeneratorSet gens;
  std::vector<OperadElement> relations;   // arity- and weight-homogeneous

  void validate() const;

  /// All relations supported on two-vertex tree monomials.
  bool is_quadratic() const;
};

/// Quadratic data of a quadratic algebra: the generator space V and the
/// relation subspace R inside V tensor V, relations flattened as vectors
/// of length ngens^2 (index a*ngens + b for the word ab).
struct AlgebraQuadraticData {
  int ngens = 0;
  std::vector<std::string> names;
  std::vector<std::vector<Rational>> relation_vectors;
};

/// Extracts quadratic data; throws input_error when the presentation is
/// not quadratic.
AlgebraQuadraticData algebra_quadratic_data(const AlgebraPresentation& a);

}  // namespace envop
