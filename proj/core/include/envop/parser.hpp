#pragma once

#include <map>
#include <string>

#include "envop/presentation.hpp"

namespace envop {

/// A parsed presentation file: either an algebra or an operad, plus
/// free-form options (truncation bounds, order spec, field choice).
struct PresentationDocument {
  enum class Kind { algebra, operad };
  Kind kind = Kind::algebra;
  std::string name;
  AlgebraPresentation algebra;  // populated when kind == algebra
  OperadPresentation operad;    // populated when kind == operad
  std::map<std::string, std::string> options;
};

/// Grammar:
///   document   := header generators relations options?
///   header     := ("algebra" | "operad") IDENT
///   generators := "generators" gen ("," gen)*
///   gen        := IDENT ":" NAT          (weight / arity)
///   relations  := "relations" expr*
///   expr       := signed sum of terms; a term without a leading sign
///                 starts a new relation
///   term       := [NAT ("/" NAT)? "*"]? (word | tree)
///   word       := IDENT ("*" IDENT)*
///   tree       := IDENT | "(" tree oNAT tree ")"
///   options    := "options" IDENT "=" value ("," IDENT "=" value)*
/// Comments run from '#' to end of line; whitespace is insignificant.
/// Errors carry line/column positions.
PresentationDocument parse_presentation(const std::string& text);

/// Canonical text form; parse(print(d)) reproduces d up to
/// normalization.
std::string print_presentation(const PresentationDocument& d);

/// A tree monomial in the input grammar's composition form, e.g.
/// "((a o1 a) o3 b)".
std::string tree_expression(const TreeMonomial& m, const GeneratorSet& gens);

}  // namespace envop
