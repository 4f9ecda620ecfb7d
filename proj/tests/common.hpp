#pragma once

#include "envop/parser.hpp"

namespace envop_test {

inline envop::AlgebraPresentation poly_one_var() {
  envop::AlgebraPresentation a;
  a.name = "kx";
  a.gen_names = {"x"};
  a.gen_weights = {1};
  return a;
}

inline envop::AlgebraPresentation dual_numbers() {
  envop::AlgebraPresentation a = poly_one_var();
  a.name = "kx2";
  envop::WordElement r;
  r.add_term({0, 0}, envop::Rational(1));
  a.relations.push_back(r);
  return a;
}

inline envop::AlgebraPresentation sklyanin() {
  return envop::parse_presentation(
             "algebra sklyanin\n"
             "generators a:1, b:1, c:1\n"
             "relations\n"
             "  a*b - b*a - c*c\n"
             "  b*c - c*b - a*a\n"
             "  c*a - a*c - b*b\n")
      .algebra;
}

inline envop::OperadPresentation associative() {
  return envop::parse_presentation(
             "operad assoc\n"
             "generators m:2\n"
             "relations\n"
             "  (m o1 m) - (m o2 m)\n")
      .operad;
}

inline long catalan(int n) {
  long c = 1;
  for (int k = 0; k < n; ++k) c = c * 2 * (2 * k + 1) / (k + 2);
  return c;
}

}  // namespace envop_test
