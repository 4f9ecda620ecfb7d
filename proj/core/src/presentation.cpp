#include "envop/presentation.hpp"

#include <sstream>

namespace envop {

int AlgebraPresentation::word_weight(const Word& w) const {
  int total = 0;
  for (int g : w) {
    if (g < 0 || g >= ngens())
      throw input_error("word references an unknown generator");
    total += gen_weights[static_cast<std::size_t>(g)];
  }
  return total;
}

void AlgebraPresentation::validate() const {
  if (gen_names.size() != gen_weights.size())
    throw internal_error("generator name/weight tables out of sync");
  for (std::size_t i = 0; i < gen_weights.size(); ++i)
    if (gen_weights[i] < 1)
      throw input_error("generator " + gen_names[i] +
                        " has weight < 1 (the algebra must be connected)");
  for (const auto& rel : relations) {
    if (rel.is_zero()) continue;
    int w0 = -1;
    for (const auto& [w, c] : rel.terms()) {
      int ww = word_weight(w);
      if (w0 < 0) {
        w0 = ww;
      } else if (ww != w0) {
        std::ostringstream os;
        os << "relation is not weight-homogeneous: found weights " << w0
           << " and " << ww;
        throw input_error(os.str());
      }
    }
  }
}

bool AlgebraPresentation::is_quadratic() const {
  for (int w : gen_weights)
    if (w != 1) return false;
  for (const auto& rel : relations) {
    if (rel.is_zero()) continue;
    for (const auto& [w, c] : rel.terms())
      if (w.size() != 2) return false;
  }
  return true;
}

void OperadPresentation::validate() const {
  for (const auto& rel : relations) {
    if (rel.is_zero()) continue;
    int w0 = -1;
    for (const auto& [m, c] : rel.terms()) {
      if (m.is_unit())
        throw input_error("the operad unit may not appear in a relation");
      int ww = m.generator_weight(gens);
      if (w0 < 0) {
        w0 = ww;
      } else if (ww != w0) {
        std::ostringstream os;
        os << "relation is not weight-homogeneous: found weights " << w0
           << " and " << ww;
        throw input_error(os.str());
      }
    }
  }
}

bool OperadPresentation::is_quadratic() const {
  for (const auto& rel : relations) {
    if (rel.is_zero()) continue;
    for (const auto& [m, c] : rel.terms())
      if (m.weight() != 2) return false;
  }
  return true;
}

AlgebraQuadraticData algebra_quadratic_data(const AlgebraPresentation& a) {
  a.validate();
  if (!a.is_quadratic())
    throw input_error("presentation of " + a.name + " is not quadratic");
  AlgebraQuadraticData q;
  q.ngens = a.ngens();
  q.names = a.gen_names;
  std::size_t amb = static_cast<std::size_t>(q.ngens) *
                    static_cast<std::size_t>(q.ngens);
  for (const auto& rel : a.relations) {
    if (rel.is_zero()) continue;
    std::vector<Rational> v(amb, Rational(0));
    for (const auto& [w, c] : rel.terms())
      v[static_cast<std::size_t>(w[0]) * static_cast<std::size_t>(q.ngens) +
        static_cast<std::size_t>(w[1])] = c;
    q.relation_vectors.push_back(std::move(v));
  }
  return q;
}

}  // namespace envop
