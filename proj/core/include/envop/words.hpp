#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "envop/scalar.hpp"

namespace envop {

/// A word over algebra generators (ids into a GeneratorSet-like table).
using Word = std::vector<int>;

/// Degree-lexicographic order induced by a generator ranking
/// (smaller rank = larger generator).
struct WordOrder {
  std::vector<int> generator_rank;
  int rank_of(int g) const {
    if (generator_rank.empty()) return g;
    return generator_rank.at(static_cast<std::size_t>(g));
  }
};

/// -1 / 0 / +1 under deglex.
int word_compare(const Word& a, const Word& b, const WordOrder& ord);

/// Sparse rational combination of words, homogeneous in length.
class WordElement {
public:
  WordElement() = default;
  static WordElement monomial(const Word& w, const Rational& c = 1);

  bool is_zero() const { return terms_.empty(); }
  int degree() const;
  const std::map<Word, Rational>& terms() const { return terms_; }
  void add_term(const Word& w, const Rational& c);
  WordElement operator+(const WordElement& o) const;
  WordElement operator-(const WordElement& o) const;
  WordElement operator*(const Rational& c) const;
  bool operator==(const WordElement& o) const { return terms_ == o.terms_; }

  const Word& leading_word(const WordOrder& ord) const;
  const Rational& coeff(const Word& w) const;

  std::string to_string(const std::vector<std::string>& names) const;

private:
  std::map<Word, Rational> terms_;
};

struct WordRule {
  Word lm;
  WordElement tail;  // rule element is lm - tail
};

struct WordSystem {
  int ngens = 0;
  std::vector<std::string> names;
  WordOrder order;
  std::vector<WordRule> rules;
  int degree_bound = 0;
  bool saturated = false;
};

WordElement word_reduce(const WordElement& e, const WordSystem& sys);

/// Bounded noncommutative Buchberger completion with inter-reduction.
WordSystem word_buchberger(int ngens, const std::vector<std::string>& names,
                           const std::vector<WordElement>& relations,
                           const WordOrder& ord, int degree_bound);

/// Words of the given degree with no rule-leading-word factor.
std::vector<Word> word_normal_basis(const WordSystem& sys, int degree);
long word_normal_count(const WordSystem& sys, int degree);

/// One row of the leading-selection scan over a quadratic relation list.
struct SelectionRow {
  std::vector<Word> selection;          // one monomial chosen per relation
  long degree3_count = 0;               // words of degree 3 avoiding them
  std::vector<int> realized_by;         // indices of deglex permutations
};

/// Enumerates every one-monomial-per-relation selection from the supports
/// of a quadratic relation list; counts degree-3 words avoiding the
/// selected factors; marks which deglex generator permutations realize
/// each selection as the set of leading words.
std::vector<SelectionRow> leading_selection_scan(
    int ngens, const std::vector<WordElement>& relations);

/// All generator permutations of {0..n-1} in lexicographic order.
std::vector<std::vector<int>> all_permutations(int n);

}  // namespace envop
