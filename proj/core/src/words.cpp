#include "envop/words.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace envop {

int word_compare(const Word& a, const Word& b, const WordOrder& ord) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    int ra = ord.rank_of(a[i]), rb = ord.rank_of(b[i]);
    if (ra != rb) return ra < rb ? 1 : -1;  // smaller rank = larger
  }
  return 0;
}

WordElement WordElement::monomial(const Word& w, const Rational& c) {
  WordElement e;
  e.add_term(w, c);
  return e;
}

int WordElement::degree() const {
  if (terms_.empty()) throw internal_error("degree of the zero element");
  std::size_t d = 0;
  for (const auto& [w, c] : terms_) d = std::max(d, w.size());
  return static_cast<int>(d);
}

void WordElement::add_term(const Word& w, const Rational& c) {
  if (c == 0) return;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(w, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

WordElement WordElement::operator+(const WordElement& o) const {
  WordElement r = *this;
  for (const auto& [w, c] : o.terms_) r.add_term(w, c);
  return r;
}

WordElement WordElement::operator-(const WordElement& o) const {
  WordElement r = *this;
  for (const auto& [w, c] : o.terms_) r.add_term(w, -c);
  return r;
}

WordElement WordElement::operator*(const Rational& c) const {
  WordElement r;
  if (c == 0) return r;
  for (const auto& [w, k] : terms_) r.terms_.emplace(w, k * c);
  return r;
}

const Word& WordElement::leading_word(const WordOrder& ord) const {
  if (terms_.empty()) throw internal_error("leading word of zero");
  const Word* best = &terms_.begin()->first;
  for (const auto& [w, c] : terms_)
    if (word_compare(w, *best, ord) > 0) best = &w;
  return *best;
}

const Rational& WordElement::coeff(const Word& w) const {
  static const Rational zero(0);
  auto it = terms_.find(w);
  return it == terms_.end() ? zero : it->second;
}

std::string WordElement::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    Rational a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
      first = false;
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    if (a != 1) os << a.get_str() << "*";
    if (w.empty()) {
      os << "1";
    } else {
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) os << "*";
        os << names.at(static_cast<std::size_t>(w[i]));
      }
    }
  }
  return os.str();
}

namespace {

/// First position where lm occurs as a factor of w, or -1.
int find_factor(const Word& lm, const Word& w) {
  if (lm.size() > w.size()) return -1;
  for (std::size_t i = 0; i + lm.size() <= w.size(); ++i) {
    bool ok = true;
    for (std::size_t j = 0; j < lm.size(); ++j)
      if (w[i + j] != lm[j]) {
        ok = false;
        break;
      }
    if (ok) return static_cast<int>(i);
  }
  return -1;
}

WordElement rewrite_word_once(const Word& w, const WordRule& r, int pos) {
  WordElement out;
  for (const auto& [t, c] : r.tail.terms()) {
    Word nw;
    nw.insert(nw.end(), w.begin(), w.begin() + pos);
    nw.insert(nw.end(), t.begin(), t.end());
    nw.insert(nw.end(), w.begin() + pos + static_cast<long>(r.lm.size()), w.end());
    out.add_term(nw, c);
  }
  return out;
}

WordRule make_word_rule(const WordElement& e, const WordOrder& ord) {
  const Word& lm = e.leading_word(ord);
  Rational lc = e.coeff(lm);
  WordElement tail;
  for (const auto& [w, c] : e.terms())
    if (w != lm) tail.add_term(w, -c / lc);
  return WordRule{lm, tail};
}

}  // namespace

WordElement word_reduce(const WordElement& e, const WordSystem& sys) {
  WordElement cur = e;
  std::set<Word> known_normal;
  while (true) {
    const Word* target = nullptr;
    int pos = -1;
    std::size_t rule = 0;
    for (const auto& [w, c] : cur.terms()) {
      if (known_normal.count(w)) continue;
      if (target && word_compare(w, *target, sys.order) < 0) continue;
      bool found = false;
      for (std::size_t i = 0; i < sys.rules.size(); ++i) {
        int p = find_factor(sys.rules[i].lm, w);
        if (p >= 0) {
          target = &w;
          pos = p;
          rule = i;
          found = true;
          break;
        }
      }
      if (!found) known_normal.insert(w);
    }
    if (!target) return cur;
    Word w = *target;
    Rational c = cur.coeff(w);
    cur.add_term(w, -c);
    cur = cur + rewrite_word_once(w, sys.rules[rule], pos) * c;
  }
}

namespace {

struct WordCritical {
  Word cm;
  WordElement spoly;
};

/// Small common multiples of lm1 and lm2: proper suffix/prefix overlaps
/// and factor containments.
std::vector<WordCritical> word_criticals(const WordRule& r1, const WordRule& r2,
                                         bool same_rule) {
  std::vector<WordCritical> out;
  const Word& u = r1.lm;
  const Word& v = r2.lm;
  // suffix of u = prefix of v, overlap length k
  for (std::size_t k = 1; k < std::min(u.size(), v.size()); ++k) {
    bool ok = true;
    for (std::size_t j = 0; j < k; ++j)
      if (u[u.size() - k + j] != v[j]) {
        ok = false;
        break;
      }
    if (!ok) continue;
    Word cm = u;
    cm.insert(cm.end(), v.begin() + static_cast<long>(k), v.end());
    // rewrite by r1 at 0, by r2 at |u|-k
    WordElement s = rewrite_word_once(cm, r1, 0) -
                    rewrite_word_once(cm, r2, static_cast<int>(u.size() - k));
    out.push_back({std::move(cm), std::move(s)});
  }
  // v occurs inside u
  if (v.size() < u.size() || (v.size() == u.size() && !same_rule)) {
    for (std::size_t i = 0; i + v.size() <= u.size(); ++i) {
      bool ok = true;
      for (std::size_t j = 0; j < v.size(); ++j)
        if (u[i + j] != v[j]) {
          ok = false;
          break;
        }
      if (!ok) continue;
      WordElement s = rewrite_word_once(u, r1, 0) -
                      rewrite_word_once(u, r2, static_cast<int>(i));
      out.push_back({u, std::move(s)});
    }
  }
  return out;
}

}  // namespace

WordSystem word_buchberger(int ngens, const std::vector<std::string>& names,
                           const std::vector<WordElement>& relations,
                           const WordOrder& ord, int degree_bound) {
  WordSystem sys;
  sys.ngens = ngens;
  sys.names = names;
  sys.order = ord;
  sys.degree_bound = degree_bound;

  std::vector<WordElement> seeds = relations;
  std::sort(seeds.begin(), seeds.end(), [&](const WordElement& a,
                                            const WordElement& b) {
    if (a.is_zero() || b.is_zero()) return b.is_zero() < a.is_zero();
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return word_compare(a.leading_word(ord), b.leading_word(ord), ord) < 0;
  });
  for (const auto& rel : seeds) {
    if (rel.is_zero()) continue;
    if (rel.degree() > degree_bound) continue;
    WordElement r = word_reduce(rel, sys);
    if (r.is_zero()) continue;
    sys.rules.push_back(make_word_rule(r, ord));
  }

  std::size_t processed = 0;
  while (processed < sys.rules.size()) {
    std::size_t upto = sys.rules.size();
    std::vector<WordCritical> pairs;
    for (std::size_t i = 0; i < upto; ++i)
      for (std::size_t j = 0; j < upto; ++j) {
        if (i < processed && j < processed) continue;
        bool same = sys.rules[i].lm == sys.rules[j].lm &&
                    sys.rules[i].tail == sys.rules[j].tail;
        for (auto& cp : word_criticals(sys.rules[i], sys.rules[j], same))
          if (static_cast<int>(cp.cm.size()) <= degree_bound)
            pairs.push_back(std::move(cp));
      }
    processed = upto;
    std::sort(pairs.begin(), pairs.end(), [&](const WordCritical& a,
                                              const WordCritical& b) {
      if (a.cm.size() != b.cm.size()) return a.cm.size() < b.cm.size();
      return word_compare(a.cm, b.cm, ord) < 0;
    });
    for (const auto& cp : pairs) {
      WordElement r = word_reduce(cp.spoly, sys);
      if (!r.is_zero()) sys.rules.push_back(make_word_rule(r, ord));
    }
  }

  // inter-reduction
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < sys.rules.size(); ++i) {
      WordRule r = sys.rules[i];
      WordSystem others = sys;
      others.rules.erase(others.rules.begin() + static_cast<long>(i));
      WordElement e = WordElement::monomial(r.lm) - r.tail;
      WordElement red = word_reduce(e, others);
      if (red.is_zero()) {
        sys.rules.erase(sys.rules.begin() + static_cast<long>(i));
        changed = true;
        break;
      }
      WordRule nr = make_word_rule(red, ord);
      if (nr.lm != r.lm || !(nr.tail == r.tail)) {
        sys.rules[i] = nr;
        changed = true;
      }
    }
  }

  std::sort(sys.rules.begin(), sys.rules.end(), [&](const WordRule& a,
                                                    const WordRule& b) {
    if (a.lm.size() != b.lm.size()) return a.lm.size() < b.lm.size();
    return word_compare(a.lm, b.lm, ord) < 0;
  });
  sys.saturated = true;
  return sys;
}

std::vector<Word> word_normal_basis(const WordSystem& sys, int degree) {
  std::vector<Word> out;
  Word cur;
  auto reducible_suffix = [&](const Word& w) {
    for (const auto& r : sys.rules) {
      if (r.lm.size() > w.size()) continue;
      bool ok = true;
      for (std::size_t j = 0; j < r.lm.size(); ++j)
        if (w[w.size() - r.lm.size() + j] != r.lm[j]) {
          ok = false;
          break;
        }
      if (ok) return true;
    }
    return false;
  };
  std::function<void()> rec = [&]() {
    if (static_cast<int>(cur.size()) == degree) {
      out.push_back(cur);
      return;
    }
    for (int g = 0; g < sys.ngens; ++g) {
      cur.push_back(g);
      if (!reducible_suffix(cur)) rec();
      cur.pop_back();
    }
  };
  rec();
  // order by deglex (descending generator rank order within the degree)
  std::sort(out.begin(), out.end(), [&](const Word& a, const Word& b) {
    return word_compare(a, b, sys.order) > 0;
  });
  return out;
}

long word_normal_count(const WordSystem& sys, int degree) {
  return static_cast<long>(word_normal_basis(sys, degree).size());
}

std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::vector<SelectionRow> leading_selection_scan(
    int ngens, const std::vector<WordElement>& relations) {
  for (const auto& r : relations) {
    if (r.is_zero())
      throw input_error("leading_selection_scan: zero relation");
    for (const auto& [w, c] : r.terms())
      if (w.size() != 2)
        throw input_error("leading_selection_scan: relations must be quadratic");
  }

  // leading selections of each deglex permutation
  std::vector<std::vector<int>> perms = all_permutations(ngens);
  std::vector<std::vector<Word>> perm_selection;
  for (const auto& p : perms) {
    WordOrder ord;
    ord.generator_rank.resize(static_cast<std::size_t>(ngens));
    // p lists generators from largest to smallest
    for (int r = 0; r < ngens; ++r)
      ord.generator_rank[static_cast<std::size_t>(p[static_cast<std::size_t>(r)])] = r;
    std::vector<Word> sel;
    for (const auto& rel : relations) sel.push_back(rel.leading_word(ord));
    perm_selection.push_back(std::move(sel));
  }

  // all selections from supports
  std::vector<std::vector<Word>> supports;
  for (const auto& r : relations) {
    std::vector<Word> s;
    for (const auto& [w, c] : r.terms()) s.push_back(w);
    supports.push_back(std::move(s));
  }

  auto count_avoiding = [&](const std::vector<Word>& forbidden) {
    long n = 0;
    for (int a = 0; a < ngens; ++a)
      for (int b = 0; b < ngens; ++b)
        for (int c = 0; c < ngens; ++c) {
          Word w{a, b, c};
          bool bad = false;
          for (const auto& f : forbidden)
            if (find_factor(f, w) >= 0) {
              bad = true;
              break;
            }
          if (!bad) ++n;
        }
    return n;
  };

  std::vector<SelectionRow> rows;
  std::vector<std::size_t> idx(supports.size(), 0);
  while (true) {
    SelectionRow row;
    for (std::size_t i = 0; i < supports.size(); ++i)
      row.selection.push_back(supports[i][idx[i]]);
    row.degree3_count = count_avoiding(row.selection);
    for (std::size_t pi = 0; pi < perm_selection.size(); ++pi)
      if (perm_selection[pi] == row.selection)
        row.realized_by.push_back(static_cast<int>(pi));
    rows.push_back(std::move(row));
    // advance the odometer
    std::size_t k = 0;
    while (k < idx.size()) {
      if (++idx[k] < supports[k].size()) break;
      idx[k] = 0;
      ++k;
    }
    if (k == idx.size()) break;
  }
  return rows;
}

}  // namespace envop
