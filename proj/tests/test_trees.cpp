#include <doctest.h>

#include <algorithm>

#include "envop/tree.hpp"
#include "common.hpp"

using namespace envop;

namespace {

GeneratorSet one_binary() {
  GeneratorSet g;
  g.add({"m", 2, 1, 0});
  return g;
}

GeneratorSet binary_and_ternary() {
  GeneratorSet g;
  g.add({"m", 2, 1, 0});
  g.add({"w", 3, 1, 0});
  return g;
}

std::vector<TreeMonomial> all_up_to(const GeneratorSet& g, int max_arity) {
  std::vector<TreeMonomial> out;
  for (int n = 1; n <= max_arity; ++n)
    for (const auto& m : enumerate_monomials(g, n)) out.push_back(m);
  return out;
}

}  // namespace

TEST_CASE("unit, corolla, graft basics") {
  GeneratorSet g = one_binary();
  TreeMonomial id = TreeMonomial::unit();
  CHECK(id.is_unit());
  CHECK(id.arity() == 1);
  CHECK(id.weight() == 0);

  TreeMonomial m = TreeMonomial::corolla(0, 2);
  CHECK(m.arity() == 2);
  CHECK(m.weight() == 1);
  CHECK(m.to_string(g) == "m(*,*)");

  CHECK(graft(m, 1, id) == m);
  CHECK(graft(m, 2, id) == m);
  CHECK(graft(id, 1, m) == m);

  TreeMonomial left = graft(m, 1, m);
  TreeMonomial right = graft(m, 2, m);
  CHECK(left.arity() == 3);
  CHECK(left.to_string(g) == "m(m(*,*),*)");
  CHECK(right.to_string(g) == "m(*,m(*,*))");
  CHECK(left != right);
}

TEST_CASE("sequential and parallel composition axioms, exhaustively") {
  GeneratorSet g = binary_and_ternary();
  auto small = all_up_to(g, 3);
  for (const auto& a : small)
    for (const auto& b : small)
      for (const auto& c : small) {
        if (a.arity() + b.arity() + c.arity() > 7) continue;
        // sequential: (a o_i b) o_{i-1+j} c == a o_i (b o_j c)
        for (int i = 1; i <= a.arity(); ++i)
          for (int j = 1; j <= b.arity(); ++j)
            CHECK(graft(graft(a, i, b), i - 1 + j, c) ==
                  graft(a, i, graft(b, j, c)));
        // parallel: for i < k, (a o_i b) o_{k+|b|-1} c == (a o_k c) o_i b
        for (int i = 1; i <= a.arity(); ++i)
          for (int k = i + 1; k <= a.arity(); ++k)
            CHECK(graft(graft(a, i, b), k + b.arity() - 1, c) ==
                  graft(graft(a, k, c), i, b));
      }
}

TEST_CASE("enumeration counts: Catalan and Schroeder") {
  GeneratorSet bin = one_binary();
  for (int n = 1; n <= 7; ++n)
    CHECK(static_cast<long>(enumerate_monomials(bin, n).size()) ==
          envop_test::catalan(n - 1));

  // arities {2,3}: T(n) = sum T(a)T(b) + sum T(a)T(b)T(c), an
  // independent convolution oracle
  GeneratorSet both = binary_and_ternary();
  std::vector<long> t{0, 1};
  for (int n = 2; n <= 6; ++n) {
    long total = 0;
    for (int a = 1; a < n; ++a) total += t[a] * t[n - a];
    for (int a = 1; a < n; ++a)
      for (int b = 1; a + b < n; ++b) total += t[a] * t[b] * t[n - a - b];
    t.push_back(total);
  }
  CHECK(t == std::vector<long>{0, 1, 1, 3, 10, 38, 154});
  for (int n = 1; n <= 6; ++n)
    CHECK(static_cast<long>(enumerate_monomials(both, n).size()) == t[n]);
}

TEST_CASE("monomial order is a strict total order") {
  GeneratorSet g = binary_and_ternary();
  MonomialOrder ord = MonomialOrder::default_for(g.size());
  for (int n = 2; n <= 5; ++n) {
    auto ms = enumerate_monomials(g, n);
    for (std::size_t i = 0; i < ms.size(); ++i)
      for (std::size_t j = 0; j < ms.size(); ++j) {
        int c = compare(ms[i], ms[j], ord);
        CHECK(c == -compare(ms[j], ms[i], ord));
        CHECK((c == 0) == (i == j));
      }
    // transitivity via sort consistency: sorting twice is stable
    auto sorted = ms;
    std::sort(sorted.begin(), sorted.end(),
              [&](const TreeMonomial& x, const TreeMonomial& y) {
                return compare(x, y, ord) < 0;
              });
    for (std::size_t i = 0; i + 1 < sorted.size(); ++i)
      CHECK(compare(sorted[i], sorted[i + 1], ord) < 0);
  }
}

TEST_CASE("order is compatible with grafting") {
  GeneratorSet g = one_binary();
  MonomialOrder ord = MonomialOrder::default_for(g.size());
  auto small = all_up_to(g, 4);
  for (const auto& a : small)
    for (const auto& b : small) {
      if (a.arity() != b.arity() || !(compare(a, b, ord) < 0)) continue;
      for (const auto& c : small)
        for (int i = 1; i <= c.arity(); ++i) {
          CHECK(compare(graft(c, i, a), graft(c, i, b), ord) < 0);
          for (int j = 1; j <= a.arity(); ++j)
            CHECK(compare(graft(a, j, c), graft(b, j, c), ord) < 0);
        }
    }
}

TEST_CASE("divisor occurrences are consistent and exhaustive") {
  GeneratorSet g = one_binary();
  TreeMonomial m2 = TreeMonomial::corolla(0, 2);
  TreeMonomial lcomb = graft(m2, 1, m2);

  for (int n = 2; n <= 6; ++n) {
    long normal = 0;
    for (const auto& m : enumerate_monomials(g, n)) {
      auto occs = divides(lcomb, m);
      // each occurrence reproduces the monomial when substituted back
      for (const auto& occ : occs)
        CHECK(replace_occurrence(m, lcomb, occ, lcomb) == m);
      if (occs.empty()) ++normal;
      // brute-force oracle: an occurrence exists iff some internal
      // vertex has an internal first child
      bool expect = false;
      const auto& nodes = m.nodes();
      for (std::size_t v = 0; v < nodes.size(); ++v)
        if (nodes[v].gen >= 0 && nodes[v + 1].gen >= 0) expect = true;
      CHECK(expect == !occs.empty());
    }
    // trees avoiding m o_1 m = leftmost-leaf binary trees: exactly one
    CHECK(normal == 1);
  }
}

TEST_CASE("replace_occurrence rewrites within context") {
  GeneratorSet g = one_binary();
  TreeMonomial m2 = TreeMonomial::corolla(0, 2);
  TreeMonomial lcomb = graft(m2, 1, m2);
  TreeMonomial rcomb = graft(m2, 2, m2);
  // rewriting the left comb inside m(m(m,*),*) at the root occurrence
  TreeMonomial host = graft(lcomb, 1, m2);
  auto occs = divides(lcomb, host);
  REQUIRE(occs.size() == 2);
  bool saw_rotation = false;
  for (const auto& occ : occs) {
    TreeMonomial r = replace_occurrence(host, lcomb, occ, rcomb);
    CHECK(r.arity() == host.arity());
    CHECK(r.weight() == host.weight());
    if (r == graft(rcomb, 1, m2) || r == graft(lcomb, 2, m2) ||
        r == graft(m2, 2, lcomb))
      saw_rotation = true;
  }
  CHECK(saw_rotation);
}

TEST_CASE("path sequences grade by leaf depth") {
  GeneratorSet g = one_binary();
  TreeMonomial m2 = TreeMonomial::corolla(0, 2);
  auto pd = path_sequence(graft(m2, 1, m2));
  CHECK(pd.degrees == std::vector<int>{2, 2, 1});
  pd = path_sequence(graft(m2, 2, m2));
  CHECK(pd.degrees == std::vector<int>{1, 2, 2});
}
