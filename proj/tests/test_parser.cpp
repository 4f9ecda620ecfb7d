#include <doctest.h>

#include <random>

#include "envop/parser.hpp"
#include "common.hpp"

using namespace envop;

namespace {

PresentationDocument random_algebra_doc(std::mt19937& rng, int index) {
  std::uniform_int_distribution<int> ngens(1, 3), nrels(0, 3), len(1, 3),
      coef(-3, 3), terms(1, 3);
  PresentationDocument d;
  d.kind = PresentationDocument::Kind::algebra;
  d.name = "rand" + std::to_string(index);
  int n = ngens(rng);
  for (int g = 0; g < n; ++g) {
    d.algebra.gen_names.push_back(std::string(1, static_cast<char>('a' + g)));
    d.algebra.gen_weights.push_back(1);
  }
  d.algebra.name = d.name;
  std::uniform_int_distribution<int> pick(0, n - 1);
  for (int r = nrels(rng); r-- > 0;) {
    int degree = len(rng);
    WordElement e;
    for (int t = terms(rng); t-- > 0;) {
      Word w;
      for (int i = 0; i < degree; ++i) w.push_back(pick(rng));
      int c = coef(rng);
      if (c != 0) e.add_term(w, make_rational(c, 1 + (t % 2)));
    }
    if (!e.is_zero()) d.algebra.relations.push_back(e);
  }
  return d;
}

PresentationDocument random_operad_doc(std::mt19937& rng, int index) {
  std::uniform_int_distribution<int> ngens(1, 2), arity(2, 3), nrels(0, 2),
      coef(-2, 2), terms(1, 3);
  PresentationDocument d;
  d.kind = PresentationDocument::Kind::operad;
  d.name = "randop" + std::to_string(index);
  int n = ngens(rng);
  for (int g = 0; g < n; ++g) {
    int a = arity(rng);
    // weight = arity - 1 keeps every fixed-arity relation homogeneous
    d.operad.gens.add(
        {std::string(1, static_cast<char>('f' + g)), a, a - 1, 0});
  }
  d.operad.name = d.name;
  for (int r = nrels(rng); r-- > 0;) {
    std::uniform_int_distribution<int> want_arity(3, 5);
    auto pool = enumerate_monomials(d.operad.gens, want_arity(rng));
    if (pool.empty()) continue;
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    OperadElement e;
    for (int t = terms(rng); t-- > 0;) {
      int c = coef(rng);
      if (c != 0) e.add_term(pool[pick(rng)], Rational(c));
    }
    if (!e.is_zero()) d.operad.relations.push_back(e);
  }
  return d;
}

}  // namespace

TEST_CASE("the Sklyanin document parses as expected") {
  AlgebraPresentation skl = envop_test::sklyanin();
  CHECK(skl.gen_names == std::vector<std::string>{"a", "b", "c"});
  CHECK(skl.relations.size() == 3);
  CHECK(skl.is_quadratic());
  CHECK(skl.relations[0].coeff({0, 1}) == 1);
  CHECK(skl.relations[0].coeff({1, 0}) == -1);
  CHECK(skl.relations[0].coeff({2, 2}) == -1);
}

TEST_CASE("degenerate documents") {
  auto d = parse_presentation("algebra Free generators x:1 relations");
  CHECK(d.algebra.relations.empty());
  CHECK(d.name == "Free");

  auto op = parse_presentation(
      "operad O generators m:2 relations options order = m, field = 7");
  CHECK(op.kind == PresentationDocument::Kind::operad);
  CHECK(op.options.at("order") == "m");
  CHECK(op.options.at("field") == "7");
}

TEST_CASE("parser reports structured errors") {
  CHECK_THROWS_AS(parse_presentation("algebra"), input_error);
  CHECK_THROWS_AS(parse_presentation("ring R generators x:1 relations"),
                  input_error);
  CHECK_THROWS_AS(
      parse_presentation("algebra A generators x:1 relations x*y"),
      input_error);  // unknown generator
  CHECK_THROWS_AS(
      parse_presentation("algebra A generators x:1 relations x*x - x"),
      input_error);  // inhomogeneous
  CHECK_THROWS_AS(
      parse_presentation("operad O generators m:2 relations (m o3 m)"),
      input_error);  // slot out of range
  CHECK_THROWS_AS(
      parse_presentation("algebra A generators x:1, x:2 relations"),
      input_error);  // duplicate generator

  try {
    parse_presentation("algebra A generators x:1 relations\n  x*x - x");
  } catch (const input_error& e) {
    std::string msg = e.what();
    CHECK(msg.find("1") != std::string::npos);
    CHECK(msg.find("2") != std::string::npos);  // the two weights found
  }
}

TEST_CASE("print-parse round trip on random documents") {
  std::mt19937 rng(41);
  for (int i = 0; i < 50; ++i) {
    PresentationDocument d =
        i % 2 == 0 ? random_algebra_doc(rng, i) : random_operad_doc(rng, i);
    std::string text = print_presentation(d);
    PresentationDocument back = parse_presentation(text);
    CHECK(print_presentation(back) == text);
    CHECK(back.name == d.name);
    if (d.kind == PresentationDocument::Kind::algebra)
      CHECK(back.algebra.relations.size() == d.algebra.relations.size());
    else
      CHECK(back.operad.relations.size() == d.operad.relations.size());
  }
}

TEST_CASE("fuzzed documents never crash the parser") {
  std::mt19937 rng(43);
  std::uniform_int_distribution<int> mode(0, 3);
  const std::string alphabet = "abxyz*o()-+/123 :,\n#";
  std::uniform_int_distribution<std::size_t> letter(0, alphabet.size() - 1);
  int parsed = 0, rejected = 0;
  for (int i = 0; i < 500; ++i) {
    PresentationDocument d =
        i % 2 == 0 ? random_algebra_doc(rng, i) : random_operad_doc(rng, i);
    std::string text = print_presentation(d);
    if (text.empty()) continue;
    std::uniform_int_distribution<std::size_t> at(0, text.size() - 1);
    switch (mode(rng)) {
      case 0:
        text[at(rng)] = alphabet[letter(rng)];
        break;
      case 1:
        text.erase(at(rng), 1);
        break;
      case 2:
        text.insert(at(rng), 1, alphabet[letter(rng)]);
        break;
      case 3:
        text.resize(at(rng));
        break;
    }
    try {
      parse_presentation(text);
      ++parsed;
    } catch (const input_error&) {
      ++rejected;
    }
    // nothing else may escape: any other exception fails the test
  }
  CHECK(parsed + rejected == 500);
  CHECK(rejected > 0);
}
