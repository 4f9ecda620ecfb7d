#include <doctest.h>

#include <random>

#include "envop/series.hpp"

using namespace envop;

namespace {

TruncatedSeries random_series(std::mt19937& rng, int order, bool unit_linear) {
  std::uniform_int_distribution<int> val(-4, 4);
  TruncatedSeries f(order);
  f.set_coeff(1, unit_linear ? Rational(1) : Rational(val(rng) | 1));
  for (int k = 2; k <= order; ++k) f.set_coeff(k, Rational(val(rng)));
  return f;
}

TruncatedSeries geometric(int order) {  // t/(1-t)
  TruncatedSeries f(order);
  for (int k = 1; k <= order; ++k) f.set_coeff(k, Rational(1));
  return f;
}

TruncatedSeries alternating(int order) {  // t/(1+t)
  TruncatedSeries f(order);
  for (int k = 1; k <= order; ++k)
    f.set_coeff(k, k % 2 == 1 ? Rational(1) : Rational(-1));
  return f;
}

}  // namespace

TEST_CASE("ring identities") {
  int n = 8;
  TruncatedSeries one = TruncatedSeries::one(n);
  TruncatedSeries t = TruncatedSeries::t(n);
  // (1 + t)(1 - t) = 1 - t^2
  TruncatedSeries ls = multiply(add(one, t), sub(one, t));
  TruncatedSeries rs = sub(one, multiply(t, t));
  CHECK(ls == rs);
  std::mt19937 rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    auto f = random_series(rng, n, false);
    auto g = random_series(rng, n, false);
    CHECK(multiply(f, g) == multiply(g, f));
    CHECK(power(f, 3) == multiply(f, multiply(f, f)));
    auto fr = add(one, f);  // invertible constant term
    CHECK(multiply(fr, reciprocal(fr)) == one);
  }
}

TEST_CASE("composition against a direct expansion") {
  // f = 1 + t + t^2 composed with g = t + t^2:
  // 1 + (t + t^2) + (t + t^2)^2 = 1 + t + 2 t^2 + 2 t^3 + t^4
  TruncatedSeries f(4), g(4);
  f.set_coeff(0, 1);
  f.set_coeff(1, 1);
  f.set_coeff(2, 1);
  g.set_coeff(1, 1);
  g.set_coeff(2, 1);
  auto h = compose(f, g);
  CHECK(h.coeff(0) == 1);
  CHECK(h.coeff(1) == 1);
  CHECK(h.coeff(2) == 2);
  CHECK(h.coeff(3) == 2);
  CHECK(h.coeff(4) == 1);
}

TEST_CASE("compositional inverse is two-sided") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    auto f = random_series(rng, 10, false);
    auto g = invert_composition(f);
    CHECK(compose(f, g) == TruncatedSeries::t(10));
    CHECK(compose(g, f) == TruncatedSeries::t(10));
  }
}

TEST_CASE("lagrange coefficients equal the inverse coefficients") {
  std::mt19937 rng(9);
  for (int trial = 0; trial < 10; ++trial) {
    auto f = random_series(rng, 10, true);
    auto g = invert_composition(f);
    for (int n = 1; n <= 10; ++n)
      CHECK(lagrange_coefficient(f, n) == g.coeff(n));
  }
}

TEST_CASE("t - t^2 inverts to the Catalan series") {
  TruncatedSeries f(7);
  f.set_coeff(1, 1);
  f.set_coeff(2, -1);
  auto g = invert_composition(f);
  long cat[] = {1, 1, 2, 5, 14, 42, 132};
  for (int n = 1; n <= 7; ++n) CHECK(g.coeff(n) == Rational(cat[n - 1]));
}

TEST_CASE("functional-equation checks") {
  TruncatedSeries f(7);
  f.set_coeff(1, 1);
  f.set_coeff(2, -1);
  CHECK(check_gk(invert_composition(f), f).ok);
  CHECK(check_gk(geometric(10), alternating(10)).ok);

  // perturbed pair fails at the perturbed order
  auto bad = alternating(10);
  bad.set_coeff(5, bad.coeff(5) + 1);
  auto v = check_gk(geometric(10), bad);
  CHECK(!v.ok);
  CHECK(v.first_failure == 5);

  // 1/(1-t) and 1-t are Backelin-dual
  TruncatedSeries ga = add(TruncatedSeries::one(10), geometric(10));
  TruncatedSeries gd = sub(TruncatedSeries::one(10), TruncatedSeries::t(10));
  CHECK(check_backelin(ga, gd).ok);
  auto w = check_backelin(ga, ga);
  CHECK(!w.ok);
  CHECK(w.first_failure == 1);
}

TEST_CASE("series parsing") {
  auto f = parse_series("t - t^2", 5);
  CHECK(f.coeff(1) == 1);
  CHECK(f.coeff(2) == -1);
  CHECK(f.coeff(3) == 0);
  auto g = parse_series("1 + 2/3*t + t^3", 4);
  CHECK(g.coeff(0) == 1);
  CHECK(g.coeff(1) == make_rational(2, 3));
  CHECK(g.coeff(2) == 0);
  CHECK(g.coeff(3) == 1);
  CHECK_THROWS_AS(parse_series("t + q", 4), input_error);
  CHECK_THROWS_AS(parse_series("1.5*t", 4), input_error);
}
