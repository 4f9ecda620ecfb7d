#include <doctest.h>

#include "envop/bar.hpp"
#include "envop/duality.hpp"
#include "envop/envelopes.hpp"
#include "common.hpp"

using namespace envop;
using envop_test::catalan;

namespace {

AlgebraPresentation free_two_vars() {
  AlgebraPresentation a;
  a.name = "free2";
  a.gen_names = {"x", "y"};
  a.gen_weights = {1, 1};
  return a;
}

AlgebraPresentation truncated_cubic() {  // k[x]/(x^3), not quadratic
  AlgebraPresentation a = envop_test::poly_one_var();
  a.name = "kx3";
  WordElement r;
  r.add_term({0, 0, 0}, Rational(1));
  a.relations.push_back(r);
  return a;
}

}  // namespace

TEST_CASE("quadratic dual algebra dims and relations") {
  auto kx = quadratic_dual_algebra(
      algebra_quadratic_data(envop_test::poly_one_var()), 5);
  CHECK(kx.dims == std::vector<long>{1, 1, 0, 0, 0, 0});
  REQUIRE(kx.dual_presentation.relations.size() == 1);  // the dual of k[x]
  CHECK(kx.dual_presentation.relations[0].terms().count({0, 0}) == 1);

  auto kx2 = quadratic_dual_algebra(
      algebra_quadratic_data(envop_test::dual_numbers()), 5);
  CHECK(kx2.dims == std::vector<long>{1, 1, 1, 1, 1, 1});
  CHECK(kx2.dual_presentation.relations.empty());

  auto skl = quadratic_dual_algebra(
      algebra_quadratic_data(envop_test::sklyanin()), 5);
  CHECK(skl.dims == std::vector<long>{1, 3, 3, 1, 0, 0});
  CHECK(skl.dual_presentation.relations.size() == 6);
}

TEST_CASE("Backelin check for the dual pairs") {
  for (const AlgebraPresentation& pres :
       {envop_test::poly_one_var(), envop_test::dual_numbers(),
        envop_test::sklyanin(), free_two_vars()}) {
    CompletedAlgebra a(pres, 5);
    auto d = quadratic_dual_algebra(algebra_quadratic_data(pres), 5);
    CHECK(check_backelin(a.hilbert_series(5), d.euler_series(5)).ok);
  }
}

TEST_CASE("quadratic dual operad: associative is self-dual") {
  auto d = quadratic_dual_operad_dims(envop_test::associative(), 6);
  for (int n = 1; n <= 6; ++n) {
    CHECK(d.dim(n, n - 1) == 1);
    CHECK(d.total(n) == 1);
  }
  CompletedOperad p(envop_test::associative(), 6);
  CHECK(check_gk(p.hilbert_series(6), d.euler_series(6)).ok);
}

TEST_CASE("quadratic dual operad: envelope duals match the closed forms") {
  for (bool dual_numbers : {false, true}) {
    AlgebraPresentation pres = dual_numbers ? envop_test::dual_numbers()
                                            : envop_test::poly_one_var();
    auto adual = quadratic_dual_algebra(algebra_quadratic_data(pres), 7);
    auto dmin = quadratic_dual_operad_dims(u_min_quadratic(pres), 7);
    auto dmax = quadratic_dual_operad_dims(u_max_quadratic(pres), 7);
    for (int n = 1; n <= 7; ++n) {
      // min-envelope dual counts trees weighted by the dual algebra
      CHECK(dmin.dim(n, n - 1) ==
            raney_weighted_count(adual.dims, n).get_num().get_si());
      CHECK(dmin.total(n) == dmin.dim(n, n - 1));
      // max-envelope dual is supported in top weight, dim A!(n-1)
      CHECK(dmax.dim(n, n - 1) == adual.dims[static_cast<std::size_t>(n - 1)]);
      CHECK(dmax.total(n) == dmax.dim(n, n - 1));
    }
  }
}

TEST_CASE("bar differential squares to zero and conserves Euler data") {
  CompletedAlgebra skl(envop_test::sklyanin(), 4);
  ChainComplex c = bar_complex_algebra(skl, 4);
  verify_d_squared(c);
  HomologyTable h = homology_ranks(c);
  for (std::size_t b = 0; b < h.chain_dims.size(); ++b) {
    long hom_euler = 0;
    for (std::size_t s = 0; s < h.homology_dims[b].size(); ++s) {
      CHECK(h.homology_dims[b][s] >= 0);
      hom_euler += (s % 2 == 0 ? h.homology_dims[b][s] : -h.homology_dims[b][s]);
    }
    CHECK(hom_euler == h.euler[b]);
  }
}

TEST_CASE("algebra koszulness verdicts") {
  for (const AlgebraPresentation& pres :
       {envop_test::poly_one_var(), envop_test::dual_numbers(),
        free_two_vars(), envop_test::sklyanin()}) {
    CompletedAlgebra a(pres, 4);
    HomologyTable h = homology_ranks(bar_complex_algebra(a, 4));
    KoszulVerdict v = koszulness_verdict(h);
    CHECK(v.koszul);
    // diagonal dims equal the intersection-formula dual dims
    auto d = quadratic_dual_algebra(algebra_quadratic_data(pres), 4);
    CHECK(dual_from_diagonal(h) == d.dims);
  }

  // weight-3 relation: homology off the diagonal
  CompletedAlgebra kx3(truncated_cubic(), 5);
  KoszulVerdict v =
      koszulness_verdict(homology_ranks(bar_complex_algebra(kx3, 5)));
  CHECK(!v.koszul);
}

TEST_CASE("operad koszulness verdicts") {
  CompletedOperad assoc(envop_test::associative(), 5);
  HomologyTable h = homology_ranks(bar_complex_operad(assoc, 5));
  CHECK(koszulness_verdict(h).koszul);
  auto d = quadratic_dual_operad_dims(envop_test::associative(), 5);
  auto diag = dual_from_diagonal(h);
  for (int n = 1; n <= 5; ++n)
    CHECK(diag[static_cast<std::size_t>(n - 1)] == d.dim(n, n - 1));

  // u_min(k[x]/(x^2)) has Catalan diagonal homology
  CompletedOperad umin(u_min_quadratic(envop_test::dual_numbers()), 6);
  HomologyTable hm = homology_ranks(bar_complex_operad(umin, 6));
  CHECK(koszulness_verdict(hm).koszul);
  auto dm = dual_from_diagonal(hm);
  for (int n = 1; n <= 6; ++n)
    CHECK(dm[static_cast<std::size_t>(n - 1)] == catalan(n - 1));
}

TEST_CASE("prime-field homology ranks agree with the rational ones") {
  Fp::set_modulus(32003);
  CompletedAlgebra skl(envop_test::sklyanin(), 4);
  ChainComplex c = bar_complex_algebra(skl, 4);
  HomologyTable hq = homology_ranks(c, true);
  HomologyTable hp = homology_ranks(c, false);
  CHECK(hq.homology_dims == hp.homology_dims);

  CompletedOperad umin(u_min_quadratic(envop_test::dual_numbers()), 5);
  ChainComplex co = bar_complex_operad(umin, 5);
  CHECK(homology_ranks(co, true).homology_dims ==
        homology_ranks(co, false).homology_dims);
}
