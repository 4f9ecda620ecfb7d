#include <benchmark/benchmark.h>

#include "envop/bar.hpp"
#include "envop/duality.hpp"
#include "envop/envelopes.hpp"

using namespace envop;

namespace {

AlgebraPresentation sklyanin() {
  AlgebraPresentation a;
  a.name = "sklyanin";
  a.gen_names = {"a", "b", "c"};
  a.gen_weights = {1, 1, 1};
  auto rel = [&](int x, int y, int u, int v, int s, int t) {
    WordElement e;
    e.add_term({x, y}, Rational(1));
    e.add_term({y, x}, Rational(-1));
    e.add_term({s, t}, Rational(-1));
    (void)u;
    (void)v;
    return e;
  };
  a.relations.push_back(rel(0, 1, 1, 0, 2, 2));
  a.relations.push_back(rel(1, 2, 2, 1, 0, 0));
  a.relations.push_back(rel(2, 0, 0, 2, 1, 1));
  return a;
}

Matrix<Rational> dense_test_matrix(std::size_t n) {
  Matrix<Rational> m(n, n);
  long seed = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      seed = (seed * 1103515245 + 12345) % 2147483648L;
      m(i, j) = Rational(seed % 19 - 9, 1 + static_cast<int>((i + j) % 5));
    }
  return m;
}

void bm_rref(benchmark::State& state) {
  auto m = dense_test_matrix(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    auto copy = m;
    benchmark::DoNotOptimize(rref(copy));
  }
}
BENCHMARK(bm_rref)->Arg(20)->Arg(40);

void bm_word_buchberger(benchmark::State& state) {
  AlgebraPresentation a = sklyanin();
  for (auto _ : state) {
    CompletedAlgebra done(a, static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(done.dims());
  }
}
BENCHMARK(bm_word_buchberger)->Arg(3)->Arg(4);

void bm_envelope_gb(benchmark::State& state) {
  AlgebraPresentation kx;
  kx.name = "kx";
  kx.gen_names = {"x"};
  kx.gen_weights = {1};
  int bound = static_cast<int>(state.range(0));
  CompletedAlgebra a(kx, bound - 1);
  for (auto _ : state) {
    Envelope env = u_max(a, bound);
    CompletedOperad p(env.pres, bound);
    benchmark::DoNotOptimize(p.dims());
  }
}
BENCHMARK(bm_envelope_gb)->Arg(5)->Arg(6);

void bm_bar_homology(benchmark::State& state) {
  AlgebraPresentation kx2;
  kx2.name = "kx2";
  kx2.gen_names = {"x"};
  kx2.gen_weights = {1};
  WordElement r;
  r.add_term({0, 0}, Rational(1));
  kx2.relations.push_back(r);
  int bound = static_cast<int>(state.range(0));
  CompletedAlgebra a(kx2, bound);
  ChainComplex c = bar_complex_algebra(a, bound);
  for (auto _ : state) benchmark::DoNotOptimize(homology_ranks(c));
}
BENCHMARK(bm_bar_homology)->Arg(5)->Arg(6);

}  // namespace

BENCHMARK_MAIN();
