#include <doctest.h>

#include <functional>
#include <random>

#include "envop/matrix.hpp"

using namespace envop;

namespace {

Matrix<Rational> random_matrix(std::mt19937& rng, std::size_t r,
                               std::size_t c, int lo = -5, int hi = 5) {
  std::uniform_int_distribution<int> num(lo, hi);
  std::uniform_int_distribution<int> den(1, 4);
  Matrix<Rational> m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = make_rational(num(rng), den(rng));
  return m;
}

// rank oracle: largest k with a nonzero k x k minor, by brute force
Rational minor_det(const Matrix<Rational>& m, std::vector<std::size_t> rows,
                   std::vector<std::size_t> cols) {
  std::size_t k = rows.size();
  if (k == 1) return m(rows[0], cols[0]);
  Rational det = 0;
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<std::size_t> sub_rows;
    for (std::size_t j = 0; j < k; ++j)
      if (j != i) sub_rows.push_back(rows[j]);
    std::vector<std::size_t> sub_cols(cols.begin() + 1, cols.end());
    Rational cof = m(rows[i], cols[0]) * minor_det(m, sub_rows, sub_cols);
    det += (i % 2 == 0) ? cof : -cof;
  }
  return det;
}

void subsets(std::size_t n, std::size_t k,
             const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    if (cur.size() == k) {
      f(cur);
      return;
    }
    for (std::size_t i = from; i < n; ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
}

std::size_t minor_rank(const Matrix<Rational>& m) {
  std::size_t best = 0;
  std::size_t top = std::min(m.rows(), m.cols());
  for (std::size_t k = 1; k <= top; ++k) {
    bool found = false;
    subsets(m.rows(), k, [&](const std::vector<std::size_t>& rs) {
      if (found) return;
      subsets(m.cols(), k, [&](const std::vector<std::size_t>& cs) {
        if (!found && minor_det(m, rs, cs) != 0) found = true;
      });
    });
    if (found)
      best = k;
    else
      break;
  }
  return best;
}

}  // namespace

TEST_CASE("rref shape and rank against the minor oracle") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 25; ++trial) {
    auto m = random_matrix(rng, 4, 5);
    auto r = rref(m);
    CHECK(r.rank == minor_rank(m));
    // pivots strictly increase, pivot entries 1, pivot columns cleared
    for (std::size_t k = 0; k < r.rank; ++k) {
      if (k > 0) CHECK(r.pivots[k] > r.pivots[k - 1]);
      for (std::size_t i = 0; i < r.mat.rows(); ++i)
        CHECK(r.mat(i, r.pivots[k]) == (i == k ? Rational(1) : Rational(0)));
    }
  }
}

TEST_CASE("rref is idempotent and preserves the row space") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    auto m = random_matrix(rng, 3, 4);
    auto r = rref(m);
    CHECK(rref(r.mat).mat == r.mat);
    // the original rows lie in the row space of the rref
    std::vector<std::vector<Rational>> span;
    for (std::size_t i = 0; i < r.rank; ++i) span.push_back(r.mat.row(i));
    for (std::size_t i = 0; i < m.rows(); ++i) {
      auto ext = span;
      ext.push_back(m.row(i));
      CHECK(span_dim(ext, 4) == r.rank);
    }
  }
}

TEST_CASE("kernel vectors are annihilated; rank-nullity") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    auto m = random_matrix(rng, 3, 6);
    auto ker = kernel_basis(m);
    CHECK(ker.size() + rank(m) == 6);
    for (const auto& v : ker)
      for (std::size_t i = 0; i < m.rows(); ++i) {
        Rational dot = 0;
        for (std::size_t j = 0; j < m.cols(); ++j) dot += m(i, j) * v[j];
        CHECK(dot == 0);
      }
    CHECK(span_dim(ker, 6) == ker.size());
  }
}

TEST_CASE("annihilator of the empty family is the full dual") {
  auto basis = annihilator(std::vector<std::vector<Rational>>{}, 4);
  CHECK(basis.size() == 4);
  CHECK(span_dim(basis, 4) == 4);
}

TEST_CASE("intersection dimension formula") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 15; ++trial) {
    auto mu = random_matrix(rng, 2, 5);
    auto mw = random_matrix(rng, 3, 5);
    std::vector<std::vector<Rational>> u, w, both;
    for (std::size_t i = 0; i < mu.rows(); ++i) u.push_back(mu.row(i));
    for (std::size_t i = 0; i < mw.rows(); ++i) w.push_back(mw.row(i));
    both = u;
    both.insert(both.end(), w.begin(), w.end());
    auto meet = intersect(u, w, 5);
    CHECK(span_dim(u, 5) + span_dim(w, 5) ==
          span_dim(both, 5) + meet.size());
    // every intersection vector lies in both spans
    for (const auto& v : meet) {
      auto ue = u, we = w;
      ue.push_back(v);
      we.push_back(v);
      CHECK(span_dim(ue, 5) == span_dim(u, 5));
      CHECK(span_dim(we, 5) == span_dim(w, 5));
    }
  }
}

TEST_CASE("prime field arithmetic") {
  Fp::set_modulus(32003);
  CHECK(Fp(32003).is_zero());
  CHECK(Fp(-1) == Fp(32002));
  for (long x = 1; x < 50; ++x) CHECK(Fp(x) * Fp(x).inverse() == Fp(1));
  CHECK(Fp::from_rational(make_rational(1, 2)) * Fp(2) == Fp(1));
  CHECK(Fp::from_rational(make_rational(-7, 3)) * Fp(3) == Fp(-7));
}

TEST_CASE("rational and prime-field ranks agree on integer matrices") {
  Fp::set_modulus(32003);
  std::mt19937 rng(19);
  std::uniform_int_distribution<int> val(-3, 3);
  for (int trial = 0; trial < 10; ++trial) {
    Matrix<Rational> mq(4, 4);
    Matrix<Fp> mp(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) {
        int x = val(rng);
        mq(i, j) = Rational(x);
        mp(i, j) = Fp(x);
      }
    CHECK(rank(mq) == rank(mp));
  }
}
