#pragma once

#include <cstddef>
#include <vector>

#include "envop/scalar.hpp"

namespace envop {

/// Dense matrix over an exact field (Rational or Fp). All operations are
/// pure; elimination is fraction-free (rows are rescaled to primitive
/// integer form over the rationals) with a final normalization pass.
template <class F>
class Matrix {
public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols, F()) {}

  static Matrix from_rows(const std::vector<std::vector<F>>& rows) {
    std::size_t r = rows.size();
    std::size_t c = r == 0 ? 0 : rows[0].size();
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
      if (rows[i].size() != c) throw input_error("ragged row list");
      for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  F& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const F& operator()(std::size_t i, std::size_t j) const {
    return a_[i * cols_ + j];
  }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

  Matrix transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  std::vector<F> row(std::size_t i) const {
    return std::vector<F>(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
  }

private:
  std::size_t rows_, cols_;
  std::vector<F> a_;
};

template <class F>
F unit_scalar();

template <>
inline Rational unit_scalar<Rational>() {
  return Rational(1);
}
template <>
inline Fp unit_scalar<Fp>() {
  return Fp(1);
}

namespace detail {

inline void primitivize_row(std::vector<Rational>& row) {
  Integer lcm = 1;
  for (const auto& x : row)
    if (x != 0) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den().get_mpz_t());
  Integer gcd = 0;
  for (auto& x : row) {
    if (x == 0) continue;
    Integer n = x.get_num() * (lcm / x.get_den());
    mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), n.get_mpz_t());
  }
  if (gcd == 0) return;
  Rational scale(lcm, gcd);
  scale.canonicalize();
  for (auto& x : row) x *= scale;
}

inline void primitivize_row(std::vector<Fp>&) {}

}  // namespace detail

template <class F>
struct RrefResult {
  Matrix<F> mat;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

/// Reduced row echelon form. Pivot columns are strictly increasing, pivot
/// entries are 1, and pivot columns are cleared above and below.
template <class F>
RrefResult<F> rref(const Matrix<F>& m) {
  std::size_t nr = m.rows(), nc = m.cols();
  std::vector<std::vector<F>> rows(nr);
  for (std::size_t i = 0; i < nr; ++i) rows[i] = m.row(i);
  for (auto& r : rows) detail::primitivize_row(r);

  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < nc && lead < nr; ++col) {
    std::size_t sel = nr;
    for (std::size_t i = lead; i < nr; ++i)
      if (!is_zero(rows[i][col])) {
        sel = i;
        break;
      }
    if (sel == nr) continue;
    std::swap(rows[lead], rows[sel]);
    // fraction-free elimination below the pivot
    for (std::size_t i = lead + 1; i < nr; ++i) {
      if (is_zero(rows[i][col])) continue;
      F p = rows[lead][col], q = rows[i][col];
      for (std::size_t j = 0; j < nc; ++j)
        rows[i][j] = rows[i][j] * p - rows[lead][j] * q;
      detail::primitivize_row(rows[i]);
    }
    pivots.push_back(col);
    ++lead;
  }
  std::size_t rank = pivots.size();
  // normalize pivots to 1 and clear above
  for (std::size_t k = rank; k-- > 0;) {
    std::size_t col = pivots[k];
    F p = rows[k][col];
    for (std::size_t j = col; j < nc; ++j) rows[k][j] = rows[k][j] / p;
    for (std::size_t i = 0; i < k; ++i) {
      if (is_zero(rows[i][col])) continue;
      F q = rows[i][col];
      for (std::size_t j = col; j < nc; ++j)
        rows[i][j] = rows[i][j] - rows[k][j] * q;
    }
  }
  RrefResult<F> out;
  out.mat = Matrix<F>::from_rows(rows.empty()
                                     ? std::vector<std::vector<F>>{}
                                     : rows);
  if (nr == 0) out.mat = Matrix<F>(0, nc);
  out.rank = rank;
  out.pivots = std::move(pivots);
  return out;
}

template <class F>
std::size_t rank(const Matrix<F>& m) {
  return rref(m).rank;
}

/// Basis of { x : m x = 0 }, one vector per free column of rref(m).
template <class F>
std::vector<std::vector<F>> kernel_basis(const Matrix<F>& m) {
  auto r = rref(m);
  std::size_t nc = m.cols();
  std::vector<bool> is_pivot(nc, false);
  for (auto p : r.pivots) is_pivot[p] = true;
  std::vector<std::vector<F>> basis;
  for (std::size_t free = 0; free < nc; ++free) {
    if (is_pivot[free]) continue;
    std::vector<F> v(nc, F());
    v[free] = unit_scalar<F>();
    for (std::size_t k = 0; k < r.rank; ++k)
      v[r.pivots[k]] = -r.mat(k, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Basis of the annihilator of the row space of u inside the dual of
/// k^ambient: covectors vanishing on every row.
template <class F>
std::vector<std::vector<F>> annihilator(const std::vector<std::vector<F>>& u,
                                        std::size_t ambient) {
  for (const auto& v : u)
    if (v.size() != ambient) throw input_error("annihilator: vector length != ambient");
  if (u.empty()) {
    std::vector<std::vector<F>> basis;
    for (std::size_t i = 0; i < ambient; ++i) {
      std::vector<F> e(ambient, F());
      e[i] = unit_scalar<F>();
      basis.push_back(std::move(e));
    }
    return basis;
  }
  return kernel_basis(Matrix<F>::from_rows(u));
}

/// Basis of the intersection of two row spaces in k^ambient.
template <class F>
std::vector<std::vector<F>> intersect(const std::vector<std::vector<F>>& u,
                                      const std::vector<std::vector<F>>& w,
                                      std::size_t ambient) {
  for (const auto& v : u)
    if (v.size() != ambient) throw input_error("intersect: vector length != ambient");
  for (const auto& v : w)
    if (v.size() != ambient) throw input_error("intersect: vector length != ambient");
  auto au = annihilator(u, ambient);
  auto aw = annihilator(w, ambient);
  au.insert(au.end(), aw.begin(), aw.end());
  return annihilator(au, ambient);
}

/// Dimension of the span of a list of vectors.
template <class F>
std::size_t span_dim(const std::vector<std::vector<F>>& vs, std::size_t ambient) {
  if (vs.empty()) return 0;
  for (const auto& v : vs)
    if (v.size() != ambient) throw input_error("span_dim: vector length != ambient");
  return rank(Matrix<F>::from_rows(vs));
}

/// Row space of the rref, used as a canonical form of a subspace.
template <class F>
std::vector<std::vector<F>> canonical_span(const std::vector<std::vector<F>>& vs,
                                           std::size_t ambient) {
  if (vs.empty()) return {};
  auto r = rref(Matrix<F>::from_rows(vs));
  std::vector<std::vector<F>> out;
  for (std::size_t i = 0; i < r.rank; ++i) out.push_back(r.mat.row(i));
  (void)ambient;
  return out;
}

}  // namespace envop
