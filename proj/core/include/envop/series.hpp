#pragma once

#include <optional>
#include <string>
#include <vector>

#include "envop/scalar.hpp"

namespace envop {

/// Formal power series with exact rational coefficients, truncated at
/// t^order. Stores exactly order+1 coefficients; all arithmetic is
/// performed modulo t^(order+1).
class TruncatedSeries {
public:
  explicit TruncatedSeries(int order)
      : order_(order), c_(static_cast<std::size_t>(order) + 1, Rational(0)) {
    if (order < 0) throw input_error("truncation order must be >= 0");
  }
  TruncatedSeries(int order, std::vector<Rational> coeffs);

  static TruncatedSeries t(int order);    // the series t
  static TruncatedSeries one(int order);  // the series 1

  int order() const { return order_; }
  const Rational& coeff(int k) const;
  void set_coeff(int k, const Rational& v);

  bool operator==(const TruncatedSeries& o) const {
    return order_ == o.order_ && c_ == o.c_;
  }

  std::string to_string() const;

private:
  int order_;
  std::vector<Rational> c_;
};

TruncatedSeries add(const TruncatedSeries& f, const TruncatedSeries& g);
TruncatedSeries sub(const TruncatedSeries& f, const TruncatedSeries& g);
TruncatedSeries multiply(const TruncatedSeries& f, const TruncatedSeries& g);
TruncatedSeries scale(const Rational& c, const TruncatedSeries& f);

/// f(g(t)) mod t^(N+1); requires g(0) = 0.
TruncatedSeries compose(const TruncatedSeries& f, const TruncatedSeries& g);

/// Multiplicative inverse; requires f(0) invertible (nonzero).
TruncatedSeries reciprocal(const TruncatedSeries& f);

/// f^n in the truncated ring, n >= 0.
TruncatedSeries power(const TruncatedSeries& f, int n);

/// Compositional inverse of f; requires f(0) = 0 and [t]f nonzero.
/// Normalizes by the linear coefficient first, inverts the monic series
/// coefficient by coefficient, and undoes the rescaling.
TruncatedSeries invert_composition(const TruncatedSeries& f);

/// (1/n) [u^(n-1)] (u/f(u))^n; requires f(0) = 0, [t]f nonzero, n >= 1.
Rational lagrange_coefficient(const TruncatedSeries& f, int n);

struct SeriesVerdict {
  bool ok = true;
  int first_failure = -1;  // order of the first failing coefficient
};

/// Ginzburg--Kapranov check: compose(gP, gPdual) = t mod t^(N+1).
SeriesVerdict check_gk(const TruncatedSeries& gP, const TruncatedSeries& gPdual);

/// Backelin check: gA * gAdual = 1 mod t^(N+1).
SeriesVerdict check_backelin(const TruncatedSeries& gA,
                             const TruncatedSeries& gAdual);

/// Parses expressions like "t - t^2", "1 + 2/3*t + t^3".
TruncatedSeries parse_series(const std::string& text, int order);

}  // namespace envop
