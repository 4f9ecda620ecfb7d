#include "envop/series.hpp"

#include <cctype>
#include <sstream>

namespace envop {

TruncatedSeries::TruncatedSeries(int order, std::vector<Rational> coeffs)
    : order_(order), c_(std::move(coeffs)) {
  if (order < 0) throw input_error("truncation order must be >= 0");
  c_.resize(static_cast<std::size_t>(order) + 1, Rational(0));
}

TruncatedSeries TruncatedSeries::t(int order) {
  TruncatedSeries s(order);
  if (order >= 1) s.set_coeff(1, Rational(1));
  return s;
}

TruncatedSeries TruncatedSeries::one(int order) {
  TruncatedSeries s(order);
  s.set_coeff(0, Rational(1));
  return s;
}

const Rational& TruncatedSeries::coeff(int k) const {
  if (k < 0 || k > order_) throw input_error("coefficient index out of range");
  return c_[static_cast<std::size_t>(k)];
}

void TruncatedSeries::set_coeff(int k, const Rational& v) {
  if (k < 0 || k > order_) throw input_error("coefficient index out of range");
  c_[static_cast<std::size_t>(k)] = v;
}

std::string TruncatedSeries::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k <= order_; ++k) {
    const Rational& c = coeff(k);
    if (c == 0) continue;
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
    if (k == 0) {
      os << a.get_str();
    } else {
      if (a != 1) os << a.get_str() << "*";
      os << "t";
      if (k > 1) os << "^" << k;
    }
  }
  if (first) os << "0";
  return os.str();
}

static void require_same_order(const TruncatedSeries& f, const TruncatedSeries& g) {
  if (f.order() != g.order())
    throw input_error("truncation order mismatch");
}

TruncatedSeries add(const TruncatedSeries& f, const TruncatedSeries& g) {
  require_same_order(f, g);
  TruncatedSeries h(f.order());
  for (int k = 0; k <= f.order(); ++k) h.set_coeff(k, f.coeff(k) + g.coeff(k));
  return h;
}

TruncatedSeries sub(const TruncatedSeries& f, const TruncatedSeries& g) {
  require_same_order(f, g);
  TruncatedSeries h(f.order());
  for (int k = 0; k <= f.order(); ++k) h.set_coeff(k, f.coeff(k) - g.coeff(k));
  return h;
}

TruncatedSeries multiply(const TruncatedSeries& f, const TruncatedSeries& g) {
  require_same_order(f, g);
  int n = f.order();
  TruncatedSeries h(n);
  for (int i = 0; i <= n; ++i) {
    if (f.coeff(i) == 0) continue;
    for (int j = 0; i + j <= n; ++j) {
      if (g.coeff(j) == 0) continue;
      h.set_coeff(i + j, h.coeff(i + j) + f.coeff(i) * g.coeff(j));
    }
  }
  return h;
}

TruncatedSeries scale(const Rational& c, const TruncatedSeries& f) {
  TruncatedSeries h(f.order());
  for (int k = 0; k <= f.order(); ++k) h.set_coeff(k, c * f.coeff(k));
  return h;
}

TruncatedSeries compose(const TruncatedSeries& f, const TruncatedSeries& g) {
  require_same_order(f, g);
  if (g.coeff(0) != 0)
    throw input_error("composition undefined: inner series has g(0) != 0");
  int n = f.order();
  // Horner evaluation in the truncated ring
  TruncatedSeries acc(n);
  for (int k = n; k >= 0; --k) {
    acc = multiply(acc, g);
    acc.set_coeff(0, acc.coeff(0) + f.coeff(k));
  }
  return acc;
}

TruncatedSeries reciprocal(const TruncatedSeries& f) {
  if (f.coeff(0) == 0) throw input_error("reciprocal of a series with zero constant term");
  int n = f.order();
  TruncatedSeries h(n);
  Rational inv0 = 1 / f.coeff(0);
  h.set_coeff(0, inv0);
  for (int k = 1; k <= n; ++k) {
    Rational s(0);
    for (int j = 1; j <= k; ++j) s += f.coeff(j) * h.coeff(k - j);
    h.set_coeff(k, -inv0 * s);
  }
  return h;
}

TruncatedSeries power(const TruncatedSeries& f, int n) {
  if (n < 0) throw input_error("power: negative exponent");
  TruncatedSeries acc = TruncatedSeries::one(f.order());
  for (int i = 0; i < n; ++i) acc = multiply(acc, f);
  return acc;
}

TruncatedSeries invert_composition(const TruncatedSeries& f) {
  int n = f.order();
  if (n < 1 || f.coeff(0) != 0 || f.coeff(1) == 0)
    throw input_error("no compositional inverse: need f(0)=0 and [t]f != 0");
  Rational lambda = f.coeff(1);
  // change of variables t -> t/lambda: fm(t) = f(t/lambda) is monic
  TruncatedSeries fm(n);
  Rational pw(1);
  for (int k = 0; k <= n; ++k) {
    fm.set_coeff(k, f.coeff(k) / pw);
    pw *= lambda;
  }
  // solve fm(h(t)) = t coefficient by coefficient; once h_1 = 1, the
  // unknown h_k enters [t^k]fm(h) linearly with coefficient 1
  TruncatedSeries h(n);
  h.set_coeff(1, Rational(1));
  for (int k = 2; k <= n; ++k) {
    TruncatedSeries trial = compose(fm, h);
    h.set_coeff(k, -trial.coeff(k));
  }
  // f(u) = fm(lambda*u), so the inverse of f is fm^{<-1>}(t) / lambda
  TruncatedSeries g(n);
  for (int k = 0; k <= n; ++k) g.set_coeff(k, h.coeff(k) / lambda);
  return g;
}

Rational lagrange_coefficient(const TruncatedSeries& f, int n) {
  if (n < 1) throw input_error("lagrange_coefficient: n must be >= 1");
  if (f.coeff(0) != 0 || f.order() < 1 || f.coeff(1) == 0)
    throw input_error("lagrange_coefficient: need f(0)=0 and [t]f != 0");
  if (f.order() < n - 1)
    throw input_error("lagrange_coefficient: truncation order too small");
  int N = f.order();
  // u/f(u) = 1 / (f(u)/u)
  TruncatedSeries fu(N);
  for (int k = 0; k < N; ++k) fu.set_coeff(k, f.coeff(k + 1));
  TruncatedSeries base = reciprocal(fu);
  TruncatedSeries pw = power(base, n);
  return pw.coeff(n - 1) / n;
}

SeriesVerdict check_gk(const TruncatedSeries& gP, const TruncatedSeries& gPdual) {
  require_same_order(gP, gPdual);
  if (gP.coeff(0) != 0 || gPdual.coeff(0) != 0)
    throw input_error("check_gk: both series must vanish at 0");
  TruncatedSeries c = compose(gP, gPdual);
  TruncatedSeries t = TruncatedSeries::t(gP.order());
  for (int k = 0; k <= c.order(); ++k)
    if (c.coeff(k) != t.coeff(k)) return {false, k};
  return {true, -1};
}

SeriesVerdict check_backelin(const TruncatedSeries& gA,
                             const TruncatedSeries& gAdual) {
  require_same_order(gA, gAdual);
  if (gA.coeff(0) != 1 || gAdual.coeff(0) != 1)
    throw input_error("check_backelin: both series must have constant term 1");
  TruncatedSeries p = multiply(gA, gAdual);
  for (int k = 0; k <= p.order(); ++k) {
    Rational want = (k == 0) ? Rational(1) : Rational(0);
    if (p.coeff(k) != want) return {false, k};
  }
  return {true, -1};
}

// --- tiny series expression parser: sums of c, c*t^k, t, t^k -------------

namespace {
struct SeriesLexer {
  const std::string& s;
  std::size_t i = 0;
  explicit SeriesLexer(const std::string& text) : s(text) {}
  void skip() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eof() {
    skip();
    return i >= s.size();
  }
  char peek() {
    skip();
    return i < s.size() ? s[i] : '\0';
  }
  char get() {
    skip();
    return s[i++];
  }
  Integer number() {
    skip();
    std::size_t j = i;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    if (j == i) throw input_error("series: expected a number at position " +
                                  std::to_string(i));
    Integer v(s.substr(i, j - i));
    i = j;
    return v;
  }
};
}  // namespace

TruncatedSeries parse_series(const std::string& text, int order) {
  TruncatedSeries out(order);
  SeriesLexer lx(text);
  bool first = true;
  while (!lx.eof()) {
    Rational sign(1);
    char c = lx.peek();
    if (c == '+' || c == '-') {
      lx.get();
      if (c == '-') sign = -1;
    } else if (!first) {
      throw input_error("series: expected '+' or '-' at position " +
                        std::to_string(lx.i));
    }
    first = false;
    Rational coef(1);
    bool have_coef = false;
    if (std::isdigit(static_cast<unsigned char>(lx.peek()))) {
      Integer num = lx.number();
      Integer den(1);
      if (lx.peek() == '/') {
        lx.get();
        den = lx.number();
        if (den == 0) throw input_error("series: zero denominator");
      }
      coef = Rational(num, den);
      coef.canonicalize();
      have_coef = true;
      if (lx.peek() == '*') lx.get();
    }
    int expo = 0;
    if (lx.peek() == 't') {
      lx.get();
      expo = 1;
      if (lx.peek() == '^') {
        lx.get();
        Integer e = lx.number();
        expo = static_cast<int>(e.get_si());
      }
    } else if (!have_coef) {
      throw input_error("series: expected a term at position " +
                        std::to_string(lx.i));
    }
    if (expo <= order)
      out.set_coeff(expo, out.coeff(expo) + sign * coef);
  }
  return out;
}

}  // namespace envop
