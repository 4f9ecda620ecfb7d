#include "envop/scalar.hpp"

namespace envop {

namespace {
std::uint64_t g_modulus = 32003;
}

void Fp::set_modulus(std::uint64_t p) {
  if (p < 2) throw input_error("field modulus must be a prime >= 2");
  g_modulus = p;
}

std::uint64_t Fp::modulus() { return g_modulus; }

Fp Fp::inverse() const {
  if (v_ == 0) throw internal_error("division by zero in F_p");
  // extended Euclid
  std::int64_t t = 0, newt = 1;
  std::int64_t r = static_cast<std::int64_t>(modulus());
  std::int64_t newr = static_cast<std::int64_t>(v_);
  while (newr != 0) {
    std::int64_t q = r / newr;
    std::int64_t tmp = t - q * newt;
    t = newt;
    newt = tmp;
    tmp = r - q * newr;
    r = newr;
    newr = tmp;
  }
  if (r != 1) throw internal_error("modulus is not prime");
  if (t < 0) t += static_cast<std::int64_t>(modulus());
  Fp f;
  f = Fp(static_cast<long>(t));
  return f;
}

Fp Fp::from_rational(const Rational& q) {
  Integer num = q.get_num();
  Integer den = q.get_den();
  Integer p(static_cast<unsigned long>(modulus()));
  Integer n = num % p;
  if (n < 0) n += p;
  Integer d = den % p;
  if (d == 0)
    throw internal_error("denominator divisible by the field modulus");
  Fp fn(static_cast<long>(n.get_ui()));
  Fp fd(static_cast<long>(d.get_ui()));
  return fn / fd;
}

}  // namespace envop
