#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace envop {

/// Exact arbitrary-precision integer and rational scalars.
using Integer = mpz_class;
using Rational = mpq_class;

/// Error in user-supplied input (bad document, bad flag, precondition
/// violation on a public operation). Maps to exit code 1 in the CLI.
class input_error : public std::runtime_error {
public:
  explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

/// Internal consistency failure (e.g. a differential that does not square
/// to zero). Maps to exit code 2 in the CLI.
class internal_error : public std::logic_error {
public:
  explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

inline Rational make_rational(long num, long den = 1) {
  if (den == 0) throw input_error("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

/// Element of the prime field F_p. The modulus is a process-wide setting
/// (configured once from the CLI, default 32003); elements store only
/// their residue.
class Fp {
public:
  Fp() : v_(0) {}
  explicit Fp(long x) {
    long p = static_cast<long>(modulus());
    long r = x % p;
    if (r < 0) r += p;
    v_ = static_cast<std::uint64_t>(r);
  }
  static Fp from_rational(const Rational& q);

  static void set_modulus(std::uint64_t p);
  static std::uint64_t modulus();

  std::uint64_t value() const { return v_; }
  bool is_zero() const { return v_ == 0; }

  Fp operator+(const Fp& o) const { return raw((v_ + o.v_) % modulus()); }
  Fp operator-(const Fp& o) const {
    return raw((v_ + modulus() - o.v_) % modulus());
  }
  Fp operator-() const { return raw(v_ == 0 ? 0 : modulus() - v_); }
  Fp operator*(const Fp& o) const { return raw((v_ * o.v_) % modulus()); }
  Fp operator/(const Fp& o) const { return *this * o.inverse(); }
  Fp& operator+=(const Fp& o) { return *this = *this + o; }
  Fp& operator-=(const Fp& o) { return *this = *this - o; }
  Fp& operator*=(const Fp& o) { return *this = *this * o; }
  Fp& operator/=(const Fp& o) { return *this = *this / o; }
  bool operator==(const Fp& o) const { return v_ == o.v_; }
  bool operator!=(const Fp& o) const { return v_ != o.v_; }

  Fp inverse() const;

private:
  static Fp raw(std::uint64_t v) {
    Fp f;
    f.v_ = v;
    return f;
  }
  std::uint64_t v_;
};

inline bool is_zero(const Rational& q) { return q == 0; }
inline bool is_zero(const Fp& x) { return x.is_zero(); }

}  // namespace envop
