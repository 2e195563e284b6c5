#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace superdeg {

/// Exact rational scalar. GMP keeps every result of arithmetic in lowest
/// terms with a positive denominator.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rational &r) { return r.get_str(); }
inline std::string to_string(const Integer &z) { return z.get_str(); }

inline bool is_zero(const Rational &r) { return sgn(r) == 0; }

inline Rational factorial(unsigned k) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), k);
  return Rational(f);
}

inline Rational binomial(unsigned n, unsigned k) {
  Integer b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return Rational(b);
}

/// a^e for a rational base and a (possibly negative) integer exponent.
Rational pow(const Rational &a, long e);

/// Parse "p", "-p" or "p/q".
Rational parse_rational(const std::string &text);

} // namespace superdeg
