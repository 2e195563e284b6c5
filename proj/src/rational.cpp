#include "superdeg/rational.hpp"

#include "superdeg/error.hpp"

namespace superdeg {

Rational pow(const Rational &a, long e) {
  if (e < 0) {
    if (sgn(a) == 0)
      throw Error("zero raised to a negative power");
    return pow(Rational(1) / a, -e);
  }
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), a.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(den.get_mpz_t(), a.get_den_mpz_t(), static_cast<unsigned long>(e));
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational parse_rational(const std::string &text) {
  Rational r;
  if (text.empty() || r.set_str(text, 10) != 0)
    throw ParseError("not a rational number: '" + text + "'", 0);
  if (sgn(r.get_den()) == 0)
    throw ParseError("zero denominator: '" + text + "'", 0);
  r.canonicalize();
  return r;
}

} // namespace superdeg
