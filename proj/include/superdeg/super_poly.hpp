#pragma once

#include "superdeg/multi_exponent.hpp"
#include "superdeg/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace superdeg {

/// Variable names used for printing and parsing. Defaults are x1..xn and
/// xi1..xiq.
struct VariableNames {
  std::vector<std::string> even;
  std::vector<std::string> odd;
  static VariableNames standard(std::size_t n, std::size_t q);
};

/// Product of two monomials in canonical form xi_q..xi_1 x^m: the exponent
/// and the sign, or nullopt when the odd supports overlap.
std::optional<std::pair<MultiExponent, int>>
multiply_monomials(const MultiExponent &a, const MultiExponent &b);

/// Element of Q[x_1..x_n, xi_1..xi_q] with anticommuting xi. Monomials are
/// stored in the canonical descending form xi_q^{i_q} ... xi_1^{i_1} x^m.
class SuperPolynomial {
public:
  using Terms = std::map<MultiExponent, Rational>;

  SuperPolynomial() = default;
  SuperPolynomial(std::size_t n, std::size_t q) : n_(n), q_(q) {}

  static SuperPolynomial constant(std::size_t n, std::size_t q, const Rational &c);
  static SuperPolynomial monomial(const MultiExponent &e, const Rational &c = 1);
  static SuperPolynomial even_var(std::size_t n, std::size_t q, std::size_t i);
  static SuperPolynomial odd_var(std::size_t n, std::size_t q, std::size_t j);

  std::size_t n() const { return n_; }
  std::size_t q() const { return q_; }
  const Terms &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const MultiExponent &e) const;
  void add_term(const MultiExponent &e, const Rational &c);

  SuperPolynomial operator+(const SuperPolynomial &o) const;
  SuperPolynomial operator-(const SuperPolynomial &o) const;
  SuperPolynomial operator-() const;
  SuperPolynomial operator*(const SuperPolynomial &o) const;
  SuperPolynomial operator*(const Rational &c) const;
  bool operator==(const SuperPolynomial &o) const = default;

  /// Maximal total degree of a term; 0 for the zero polynomial.
  unsigned degree() const;
  bool is_homogeneous() const;

  /// Ring homomorphism sending x_i to even_images[i] and xi_j to
  /// odd_images[j]; images must be of matching parity.
  SuperPolynomial substitute(const std::vector<SuperPolynomial> &even_images,
                             const std::vector<SuperPolynomial> &odd_images) const;

  std::string to_string(const VariableNames &names) const;
  std::string to_string() const;
  static SuperPolynomial parse(const std::string &text, std::size_t n,
                               std::size_t q, const VariableNames &names);
  static SuperPolynomial parse(const std::string &text, std::size_t n,
                               std::size_t q);

private:
  void check_ambient(const SuperPolynomial &o) const;

  std::size_t n_ = 0;
  std::size_t q_ = 0;
  Terms terms_;
};

SuperPolynomial power(const SuperPolynomial &p, unsigned k);

std::string monomial_to_string(const MultiExponent &e, const VariableNames &names);

} // namespace superdeg
