#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace superdeg {

/// Exponent pair (I, m): I in {0,1}^q on the odd variables and m in N^n on
/// the even ones. Sums may leave the odd cap; `valid()` tells.
struct MultiExponent {
  std::vector<std::uint8_t> odd;
  std::vector<unsigned> even;

  MultiExponent() = default;
  MultiExponent(std::size_t n, std::size_t q) : odd(q, 0), even(n, 0) {}
  MultiExponent(std::vector<std::uint8_t> i, std::vector<unsigned> m)
      : odd(std::move(i)), even(std::move(m)) {}

  std::size_t n() const { return even.size(); }
  std::size_t q() const { return odd.size(); }

  unsigned odd_degree() const;
  unsigned even_degree() const;
  unsigned degree() const { return odd_degree() + even_degree(); }
  unsigned parity() const { return odd_degree() % 2; }
  bool is_zero() const { return degree() == 0; }
  bool valid() const;

  /// Coordinates flattened as (m_1..m_n, I_1..I_q).
  std::vector<unsigned> flat() const;
  static MultiExponent from_flat(const std::vector<unsigned> &c, std::size_t n,
                                 std::size_t q);

  MultiExponent operator+(const MultiExponent &o) const;
  /// Componentwise difference; requires o <= this componentwise.
  MultiExponent operator-(const MultiExponent &o) const;
  bool divides(const MultiExponent &o) const;

  /// "I=0110 m=(2,0,1)"
  std::string to_string() const;
  static MultiExponent parse(const std::string &text);

  auto operator<=>(const MultiExponent &) const = default;
  bool operator==(const MultiExponent &) const = default;
};

inline std::ostream &operator<<(std::ostream &os, const MultiExponent &e) {
  return os << e.to_string();
}

/// Shorthand for building exponents from literal lists.
inline MultiExponent make_exponent(std::vector<std::uint8_t> odd,
                                   std::vector<unsigned> even) {
  return MultiExponent(std::move(odd), std::move(even));
}

/// K_{J1,J2} = sum over j < i of J1_j * J2_i.
unsigned koszul_count(const std::vector<std::uint8_t> &j1,
                      const std::vector<std::uint8_t> &j2);

inline int koszul_sign(const std::vector<std::uint8_t> &j1,
                       const std::vector<std::uint8_t> &j2) {
  return koszul_count(j1, j2) % 2 ? -1 : 1;
}

/// Every exponent with total degree <= bound, in no particular order.
std::vector<MultiExponent> all_exponents(std::size_t n, std::size_t q,
                                         unsigned bound);

/// Every exponent with total degree exactly `degree`.
std::vector<MultiExponent> exponents_of_degree(std::size_t n, std::size_t q,
                                               unsigned degree);

} // namespace superdeg
