#include "superdeg/error.hpp"
#include "superdeg/monomial_order.hpp"
#include "superdeg/super_poly.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

using namespace superdeg;

namespace {

std::vector<std::uint8_t> bits(unsigned mask, std::size_t q) {
  std::vector<std::uint8_t> b(q);
  for (std::size_t i = 0; i < q; ++i)
    b[i] = (mask >> i) & 1u;
  return b;
}

// Double sum as written, without the running-count shortcut.
unsigned koszul_oracle(const std::vector<std::uint8_t> &a,
                       const std::vector<std::uint8_t> &b) {
  unsigned k = 0;
  for (std::size_t j = 0; j < a.size(); ++j)
    for (std::size_t i = j + 1; i < a.size(); ++i)
      k += a[j] * b[i];
  return k;
}

SuperPolynomial random_poly(std::mt19937 &rng, std::size_t n, std::size_t q) {
  SuperPolynomial p(n, q);
  std::uniform_int_distribution<int> coeff(-3, 3);
  auto exps = all_exponents(n, q, 3);
  int terms = 1 + static_cast<int>(rng() % 4);
  for (int t = 0; t < terms; ++t)
    p.add_term(exps[rng() % exps.size()], coeff(rng));
  return p;
}

} // namespace

TEST(Koszul, Examples) {
  EXPECT_EQ(koszul_count({1, 0}, {0, 1}), 1u);
  EXPECT_EQ(koszul_sign({1, 0}, {0, 1}), -1);
  EXPECT_EQ(koszul_count({0, 0, 0}, {1, 1, 1}), 0u);
  EXPECT_EQ(koszul_count({1, 1, 0}, {0, 1, 1}), koszul_oracle({1, 1, 0}, {0, 1, 1}));
  EXPECT_EQ(koszul_count({1, 1, 0}, {0, 1, 1}), 3u);
}

TEST(Koszul, SymmetricSumIdentity) {
  for (std::size_t q = 0; q <= 5; ++q)
    for (unsigned a = 0; a < (1u << q); ++a)
      for (unsigned b = 0; b < (1u << q); ++b) {
        auto I = bits(a, q), J = bits(b, q);
        EXPECT_EQ(koszul_count(I, J), koszul_oracle(I, J));
        unsigned size_i = __builtin_popcount(a), size_j = __builtin_popcount(b);
        unsigned overlap = __builtin_popcount(a & b);
        EXPECT_EQ(koszul_count(I, J) + koszul_count(J, I), size_i * size_j - overlap);
        if (overlap == 0)
          EXPECT_EQ(koszul_count(I, J) + koszul_count(J, I), size_i * size_j);
      }
}

TEST(SuperPolynomial, OddSquareAndAnticommutation) {
  auto x1 = SuperPolynomial::odd_var(0, 2, 0);
  auto x2 = SuperPolynomial::odd_var(0, 2, 1);
  EXPECT_TRUE((x1 * x1).is_zero());
  EXPECT_EQ(x1 * x2, -(x2 * x1));
  EXPECT_EQ((x2 * x1).to_string(), "xi2*xi1");
  EXPECT_EQ((x1 * x2).to_string(), "-xi2*xi1");
}

TEST(SuperPolynomial, CrossTermsCancel) {
  auto x = SuperPolynomial::even_var(1, 1, 0);
  auto xi = SuperPolynomial::odd_var(1, 1, 0);
  EXPECT_EQ((x + xi) * (x - xi), x * x);
}

TEST(SuperPolynomial, AssociativeAndSupercommutative) {
  std::mt19937 rng(17);
  int checked = 0;
  while (checked < 1000) {
    std::size_t n = rng() % 5, q = rng() % 5;
    if (n + q == 0)
      continue;
    auto a = random_poly(rng, n, q), b = random_poly(rng, n, q), c = random_poly(rng, n, q);
    EXPECT_EQ((a * b) * c, a * (b * c));
    // Supercommutativity on homogeneous pieces.
    for (const auto &[ea, ca] : a.terms())
      for (const auto &[eb, cb] : b.terms()) {
        auto ma = SuperPolynomial::monomial(ea, ca), mb = SuperPolynomial::monomial(eb, cb);
        Rational s = (ea.parity() & eb.parity()) ? -1 : 1;
        EXPECT_EQ(ma * mb, (mb * ma) * s);
      }
    ++checked;
  }
}

TEST(SuperPolynomial, MonomialProductExponent) {
  auto exps = all_exponents(2, 3, 2);
  for (const auto &a : exps)
    for (const auto &b : exps) {
      auto p = SuperPolynomial::monomial(a, 2) * SuperPolynomial::monomial(b, 3);
      if (!(a + b).valid()) {
        EXPECT_TRUE(p.is_zero());
        continue;
      }
      ASSERT_EQ(p.terms().size(), 1u);
      EXPECT_EQ(p.terms().begin()->first, a + b);
      EXPECT_EQ(abs(p.terms().begin()->second), 6);
    }
}

TEST(SuperPolynomial, ParseNormalizesSign) {
  auto p = SuperPolynomial::parse("xi1*xi2 + 2*x1^2*xi2*xi1 - 3/2", 1, 2);
  EXPECT_EQ(p.to_string(), "2*x1^2*xi2*xi1 - xi2*xi1 - 3/2");
  EXPECT_EQ(SuperPolynomial::parse(p.to_string(), 1, 2), p);
  EXPECT_EQ(SuperPolynomial::parse("x1 \xE2\x88\x92 x1", 1, 0).to_string(), "0");
  EXPECT_THROW(SuperPolynomial::parse("x3", 2, 0), ParseError);
}

TEST(SuperPolynomial, Substitute) {
  // x1 -> 2*x1, xi1 -> xi1 : x1^2*xi1 -> 4*x1^2*xi1
  auto p = SuperPolynomial::parse("x1^2*xi1 + x1", 1, 1);
  auto r = p.substitute({SuperPolynomial::even_var(1, 1, 0) * Rational(2)},
                        {SuperPolynomial::odd_var(1, 1, 0)});
  EXPECT_EQ(r.to_string(), "4*x1^2*xi1 + 2*x1");
}

TEST(MonomialOrder, Basics) {
  auto ord = MonomialOrder::graded_lex(2);
  MultiExponent a({}, {1, 0}), b({}, {0, 1});
  EXPECT_EQ(ord.compare(a, a), 0);
  EXPECT_GT(ord.compare(a, b), 0);
  auto rev = MonomialOrder::graded_revlex(3);
  // x1*x3 vs x2^2: revlex looks at the last variable, smaller exponent wins.
  MultiExponent c({}, {1, 0, 1}), d({}, {0, 2, 0});
  EXPECT_LT(rev.compare(c, d), 0);
  EXPECT_GT(MonomialOrder::graded_lex(3).compare(c, d), 0);
}

TEST(MonomialOrder, TotalAndTranslationInvariant) {
  for (std::size_t n = 0; n <= 3; ++n)
    for (std::size_t q = 0; q <= 3; ++q) {
      if (n + q == 0)
        continue;
      std::vector<std::size_t> perm(n + q);
      for (std::size_t i = 0; i < perm.size(); ++i)
        perm[i] = perm.size() - 1 - i;
      std::vector<long> w(n + q);
      for (std::size_t i = 0; i < w.size(); ++i)
        w[i] = static_cast<long>(i % 3);
      std::vector<MonomialOrder> orders = {
          MonomialOrder::graded_lex(n + q), MonomialOrder::graded_revlex(n + q),
          MonomialOrder(OrderKind::GradedLex, perm), MonomialOrder(OrderKind::Weighted, perm, w)};
      auto exps = all_exponents(n, q, 3);
      auto small = all_exponents(n, q, 1);
      for (const auto &ord : orders)
        for (const auto &a : exps)
          for (const auto &b : exps) {
            int c = ord.compare(a, b);
            EXPECT_EQ(c, -ord.compare(b, a));
            EXPECT_EQ(c == 0, a == b);
            if (c >= 0)
              continue;
            for (const auto &t : small) {
              auto at = a + t, bt = b + t;
              if (at.valid() && bt.valid())
                EXPECT_LT(ord.compare(at, bt), 0);
            }
          }
    }
}

TEST(MonomialOrder, EnumerateCounts) {
  auto ord = MonomialOrder::graded_lex(2);
  auto zero = enumerate_monomials(MonomialOrder::graded_lex(1), 0, 1, 0);
  ASSERT_EQ(zero.size(), 1u);
  EXPECT_TRUE(zero[0].is_zero());
  auto small = enumerate_monomials(ord, 1, 1, 1);
  ASSERT_EQ(small.size(), 3u);
  EXPECT_TRUE(small[0].is_zero());

  auto list = enumerate_monomials(MonomialOrder::graded_revlex(4), 2, 2, 2);
  std::set<MultiExponent> brute;
  for (unsigned m1 = 0; m1 <= 2; ++m1)
    for (unsigned m2 = 0; m2 <= 2; ++m2)
      for (unsigned i1 = 0; i1 <= 1; ++i1)
        for (unsigned i2 = 0; i2 <= 1; ++i2)
          if (m1 + m2 + i1 + i2 <= 2)
            brute.insert(MultiExponent({static_cast<std::uint8_t>(i1), static_cast<std::uint8_t>(i2)},
                                       {m1, m2}));
  EXPECT_EQ(list.size(), 13u);
  EXPECT_EQ(std::set<MultiExponent>(list.begin(), list.end()), brute);
  for (std::size_t i = 1; i < list.size(); ++i)
    EXPECT_LT(MonomialOrder::graded_revlex(4).compare(list[i - 1], list[i]), 0);
}

TEST(MultiExponent, TextRoundTrip) {
  MultiExponent e({0, 1, 1, 0}, {2, 0, 1});
  EXPECT_EQ(e.to_string(), "I=0110 m=(2,0,1)");
  EXPECT_EQ(MultiExponent::parse(e.to_string()), e);
}
