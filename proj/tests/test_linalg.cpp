#include "superdeg/linalg.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace superdeg;

namespace {

// Fraction-free elimination on a dense copy; independent of SpanAccumulator.
std::size_t bareiss_rank(std::vector<std::vector<Integer>> a) {
  std::size_t rows = a.size(), cols = rows ? a[0].size() : 0, rank = 0;
  Integer prev = 1;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && a[p][c] == 0)
      ++p;
    if (p == rows)
      continue;
    std::swap(a[p], a[rank]);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j)
        a[i][j] = (a[i][j] * a[rank][c] - a[i][c] * a[rank][j]) / prev;
      a[i][c] = 0;
    }
    prev = a[rank][c];
    ++rank;
  }
  return rank;
}

} // namespace

TEST(SpanAccumulator, StandardBasis) {
  SpanAccumulator acc;
  EXPECT_TRUE(std::holds_alternative<Independent>(acc.insert(SparseVector::from_dense({1, 0}))));
  EXPECT_TRUE(std::holds_alternative<Independent>(acc.insert(SparseVector::from_dense({0, 1}))));
  EXPECT_EQ(acc.rank(), 2u);
  auto r = acc.insert(SparseVector::from_dense({1, 1}));
  ASSERT_TRUE(std::holds_alternative<Dependent>(r));
  EXPECT_EQ(std::get<Dependent>(r).coefficients, (std::vector<Rational>{1, 1}));
}

TEST(SpanAccumulator, ZeroVectorIsDependent) {
  SpanAccumulator acc;
  acc.insert(SparseVector::from_dense({1, 2, 3}));
  auto r = acc.insert(SparseVector());
  ASSERT_TRUE(std::holds_alternative<Dependent>(r));
  EXPECT_EQ(std::get<Dependent>(r).coefficients, (std::vector<Rational>{0}));
}

TEST(SpanAccumulator, ReinsertGivesUnitPattern) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> dist(-3, 3);
  SpanAccumulator acc;
  std::vector<SparseVector> accepted;
  for (int t = 0; t < 12; ++t) {
    std::vector<Rational> dense(6);
    for (auto &x : dense)
      x = dist(rng);
    auto v = SparseVector::from_dense(dense);
    if (std::holds_alternative<Independent>(acc.insert(v)))
      accepted.push_back(v);
  }
  for (std::size_t i = 0; i < accepted.size(); ++i) {
    auto r = acc.insert(accepted[i]);
    ASSERT_TRUE(std::holds_alternative<Dependent>(r));
    const auto &c = std::get<Dependent>(r).coefficients;
    for (std::size_t j = 0; j < c.size(); ++j)
      EXPECT_EQ(c[j], Rational(i == j ? 1 : 0));
  }
}

TEST(SpanAccumulator, ExpansionReconstructsVector) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> dist(-4, 4);
  SpanAccumulator acc;
  for (int t = 0; t < 40; ++t) {
    std::vector<Rational> dense(5);
    for (auto &x : dense)
      x = make_rational(dist(rng), 1 + (t % 3));
    auto v = SparseVector::from_dense(dense);
    auto r = acc.insert(v);
    if (auto *dep = std::get_if<Dependent>(&r)) {
      SparseVector sum;
      for (std::size_t j = 0; j < dep->coefficients.size(); ++j)
        sum.axpy(dep->coefficients[j], acc.originals()[j]);
      EXPECT_EQ(sum, v);
    }
  }
}

TEST(SpanAccumulator, RankMatchesBareissOracle) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t rows = 1 + rng() % 8, cols = 1 + rng() % 8;
    std::uniform_int_distribution<int> dist(-2, 2);
    std::vector<std::vector<Integer>> dense(rows, std::vector<Integer>(cols));
    std::vector<SparseVector> vecs;
    for (auto &row : dense) {
      std::vector<Rational> r(cols);
      for (std::size_t j = 0; j < cols; ++j) {
        // Sparse-ish entries keep low ranks common.
        int x = (rng() % 3 == 0) ? 0 : dist(rng);
        row[j] = x;
        r[j] = x;
      }
      vecs.push_back(SparseVector::from_dense(r));
    }
    EXPECT_EQ(rank_of(vecs), bareiss_rank(dense));
  }
}

TEST(Nullspace, SingleEquation) {
  auto ns = nullspace({SparseVector::from_dense({1, -1})}, 2);
  ASSERT_EQ(ns.size(), 1u);
  EXPECT_EQ(ns[0], SparseVector::from_dense({1, 1}));
}

TEST(Nullspace, NoConstraints) {
  auto ns = nullspace({}, 3);
  ASSERT_EQ(ns.size(), 3u);
  for (std::size_t i = 0; i < 3; ++i)
    EXPECT_EQ(ns[i], SparseVector::unit(i));
}

TEST(Nullspace, InjectiveMap) {
  EXPECT_TRUE(nullspace({SparseVector::from_dense({1, 0}), SparseVector::from_dense({0, 1})}, 2)
                  .empty());
}

TEST(Nullspace, AnnihilatesRandomRows) {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> dist(-3, 3);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t dim = 2 + rng() % 7;
    std::vector<SparseVector> rows;
    for (std::size_t r = 0; r < 1 + rng() % 5; ++r) {
      std::vector<Rational> d(dim);
      for (auto &x : d)
        x = dist(rng);
      rows.push_back(SparseVector::from_dense(d));
    }
    auto ns = nullspace(rows, dim);
    EXPECT_EQ(ns.size() + rank_of(rows), dim);
    for (const auto &x : ns)
      for (const auto &r : rows)
        EXPECT_EQ(r.dot(x), 0);
  }
}

TEST(SmithNormalForm, DiagonalExample) {
  auto s = smith_normal_form(IntegerMatrix::from_rows({{2, 0}, {0, 3}}));
  EXPECT_EQ(s.invariant_factors, (std::vector<Integer>{1, 6}));
}

TEST(SmithNormalForm, IdentityAndScalar) {
  auto s = smith_normal_form(IntegerMatrix::from_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
  EXPECT_EQ(s.invariant_factors, (std::vector<Integer>{1, 1, 1}));
  EXPECT_EQ(smith_normal_form(IntegerMatrix::from_rows({{2}})).invariant_factors,
            (std::vector<Integer>{2}));
}

TEST(SmithNormalForm, ChainAndDeterminant) {
  std::mt19937 rng(13);
  std::uniform_int_distribution<int> dist(-6, 6);
  for (int trial = 0; trial < 50; ++trial) {
    std::size_t n = 1 + rng() % 5;
    std::vector<std::vector<long>> rows(n, std::vector<long>(n));
    for (auto &r : rows)
      for (auto &x : r)
        x = dist(rng);
    auto m = IntegerMatrix::from_rows(rows);
    auto s = smith_normal_form(m);
    for (std::size_t i = 1; i < s.invariant_factors.size(); ++i)
      EXPECT_TRUE(mpz_divisible_p(s.invariant_factors[i].get_mpz_t(),
                                  s.invariant_factors[i - 1].get_mpz_t()));
    Integer det = determinant(m);
    if (det != 0) {
      ASSERT_EQ(s.invariant_factors.size(), n);
      Integer prod = 1;
      for (const auto &d : s.invariant_factors)
        prod *= d;
      EXPECT_EQ(prod, abs(det));
    } else {
      EXPECT_LT(s.invariant_factors.size(), n);
    }
  }
}

TEST(SmithNormalForm, FullLattice) {
  EXPECT_TRUE(generates_full_lattice(IntegerMatrix::from_rows({{1, 1}, {1, 2}, {4, 4}})));
  EXPECT_FALSE(generates_full_lattice(IntegerMatrix::from_rows({{2, 0}, {0, 2}, {2, 2}})));
  EXPECT_FALSE(generates_full_lattice(IntegerMatrix::from_rows({{1, 0, 0}, {0, 1, 0}})));
}

TEST(FourierMotzkin, FeasiblePoint) {
  // x >= 1, y >= x + 1, x + y <= 10
  std::vector<LinearInequality> sys = {
      {{1, 0}, 1}, {{-1, 1}, 1}, {{-1, -1}, -10}};
  auto x = fourier_motzkin_solve(sys, 2);
  ASSERT_TRUE(x);
  for (const auto &ineq : sys)
    EXPECT_GE(ineq.coeffs[0] * (*x)[0] + ineq.coeffs[1] * (*x)[1], ineq.rhs);
  EXPECT_EQ((*x)[0].get_den(), 1);
}

TEST(FourierMotzkin, Infeasible) {
  std::vector<LinearInequality> sys = {{{1, 1}, 3}, {{-1, 0}, -1}, {{0, -1}, -1}};
  EXPECT_FALSE(fourier_motzkin_solve(sys, 2));
}

TEST(FourierMotzkin, Bounds) {
  std::vector<LinearInequality> sys = {
      {{1, 0}, 0}, {{0, 1}, 0}, {{-1, -2}, -6}};
  auto b = fourier_motzkin_bounds(sys, 2, 1);
  ASSERT_TRUE(b.lower && b.upper);
  EXPECT_EQ(*b.lower, 0);
  EXPECT_EQ(*b.upper, 3);
  auto open = fourier_motzkin_bounds({{{1, 0}, 0}}, 2, 1);
  EXPECT_FALSE(open.lower);
  EXPECT_FALSE(open.upper);
}
