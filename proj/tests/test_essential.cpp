#include "superdeg/essential.hpp"
#include "superdeg/error.hpp"
#include "superdeg/linalg.hpp"
#include "superdeg/pipeline.hpp"

#include <gtest/gtest.h>

#include <filesystem>

using namespace superdeg;

namespace {

JobConfig fixture(const std::string &name) {
  return JobConfig::load(std::filesystem::path(SUPERDEG_FIXTURES) / name);
}

} // namespace

TEST(Essential, TrivialModuleHasOnlyTheEmptyMonomial) {
  Pipeline p(fixture("osp14_trivial.conf"));
  for (unsigned k = 1; k <= 2; ++k) {
    const auto &es = p.essential(k);
    ASSERT_EQ(es.size(), 1u);
    EXPECT_TRUE(es.monomials[0].is_zero());
  }
}

TEST(Essential, Gl11Natural) {
  Pipeline p(fixture("gl11_natural.conf"));
  const auto &es = p.essential(1);
  ASSERT_EQ(es.size(), 2u);
  EXPECT_EQ(es.monomials[0], make_exponent({0}, {}));
  EXPECT_EQ(es.monomials[1], make_exponent({1}, {}));
}

TEST(Essential, SizesMatchModuleDimensions) {
  Pipeline p(fixture("osp14_varpi1.conf"));
  const std::size_t expected[] = {10, 35, 84};
  for (unsigned k = 1; k <= 3; ++k) {
    const auto &es = p.essential(k);
    EXPECT_EQ(es.size(), expected[k - 1]);
    EXPECT_EQ(es.size(), p.tower().level(k).module.dim());
    for (std::size_t i = 1; i < es.size(); ++i)
      EXPECT_TRUE(p.order().less(es.monomials[i - 1], es.monomials[i]));
  }
}

TEST(Essential, EssentialVectorsFormABasis) {
  Pipeline p(fixture("osp14_varpi1.conf"));
  auto &level = p.tower().level(2);
  const auto &es = p.essential(2);
  std::vector<SparseVector> vectors;
  for (const auto &e : es.monomials)
    vectors.push_back(level.eval->act(e));
  EXPECT_EQ(rank_of(vectors), level.module.dim());
}

// Greedy oracle: walk every monomial up to the degree bound in ascending
// order and keep those raising the rank of the span.
TEST(Essential, MatchesGreedyOracle) {
  Pipeline p(fixture("sl12_natural.conf"));
  for (unsigned k = 1; k <= 2; ++k) {
    auto &level = p.tower().level(k);
    const auto &nb = p.basis();
    auto monos = enumerate_monomials(p.order(), nb.n(), nb.q(), level.eval->degree_bound());
    std::vector<MultiExponent> oracle;
    SpanAccumulator acc;
    for (const auto &e : monos) {
      SparseVector v = level.eval->act(e);
      if (!v.is_zero() && std::holds_alternative<Independent>(acc.insert(v)))
        oracle.push_back(e);
    }
    EXPECT_EQ(p.essential(k).monomials, oracle);
  }
}

TEST(Essential, ExpressOnEssentialIsUnit) {
  Pipeline p(fixture("osp14_varpi1.conf"));
  const auto &es = p.essential(2);
  for (std::size_t i = 0; i < es.size(); ++i)
    EXPECT_EQ(es.express(es.monomials[i]), SparseVector::unit(i));
}

TEST(Essential, SemigroupPropertyOsp14) {
  Pipeline p(fixture("osp14_varpi1.conf"));
  auto rep = check_semigroup_property(p.essential(1), p.essential(1), p.essential(2));
  EXPECT_TRUE(rep.ok());
  EXPECT_EQ(rep.pairs_checked, 100u);
  EXPECT_GT(rep.compatible_pairs, 0u);
  auto rep12 = check_semigroup_property(p.essential(1), p.essential(2), p.essential(3));
  EXPECT_TRUE(rep12.ok());
}

TEST(Essential, SemigroupAddBottomAbsorbs) {
  SemigroupElement a{make_exponent({1, 0}, {1}), 1};
  SemigroupElement b{make_exponent({1, 1}, {0}), 1};
  EXPECT_TRUE(semigroup_add(a, b).is_bottom());
  EXPECT_TRUE(semigroup_add(SemigroupElement::bottom(), a).is_bottom());
  SemigroupElement c{make_exponent({0, 1}, {2}), 2};
  auto s = semigroup_add(a, c);
  ASSERT_FALSE(s.is_bottom());
  EXPECT_EQ(*s.exponent, make_exponent({1, 1}, {3}));
  EXPECT_EQ(s.level, 3u);
}

TEST(Essential, FavourableOsp14) {
  Pipeline p(fixture("osp14_varpi1.conf"));
  auto rep = is_favourable(p.essentials(3));
  EXPECT_TRUE(rep.favourable);
  EXPECT_EQ(rep.checked_up_to, 3u);
  for (const auto &[k, table] : rep.witnesses)
    for (const auto &[e, parts] : table) {
      ASSERT_EQ(parts.size(), k);
      MultiExponent sum(e.n(), e.q());
      for (auto i : parts)
        sum = sum + p.essential(1).monomials[i];
      EXPECT_EQ(sum, e);
    }
}

TEST(Essential, FavourableAtOneIsVacuous) {
  Pipeline p(fixture("sl12_natural.conf"));
  auto rep = is_favourable(p.essentials(1));
  EXPECT_TRUE(rep.favourable);
  EXPECT_TRUE(rep.failures.empty());
}

TEST(Essential, SerializeRoundTrip) {
  Pipeline p(fixture("osp14_varpi1.conf"));
  const auto &es = p.essential(2);
  auto parsed = parse_exponent_lines("# header\n" + es.serialize());
  ASSERT_EQ(parsed.size(), es.size());
  for (std::size_t i = 0; i < es.size(); ++i) {
    EXPECT_EQ(parsed[i].first, es.monomials[i]);
    EXPECT_EQ(parsed[i].second, 2u);
  }
}

TEST(Essential, ParseErrorsCarryLineNumbers) {
  try {
    parse_exponent_lines("I=01 m=(0)\nbogus\n");
    FAIL();
  } catch (const ParseError &e) {
    EXPECT_EQ(e.line, 2u);
  }
}

TEST(Essential, RootCountsIgnoreBasisOrder) {
  Pipeline a(fixture("osp14_varpi1.conf"));
  JobConfig c = fixture("osp14_varpi1.conf");
  c.basis_perm = {5, 4, 3, 2, 1, 0};
  Pipeline b(c);
  std::vector<RootCounts> ca, cb;
  for (const auto &e : a.essential(1).monomials)
    ca.push_back(root_counts(e, a.algebra(), a.basis()));
  for (const auto &e : b.essential(1).monomials)
    cb.push_back(root_counts(e, b.algebra(), b.basis()));
  EXPECT_EQ(ca.size(), cb.size());
  EXPECT_EQ(root_count_difference(ca, ca), 0u);
}

TEST(Essential, CatalogFindsItsOwnOutput) {
  JobConfig c = fixture("sl12_natural.conf");
  c.order = "graded-revlex";
  c.basis_perm = {2, 0, 1};
  Pipeline p(c);
  std::vector<RootCounts> target;
  for (const auto &e : p.essential(1).monomials)
    target.push_back(root_counts(e, p.algebra(), p.basis()));
  auto res = search_catalog(fixture("sl12_natural.conf"), target);
  ASSERT_TRUE(res.match.has_value());
  EXPECT_EQ(res.best_difference, 0u);
  EXPECT_LE(res.tried, 12u);
}
