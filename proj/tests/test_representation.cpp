#include "superdeg/error.hpp"
#include "superdeg/representation.hpp"

#include <gtest/gtest.h>

using namespace superdeg;

namespace {

struct Setup {
  LieSuperalgebra g;
  BorelChoice borel;
  NegativeBasis nb;
};

Setup make(const std::string &family, std::size_t m, std::size_t n,
           const std::vector<std::size_t> &perm = {}) {
  auto g = LieSuperalgebra::build(family, m, n);
  auto b = choose_borel(g, default_functional(g));
  auto nb = negative_basis(g, b, perm);
  return {std::move(g), std::move(b), std::move(nb)};
}

ModuleTower osp_tower(const Setup &s) {
  auto nat = Representation::natural(s.g);
  auto nn = Representation::tensor(nat, nat, s.g);
  auto hw = highest_weight_by_weight(nn, {1, 1}, s.g, s.borel);
  return ModuleTower(s.g, s.borel, s.nb, nn, hw);
}

ModuleTower sl12_tower(const Setup &s) {
  auto nat = Representation::natural(s.g);
  auto hw = highest_weight_by_index({nat}, nat, {0}, s.g, s.borel);
  return ModuleTower(s.g, s.borel, s.nb, nat, hw);
}

// f^{(e)}(v (x) w) computed directly in the tensor product versus the
// signed expansion over splittings.
void check_expansion(const Setup &s, ModuleTower &tower, unsigned k1, unsigned k2,
                     unsigned max_degree) {
  auto &l1 = tower.level(k1);
  auto &l2 = tower.level(k2);
  auto prod = Representation::tensor(l1.ambient, l2.ambient, s.g);
  Weight lam = tower.lambda();
  for (auto &c : lam)
    c *= (k1 + k2);
  PbwEvaluator direct(prod, s.g, s.borel, s.nb, SparseVector::unit(0), lam, true);
  std::size_t checked = 0;
  for (unsigned d = 0; d <= max_degree; ++d)
    for (const auto &e : exponents_of_degree(s.nb.n(), s.nb.q(), d)) {
      SparseVector lhs = direct.act(e);
      SparseVector rhs;
      for (const auto &[split, c] : cartan_expand(e, true))
        rhs.axpy(c, kron(l1.eval->act(split.first), l2.eval->act(split.second),
                         l2.ambient.dim));
      EXPECT_EQ(lhs, rhs) << e.to_string();
      ++checked;
    }
  EXPECT_GT(checked, 0u);
}

} // namespace

TEST(Representation, AxiomsOnBuildingBlocks) {
  for (auto [fam, m, n] : {std::tuple{"gl", 1, 1}, std::tuple{"sl", 1, 2},
                           std::tuple{"osp", 1, 2}, std::tuple{"sl", 2, 0}}) {
    auto g = LieSuperalgebra::build(fam, m, n);
    auto nat = Representation::natural(g);
    auto dual = Representation::dual(g);
    EXPECT_EQ(nat.axiom_violations(g), 0u) << fam;
    EXPECT_EQ(dual.axiom_violations(g), 0u) << fam;
    EXPECT_EQ(Representation::trivial(g).axiom_violations(g), 0u);
    EXPECT_EQ(Representation::tensor(nat, dual, g).axiom_violations(g), 0u) << fam;
    EXPECT_EQ(Representation::tensor(dual, nat, g).axiom_violations(g), 0u) << fam;
  }
}

TEST(Representation, TensorWithOneFactorIsIdentity) {
  auto g = LieSuperalgebra::build("sl", 1, 2);
  auto nat = Representation::natural(g);
  auto t = Representation::tensor_power(nat, 1, g);
  for (std::size_t x = 0; x < g.dim(); ++x)
    EXPECT_EQ(t.action[x], nat.action[x]);
}

TEST(HwModule, TrivialModule) {
  auto s = make("osp", 1, 2);
  auto triv = Representation::trivial(s.g);
  auto hw = highest_weight_by_index({triv}, triv, {0}, s.g, s.borel);
  ModuleTower tower(s.g, s.borel, s.nb, triv, hw);
  EXPECT_EQ(tower.level(1).module.dim(), 1u);
  EXPECT_EQ(tower.level(2).module.dim(), 1u);
}

TEST(HwModule, Gl11Natural) {
  auto s = make("gl", 1, 1);
  auto nat = Representation::natural(s.g);
  auto hw = highest_weight_by_index({nat}, nat, {0}, s.g, s.borel);
  ModuleTower tower(s.g, s.borel, s.nb, nat, hw);
  auto &l = tower.level(1);
  EXPECT_EQ(l.module.dim(), 2u);
  EXPECT_EQ(l.module.exponents[1], make_exponent({1}, {}));
}

TEST(HwModule, Osp14VarpiOne) {
  auto s = make("osp", 1, 2);
  auto tower = osp_tower(s);
  EXPECT_EQ(tower.level(1).module.dim(), 10u);
  EXPECT_EQ(tower.level(2).module.dim(), 35u);
  EXPECT_EQ(tower.level_one_rep().axiom_violations(s.g), 0u);
  EXPECT_EQ(tower.level(2).ambient.axiom_violations(s.g), 0u);
}

TEST(HwModule, Sl12Natural) {
  auto s = make("sl", 1, 2);
  auto tower = sl12_tower(s);
  EXPECT_EQ(tower.level(1).module.dim(), 3u);
  EXPECT_EQ(tower.level(2).module.dim(), 4u);
}

TEST(HwModule, NotHighestWeightRejected) {
  auto s = make("sl", 1, 2);
  auto nat = Representation::natural(s.g);
  EXPECT_THROW(highest_weight_by_index({nat}, nat, {2}, s.g, s.borel), UsageError);
}

TEST(HwModule, PbwWeightsAndBlocks) {
  auto s = make("osp", 1, 2);
  auto tower = osp_tower(s);
  auto &l = tower.level(2);
  for (unsigned d = 0; d <= 4; ++d)
    for (const auto &e : exponents_of_degree(s.nb.n(), s.nb.q(), d)) {
      auto v = l.eval->act(e);
      auto w = l.eval->weight_of(e);
      for (const auto &[i, val] : v.entries())
        EXPECT_EQ(l.ambient.weights[i], w);
    }
}

TEST(HwModule, DimensionIndependentOfPermutation) {
  for (auto perm : std::vector<std::vector<std::size_t>>{
           {}, {5, 4, 3, 2, 1, 0}, {1, 0, 3, 2, 5, 4}, {2, 5, 0, 3, 1, 4}}) {
    auto s = make("osp", 1, 2, perm);
    auto tower = osp_tower(s);
    EXPECT_EQ(tower.level(1).module.dim(), 10u);
    EXPECT_EQ(tower.level(2).module.dim(), 35u);
  }
}

TEST(HwModule, DegreeCapReported) {
  auto s = make("osp", 1, 2);
  auto nat = Representation::natural(s.g);
  auto nn = Representation::tensor(nat, nat, s.g);
  auto hw = highest_weight_by_weight(nn, {1, 1}, s.g, s.borel);
  try {
    ModuleTower tower(s.g, s.borel, s.nb, nn, hw, 1);
    FAIL() << "expected NotConvergedError";
  } catch (const NotConvergedError &e) {
    EXPECT_EQ(e.degree_cap, 1u);
  }
}

TEST(CartanExpand, SmallCases) {
  auto t0 = cartan_expand(MultiExponent(1, 0), false);
  ASSERT_EQ(t0.size(), 1u);
  EXPECT_EQ(t0[0].second, 1);
  auto t1 = cartan_expand(make_exponent({}, {2}), false);
  ASSERT_EQ(t1.size(), 3u);
  EXPECT_EQ(t1[0].second, 1);
  EXPECT_EQ(t1[1].second, 2);
  EXPECT_EQ(t1[2].second, 1);
  // Odd pair: the split (xi1 | xi2) picks up (-1)^{K} with K = 1.
  auto t2 = cartan_expand(make_exponent({1, 1}, {}), true);
  ASSERT_EQ(t2.size(), 4u);
  for (const auto &[split, c] : t2) {
    int expect = koszul_sign(split.first.odd, split.second.odd);
    EXPECT_EQ(c, expect);
    if (split.first.odd == std::vector<std::uint8_t>{1, 0})
      EXPECT_EQ(c, -1);
  }
}

TEST(CartanExpand, MatchesDirectActionOsp14) {
  auto s = make("osp", 1, 2);
  auto tower = osp_tower(s);
  check_expansion(s, tower, 1, 1, 3);
  check_expansion(s, tower, 1, 2, 3);
}

TEST(CartanExpand, MatchesDirectActionSl12) {
  auto s = make("sl", 1, 2);
  auto tower = sl12_tower(s);
  check_expansion(s, tower, 1, 1, 3);
  check_expansion(s, tower, 2, 1, 3);
}
