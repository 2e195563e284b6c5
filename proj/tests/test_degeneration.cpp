#include "superdeg/degeneration.hpp"
#include "superdeg/error.hpp"
#include "superdeg/pipeline.hpp"

#include <gtest/gtest.h>

#include <filesystem>

using namespace superdeg;

namespace {

JobConfig fixture(const std::string &name) {
  return JobConfig::load(std::filesystem::path(SUPERDEG_FIXTURES) / name);
}

struct Computed {
  explicit Computed(const std::string &conf, unsigned D)
      : pipe(fixture(conf)), es(pipe.essentials(D)), pres(*es[0]), ring(pres, es),
        leads(gr_ideal(pres, D)), lifted(lift_relations(leads, ring)) {}
  Pipeline pipe;
  std::vector<const EssentialSet *> es;
  Presentation pres;
  RingModel ring;
  std::vector<GradedRelation> leads, lifted;

  std::vector<std::size_t> expected() const {
    std::vector<std::size_t> v{1};
    for (auto *e : es)
      v.push_back(e->size());
    return v;
  }
};

void check_leading_law(const EssentialSet &es1, const EssentialSet &es2) {
  auto table = structure_constants(es1, es1, es2);
  std::size_t compatible = 0;
  for (std::size_t a = 0; a < es1.size(); ++a)
    for (std::size_t b = 0; b < es1.size(); ++b) {
      MultiExponent sum = es1.monomials[a] + es1.monomials[b];
      if (!sum.valid())
        continue;
      ++compatible;
      ASSERT_TRUE(es2.contains(sum));
      std::size_t idx = es2.index_of(sum);
      auto it = table.find({a, b});
      ASSERT_NE(it, table.end());
      EXPECT_EQ(it->second.get(idx),
                koszul_sign(es1.monomials[b].odd, es1.monomials[a].odd));
      EXPECT_EQ(it->second.lead_index(), idx);
    }
  EXPECT_GT(compatible, 0u);
}

} // namespace

TEST(Degeneration, LeadingStructureConstantOsp14) {
  Pipeline p(fixture("osp14_varpi1.conf"));
  check_leading_law(p.essential(1), p.essential(2));
}

TEST(Degeneration, LeadingStructureConstantSl12) {
  Pipeline p(fixture("sl12_natural.conf"));
  check_leading_law(p.essential(1), p.essential(2));
}

TEST(Degeneration, UndividedSquareHasBinomialTwo) {
  auto terms = cartan_expand(make_exponent({}, {2}), false);
  bool found = false;
  for (const auto &[split, c] : terms)
    if (split.first == make_exponent({}, {1})) {
      EXPECT_EQ(c, 2);
      found = true;
    }
  EXPECT_TRUE(found);
}

TEST(Degeneration, ProductIsSupercommutative) {
  Pipeline p(fixture("osp14_varpi1.conf"));
  const auto &es1 = p.essential(1);
  auto table = structure_constants(es1, es1, p.essential(2));
  for (std::size_t a = 0; a < es1.size(); ++a)
    for (std::size_t b = 0; b < es1.size(); ++b) {
      int sign = es1.monomials[a].parity() && es1.monomials[b].parity() ? -1 : 1;
      SparseVector ab = table.count({a, b}) ? table.at({a, b}) : SparseVector();
      SparseVector ba = table.count({b, a}) ? table.at({b, a}) : SparseVector();
      EXPECT_EQ(ab, ba * Rational(sign)) << a << "," << b;
    }
}

TEST(Degeneration, ProductIsAssociative) {
  Pipeline p(fixture("osp14_varpi1.conf"));
  const auto &es1 = p.essential(1);
  const auto &es2 = p.essential(2);
  const auto &es3 = p.essential(3);
  auto t11 = structure_constants(es1, es1, es2);
  auto t21 = structure_constants(es2, es1, es3);
  auto t12 = structure_constants(es1, es2, es3);
  auto get = [](const StructureTable &t, std::size_t a, std::size_t b) {
    auto it = t.find({a, b});
    return it == t.end() ? SparseVector() : it->second;
  };
  for (std::size_t a = 0; a < es1.size(); ++a)
    for (std::size_t b = 0; b < es1.size(); ++b)
      for (std::size_t c = 0; c < es1.size(); ++c) {
        SparseVector left, right;
        for (const auto &[i, x] : get(t11, a, b).entries())
          left.axpy(x, get(t21, i, c));
        for (const auto &[j, y] : get(t11, b, c).entries())
          right.axpy(y, get(t12, a, j));
        EXPECT_EQ(left, right);
      }
}

TEST(Degeneration, GrIdealVanishesOnMonomialImage) {
  Computed run("osp14_varpi1.conf", 3);
  ASSERT_FALSE(run.leads.empty());
  for (const auto &rel : run.leads) {
    SuperPolynomial img;
    bool first = true;
    for (const auto &[mu, c] : rel.lead.terms()) {
      SuperPolynomial t = run.pres.monomial_image(mu) * c;
      img = first ? t : img + t;
      first = false;
    }
    EXPECT_TRUE(img.is_zero()) << rel.lead.to_string();
  }
}

TEST(Degeneration, FreeSemigroupHasNoRelations) {
  Computed run("gl11_natural.conf", 3);
  EXPECT_TRUE(run.leads.empty());
}

TEST(Degeneration, ToricRelation) {
  // Two generators per side with equal sums: x_a x_d - x_b x_c.
  Computed run("sl2_veronese.conf", 3);
  ASSERT_EQ(run.pres.r(), 3u);
  ASSERT_EQ(run.pres.s(), 0u);
  ASSERT_EQ(run.lifted.size(), 1u);
  const auto &rel = run.lifted[0];
  EXPECT_EQ(rel.degree, 2u);
  EXPECT_TRUE(rel.corrections.empty());
  SuperPolynomial expect = SuperPolynomial::parse("x1*x3 - x2^2", 3, 0);
  EXPECT_TRUE(rel.lead == expect || rel.lead == -expect) << rel.lead.to_string();
}

TEST(Degeneration, OddCollisionGivesPureMonomial) {
  Computed run("osp14_varpi1.conf", 2);
  bool found = false;
  for (const auto &rel : run.leads)
    if (!rel.component && rel.lead.terms().size() == 1 &&
        rel.lead.terms().begin()->first.odd_degree() == 2)
      found = true;
  EXPECT_TRUE(found);
}

TEST(Degeneration, LiftedRelationsEvaluateToZero) {
  Computed run("osp14_varpi1.conf", 3);
  ASSERT_EQ(run.lifted.size(), run.leads.size());
  for (const auto &rel : run.lifted) {
    EXPECT_TRUE(run.ring.evaluate(rel.full()).is_zero());
    for (const auto &[u, g] : rel.corrections) {
      for (const auto &[mu, c] : g.terms())
        EXPECT_EQ(run.pres.component(mu), u);
      if (rel.component)
        EXPECT_TRUE(run.pipe.order().less(*rel.component, u));
    }
  }
}

TEST(Degeneration, WeightVectorExamples) {
  EXPECT_EQ(find_weight_vector({}), std::vector<long>{});
  GradedRelation rel;
  rel.lead = SuperPolynomial::parse("x1", 2, 0);
  rel.degree = 2;
  rel.component = make_exponent({}, {0, 1});
  rel.exponent_sum = *rel.component;
  rel.corrections.push_back({make_exponent({}, {1, 1}), SuperPolynomial::parse("x2", 2, 0)});
  auto w = find_weight_vector({rel});
  ASSERT_EQ(w.size(), 2u);
  EXPECT_GE(w[0], 1);
}

TEST(Degeneration, WeightVectorSeparatesOsp14) {
  Computed run("osp14_varpi1.conf", 2);
  auto w = find_weight_vector(run.lifted);
  for (const auto &rel : run.lifted)
    for (const auto &[u, g] : rel.corrections)
      EXPECT_GE(apply_weight(w, u) - apply_weight(w, rel.exponent_sum), 1);
}

TEST(Degeneration, FamilySpecializations) {
  Computed run("osp14_varpi1.conf", 2);
  auto w = find_weight_vector(run.lifted);
  auto fam = family_ideal(run.pres, run.lifted, w, run.es, 2);
  std::size_t t_index = fam.r;
  for (std::size_t k = 0; k < run.lifted.size(); ++k) {
    for (const auto &[e, c] : fam.generators[k].terms()) {
      bool lead = run.lifted[k].lead.coefficient(MultiExponent(
                      std::vector<std::uint8_t>(e.odd),
                      std::vector<unsigned>(e.even.begin(), e.even.begin() + t_index))) != 0;
      if (!lead)
        EXPECT_GE(e.even[t_index], 1u);
    }
  }
  auto at0 = specialize(fam, 0);
  auto at1 = specialize(fam, 1);
  for (std::size_t k = 0; k < run.lifted.size(); ++k) {
    EXPECT_EQ(at0[k], run.lifted[k].lead);
    EXPECT_EQ(at1[k], run.lifted[k].full());
  }
}

// g_k(1) evaluated at x_i -> a^{w_i} x_i equals a^{w(J)} g_k(a).
TEST(Degeneration, FibersRelatedByRescaling) {
  Computed run("osp14_varpi1.conf", 2);
  auto w = find_weight_vector(run.lifted);
  auto fam = family_ideal(run.pres, run.lifted, w, run.es, 2);
  Rational a = 2;
  std::vector<SuperPolynomial> even, odd;
  for (std::size_t i = 0; i < run.pres.r(); ++i)
    even.push_back(SuperPolynomial::even_var(run.pres.r(), run.pres.s(), i) *
                   pow(a, apply_weight(w, run.es[0]->monomials[run.pres.even_generator(i)])));
  for (std::size_t j = 0; j < run.pres.s(); ++j)
    odd.push_back(SuperPolynomial::odd_var(run.pres.r(), run.pres.s(), j) *
                  pow(a, apply_weight(w, run.es[0]->monomials[run.pres.odd_generator(j)])));
  auto one = specialize(fam, 1);
  auto at_a = specialize(fam, a);
  for (std::size_t k = 0; k < run.lifted.size(); ++k) {
    long base = apply_weight(w, run.lifted[k].exponent_sum);
    EXPECT_EQ(one[k].substitute(even, odd), at_a[k] * pow(a, base));
  }
}

TEST(Degeneration, QuotientDimensionOracle) {
  auto g = SuperPolynomial::parse("x1*x2", 2, 0);
  EXPECT_EQ(quotient_dimension({g}, 2, 0, 0), 1u);
  EXPECT_EQ(quotient_dimension({g}, 2, 0, 1), 2u);
  for (unsigned h = 2; h <= 4; ++h)
    EXPECT_EQ(quotient_dimension({g}, 2, 0, h), 2u);
  // exterior algebra in two odd variables: 1, 2, 1, 0
  EXPECT_EQ(quotient_dimension({}, 0, 2, 2), 1u);
  EXPECT_EQ(quotient_dimension({}, 0, 2, 3), 0u);
}

TEST(Degeneration, HilbertFunctionOsp14) {
  Computed run("osp14_varpi1.conf", 2);
  auto w = find_weight_vector(run.lifted);
  auto fam = family_ideal(run.pres, run.lifted, w, run.es, 2);
  auto rep = hilbert_check(fam, {0, 1, 2, 5}, run.expected());
  EXPECT_EQ(rep.expected, (std::vector<std::size_t>{1, 10, 35}));
  EXPECT_TRUE(rep.ok());
}

TEST(Degeneration, HilbertFunctionClassical) {
  Computed run("sl2_veronese.conf", 3);
  auto fam = family_ideal(run.pres, run.lifted, find_weight_vector(run.lifted), run.es, 3);
  auto rep = hilbert_check(fam, {0, 1, 2, 5}, run.expected());
  EXPECT_EQ(rep.expected, (std::vector<std::size_t>{1, 3, 5, 7}));
  EXPECT_TRUE(rep.ok());
}

TEST(Degeneration, HilbertFunctionSl12) {
  Computed run("sl12_natural.conf", 3);
  auto fam = family_ideal(run.pres, run.lifted, find_weight_vector(run.lifted), run.es, 3);
  EXPECT_TRUE(hilbert_check(fam, {0, 1, 3}, run.expected()).ok());
}

TEST(Degeneration, DegreeOneBoundWarns) {
  Computed run("sl2_veronese.conf", 1);
  auto fam = family_ideal(run.pres, run.lifted, find_weight_vector(run.lifted), run.es, 1);
  EXPECT_TRUE(fam.generators.empty());
  EXPECT_FALSE(fam.warnings.empty());
}
