#include "superdeg/degeneration.hpp"

#include "superdeg/error.hpp"
#include "superdeg/linalg.hpp"

#include <algorithm>
#include <numeric>

namespace superdeg {

namespace {

class ExpressCache {
public:
  explicit ExpressCache(const EssentialSet &es) : es_(&es) {}
  const SparseVector &operator()(const MultiExponent &e) {
    auto it = memo_.find(e);
    if (it == memo_.end())
      it = memo_.emplace(e, es_->express(e)).first;
    return it->second;
  }

private:
  const EssentialSet *es_;
  std::map<MultiExponent, SparseVector> memo_;
};

MultiExponent with_t(const MultiExponent &e, unsigned t_power) {
  MultiExponent out = e;
  out.even.push_back(t_power);
  return out;
}

SuperPolynomial embed_with_t(const SuperPolynomial &p, unsigned t_power) {
  SuperPolynomial out(p.n() + 1, p.q());
  for (const auto &[e, c] : p.terms())
    out.add_term(with_t(e, t_power), c);
  return out;
}

// Degree-h S-monomials bucketed by Gamma-component (nullopt = bottom), each
// with the sign of its monomial image.
struct Bucket {
  std::vector<MultiExponent> monomials;
  std::vector<int> signs;
};

std::map<std::optional<MultiExponent>, Bucket> buckets_of_degree(const Presentation &pres,
                                                                 unsigned h) {
  std::map<std::optional<MultiExponent>, Bucket> out;
  auto monos = exponents_of_degree(pres.r(), pres.s(), h);
  std::sort(monos.begin(), monos.end());
  for (const auto &mu : monos) {
    auto comp = pres.component(mu);
    int sign = 0;
    if (comp) {
      SuperPolynomial img = pres.monomial_image(mu);
      if (img.terms().size() != 1 || img.terms().begin()->first != *comp)
        throw InternalError("monomial image does not match its Gamma-component");
      sign = img.terms().begin()->second > 0 ? 1 : -1;
    }
    auto &b = out[comp];
    b.monomials.push_back(mu);
    b.signs.push_back(sign);
  }
  return out;
}

std::vector<SuperPolynomial> kernel_of_bucket(const Bucket &b, std::size_t r, std::size_t s,
                                              bool bottom) {
  std::vector<SuperPolynomial> out;
  if (bottom) {
    for (const auto &mu : b.monomials)
      out.push_back(SuperPolynomial::monomial(mu));
    return out;
  }
  for (std::size_t i = 1; i < b.monomials.size(); ++i) {
    SuperPolynomial g(r, s);
    g.add_term(b.monomials[i], 1);
    g.add_term(b.monomials[0], Rational(-b.signs[i] * b.signs[0]));
    out.push_back(g);
  }
  return out;
}

SparseVector coordinates(const SuperPolynomial &p,
                         const std::map<MultiExponent, std::size_t> &index) {
  SparseVector v;
  for (const auto &[e, c] : p.terms())
    v.add_to(index.at(e), c);
  return v;
}

} // namespace

StructureTable structure_constants(const EssentialSet &es_k1, const EssentialSet &es_k2,
                                   const EssentialSet &es_sum) {
  StructureTable table;
  ExpressCache eta1(es_k1), eta2(es_k2);
  for (std::size_t idx = 0; idx < es_sum.size(); ++idx) {
    for (const auto &[split, sign] : cartan_expand(es_sum.monomials[idx], true)) {
      const SparseVector &va = eta1(split.second);
      if (va.is_zero())
        continue;
      const SparseVector &vb = eta2(split.first);
      if (vb.is_zero())
        continue;
      for (const auto &[a, ca] : va.entries())
        for (const auto &[b, cb] : vb.entries())
          table[{a, b}].add_to(idx, sign * ca * cb);
    }
  }
  for (auto it = table.begin(); it != table.end();)
    it = it->second.is_zero() ? table.erase(it) : std::next(it);
  return table;
}

Presentation::Presentation(const EssentialSet &es1) : es1_(&es1) {
  var_of_.resize(es1.size());
  for (std::size_t i = 0; i < es1.size(); ++i) {
    if (es1.monomials[i].parity()) {
      var_of_[i] = {true, odd_.size()};
      odd_.push_back(i);
    } else {
      var_of_[i] = {false, even_.size()};
      even_.push_back(i);
    }
  }
}

SuperPolynomial Presentation::variable(std::size_t es_index) const {
  auto [odd, k] = var_of_.at(es_index);
  return odd ? SuperPolynomial::odd_var(r(), s(), k) : SuperPolynomial::even_var(r(), s(), k);
}

MultiExponent Presentation::formal_sum(const MultiExponent &mu) const {
  const auto &first = es1_->monomials.front();
  MultiExponent sum(first.n(), first.q());
  for (std::size_t j = 0; j < s(); ++j)
    if (mu.odd[j])
      sum = sum + es1_->monomials[odd_[j]];
  for (std::size_t i = 0; i < r(); ++i)
    for (unsigned k = 0; k < mu.even[i]; ++k)
      sum = sum + es1_->monomials[even_[i]];
  return sum;
}

std::optional<MultiExponent> Presentation::component(const MultiExponent &mu) const {
  MultiExponent sum = formal_sum(mu);
  if (!sum.valid())
    return std::nullopt;
  return sum;
}

SuperPolynomial Presentation::monomial_image(const MultiExponent &mu) const {
  const auto &first = es1_->monomials.front();
  std::size_t n = first.n(), q = first.q();
  SuperPolynomial out = SuperPolynomial::constant(n, q, 1);
  for (std::size_t j = s(); j-- > 0;)
    if (mu.odd[j])
      out = out * SuperPolynomial::monomial(es1_->monomials[odd_[j]]);
  for (std::size_t i = 0; i < r(); ++i)
    for (unsigned k = 0; k < mu.even[i]; ++k)
      out = out * SuperPolynomial::monomial(es1_->monomials[even_[i]]);
  return out;
}

VariableNames Presentation::names() const { return VariableNames::standard(r(), s()); }

VariableNames Presentation::names_with_t() const {
  VariableNames v = names();
  v.even.push_back("t");
  return v;
}

RingModel::RingModel(const Presentation &pres, std::vector<const EssentialSet *> es)
    : pres_(&pres), es_(std::move(es)) {
  if (es_.empty())
    throw UsageError("ring model needs at least es(lambda)");
  for (unsigned k = 1; k < es_.size(); ++k)
    tables_.push_back(structure_constants(*es_[k - 1], *es_[0], *es_[k]));
}

int RingModel::eps(const MultiExponent &e) {
  unsigned d = e.odd_degree();
  return (d * (d - (d ? 1 : 0)) / 2) % 2 ? -1 : 1;
}

SparseVector RingModel::times_generator(unsigned k, const SparseVector &x, std::size_t b) const {
  if (k == 0 || k >= es_.size())
    throw UsageError("product leaves the computed levels");
  const auto &table = tables_[k - 1];
  SparseVector out;
  for (const auto &[a, ca] : x.entries()) {
    auto it = table.find({a, b});
    if (it != table.end())
      out.axpy(ca, it->second);
  }
  return out;
}

SparseVector RingModel::evaluate(const SuperPolynomial &p) const {
  SparseVector out;
  for (const auto &[mu, c] : p.terms()) {
    std::vector<std::size_t> factors;
    for (std::size_t j = pres_->s(); j-- > 0;)
      if (mu.odd[j])
        factors.push_back(pres_->odd_generator(j));
    for (std::size_t i = 0; i < pres_->r(); ++i)
      for (unsigned k = 0; k < mu.even[i]; ++k)
        factors.push_back(pres_->even_generator(i));
    if (factors.empty() || factors.size() > es_.size())
      throw UsageError("cannot evaluate a monomial of degree " +
                       std::to_string(factors.size()));
    int sign = 1;
    for (auto f : factors)
      sign *= eps(es_[0]->monomials[f]);
    SparseVector v = SparseVector::unit(factors[0]);
    for (std::size_t k = 1; k < factors.size(); ++k)
      v = times_generator(static_cast<unsigned>(k), v, factors[k]);
    out.axpy(c * sign, v);
  }
  return out;
}

SuperPolynomial GradedRelation::full() const {
  SuperPolynomial g = lead;
  for (const auto &[u, corr] : corrections)
    g = g + corr;
  return g;
}

std::vector<GradedRelation> gr_ideal(const Presentation &pres, unsigned degree_bound) {
  std::vector<GradedRelation> out;
  std::size_t r = pres.r(), s = pres.s();
  std::vector<SuperPolynomial> vars;
  for (std::size_t i = 0; i < r; ++i)
    vars.push_back(SuperPolynomial::even_var(r, s, i));
  for (std::size_t j = 0; j < s; ++j)
    vars.push_back(SuperPolynomial::odd_var(r, s, j));

  std::vector<SuperPolynomial> previous; // kernel basis one degree lower
  for (unsigned h = 2; h <= degree_bound; ++h) {
    auto buckets = buckets_of_degree(pres, h);
    std::map<std::optional<MultiExponent>, std::vector<SuperPolynomial>> products;
    for (const auto &g : previous)
      for (const auto &y : vars) {
        SuperPolynomial p = y * g;
        if (p.is_zero())
          continue;
        products[pres.component(p.terms().begin()->first)].push_back(p);
      }
    std::vector<SuperPolynomial> kernel;
    for (const auto &[comp, bucket] : buckets) {
      auto candidates = kernel_of_bucket(bucket, r, s, !comp.has_value());
      if (candidates.empty())
        continue;
      std::map<MultiExponent, std::size_t> index;
      for (std::size_t i = 0; i < bucket.monomials.size(); ++i)
        index[bucket.monomials[i]] = i;
      SpanAccumulator acc;
      for (const auto &p : products[comp])
        acc.insert(coordinates(p, index));
      for (const auto &g : candidates) {
        if (std::holds_alternative<Independent>(acc.insert(coordinates(g, index)))) {
          GradedRelation rel;
          rel.lead = g;
          rel.degree = h;
          rel.component = comp;
          rel.exponent_sum = pres.formal_sum(g.terms().begin()->first);
          out.push_back(std::move(rel));
        }
        kernel.push_back(g);
      }
    }
    previous = std::move(kernel);
  }
  return out;
}

std::vector<SuperPolynomial> exchange_relations(const Presentation &pres,
                                                const EssentialSet &es_h, unsigned h) {
  if (es_h.size() == 0)
    return {};
  const MultiExponent &top = es_h.monomials.back();
  auto buckets = buckets_of_degree(pres, h);
  auto it = buckets.find(top);
  if (it == buckets.end())
    return {};
  return kernel_of_bucket(it->second, pres.r(), pres.s(), false);
}

std::vector<GradedRelation> lift_relations(const std::vector<GradedRelation> &leads,
                                           const RingModel &ring) {
  std::vector<GradedRelation> out;
  for (const auto &lead : leads) {
    GradedRelation rel = lead;
    rel.corrections.clear();
    const EssentialSet &es_h = ring.es(rel.degree);
    const EssentialSet &es1 = ring.es(1);
    Presentation pres(es1);
    std::map<MultiExponent, SuperPolynomial> corr;
    SparseVector value = ring.evaluate(rel.lead);
    std::size_t floor = 0;
    if (rel.component) {
      std::size_t j = es_h.index_of(*rel.component);
      if (!(value.get(j) == 0) || (!value.is_zero() && value.lead_index() < j))
        throw InternalError("lead " + rel.lead.to_string() +
                            " does not vanish at or below its own component");
      floor = j + 1;
    }
    std::size_t steps = 0;
    while (!value.is_zero()) {
      if (++steps > es_h.size() + 1)
        throw InternalError("lifting did not terminate");
      std::size_t e_idx = value.lead_index();
      if (e_idx < floor)
        throw InternalError("lifting produced a term below the current one");
      const MultiExponent &e = es_h.monomials[e_idx];
      auto decomp = decompositions(es1, e, rel.degree, 1);
      if (decomp.empty())
        throw InternalError("no decomposition of " + e.to_string() + " into level-1 essentials");
      SuperPolynomial p = SuperPolynomial::constant(pres.r(), pres.s(), 1);
      for (auto idx : decomp.front())
        p = p * pres.variable(idx);
      SparseVector phi = ring.evaluate(p);
      Rational c = phi.get(e_idx);
      if (c == 0 || (phi.lead_index() < e_idx))
        throw InternalError("product of generators does not lead at " + e.to_string());
      Rational coef = -value.get(e_idx) / c;
      auto [it, fresh] = corr.try_emplace(e, pres.r(), pres.s());
      it->second = it->second + p * coef;
      value.axpy(coef, phi);
      floor = e_idx + 1;
    }
    for (auto &[u, g] : corr)
      if (!g.is_zero())
        rel.corrections.emplace_back(u, std::move(g));
    if (!ring.evaluate(rel.full()).is_zero())
      throw InternalError("lifted relation does not vanish");
    out.push_back(std::move(rel));
  }
  return out;
}

long apply_weight(const std::vector<long> &w, const MultiExponent &e) {
  auto f = e.flat();
  if (f.size() != w.size())
    throw UsageError("weight vector length mismatch");
  long total = 0;
  for (std::size_t i = 0; i < f.size(); ++i)
    total += w[i] * static_cast<long>(f[i]);
  return total;
}

std::vector<long> find_weight_vector(const std::vector<GradedRelation> &relations) {
  std::size_t dim = 0;
  std::vector<LinearInequality> system;
  for (const auto &rel : relations) {
    for (const auto &[u, g] : rel.corrections) {
      auto fu = u.flat(), fj = rel.exponent_sum.flat();
      dim = fu.size();
      LinearInequality ineq;
      for (std::size_t i = 0; i < fu.size(); ++i)
        ineq.coeffs.push_back(Rational(static_cast<long>(fu[i]) - static_cast<long>(fj[i])));
      ineq.rhs = 1;
      system.push_back(std::move(ineq));
    }
    dim = rel.exponent_sum.flat().size();
  }
  if (system.empty())
    return std::vector<long>(dim, 0);
  auto sol = fourier_motzkin_solve(system, dim);
  if (!sol)
    throw InfeasibleError("no weight vector separates the lifted relations");
  Integer l = 1;
  for (const auto &x : *sol)
    l = lcm(l, Integer(x.get_den()));
  std::vector<long> w;
  for (const auto &x : *sol) {
    Rational y = x * l;
    w.push_back(y.get_num().get_si());
  }
  return w;
}

DegenerationFamily family_ideal(const Presentation &pres,
                                const std::vector<GradedRelation> &relations,
                                const std::vector<long> &w,
                                const std::vector<const EssentialSet *> &es,
                                unsigned degree_bound) {
  DegenerationFamily fam;
  fam.r = pres.r();
  fam.s = pres.s();
  fam.degree_bound = degree_bound;
  fam.weight = w;
  fam.relations = relations;
  for (const auto &rel : relations) {
    SuperPolynomial g = embed_with_t(rel.lead, 0);
    long base = apply_weight(w, rel.exponent_sum);
    for (const auto &[u, corr] : rel.corrections) {
      long d = apply_weight(w, u) - base;
      if (d < 1)
        throw InternalError("t-exponent " + std::to_string(d) + " is not positive");
      g = g + embed_with_t(corr, static_cast<unsigned>(d));
    }
    fam.generators.push_back(std::move(g));
  }
  for (unsigned h = 2; h <= degree_bound && h <= es.size(); ++h) {
    auto ex = exchange_relations(pres, *es[h - 1], h);
    for (const auto &g : ex)
      fam.generators.push_back(embed_with_t(g, 0));
    fam.exchange[h] = std::move(ex);
  }
  if (degree_bound < 2)
    fam.warnings.push_back("degree bound below 2: no relations computed");
  return fam;
}

std::vector<SuperPolynomial> specialize(const DegenerationFamily &family, const Rational &a) {
  std::vector<SuperPolynomial> out;
  for (const auto &g : family.generators) {
    SuperPolynomial p(family.r, family.s);
    for (const auto &[e, c] : g.terms()) {
      MultiExponent base = e;
      unsigned k = base.even.back();
      base.even.pop_back();
      Rational factor = 1;
      for (unsigned i = 0; i < k; ++i)
        factor *= a;
      p.add_term(base, c * factor);
    }
    if (!p.is_zero())
      out.push_back(std::move(p));
  }
  return out;
}

std::size_t quotient_dimension(const std::vector<SuperPolynomial> &generators,
                               std::size_t r, std::size_t s, unsigned h) {
  auto monos = exponents_of_degree(r, s, h);
  std::map<MultiExponent, std::size_t> index;
  for (std::size_t i = 0; i < monos.size(); ++i)
    index[monos[i]] = i;
  SpanAccumulator acc;
  for (const auto &g : generators) {
    if (g.is_zero())
      continue;
    if (!g.is_homogeneous())
      throw InternalError("ideal generator is not homogeneous: " + g.to_string());
    unsigned d = g.degree();
    if (d > h)
      continue;
    for (const auto &mu : exponents_of_degree(r, s, h - d)) {
      SuperPolynomial p = SuperPolynomial::monomial(mu) * g;
      if (!p.is_zero())
        acc.insert(coordinates(p, index));
    }
  }
  return monos.size() - acc.rank();
}

bool HilbertReport::ok() const {
  for (const auto &row : rows)
    if (row.dims != expected)
      return false;
  return true;
}

HilbertReport hilbert_check(const DegenerationFamily &family,
                            const std::vector<Rational> &samples,
                            const std::vector<std::size_t> &expected) {
  HilbertReport rep;
  rep.expected = expected;
  for (const auto &a : samples) {
    HilbertRow row;
    row.sample = a;
    auto gens = specialize(family, a);
    for (unsigned h = 0; h < expected.size(); ++h)
      row.dims.push_back(quotient_dimension(gens, family.r, family.s, h));
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

} // namespace superdeg
