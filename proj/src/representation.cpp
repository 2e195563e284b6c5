#include "superdeg/representation.hpp"

#include "superdeg/error.hpp"

#include <algorithm>
#include <functional>

namespace superdeg {

Representation Representation::natural(const LieSuperalgebra &g) {
  Representation r;
  r.dim = g.ambient_dim();
  r.action = g.basis();
  for (std::size_t i = 0; i < r.dim; ++i) {
    r.parity.push_back(g.vector_parity(i));
    r.weights.push_back(g.ambient_weight(i));
  }
  return r;
}

Representation Representation::dual(const LieSuperalgebra &g) {
  Representation r;
  r.dim = g.ambient_dim();
  for (std::size_t a = 0; a < g.dim(); ++a) {
    const auto &x = g.element(a);
    SparseMatrix m(r.dim, r.dim);
    for (std::size_t j = 0; j < r.dim; ++j)
      for (const auto &[i, v] : x.column(j).entries()) {
        bool flip = g.parity(a) && g.vector_parity(i);
        m.set(j, i, flip ? v : -v);
      }
    r.action.push_back(m);
  }
  for (std::size_t i = 0; i < r.dim; ++i) {
    r.parity.push_back(g.vector_parity(i));
    Weight w = g.ambient_weight(i);
    for (auto &c : w)
      c = -c;
    r.weights.push_back(w);
  }
  return r;
}

Representation Representation::trivial(const LieSuperalgebra &g) {
  Representation r;
  r.dim = 1;
  r.action.assign(g.dim(), SparseMatrix(1, 1));
  r.parity = {0};
  r.weights = {Weight(g.weight_dim(), Rational(0))};
  return r;
}

Representation Representation::from_name(const std::string &name,
                                         const LieSuperalgebra &g) {
  if (name == "natural")
    return natural(g);
  if (name == "dual" || name == "dual-natural")
    return dual(g);
  if (name == "trivial")
    return trivial(g);
  throw UsageError("unknown building-block representation '" + name + "'");
}

Representation Representation::tensor(const Representation &a, const Representation &b,
                                      const LieSuperalgebra &g) {
  Representation r;
  r.dim = a.dim * b.dim;
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < b.dim; ++j) {
      r.parity.push_back(a.parity[i] ^ b.parity[j]);
      Weight w = a.weights[i];
      for (std::size_t k = 0; k < w.size(); ++k)
        w[k] += b.weights[j][k];
      r.weights.push_back(w);
    }
  for (std::size_t x = 0; x < g.dim(); ++x) {
    const auto &ma = a.action[x], &mb = b.action[x];
    unsigned px = g.parity(x);
    SparseMatrix m(r.dim, r.dim);
    for (std::size_t i = 0; i < a.dim; ++i)
      for (std::size_t j = 0; j < b.dim; ++j) {
        SparseVector &col = m.column(i * b.dim + j);
        for (const auto &[ii, v] : ma.column(i).entries())
          col.add_to(ii * b.dim + j, v);
        Rational s = (px && a.parity[i]) ? -1 : 1;
        for (const auto &[jj, v] : mb.column(j).entries())
          col.add_to(i * b.dim + jj, s * v);
      }
    r.action.push_back(std::move(m));
  }
  return r;
}

Representation Representation::tensor_power(const Representation &a, unsigned k,
                                            const LieSuperalgebra &g) {
  if (k == 0)
    return trivial(g);
  Representation r = a;
  for (unsigned i = 1; i < k; ++i)
    r = tensor(r, a, g);
  return r;
}

std::size_t Representation::axiom_violations(const LieSuperalgebra &g) const {
  std::size_t bad = 0;
  for (std::size_t x = 0; x < g.dim(); ++x)
    for (std::size_t y = 0; y < g.dim(); ++y) {
      SparseVector c = g.coordinates(g.bracket(x, y));
      SparseMatrix lhs(dim, dim);
      for (const auto &[k, v] : c.entries())
        lhs.axpy(v, action[k]);
      SparseMatrix rhs = action[x] * action[y];
      rhs.axpy(Rational((g.parity(x) & g.parity(y)) ? 1 : -1), action[y] * action[x]);
      if (!(lhs == rhs))
        ++bad;
    }
  return bad;
}

namespace {

void check_highest(const Representation &rep, const SparseVector &v,
                   const LieSuperalgebra &g, const BorelChoice &borel) {
  for (auto r : borel.positive)
    if (!rep.action[g.roots()[r].basis_index].apply(v).is_zero())
      throw UsageError("chosen vector is not annihilated by the positive root "
                       "vectors");
  for (const auto &[i, val] : v.entries())
    if (rep.parity[i] != 0)
      throw UsageError("highest weight vector must be even");
}

} // namespace

HighestWeightVector highest_weight_by_index(const std::vector<Representation> &factors,
                                            const Representation &product,
                                            const std::vector<std::size_t> &indices,
                                            const LieSuperalgebra &g,
                                            const BorelChoice &borel) {
  if (indices.size() != factors.size())
    throw UsageError("need one highest weight index per tensor factor");
  std::size_t idx = 0;
  for (std::size_t f = 0; f < factors.size(); ++f) {
    if (indices[f] >= factors[f].dim)
      throw UsageError("highest weight index out of range for factor " +
                       std::to_string(f + 1));
    idx = idx * factors[f].dim + indices[f];
  }
  SparseVector v = SparseVector::unit(idx);
  check_highest(product, v, g, borel);
  return {v, product.weights[idx]};
}

HighestWeightVector highest_weight_by_weight(const Representation &rep,
                                             const Weight &weight,
                                             const LieSuperalgebra &g,
                                             const BorelChoice &borel) {
  if (weight.size() != g.weight_dim())
    throw UsageError("highest weight has " + std::to_string(weight.size()) +
                     " coordinates, expected " + std::to_string(g.weight_dim()));
  std::vector<std::size_t> block;
  for (std::size_t i = 0; i < rep.dim; ++i)
    if (rep.weights[i] == weight)
      block.push_back(i);
  if (block.empty())
    throw UsageError("weight " + weight_to_string(weight) +
                     " does not occur in the ambient representation");
  // Rows of the map (coefficients on the block) -> images under n^+.
  std::map<std::size_t, SparseVector> rows;
  for (auto r : borel.positive) {
    const auto &e = rep.action[g.roots()[r].basis_index];
    for (std::size_t c = 0; c < block.size(); ++c)
      for (const auto &[i, v] : e.column(block[c]).entries())
        rows[(r * rep.dim) + i].add_to(c, v);
  }
  std::vector<SparseVector> eqs;
  for (auto &[k, row] : rows)
    eqs.push_back(row);
  auto ker = nullspace(eqs, block.size());
  if (ker.empty())
    throw UsageError("no highest weight vector of weight " + weight_to_string(weight));
  if (ker.size() > 1)
    throw UsageError("highest weight vectors of weight " + weight_to_string(weight) +
                     " are not unique (dimension " + std::to_string(ker.size()) +
                     "); use an index instead");
  SparseVector v;
  for (const auto &[c, val] : ker.front().entries())
    v.set(block[c], val);
  check_highest(rep, v, g, borel);
  return {v, weight};
}

PbwEvaluator::PbwEvaluator(const Representation &rep, const LieSuperalgebra &g,
                           const BorelChoice &borel, const NegativeBasis &nb,
                           SparseVector hw, Weight lambda, bool divided)
    : rep_(&rep), nb_(nb), hw_(std::move(hw)), lambda_(std::move(lambda)),
      divided_(divided) {
  const Weight &phi = borel.functional;
  std::optional<Rational> min_step;
  for (std::size_t t = 0; t < nb_.size(); ++t) {
    const Root &r = g.roots()[nb_.root_of[t]];
    f_.push_back(&rep.action[r.basis_index]);
    f_weight_.push_back(r.coords);
    Rational step = -LieSuperalgebra::evaluate(phi, r.coords);
    if (!min_step || step < *min_step)
      min_step = step;
  }
  for (const auto &w : rep.weights)
    ambient_weights_[w]++;
  // Each f_t lowers <phi, .> by at least min_step, and the result must stay
  // an ambient weight.
  Rational top = LieSuperalgebra::evaluate(phi, lambda_), drop = 0;
  for (const auto &[w, count] : ambient_weights_)
    drop = std::max(drop, Rational(top - LieSuperalgebra::evaluate(phi, w)));
  if (min_step) {
    Rational ratio = drop / *min_step;
    Integer fl;
    mpz_fdiv_q(fl.get_mpz_t(), ratio.get_num_mpz_t(), ratio.get_den_mpz_t());
    degree_bound_ = static_cast<unsigned>(fl.get_ui());
  }
  memo_[std::vector<unsigned>(nb_.size(), 0)] = hw_;
}

std::vector<unsigned> PbwEvaluator::positions(const MultiExponent &e) const {
  if (e.q() != nb_.q() || e.n() != nb_.n())
    throw Error("exponent does not match the negative basis");
  std::vector<unsigned> p(nb_.size(), 0);
  for (std::size_t k = 0; k < e.q(); ++k)
    p[nb_.odd_positions[k]] = e.odd[k];
  for (std::size_t k = 0; k < e.n(); ++k)
    p[nb_.even_positions[k]] = e.even[k];
  return p;
}

MultiExponent PbwEvaluator::exponent(const std::vector<unsigned> &p) const {
  MultiExponent e(nb_.n(), nb_.q());
  for (std::size_t k = 0; k < e.q(); ++k)
    e.odd[k] = static_cast<std::uint8_t>(p[nb_.odd_positions[k]]);
  for (std::size_t k = 0; k < e.n(); ++k)
    e.even[k] = p[nb_.even_positions[k]];
  return e;
}

Weight PbwEvaluator::weight_of(const MultiExponent &e) const {
  Weight w = lambda_;
  auto p = positions(e);
  for (std::size_t t = 0; t < p.size(); ++t)
    if (p[t])
      for (std::size_t k = 0; k < w.size(); ++k)
        w[k] += Rational(p[t]) * f_weight_[t][k];
  return w;
}

SparseVector PbwEvaluator::act(const MultiExponent &e) {
  if (!e.valid())
    return SparseVector();
  return act_positions(positions(e));
}

SparseVector PbwEvaluator::act_positions(const std::vector<unsigned> &exps) {
  auto it = memo_.find(exps);
  if (it != memo_.end())
    return it->second;
  std::size_t t = exps.size();
  while (t > 0 && exps[t - 1] == 0)
    --t;
  --t; // highest occupied position: f_t is applied last
  std::vector<unsigned> prev = exps;
  prev[t] -= 1;
  SparseVector base = act_positions(prev);
  SparseVector out;
  if (!base.is_zero()) {
    out = f_[t]->apply(base);
    if (divided_ && exps[t] > 1)
      out.scale(Rational(1, exps[t]));
  }
  memo_.emplace(exps, out);
  return out;
}

std::optional<SparseVector> CyclicModule::express(const SparseVector &v,
                                                  const Weight &w) const {
  if (v.is_zero())
    return SparseVector();
  auto it = blocks.find(w);
  if (it == blocks.end())
    return std::nullopt;
  auto local = it->second.acc.express_sparse(v);
  if (!local)
    return std::nullopt;
  std::vector<std::pair<std::size_t, Rational>> items;
  for (const auto &[i, val] : local->entries())
    items.emplace_back(it->second.members[i], val);
  std::sort(items.begin(), items.end(),
            [](const auto &a, const auto &b) { return a.first < b.first; });
  SparseVector out;
  for (auto &[i, val] : items)
    out.append(i, val);
  return out;
}

CyclicModule cyclic_span(PbwEvaluator &eval, unsigned degree_cap) {
  CyclicModule mod;
  const std::size_t n = eval.basis().n(), q = eval.basis().q();
  for (unsigned d = 0; d <= degree_cap; ++d) {
    bool grew = false;
    for (const auto &e : exponents_of_degree(n, q, d)) {
      Weight w = eval.weight_of(e);
      if (!eval.weight_occurs(w))
        continue;
      SparseVector v = eval.act(e);
      if (v.is_zero())
        continue;
      auto &block = mod.blocks[w];
      if (std::holds_alternative<Independent>(block.acc.insert(v))) {
        block.members.push_back(mod.vectors.size());
        mod.exponents.push_back(e);
        mod.vectors.push_back(std::move(v));
        mod.weights.push_back(w);
        grew = true;
      }
    }
    if (!grew) {
      mod.stabilized_at = d;
      return mod;
    }
  }
  throw NotConvergedError("cyclic span did not stabilize by degree " +
                              std::to_string(degree_cap),
                          degree_cap);
}

Representation restrict_to(const Representation &rep, const CyclicModule &mod,
                           const LieSuperalgebra &g) {
  Representation r;
  r.dim = mod.dim();
  r.weights = mod.weights;
  for (std::size_t i = 0; i < r.dim; ++i)
    r.parity.push_back(mod.exponents[i].parity());
  for (std::size_t x = 0; x < g.dim(); ++x) {
    SparseMatrix m(r.dim, r.dim);
    Weight shift(g.weight_dim(), Rational(0));
    if (x >= g.cartan_dim())
      for (const auto &root : g.roots())
        if (root.basis_index == x)
          shift = root.coords;
    for (std::size_t i = 0; i < r.dim; ++i) {
      SparseVector image = rep.action[x].apply(mod.vectors[i]);
      Weight w = mod.weights[i];
      for (std::size_t k = 0; k < w.size(); ++k)
        w[k] += shift[k];
      auto c = mod.express(image, w);
      if (!c)
        throw InternalError("cyclic span is not closed under the action");
      m.column(i) = *c;
    }
    r.action.push_back(std::move(m));
  }
  return r;
}

std::vector<std::pair<std::pair<MultiExponent, MultiExponent>, Rational>>
cartan_expand(const MultiExponent &e, bool divided) {
  std::vector<std::pair<std::pair<MultiExponent, MultiExponent>, Rational>> out;
  const std::size_t n = e.n(), q = e.q();
  MultiExponent left(n, q);
  std::function<void(std::size_t)> rec = [&](std::size_t pos) {
    if (pos == n + q) {
      MultiExponent right = e - left;
      Rational c = koszul_sign(left.odd, right.odd);
      if (!divided)
        for (std::size_t i = 0; i < n; ++i)
          c *= binomial(e.even[i], left.even[i]);
      out.emplace_back(std::make_pair(left, right), c);
      return;
    }
    unsigned cap = pos < n ? e.even[pos] : e.odd[pos - n];
    for (unsigned v = 0; v <= cap; ++v) {
      if (pos < n)
        left.even[pos] = v;
      else
        left.odd[pos - n] = static_cast<std::uint8_t>(v);
      rec(pos + 1);
    }
    if (pos < n)
      left.even[pos] = 0;
    else
      left.odd[pos - n] = 0;
  };
  rec(0);
  return out;
}

ModuleTower::ModuleTower(const LieSuperalgebra &g, const BorelChoice &borel,
                         NegativeBasis nb, Representation level_one,
                         HighestWeightVector hw, unsigned degree_cap)
    : g_(&g), borel_(&borel), nb_(std::move(nb)), lambda_(hw.weight),
      degree_cap_(degree_cap) {
  PbwEvaluator eval(level_one, g, borel, nb_, hw.vector, lambda_, true);
  unsigned cap = degree_cap_ ? degree_cap_ : static_cast<unsigned>(level_one.dim + 1);
  cap = std::min(cap, eval.degree_bound() + 1);
  CyclicModule mod = cyclic_span(eval, cap);
  restricted_ = restrict_to(level_one, mod, g);
}

ModuleTower::Level &ModuleTower::level(unsigned k) {
  if (k == 0)
    throw UsageError("levels start at 1");
  auto it = levels_.find(k);
  if (it != levels_.end())
    return *it->second;
  auto lvl = std::make_unique<Level>();
  lvl->ambient = Representation::tensor_power(restricted_, k, *g_);
  Weight lam = lambda_;
  for (auto &c : lam)
    c *= k;
  lvl->eval = std::make_unique<PbwEvaluator>(lvl->ambient, *g_, *borel_, nb_,
                                             SparseVector::unit(0), lam, true);
  unsigned cap = degree_cap_ ? degree_cap_ : static_cast<unsigned>(lvl->ambient.dim + 1);
  cap = std::min(cap, lvl->eval->degree_bound() + 1);
  lvl->module = cyclic_span(*lvl->eval, cap);
  auto &ref = *lvl;
  levels_.emplace(k, std::move(lvl));
  return ref;
}

} // namespace superdeg
