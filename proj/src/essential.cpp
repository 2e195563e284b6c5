#include "superdeg/essential.hpp"

#include "superdeg/error.hpp"

#include <functional>
#include <set>
#include <sstream>

namespace superdeg {

SparseVector EssentialSet::express(const MultiExponent &e) const {
  if (!eval_)
    throw Error("essential set has no evaluator attached");
  if (!e.valid())
    return SparseVector();
  Weight w = eval_->weight_of(e);
  if (!eval_->weight_occurs(w))
    return SparseVector();
  SparseVector v = eval_->act(e);
  if (v.is_zero())
    return v;
  auto it = blocks_.find(w);
  if (it == blocks_.end())
    throw InternalError("PBW vector of weight " + weight_to_string(w) +
                        " has no essential block");
  auto local = it->second.acc.express_sparse(v);
  if (!local)
    throw InternalError("PBW vector outside the span of the essential vectors");
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

std::string EssentialSet::serialize() const {
  std::ostringstream os;
  for (const auto &e : monomials)
    os << e.to_string() << " k=" << level << "\n";
  return os.str();
}

EssentialSet essential_monomials(PbwEvaluator &eval, std::size_t module_dim,
                                 const MonomialOrder &order, unsigned level) {
  EssentialSet es;
  es.level = level;
  es.order = order;
  es.eval_ = &eval;
  const std::size_t n = eval.basis().n(), q = eval.basis().q();
  if (order.dim() != n + q)
    throw UsageError("order has " + std::to_string(order.dim()) +
                     " variables, the negative basis has " + std::to_string(n + q));
  unsigned bound = eval.degree_bound();
  std::size_t rank = 0;
  for (const auto &e : enumerate_monomials(order, n, q, bound)) {
    if (rank == module_dim)
      break;
    Weight w = eval.weight_of(e);
    if (!eval.weight_occurs(w))
      continue;
    SparseVector v = eval.act(e);
    if (v.is_zero())
      continue;
    auto &block = es.blocks_[w];
    if (std::holds_alternative<Independent>(block.acc.insert(v))) {
      block.members.push_back(es.monomials.size());
      es.index_[e] = es.monomials.size();
      es.monomials.push_back(e);
      ++rank;
    }
  }
  if (rank != module_dim)
    throw NotConvergedError("essential scan found " + std::to_string(rank) + " of " +
                                std::to_string(module_dim) + " vectors by degree " +
                                std::to_string(bound),
                            bound);
  return es;
}

SemigroupElement semigroup_add(const SemigroupElement &a, const SemigroupElement &b) {
  if (a.is_bottom() || b.is_bottom())
    return SemigroupElement::bottom();
  MultiExponent s = *a.exponent + *b.exponent;
  if (!s.valid())
    return SemigroupElement::bottom();
  return {s, a.level + b.level};
}

SemigroupReport check_semigroup_property(const EssentialSet &es_k1,
                                         const EssentialSet &es_k2,
                                         const EssentialSet &es_sum) {
  if (es_sum.level != es_k1.level + es_k2.level)
    throw UsageError("semigroup check needs es at level k1 + k2");
  SemigroupReport r;
  for (const auto &a : es_k1.monomials)
    for (const auto &b : es_k2.monomials) {
      ++r.pairs_checked;
      auto s = semigroup_add({a, es_k1.level}, {b, es_k2.level});
      if (s.is_bottom())
        continue;
      ++r.compatible_pairs;
      if (!es_sum.contains(*s.exponent))
        r.violations.emplace_back(a, b);
    }
  return r;
}

std::vector<std::vector<std::size_t>> decompositions(const EssentialSet &es1,
                                                     const MultiExponent &target,
                                                     unsigned k, std::size_t limit) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> chosen;
  std::set<std::pair<MultiExponent, std::pair<unsigned, std::size_t>>> dead;
  std::function<bool(const MultiExponent &, unsigned, std::size_t)> rec =
      [&](const MultiExponent &rest, unsigned left, std::size_t from) -> bool {
    if (left == 0) {
      if (rest.is_zero()) {
        out.push_back(chosen);
        return true;
      }
      return false;
    }
    auto key = std::make_pair(rest, std::make_pair(left, from));
    if (dead.count(key))
      return false;
    bool found = false;
    for (std::size_t i = from; i < es1.monomials.size(); ++i) {
      const auto &e = es1.monomials[i];
      if (!e.divides(rest))
        continue;
      chosen.push_back(i);
      found |= rec(rest - e, left - 1, i);
      chosen.pop_back();
      if (out.size() >= limit)
        return true;
    }
    if (!found)
      dead.insert(key);
    return found;
  };
  if (target.valid())
    rec(target, k, 0);
  return out;
}

FavourableReport is_favourable(const std::vector<const EssentialSet *> &es) {
  FavourableReport r;
  if (es.empty())
    return r;
  const EssentialSet &es1 = *es.front();
  r.checked_up_to = static_cast<unsigned>(es.size());
  for (std::size_t k = 2; k <= es.size(); ++k) {
    const EssentialSet &esk = *es[k - 1];
    for (const auto &e : esk.monomials) {
      auto d = decompositions(es1, e, static_cast<unsigned>(k), 1);
      if (d.empty()) {
        r.favourable = false;
        r.failures.emplace_back(static_cast<unsigned>(k), e);
      } else {
        r.witnesses[static_cast<unsigned>(k)][e] = d.front();
      }
    }
  }
  return r;
}

RootCounts root_counts(const MultiExponent &e, const LieSuperalgebra &g,
                       const NegativeBasis &nb) {
  RootCounts c;
  for (std::size_t k = 0; k < e.q(); ++k)
    if (e.odd[k])
      c[g.roots()[nb.positive_of[nb.odd_positions[k]]].coords] += e.odd[k];
  for (std::size_t k = 0; k < e.n(); ++k)
    if (e.even[k])
      c[g.roots()[nb.positive_of[nb.even_positions[k]]].coords] += e.even[k];
  return c;
}

std::vector<std::pair<MultiExponent, unsigned>> parse_exponent_lines(const std::string &text) {
  std::vector<std::pair<MultiExponent, unsigned>> out;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos)
      line = line.substr(0, hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos)
      continue;
    unsigned level = 1;
    auto kpos = line.find("k=");
    std::string body = line;
    if (kpos != std::string::npos) {
      try {
        level = static_cast<unsigned>(std::stoul(line.substr(kpos + 2)));
      } catch (const std::exception &) {
        throw ParseError("bad level in '" + line + "'", lineno);
      }
      body = line.substr(0, kpos);
    }
    try {
      out.emplace_back(MultiExponent::parse(body), level);
    } catch (const ParseError &e) {
      throw ParseError(e.what(), lineno);
    }
    if (!out.back().first.valid())
      throw ParseError("odd exponent outside {0,1}", lineno);
    if (out.size() > 1 && (out.back().first.n() != out.front().first.n() ||
                           out.back().first.q() != out.front().first.q()))
      throw ParseError("exponent ambient differs from the first line", lineno);
  }
  return out;
}

} // namespace superdeg
