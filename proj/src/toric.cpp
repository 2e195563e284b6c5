#include "superdeg/toric.hpp"

#include "superdeg/error.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace superdeg {

namespace {

MultiExponent with_v(const MultiExponent &e, unsigned d) {
  MultiExponent out = e;
  out.even.push_back(d);
  return out;
}

MultiExponent without_v(const MultiExponent &e) {
  MultiExponent out = e;
  out.even.pop_back();
  return out;
}

// Terms of p whose exponent is not xi^I x^m v for some (I, m) in K.
SuperPolynomial outside_degree_one(const ExponentSet &k, const SuperPolynomial &p) {
  SuperPolynomial r(p.n(), p.q());
  for (const auto &[e, c] : p.terms())
    if (e.even.back() != 1 || !k.contains(without_v(e)))
      r.add_term(e, c);
  return r;
}

} // namespace

ExponentSet ExponentSet::from(std::vector<MultiExponent> elements) {
  ExponentSet k;
  if (!elements.empty()) {
    k.n = elements[0].n();
    k.q = elements[0].q();
  }
  for (const auto &e : elements) {
    if (e.n() != k.n || e.q() != k.q)
      throw UsageError("exponent set mixes ambients: " + e.to_string());
    if (!e.valid())
      throw UsageError("odd part outside {0,1}: " + e.to_string());
  }
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  k.elements = std::move(elements);
  return k;
}

bool ExponentSet::contains(const MultiExponent &e) const {
  return std::binary_search(elements.begin(), elements.end(), e);
}

std::string ExponentSet::serialize() const {
  std::ostringstream out;
  for (const auto &e : elements)
    out << e.to_string() << " k=1\n";
  return out.str();
}

SemigroupSearch::SemigroupSearch(const ExponentSet &k, unsigned bound)
    : k_(&k), bound_(bound) {
  std::vector<std::size_t> nonzero;
  for (std::size_t i = 0; i < k.elements.size(); ++i) {
    if (k.elements[i].is_zero())
      has_zero_ = true;
    else
      nonzero.push_back(i);
  }
  std::vector<std::pair<MultiExponent, std::vector<std::size_t>>> layer;
  for (auto i : nonzero) {
    layer.push_back({k.elements[i], {i}});
    reached_[k.elements[i]].emplace(1, std::vector<std::size_t>{i});
  }
  for (unsigned c = 2; c <= bound; ++c) {
    std::vector<std::pair<MultiExponent, std::vector<std::size_t>>> next;
    for (const auto &[x, parts] : layer)
      for (auto i : nonzero) {
        MultiExponent s = x + k.elements[i];
        if (!s.valid())
          continue;
        auto &counts = reached_[s];
        if (counts.count(c))
          continue;
        auto p = parts;
        p.push_back(i);
        counts.emplace(c, p);
        next.push_back({s, std::move(p)});
      }
    layer = std::move(next);
  }
}

SemigroupSearch::Answer SemigroupSearch::member(const MultiExponent &e) const {
  if (e.is_zero())
    return has_zero_ ? Answer::Yes : Answer::No;
  if (reached_.count(e))
    return Answer::Yes;
  // every nonzero summand adds at least 1 to the total degree
  return e.degree() <= bound_ ? Answer::No : Answer::Inconclusive;
}

SemigroupSearch::Answer SemigroupSearch::member_at(const MultiExponent &e, unsigned d) const {
  if (d == 0)
    return e.is_zero() ? Answer::Yes : Answer::No;
  if (e.is_zero())
    return has_zero_ ? Answer::Yes : Answer::No;
  auto it = reached_.find(e);
  if (it != reached_.end())
    for (const auto &[c, parts] : it->second)
      if (c == d || (c < d && has_zero_))
        return Answer::Yes;
  return std::min(d, e.degree()) <= bound_ ? Answer::No : Answer::Inconclusive;
}

std::optional<std::vector<std::size_t>> SemigroupSearch::witness(const MultiExponent &e) const {
  if (e.is_zero()) {
    for (std::size_t i = 0; i < k_->elements.size(); ++i)
      if (k_->elements[i].is_zero())
        return std::vector<std::size_t>{i};
    return std::nullopt;
  }
  auto it = reached_.find(e);
  if (it == reached_.end())
    return std::nullopt;
  return it->second.begin()->second;
}

std::string to_string(SemigroupSearch::Answer a) {
  switch (a) {
  case SemigroupSearch::Answer::Yes:
    return "yes";
  case SemigroupSearch::Answer::No:
    return "no";
  default:
    return "inconclusive";
  }
}

OddRemovalReport check_odd_removal(const ExponentSet &k) {
  OddRemovalReport rep;
  for (const auto &e : k.elements)
    for (std::size_t i = 0; i < k.q; ++i)
      if (e.odd[i]) {
        MultiExponent r = e;
        r.odd[i] = 0;
        if (!k.contains(r))
          rep.violations.push_back({e, i});
      }
  rep.ok = rep.violations.empty();
  return rep;
}

LaurentReport check_even_laurent(const ExponentSet &k) {
  LaurentReport rep;
  std::vector<std::vector<long>> rows;
  for (const auto &e : k.elements)
    if (e.odd_degree() == 0) {
      std::vector<long> row(e.even.begin(), e.even.end());
      row.push_back(1);
      rows.push_back(std::move(row));
    }
  rep.generators = rows.size();
  if (rows.empty())
    return rep;
  auto m = IntegerMatrix::from_rows(rows);
  rep.invariant_factors = smith_normal_form(m).invariant_factors;
  rep.ok = generates_full_lattice(m);
  return rep;
}

ReachabilityReport check_odd_reachable(const ExponentSet &k, unsigned bound) {
  ReachabilityReport rep;
  SemigroupSearch search(k, bound);
  for (std::size_t i = 0; i < k.q; ++i) {
    // Odd parts of summands are disjoint, so a sum with odd part e_i has
    // exactly one summand with odd part e_i; the search can stop at one.
    std::optional<std::vector<std::size_t>> found;
    for (std::size_t a = 0; a < k.elements.size() && !found; ++a) {
      const auto &e = k.elements[a];
      if (e.odd_degree() == 1 && e.odd[i])
        found = search.witness(e);
    }
    rep.answers.push_back(found ? SemigroupSearch::Answer::Yes : SemigroupSearch::Answer::No);
    rep.witnesses.push_back(found ? *found : std::vector<std::size_t>{});
    if (!found)
      rep.ok = false;
  }
  return rep;
}

bool ActionSpace::residuals_zero() const {
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (const auto &c : basis[j])
      for (const auto &row : constraints[j])
        if (row.dot(c) != 0)
          return false;
  return true;
}

bool SuperTorusAction::readings_differ() const {
  return graded.constraints != ungraded.constraints;
}

SuperTorusAction solve_action(const ExponentSet &k, unsigned bound) {
  SemigroupSearch search(k, bound);
  SuperTorusAction act;
  for (bool graded : {true, false}) {
    ActionSpace &space = graded ? act.graded : act.ungraded;
    for (std::size_t j = 0; j < k.q; ++j) {
      std::vector<SparseVector> rows;
      for (const auto &e : k.elements) {
        if (e.odd[j])
          continue;
        MultiExponent target = e;
        target.odd[j] = 1;
        auto ans = graded ? search.member_at(target, 1) : search.member(target);
        if (ans == SemigroupSearch::Answer::Yes)
          continue;
        if (ans == SemigroupSearch::Answer::Inconclusive)
          space.inconclusive.push_back({e, j});
        SparseVector row;
        for (std::size_t t = 0; t < k.n; ++t)
          if (e.even[t])
            row.set(t, Rational(e.even[t]));
        row.set(k.n, 1);
        if (std::find(rows.begin(), rows.end(), row) == rows.end())
          rows.push_back(std::move(row));
      }
      space.basis.push_back(nullspace(rows, k.n + 1));
      space.constraints.push_back(std::move(rows));
    }
  }
  return act;
}

SuperPolynomial odd_derivative(const SuperPolynomial &p, std::size_t i) {
  SuperPolynomial out(p.n(), p.q());
  for (const auto &[e, c] : p.terms()) {
    if (!e.odd[i])
      continue;
    unsigned passed = 0;
    for (std::size_t j = i + 1; j < e.q(); ++j)
      passed += e.odd[j];
    MultiExponent r = e;
    r.odd[i] = 0;
    out.add_term(r, passed % 2 ? -c : c);
  }
  return out;
}

ClosureReport verify_derivation_closure(const ExponentSet &k, const ActionSpace &action) {
  ClosureReport rep;
  std::size_t n = k.n + 1, q = k.q;
  for (const auto &e : k.elements) {
    SuperPolynomial mono = SuperPolynomial::monomial(with_v(e, 1));
    SparseVector mv;
    for (std::size_t t = 0; t < k.n; ++t)
      if (e.even[t])
        mv.set(t, Rational(e.even[t]));
    mv.set(k.n, 1);
    for (std::size_t i = 0; i < q; ++i) {
      ++rep.derivatives_checked;
      SuperPolynomial r = outside_degree_one(k, -odd_derivative(mono, i));
      if (!r.is_zero())
        rep.failures.push_back({e, i, std::nullopt, r});
      for (std::size_t j = 0; j < q && j < action.basis.size(); ++j)
        for (const auto &c : action.basis[j]) {
          ++rep.derivatives_checked;
          Rational coef = mv.dot(c);
          if (coef == 0)
            continue;
          SuperPolynomial term = SuperPolynomial::odd_var(n, q, j) * mono * coef;
          SuperPolynomial res = outside_degree_one(k, term);
          if (!res.is_zero())
            rep.failures.push_back({e, i, j, res});
        }
    }
  }
  rep.ok = rep.failures.empty();
  return rep;
}

std::string to_string(ToricCertificate::Verdict v) {
  switch (v) {
  case ToricCertificate::Verdict::Toric:
    return "toric";
  case ToricCertificate::Verdict::HypothesesNotMet:
    return "hypotheses-not-met";
  default:
    return "inconclusive";
  }
}

ToricCertificate certify(const ExponentSet &k, unsigned bound) {
  if (k.elements.empty())
    throw UsageError("empty exponent set");
  ToricCertificate cert;
  cert.bound = bound ? bound : static_cast<unsigned>(2 * k.q + 2);
  cert.odd_removal = check_odd_removal(k);
  cert.laurent = check_even_laurent(k);
  cert.reachability = check_odd_reachable(k, cert.bound);
  cert.action = solve_action(k, cert.bound);
  cert.closure = verify_derivation_closure(k, cert.action.graded);

  cert.localization_witness = MultiExponent(k.n, k.q);
  for (const auto &e : k.elements)
    if (e.odd_degree() == 0) {
      cert.localization_witness = cert.localization_witness + e;
      ++cert.localization_v_degree;
    }

  if (!cert.odd_removal.ok)
    cert.reasons.push_back("odd removal fails for " +
                           std::to_string(cert.odd_removal.violations.size()) + " element(s)");
  if (!cert.laurent.ok)
    cert.reasons.push_back("even part does not generate the Laurent lattice");
  if (!cert.reachability.ok)
    cert.reasons.push_back("some xi_i is not reachable");
  if (!cert.action.graded.residuals_zero())
    cert.reasons.push_back("torus action residual is nonzero");
  bool inconclusive = !cert.action.graded.inconclusive.empty();

  if (!cert.reasons.empty())
    cert.verdict = ToricCertificate::Verdict::HypothesesNotMet;
  else if (!cert.closure.ok) {
    cert.verdict = ToricCertificate::Verdict::Inconclusive;
    cert.reasons.push_back("derivation closure fails");
  } else if (inconclusive) {
    cert.verdict = ToricCertificate::Verdict::Inconclusive;
    cert.reasons.push_back("membership search bound " + std::to_string(cert.bound) + " binds");
  } else {
    cert.verdict = ToricCertificate::Verdict::Toric;
  }
  cert.faithful = cert.verdict == ToricCertificate::Verdict::Toric && cert.laurent.ok &&
                  cert.reachability.ok;
  return cert;
}

} // namespace superdeg
