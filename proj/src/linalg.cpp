#include "superdeg/linalg.hpp"

#include "superdeg/error.hpp"

#include <algorithm>
#include <numeric>

namespace superdeg {

SpanAccumulator::Reduction SpanAccumulator::reduce(const SparseVector &v) const {
  Reduction r{v, SparseVector()};
  // Rows are fully reduced, so each pivot coefficient can be read off v.
  for (const auto &[idx, val] : v.entries()) {
    auto it = rows_.find(idx);
    if (it == rows_.end())
      continue;
    r.residual.axpy(-val, it->second);
    r.combination.axpy(val, combos_.at(idx));
  }
  return r;
}

InsertResult SpanAccumulator::insert(const SparseVector &v) {
  Reduction r = reduce(v);
  if (r.residual.is_zero())
    return Dependent{r.combination.to_dense(rank())};

  std::size_t pivot = r.residual.lead_index();
  Rational inv = Rational(1) / r.residual.get(pivot);
  SparseVector row = r.residual * inv;
  SparseVector combo = SparseVector::unit(rank());
  combo.axpy(Rational(-1), r.combination);
  combo.scale(inv);

  for (auto &[p, other] : rows_) {
    Rational c = other.get(pivot);
    if (sgn(c) == 0)
      continue;
    other.axpy(-c, row);
    combos_[p].axpy(-c, combo);
  }
  rows_.emplace(pivot, std::move(row));
  combos_.emplace(pivot, std::move(combo));
  originals_.push_back(v);
  return Independent{};
}

std::optional<std::vector<Rational>>
SpanAccumulator::express(const SparseVector &v) const {
  Reduction r = reduce(v);
  if (!r.residual.is_zero())
    return std::nullopt;
  return r.combination.to_dense(rank());
}

std::optional<SparseVector>
SpanAccumulator::express_sparse(const SparseVector &v) const {
  Reduction r = reduce(v);
  if (!r.residual.is_zero())
    return std::nullopt;
  return std::move(r.combination);
}

bool SpanAccumulator::contains(const SparseVector &v) const {
  return reduce(v).residual.is_zero();
}

std::vector<SparseVector> nullspace(const std::vector<SparseVector> &rows,
                                    std::size_t dim) {
  SpanAccumulator acc;
  for (const auto &r : rows)
    acc.insert(r);
  std::vector<SparseVector> basis;
  for (std::size_t f = 0; f < dim; ++f) {
    if (acc.rows().count(f))
      continue;
    SparseVector x = SparseVector::unit(f);
    for (const auto &[p, row] : acc.rows()) {
      Rational c = row.get(f);
      if (sgn(c) != 0)
        x.set(p, -c);
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

std::size_t rank_of(const std::vector<SparseVector> &vectors) {
  SpanAccumulator acc;
  for (const auto &v : vectors)
    acc.insert(v);
  return acc.rank();
}

IntegerMatrix IntegerMatrix::from_rows(const std::vector<std::vector<long>> &rows) {
  std::size_t c = rows.empty() ? 0 : rows.front().size();
  IntegerMatrix m(rows.size(), c);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != c)
      throw Error("ragged integer matrix");
    for (std::size_t j = 0; j < c; ++j)
      m.at(i, j) = rows[i][j];
  }
  return m;
}

namespace {

void swap_rows(IntegerMatrix &m, std::size_t a, std::size_t b) {
  if (a == b)
    return;
  for (std::size_t j = 0; j < m.cols(); ++j)
    std::swap(m.at(a, j), m.at(b, j));
}

void swap_cols(IntegerMatrix &m, std::size_t a, std::size_t b) {
  if (a == b)
    return;
  for (std::size_t i = 0; i < m.rows(); ++i)
    std::swap(m.at(i, a), m.at(i, b));
}

} // namespace

SmithForm smith_normal_form(const IntegerMatrix &input) {
  IntegerMatrix m = input;
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t t = 0;
  while (t < rows && t < cols) {
    // Smallest nonzero entry of the trailing block becomes the pivot.
    bool found = false;
    std::size_t pi = t, pj = t;
    Integer best;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j) {
        const Integer &x = m.at(i, j);
        if (sgn(x) == 0)
          continue;
        if (!found || abs(x) < best) {
          best = abs(x);
          pi = i;
          pj = j;
          found = true;
        }
      }
    if (!found)
      break;
    swap_rows(m, t, pi);
    swap_cols(m, t, pj);

    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (sgn(m.at(i, t)) == 0)
          continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), m.at(i, t).get_mpz_t(), m.at(t, t).get_mpz_t());
        for (std::size_t j = t; j < cols; ++j)
          m.at(i, j) -= q * m.at(t, j);
        if (sgn(m.at(i, t)) != 0) {
          swap_rows(m, t, i);
          clean = false;
        }
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (sgn(m.at(t, j)) == 0)
          continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), m.at(t, j).get_mpz_t(), m.at(t, t).get_mpz_t());
        for (std::size_t i = t; i < rows; ++i)
          m.at(i, j) -= q * m.at(i, t);
        if (sgn(m.at(t, j)) != 0) {
          swap_cols(m, t, j);
          clean = false;
        }
      }
      if (!clean)
        continue;
      // Divisibility: fold a non-divisible row into the pivot row.
      for (std::size_t i = t + 1; i < rows && clean; ++i)
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (!mpz_divisible_p(m.at(i, j).get_mpz_t(), m.at(t, t).get_mpz_t())) {
            for (std::size_t k = t; k < cols; ++k)
              m.at(t, k) += m.at(i, k);
            clean = false;
            break;
          }
        }
    }
    if (sgn(m.at(t, t)) < 0)
      for (std::size_t j = t; j < cols; ++j)
        m.at(t, j) = -m.at(t, j);
    ++t;
  }
  SmithForm out;
  out.diagonal_form = m;
  for (std::size_t i = 0; i < std::min(rows, cols); ++i)
    if (sgn(m.at(i, i)) != 0)
      out.invariant_factors.push_back(m.at(i, i));
  return out;
}

bool generates_full_lattice(const IntegerMatrix &m) {
  SmithForm s = smith_normal_form(m);
  if (s.invariant_factors.size() != m.cols())
    return false;
  return std::all_of(s.invariant_factors.begin(), s.invariant_factors.end(),
                     [](const Integer &d) { return d == 1; });
}

Integer determinant(const IntegerMatrix &input) {
  if (input.rows() != input.cols())
    throw Error("determinant of a non-square matrix");
  IntegerMatrix m = input;
  const std::size_t n = m.rows();
  if (n == 0)
    return Integer(1);
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(m.at(k, k)) == 0) {
      std::size_t r = k + 1;
      while (r < n && sgn(m.at(r, k)) == 0)
        ++r;
      if (r == n)
        return Integer(0);
      swap_rows(m, k, r);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m.at(i, j) = v;
      }
    prev = m.at(k, k);
  }
  return sign * m.at(n - 1, n - 1);
}

namespace {

using System = std::map<std::vector<Rational>, Rational>;

// Scale to a primitive integer normal vector; keep the tightest bound.
void add_normalized(System &sys, std::vector<Rational> coeffs, Rational rhs) {
  Integer l = 1;
  for (const auto &c : coeffs)
    if (sgn(c) != 0)
      l = lcm(l, c.get_den());
  Integer g = 0;
  for (auto &c : coeffs) {
    c *= l;
    if (sgn(c) != 0)
      g = gcd(g, c.get_num());
  }
  rhs *= l;
  if (sgn(g) != 0) {
    for (auto &c : coeffs)
      c /= g;
    rhs /= g;
  }
  auto [it, inserted] = sys.emplace(std::move(coeffs), rhs);
  if (!inserted && rhs > it->second)
    it->second = rhs;
}

bool trivially_infeasible(const System &sys) {
  for (const auto &[c, r] : sys)
    if (std::all_of(c.begin(), c.end(), [](const Rational &x) { return sgn(x) == 0; }) &&
        sgn(r) > 0)
      return true;
  return false;
}

System eliminate(const System &sys, std::size_t var) {
  System out;
  std::vector<std::pair<std::vector<Rational>, Rational>> pos, neg;
  for (const auto &[c, r] : sys) {
    int s = sgn(c[var]);
    if (s == 0)
      add_normalized(out, c, r);
    else if (s > 0)
      pos.emplace_back(c, r);
    else
      neg.emplace_back(c, r);
  }
  for (const auto &[cp, rp] : pos)
    for (const auto &[cn, rn] : neg) {
      Rational a = cp[var], b = -cn[var];
      std::vector<Rational> c(cp.size());
      for (std::size_t k = 0; k < c.size(); ++k)
        c[k] = b * cp[k] + a * cn[k];
      c[var] = 0;
      add_normalized(out, std::move(c), b * rp + a * rn);
    }
  return out;
}

Rational choose_value(const std::optional<Rational> &lo,
                      const std::optional<Rational> &hi) {
  if (lo) {
    Integer c;
    mpz_cdiv_q(c.get_mpz_t(), lo->get_num_mpz_t(), lo->get_den_mpz_t());
    Rational v(c);
    if (!hi || v <= *hi)
      return v;
    return *lo;
  }
  if (hi) {
    Integer f;
    mpz_fdiv_q(f.get_mpz_t(), hi->get_num_mpz_t(), hi->get_den_mpz_t());
    return std::min(Rational(0), Rational(f));
  }
  return Rational(0);
}

// Bounds on `var` from a system in which every other variable is fixed to
// `values` (only entries with index != var are read).
VariableBounds bounds_given(const System &sys, std::size_t var,
                            const std::vector<Rational> &values) {
  VariableBounds b;
  for (const auto &[c, r] : sys) {
    Rational rest = r;
    for (std::size_t k = 0; k < c.size(); ++k)
      if (k != var && sgn(c[k]) != 0)
        rest -= c[k] * values[k];
    int s = sgn(c[var]);
    if (s == 0) {
      if (sgn(rest) > 0)
        b.feasible = false;
      continue;
    }
    Rational bound = rest / c[var];
    if (s > 0) {
      if (!b.lower || bound > *b.lower)
        b.lower = bound;
    } else {
      if (!b.upper || bound < *b.upper)
        b.upper = bound;
    }
  }
  if (b.lower && b.upper && *b.lower > *b.upper)
    b.feasible = false;
  return b;
}

} // namespace

std::optional<std::vector<Rational>>
fourier_motzkin_solve(const std::vector<LinearInequality> &system,
                      std::size_t num_vars) {
  if (num_vars == 0) {
    for (const auto &ineq : system)
      if (sgn(ineq.rhs) > 0)
        return std::nullopt;
    return std::vector<Rational>{};
  }
  std::vector<System> stages(num_vars + 1);
  for (const auto &ineq : system) {
    if (ineq.coeffs.size() != num_vars)
      throw Error("inequality has wrong number of coefficients");
    add_normalized(stages[num_vars], ineq.coeffs, ineq.rhs);
  }
  // stages[k] involves variables 0..k-1 only.
  for (std::size_t k = num_vars; k > 1; --k) {
    if (trivially_infeasible(stages[k]))
      return std::nullopt;
    stages[k - 1] = eliminate(stages[k], k - 1);
  }
  if (trivially_infeasible(stages[1]))
    return std::nullopt;

  std::vector<Rational> x(num_vars, Rational(0));
  for (std::size_t k = 1; k <= num_vars; ++k) {
    VariableBounds b = bounds_given(stages[k], k - 1, x);
    if (!b.feasible)
      return std::nullopt;
    x[k - 1] = choose_value(b.lower, b.upper);
  }
  return x;
}

VariableBounds fourier_motzkin_bounds(const std::vector<LinearInequality> &system,
                                      std::size_t num_vars, std::size_t var) {
  System sys;
  for (const auto &ineq : system)
    add_normalized(sys, ineq.coeffs, ineq.rhs);
  for (std::size_t k = 0; k < num_vars; ++k) {
    if (k == var)
      continue;
    if (trivially_infeasible(sys)) {
      VariableBounds b;
      b.feasible = false;
      return b;
    }
    sys = eliminate(sys, k);
  }
  return bounds_given(sys, var, std::vector<Rational>(num_vars, Rational(0)));
}

} // namespace superdeg
