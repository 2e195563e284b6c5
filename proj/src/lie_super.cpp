#include "superdeg/lie_super.hpp"

#include "superdeg/error.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace superdeg {

std::string weight_to_string(const Weight &w) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < w.size(); ++i)
    os << (i ? "," : "") << w[i].get_str();
  os << ")";
  return os.str();
}

namespace {

SparseVector flatten(const SparseMatrix &x) {
  std::vector<std::pair<std::size_t, Rational>> items;
  for (std::size_t j = 0; j < x.cols(); ++j)
    for (const auto &[i, v] : x.column(j).entries())
      items.emplace_back(i * x.cols() + j, v);
  std::sort(items.begin(), items.end(),
            [](const auto &a, const auto &b) { return a.first < b.first; });
  SparseVector out;
  for (auto &[i, v] : items)
    out.append(i, v);
  return out;
}

SparseMatrix unflatten(const SparseVector &v, std::size_t d) {
  SparseMatrix x(d, d);
  for (const auto &[idx, val] : v.entries())
    x.set(idx / d, idx % d, val);
  return x;
}

unsigned unit_parity(std::size_t i, std::size_t j, std::size_t p) {
  return ((i >= p) != (j >= p)) ? 1 : 0;
}

} // namespace

std::size_t LieSuperalgebra::even_part_dim() const {
  return static_cast<std::size_t>(std::count(parity_.begin(), parity_.end(), 0u));
}

SparseMatrix LieSuperalgebra::bracket(const SparseMatrix &x, unsigned px,
                                      const SparseMatrix &y, unsigned py) {
  SparseMatrix r = x * y;
  r.axpy(Rational((px & py) ? 1 : -1), y * x);
  return r;
}

SparseMatrix LieSuperalgebra::bracket(std::size_t a, std::size_t b) const {
  return bracket(basis_[a], parity_[a], basis_[b], parity_[b]);
}

SparseVector LieSuperalgebra::coordinates(const SparseMatrix &x) const {
  auto c = span_.express_sparse(flatten(x));
  if (!c)
    throw InternalError("matrix does not lie in the algebra");
  return *c;
}

Weight LieSuperalgebra::ambient_weight(std::size_t i) const {
  Weight w(weight_basis_.size());
  for (std::size_t k = 0; k < w.size(); ++k)
    w[k] = weight_basis_[k][i];
  return w;
}

Rational LieSuperalgebra::evaluate(const Weight &cartan_element, const Weight &root) {
  if (cartan_element.size() != root.size())
    throw UsageError("functional has " + std::to_string(cartan_element.size()) +
                     " coordinates, the weight space has dimension " +
                     std::to_string(root.size()));
  Rational s = 0;
  for (std::size_t k = 0; k < root.size(); ++k)
    s += cartan_element[k] * root[k];
  return s;
}

LieSuperalgebra LieSuperalgebra::build(const std::string &family, std::size_t m,
                                       std::size_t n) {
  LieSuperalgebra g;
  g.family_ = family;
  g.m_ = m;
  g.n_ = n;
  std::vector<SparseVector> base_constraints;
  std::vector<std::vector<SparseVector>> parity_constraints(2);

  if (family == "gl" || family == "sl") {
    g.p_ = m;
    g.q_ = n;
    std::size_t d = m + n;
    if (d == 0)
      throw UsageError(family + "(0|0) is empty");
    if (family == "sl") {
      SparseVector str;
      for (std::size_t i = 0; i < d; ++i)
        str.append(i * d + i, Rational(i < m ? 1 : -1));
      base_constraints.push_back(str);
      if (m == n) {
        g.warnings_.push_back("sl(n|n) contains the identity as a central "
                              "element; psl is not formed; weights are taken on "
                              "all diagonal matrices");
        g.full_diagonal_weights_ = true;
      }
    }
  } else if (family == "osp") {
    g.p_ = m;
    g.q_ = 2 * n;
    std::size_t d = g.p_ + g.q_;
    if (d == 0)
      throw UsageError("osp(0|0) is empty");
    if ((m == 2 && n == 1) || (m == 4 && n == 1))
      g.warnings_.push_back("osp(" + std::to_string(m) + "|" + std::to_string(2 * n) +
                            ") is outside the listed parameter range");
    std::vector<std::vector<long>> form(d, std::vector<long>(d, 0));
    std::size_t off = m % 2, k = m / 2;
    if (off)
      form[0][0] = 1;
    for (std::size_t i = 0; i < k; ++i) {
      form[off + i][off + k + i] = 1;
      form[off + k + i][off + i] = 1;
    }
    for (std::size_t j = 0; j < n; ++j) {
      form[m + j][m + n + j] = 1;
      form[m + n + j][m + j] = -1;
    }
    for (unsigned par = 0; par < 2; ++par)
      for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) {
          long s = (par && a >= m) ? -1 : 1;
          std::map<std::size_t, Rational> row;
          for (std::size_t c = 0; c < d; ++c) {
            if (form[c][b])
              row[c * d + a] += form[c][b];
            if (form[a][c])
              row[c * d + b] += s * form[a][c];
          }
          SparseVector v;
          for (auto &[idx, val] : row)
            if (sgn(val) != 0)
              v.append(idx, val);
          if (!v.is_zero())
            parity_constraints[par].push_back(v);
        }
  } else if (family == "D21a" || family == "D(2,1;a)" || family == "F4" ||
             family == "F(4)" || family == "G3" || family == "G(3)") {
    throw UnsupportedFamilyError("family '" + family +
                                 "' has no matrix realization in this tool");
  } else {
    throw UnsupportedFamilyError("unknown algebra family '" + family +
                                 "' (expected gl, sl or osp)");
  }

  for (unsigned par = 0; par < 2; ++par)
    parity_constraints[par].insert(parity_constraints[par].end(),
                                   base_constraints.begin(), base_constraints.end());
  g.decompose(parity_constraints);
  return g;
}

void LieSuperalgebra::decompose(const std::vector<std::vector<SparseVector>> &constraints) {
  const std::size_t d = p_ + q_;
  const std::size_t dd = d * d;

  // Solution space of the defining rows restricted to the given unit
  // positions (all others forced to zero) and to one parity.
  auto solve = [&](unsigned par, const std::vector<bool> &allowed) {
    std::vector<SparseVector> rows = constraints[par];
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        if (!allowed[i * d + j] || unit_parity(i, j, p_) != par)
          rows.push_back(SparseVector::unit(i * d + j));
    return nullspace(rows, dd);
  };

  std::vector<bool> everything(dd, true);
  std::size_t total = solve(0, everything).size() + solve(1, everything).size();

  std::vector<bool> diagonal(dd, false);
  for (std::size_t i = 0; i < d; ++i)
    diagonal[i * d + i] = true;
  SpanAccumulator diag_acc;
  for (const auto &h : solve(0, diagonal)) {
    SparseVector dv;
    for (const auto &[idx, val] : h.entries())
      dv.append(idx / d, val);
    diag_acc.insert(dv);
  }
  for (const auto &[pivot, row] : diag_acc.rows()) {
    SparseMatrix h(d, d);
    for (const auto &[i, val] : row.entries())
      h.set(i, i, val);
    basis_.push_back(h);
    parity_.push_back(0);
    weight_basis_.push_back(row.to_dense(d));
  }
  cartan_dim_ = basis_.size();
  if (full_diagonal_weights_) {
    weight_basis_.clear();
    for (std::size_t i = 0; i < d; ++i)
      weight_basis_.push_back(SparseVector::unit(i).to_dense(d));
  }

  std::map<Weight, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      if (i == j)
        continue;
      Weight w(weight_basis_.size());
      for (std::size_t k = 0; k < w.size(); ++k)
        w[k] = weight_basis_[k][i] - weight_basis_[k][j];
      groups[w].push_back(i * d + j);
    }

  for (const auto &[w, units] : groups) {
    std::vector<bool> allowed(dd, false);
    for (auto u : units)
      allowed[u] = true;
    bool is_zero_weight =
        std::all_of(w.begin(), w.end(), [](const Rational &x) { return sgn(x) == 0; });
    for (unsigned par = 0; par < 2; ++par) {
      auto space = solve(par, allowed);
      if (space.empty())
        continue;
      if (is_zero_weight)
        throw InternalError("Cartan subalgebra is not self-centralizing in the "
                            "diagonal realization");
      if (space.size() > 1)
        throw InternalError("root space of dimension " + std::to_string(space.size()) +
                            " for weight " + weight_to_string(w));
      SparseVector v = space.front();
      v.scale(Rational(1) / v.entries().front().second);
      roots_.push_back(Root{w, par, basis_.size()});
      basis_.push_back(unflatten(v, d));
      parity_.push_back(par);
    }
  }
  for (const auto &x : basis_)
    span_.insert(flatten(x));
  if (span_.rank() != total || basis_.size() != total)
    throw InternalError("root decomposition does not exhaust the algebra");
}

bool BorelChoice::is_positive(std::size_t root) const {
  return std::find(positive.begin(), positive.end(), root) != positive.end();
}

BorelChoice choose_borel(const LieSuperalgebra &g, const Weight &functional) {
  BorelChoice b;
  b.functional = functional;
  const auto &roots = g.roots();
  for (std::size_t r = 0; r < roots.size(); ++r) {
    Rational v = LieSuperalgebra::evaluate(functional, roots[r].coords);
    if (sgn(v) == 0)
      throw DegenerateFunctionalError("functional " + weight_to_string(functional) +
                                      " vanishes on root " +
                                      weight_to_string(roots[r].coords));
    (sgn(v) > 0 ? b.positive : b.negative).push_back(r);
  }
  std::map<Weight, std::size_t> positive_set;
  for (auto r : b.positive)
    positive_set[roots[r].coords] = r;
  for (auto r : b.positive) {
    bool decomposable = false;
    for (auto s : b.positive) {
      Weight diff = roots[r].coords;
      for (std::size_t k = 0; k < diff.size(); ++k)
        diff[k] -= roots[s].coords[k];
      if (positive_set.count(diff)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable)
      b.simple.push_back(r);
  }
  SpanAccumulator acc;
  for (auto s : b.simple)
    if (std::holds_alternative<Dependent>(acc.insert(SparseVector::from_dense(roots[s].coords))))
      throw InternalError("simple roots are linearly dependent");
  for (auto r : b.positive) {
    auto c = acc.express(SparseVector::from_dense(roots[r].coords));
    if (!c)
      throw InternalError("positive root outside the span of simple roots");
    Rational h = 0;
    for (const auto &x : *c) {
      if (sgn(x) < 0 || x.get_den() != 1)
        throw InternalError("positive root is not a nonnegative integral "
                            "combination of simple roots");
      h += x;
    }
    b.heights.push_back(h);
    b.simple_coords.push_back(*c);
  }
  return b;
}

Weight default_functional(const LieSuperalgebra &g) {
  const std::size_t l = g.weight_dim();
  for (long c = 2; c < 64; ++c) {
    Weight phi(l);
    Rational v = 1;
    for (std::size_t k = l; k-- > 0;) {
      phi[k] = v;
      v *= c;
    }
    bool ok = std::all_of(g.roots().begin(), g.roots().end(), [&](const Root &r) {
      return sgn(LieSuperalgebra::evaluate(phi, r.coords)) != 0;
    });
    if (ok)
      return phi;
  }
  throw DegenerateFunctionalError("no default functional found; supply one");
}

NegativeBasis negative_basis(const LieSuperalgebra &g, const BorelChoice &borel,
                             const std::vector<std::size_t> &permutation) {
  const auto &roots = g.roots();
  const std::size_t N = borel.positive.size();
  std::vector<std::size_t> order(N);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (borel.heights[a] != borel.heights[b])
      return borel.heights[a] < borel.heights[b];
    return roots[borel.positive[a]].coords < roots[borel.positive[b]].coords;
  });
  if (!permutation.empty()) {
    if (permutation.size() != N)
      throw UsageError("basis permutation has length " +
                       std::to_string(permutation.size()) + ", expected " +
                       std::to_string(N));
    std::vector<std::size_t> sorted = permutation;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < N; ++i)
      if (sorted[i] != i)
        throw UsageError("basis permutation is not a permutation of 1.." +
                         std::to_string(N));
    std::vector<std::size_t> permuted(N);
    for (std::size_t k = 0; k < N; ++k)
      permuted[k] = order[permutation[k]];
    order = permuted;
  }
  NegativeBasis nb;
  for (std::size_t k = 0; k < N; ++k) {
    std::size_t pos_root = borel.positive[order[k]];
    Weight neg = roots[pos_root].coords;
    for (auto &x : neg)
      x = -x;
    auto it = std::find_if(roots.begin(), roots.end(),
                           [&](const Root &r) { return r.coords == neg; });
    if (it == roots.end())
      throw InternalError("negative of a positive root is missing");
    nb.root_of.push_back(static_cast<std::size_t>(it - roots.begin()));
    nb.positive_of.push_back(pos_root);
    (it->parity ? nb.odd_positions : nb.even_positions).push_back(k);
  }
  return nb;
}

std::string root_label(const BorelChoice &borel, std::size_t positive_root) {
  auto it = std::find(borel.positive.begin(), borel.positive.end(), positive_root);
  if (it == borel.positive.end())
    throw Error("root is not positive");
  const auto &c = borel.simple_coords[static_cast<std::size_t>(it - borel.positive.begin())];
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (sgn(c[i]) == 0)
      continue;
    if (!first)
      os << "+";
    first = false;
    if (c[i] != 1)
      os << c[i].get_str();
    os << "a" << (i + 1);
  }
  return os.str();
}

} // namespace superdeg
