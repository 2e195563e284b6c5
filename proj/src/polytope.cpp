#include "superdeg/polytope.hpp"

#include "superdeg/error.hpp"
#include "superdeg/linalg.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace superdeg {

std::size_t InequalitySystem::even_count() const {
  return std::count_if(variables.begin(), variables.end(), [](auto &v) { return !v.odd; });
}

std::size_t InequalitySystem::odd_count() const { return size() - even_count(); }

bool InequalitySystem::is_odd_cap(std::size_t r) const {
  if (rhs[r] != 1)
    return false;
  std::size_t nonzero = 0, at = 0;
  for (std::size_t j = 0; j < size(); ++j)
    if (rows[r][j] != 0) {
      ++nonzero;
      at = j;
    }
  return nonzero == 1 && rows[r][at] == 1 && variables[at].odd;
}

bool InequalitySystem::satisfies(const std::vector<long> &point) const {
  if (point.size() != size())
    return false;
  for (std::size_t j = 0; j < size(); ++j)
    if (point[j] < 0 || (variables[j].odd && point[j] > 1))
      return false;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    Rational lhs = 0;
    for (std::size_t j = 0; j < size(); ++j)
      lhs += rows[r][j] * point[j];
    if (lhs > rhs[r])
      return false;
  }
  return true;
}

InequalitySystem InequalitySystem::parse(const std::string &text) {
  InequalitySystem sys;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;)
      tok.push_back(t);
    if (tok.empty())
      continue;
    try {
      if (tok[0] == "var") {
        if (!sys.rows.empty())
          throw ParseError("variables must precede inequalities", lineno);
        if (tok.size() < 4 || (tok[2] != "even" && tok[2] != "odd"))
          throw ParseError("expected 'var <label> <even|odd> <root...>'", lineno);
        Variable v{tok[1], tok[2] == "odd", {}};
        for (std::size_t i = 3; i < tok.size(); ++i)
          v.root.push_back(parse_rational(tok[i]));
        if (!sys.variables.empty() && v.root.size() != sys.variables[0].root.size())
          throw ParseError("root coordinates of different lengths", lineno);
        sys.variables.push_back(std::move(v));
        continue;
      }
      if (tok.size() != sys.size() + 2 || tok[sys.size()] != "<=")
        throw ParseError("expected " + std::to_string(sys.size()) +
                             " coefficients followed by '<= b'",
                         lineno);
      std::vector<Rational> row;
      for (std::size_t j = 0; j < sys.size(); ++j)
        row.push_back(parse_rational(tok[j]));
      sys.rows.push_back(std::move(row));
      sys.rhs.push_back(parse_rational(tok.back()));
    } catch (const ParseError &) {
      throw;
    } catch (const std::exception &e) {
      throw ParseError(e.what(), lineno);
    }
  }
  if (sys.variables.empty())
    throw ParseError("no variables declared", 0);
  return sys;
}

InequalitySystem InequalitySystem::load(const std::filesystem::path &file) {
  std::ifstream in(file);
  if (!in)
    throw UsageError("cannot open polytope file " + file.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

std::string InequalitySystem::serialize() const {
  std::ostringstream out;
  for (const auto &v : variables) {
    out << "var " << v.label << (v.odd ? " odd" : " even");
    for (const auto &c : v.root)
      out << " " << c;
    out << "\n";
  }
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (const auto &a : rows[r])
      out << a << " ";
    out << "<= " << rhs[r] << "\n";
  }
  return out.str();
}

namespace {

std::vector<LinearInequality> full_system(const InequalitySystem &sys) {
  std::vector<LinearInequality> out;
  std::size_t n = sys.size();
  for (std::size_t r = 0; r < sys.rows.size(); ++r) {
    LinearInequality ineq;
    for (const auto &a : sys.rows[r])
      ineq.coeffs.push_back(-a);
    ineq.rhs = -sys.rhs[r];
    out.push_back(std::move(ineq));
  }
  for (std::size_t j = 0; j < n; ++j) {
    LinearInequality lo{std::vector<Rational>(n, 0), 0};
    lo.coeffs[j] = 1;
    out.push_back(lo);
    if (sys.variables[j].odd) {
      LinearInequality hi{std::vector<Rational>(n, 0), -1};
      hi.coeffs[j] = -1;
      out.push_back(hi);
    }
  }
  return out;
}

long floor_of(const Rational &x) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q.get_si();
}

} // namespace

std::vector<std::vector<long>> enumerate(const InequalitySystem &sys) {
  std::size_t n = sys.size();
  auto full = full_system(sys);
  std::vector<long> hi(n, 0);
  for (std::size_t j = 0; j < n; ++j) {
    auto b = fourier_motzkin_bounds(full, n, j);
    if (!b.feasible)
      return {};
    if (!b.upper)
      throw UnboundedError("variable " + sys.variables[j].label + " is unbounded");
    hi[j] = floor_of(*b.upper);
  }
  std::vector<std::vector<long>> out;
  std::vector<long> point(n, 0);
  // minimum contribution of variables j.. to each row
  std::vector<std::vector<Rational>> tail(sys.rows.size(), std::vector<Rational>(n + 1, 0));
  for (std::size_t r = 0; r < sys.rows.size(); ++r)
    for (std::size_t j = n; j-- > 0;) {
      Rational a = sys.rows[r][j];
      tail[r][j] = tail[r][j + 1] + (a < 0 ? a * hi[j] : Rational(0));
    }
  std::vector<Rational> partial(sys.rows.size(), 0);
  auto dfs = [&](auto &&self, std::size_t j) -> void {
    for (std::size_t r = 0; r < sys.rows.size(); ++r)
      if (partial[r] + tail[r][j] > sys.rhs[r])
        return;
    if (j == n) {
      out.push_back(point);
      return;
    }
    for (long v = 0; v <= hi[j]; ++v) {
      point[j] = v;
      for (std::size_t r = 0; r < sys.rows.size(); ++r)
        partial[r] += sys.rows[r][j] * v;
      self(self, j + 1);
      for (std::size_t r = 0; r < sys.rows.size(); ++r)
        partial[r] -= sys.rows[r][j] * v;
    }
    point[j] = 0;
  };
  if (hi.empty() || std::all_of(hi.begin(), hi.end(), [](long h) { return h >= 0; }))
    dfs(dfs, 0);
  return out;
}

InequalitySystem dilate(const InequalitySystem &sys, unsigned k) {
  if (k == 0)
    throw UsageError("dilation factor must be at least 1");
  InequalitySystem out = sys;
  for (std::size_t r = 0; r < out.rows.size(); ++r)
    if (!sys.is_odd_cap(r))
      out.rhs[r] *= k;
  return out;
}

MultiExponent to_exponent(const InequalitySystem &sys, const std::vector<long> &point) {
  MultiExponent e;
  for (std::size_t j = 0; j < sys.size(); ++j) {
    if (sys.variables[j].odd)
      e.odd.push_back(static_cast<std::uint8_t>(point[j]));
    else
      e.even.push_back(static_cast<unsigned>(point[j]));
  }
  return e;
}

RootCounts point_root_counts(const InequalitySystem &sys, const std::vector<long> &point) {
  RootCounts c;
  for (std::size_t j = 0; j < sys.size(); ++j)
    if (point[j] > 0)
      c[sys.variables[j].root] += static_cast<unsigned>(point[j]);
  return c;
}

std::string describe_counts(const RootCounts &c, const InequalitySystem &sys,
                            const LieSuperalgebra &g, const BorelChoice &borel) {
  if (c.empty())
    return "1";
  std::string out;
  for (const auto &[root, k] : c) {
    std::string label;
    bool odd = false;
    for (const auto &v : sys.variables)
      if (v.root == root) {
        label = v.label;
        odd = v.odd;
      }
    if (label.empty())
      for (auto idx : borel.positive)
        if (g.roots()[idx].coords == root) {
          label = root_label(borel, idx);
          odd = g.roots()[idx].parity;
        }
    if (!out.empty())
      out += " ";
    out += (odd ? "xi_{" : "x_{") + label + "}";
    if (k > 1)
      out += "^" + std::to_string(k);
  }
  return out;
}

CompareReport compare(const InequalitySystem &sys, const std::vector<std::vector<long>> &points,
                      const EssentialSet &es, const LieSuperalgebra &g,
                      const BorelChoice &borel, const NegativeBasis &nb) {
  for (const auto &v : sys.variables) {
    bool found = false;
    for (auto idx : borel.positive)
      if (g.roots()[idx].coords == v.root && (g.roots()[idx].parity == 1) == v.odd)
        found = true;
    if (!found)
      throw LabelingMismatchError("variable " + v.label + " (" + weight_to_string(v.root) +
                                  ") is not a positive " + (v.odd ? "odd" : "even") + " root");
  }
  std::vector<RootCounts> a, b;
  for (const auto &p : points)
    a.push_back(point_root_counts(sys, p));
  for (const auto &e : es.monomials)
    b.push_back(root_counts(e, g, nb));
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  std::vector<RootCounts> only_a, only_b;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(only_a));
  std::set_difference(b.begin(), b.end(), a.begin(), a.end(), std::back_inserter(only_b));
  CompareReport rep;
  rep.polytope_points = points.size();
  rep.essential_size = es.size();
  for (const auto &c : only_a)
    rep.polytope_only.push_back(describe_counts(c, sys, g, borel));
  for (const auto &c : only_b)
    rep.essential_only.push_back(describe_counts(c, sys, g, borel));
  return rep;
}

} // namespace superdeg
