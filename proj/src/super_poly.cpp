#include "superdeg/super_poly.hpp"

#include "superdeg/error.hpp"

#include <cctype>
#include <sstream>
#include <unordered_map>

namespace superdeg {

VariableNames VariableNames::standard(std::size_t n, std::size_t q) {
  VariableNames v;
  for (std::size_t i = 0; i < n; ++i)
    v.even.push_back("x" + std::to_string(i + 1));
  for (std::size_t j = 0; j < q; ++j)
    v.odd.push_back("xi" + std::to_string(j + 1));
  return v;
}

std::optional<std::pair<MultiExponent, int>>
multiply_monomials(const MultiExponent &a, const MultiExponent &b) {
  MultiExponent s = a + b;
  if (!s.valid())
    return std::nullopt;
  return std::make_pair(std::move(s), koszul_sign(a.odd, b.odd));
}

SuperPolynomial SuperPolynomial::constant(std::size_t n, std::size_t q,
                                          const Rational &c) {
  SuperPolynomial p(n, q);
  p.add_term(MultiExponent(n, q), c);
  return p;
}

SuperPolynomial SuperPolynomial::monomial(const MultiExponent &e, const Rational &c) {
  if (!e.valid())
    throw Error("monomial exponent outside {0,1}^q x N^n");
  SuperPolynomial p(e.n(), e.q());
  p.add_term(e, c);
  return p;
}

SuperPolynomial SuperPolynomial::even_var(std::size_t n, std::size_t q, std::size_t i) {
  MultiExponent e(n, q);
  e.even.at(i) = 1;
  return monomial(e);
}

SuperPolynomial SuperPolynomial::odd_var(std::size_t n, std::size_t q, std::size_t j) {
  MultiExponent e(n, q);
  e.odd.at(j) = 1;
  return monomial(e);
}

Rational SuperPolynomial::coefficient(const MultiExponent &e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void SuperPolynomial::add_term(const MultiExponent &e, const Rational &c) {
  if (sgn(c) == 0)
    return;
  if (e.n() != n_ || e.q() != q_)
    throw Error("term ambient mismatch");
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0)
      terms_.erase(it);
  }
}

void SuperPolynomial::check_ambient(const SuperPolynomial &o) const {
  if (n_ != o.n_ || q_ != o.q_)
    throw Error("super polynomials live in different rings");
}

SuperPolynomial SuperPolynomial::operator+(const SuperPolynomial &o) const {
  check_ambient(o);
  SuperPolynomial r = *this;
  for (const auto &[e, c] : o.terms_)
    r.add_term(e, c);
  return r;
}

SuperPolynomial SuperPolynomial::operator-(const SuperPolynomial &o) const {
  check_ambient(o);
  SuperPolynomial r = *this;
  for (const auto &[e, c] : o.terms_)
    r.add_term(e, -c);
  return r;
}

SuperPolynomial SuperPolynomial::operator-() const {
  SuperPolynomial r = *this;
  for (auto &[e, c] : r.terms_)
    c = -c;
  return r;
}

SuperPolynomial SuperPolynomial::operator*(const SuperPolynomial &o) const {
  check_ambient(o);
  SuperPolynomial r(n_, q_);
  for (const auto &[ea, ca] : terms_)
    for (const auto &[eb, cb] : o.terms_) {
      auto prod = multiply_monomials(ea, eb);
      if (!prod)
        continue;
      r.add_term(prod->first, prod->second * ca * cb);
    }
  return r;
}

SuperPolynomial SuperPolynomial::operator*(const Rational &c) const {
  if (sgn(c) == 0)
    return SuperPolynomial(n_, q_);
  SuperPolynomial r = *this;
  for (auto &[e, v] : r.terms_)
    v *= c;
  return r;
}

unsigned SuperPolynomial::degree() const {
  unsigned d = 0;
  for (const auto &[e, c] : terms_)
    d = std::max(d, e.degree());
  return d;
}

bool SuperPolynomial::is_homogeneous() const {
  if (terms_.empty())
    return true;
  unsigned d = terms_.begin()->first.degree();
  for (const auto &[e, c] : terms_)
    if (e.degree() != d)
      return false;
  return true;
}

SuperPolynomial power(const SuperPolynomial &p, unsigned k) {
  SuperPolynomial r = SuperPolynomial::constant(p.n(), p.q(), 1);
  for (unsigned i = 0; i < k; ++i)
    r = r * p;
  return r;
}

SuperPolynomial
SuperPolynomial::substitute(const std::vector<SuperPolynomial> &even_images,
                            const std::vector<SuperPolynomial> &odd_images) const {
  if (even_images.size() != n_ || odd_images.size() != q_)
    throw Error("substitution has the wrong number of images");
  std::size_t tn, tq;
  if (!even_images.empty()) {
    tn = even_images.front().n();
    tq = even_images.front().q();
  } else if (!odd_images.empty()) {
    tn = odd_images.front().n();
    tq = odd_images.front().q();
  } else {
    return *this;
  }
  SuperPolynomial result(tn, tq);
  for (const auto &[e, c] : terms_) {
    SuperPolynomial term = constant(tn, tq, c);
    for (std::size_t j = q_; j-- > 0;)
      if (e.odd[j])
        term = term * odd_images[j];
    for (std::size_t i = 0; i < n_; ++i)
      if (e.even[i])
        term = term * power(even_images[i], e.even[i]);
    result = result + term;
  }
  return result;
}

std::string monomial_to_string(const MultiExponent &e, const VariableNames &names) {
  std::ostringstream os;
  bool first = true;
  auto sep = [&] {
    if (!first)
      os << "*";
    first = false;
  };
  for (std::size_t i = 0; i < e.n(); ++i) {
    if (!e.even[i])
      continue;
    sep();
    os << names.even.at(i);
    if (e.even[i] > 1)
      os << "^" << e.even[i];
  }
  for (std::size_t j = e.q(); j-- > 0;) {
    if (!e.odd[j])
      continue;
    sep();
    os << names.odd.at(j);
  }
  if (first)
    os << "1";
  return os.str();
}

std::string SuperPolynomial::to_string(const VariableNames &names) const {
  if (terms_.empty())
    return "0";
  std::ostringstream os;
  bool first = true;
  // Descending term order reads more naturally.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto &[e, c] = *it;
    Rational mag = abs(c);
    if (first)
      os << (sgn(c) < 0 ? "-" : "");
    else
      os << (sgn(c) < 0 ? " - " : " + ");
    first = false;
    bool unit = mag == 1;
    if (e.is_zero())
      os << mag.get_str();
    else if (unit)
      os << monomial_to_string(e, names);
    else
      os << mag.get_str() << "*" << monomial_to_string(e, names);
  }
  return os.str();
}

std::string SuperPolynomial::to_string() const {
  return to_string(VariableNames::standard(n_, q_));
}

SuperPolynomial SuperPolynomial::parse(const std::string &text, std::size_t n,
                                       std::size_t q) {
  return parse(text, n, q, VariableNames::standard(n, q));
}

namespace {

std::string normalize_minus(const std::string &text) {
  std::string out;
  for (std::size_t i = 0; i < text.size(); ++i) {
    // U+2212 MINUS SIGN
    if (i + 2 < text.size() && static_cast<unsigned char>(text[i]) == 0xE2 &&
        static_cast<unsigned char>(text[i + 1]) == 0x88 &&
        static_cast<unsigned char>(text[i + 2]) == 0x92) {
      out += '-';
      i += 2;
    } else {
      out += text[i];
    }
  }
  return out;
}

} // namespace

SuperPolynomial SuperPolynomial::parse(const std::string &raw, std::size_t n,
                                       std::size_t q, const VariableNames &names) {
  std::unordered_map<std::string, std::pair<bool, std::size_t>> lookup;
  for (std::size_t i = 0; i < names.even.size(); ++i)
    lookup[names.even[i]] = {false, i};
  for (std::size_t j = 0; j < names.odd.size(); ++j)
    lookup[names.odd[j]] = {true, j};

  std::string text = normalize_minus(raw);
  SuperPolynomial result(n, q);
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  };
  skip_ws();
  if (pos == text.size())
    throw ParseError("empty polynomial", 0);
  bool first_term = true;
  while (pos < text.size()) {
    int sign = 1;
    skip_ws();
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (!first_term) {
      throw ParseError("expected '+' or '-' in '" + raw + "'", 0);
    }
    first_term = false;
    SuperPolynomial term = constant(n, q, sign);
    bool need_factor = true;
    while (need_factor) {
      skip_ws();
      if (pos >= text.size())
        throw ParseError("dangling operator in '" + raw + "'", 0);
      std::size_t start = pos;
      if (std::isdigit(static_cast<unsigned char>(text[pos]))) {
        while (pos < text.size() &&
               (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '/'))
          ++pos;
        term = term * parse_rational(text.substr(start, pos - start));
      } else if (std::isalpha(static_cast<unsigned char>(text[pos]))) {
        while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) ||
                                     text[pos] == '_'))
          ++pos;
        std::string name = text.substr(start, pos - start);
        auto it = lookup.find(name);
        if (it == lookup.end())
          throw ParseError("unknown variable '" + name + "'", 0);
        unsigned exponent = 1;
        skip_ws();
        if (pos < text.size() && text[pos] == '^') {
          ++pos;
          skip_ws();
          std::size_t e0 = pos;
          while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            ++pos;
          if (e0 == pos)
            throw ParseError("missing exponent after '^'", 0);
          exponent = static_cast<unsigned>(std::stoul(text.substr(e0, pos - e0)));
        }
        auto [is_odd, idx] = it->second;
        SuperPolynomial v = is_odd ? odd_var(n, q, idx) : even_var(n, q, idx);
        term = term * power(v, exponent);
      } else {
        throw ParseError("unexpected character '" + std::string(1, text[pos]) +
                             "' in '" + raw + "'",
                         0);
      }
      skip_ws();
      if (pos < text.size() && text[pos] == '*')
        ++pos;
      else
        need_factor = false;
    }
    result = result + term;
    skip_ws();
  }
  return result;
}

} // namespace superdeg
