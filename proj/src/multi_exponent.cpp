#include "superdeg/multi_exponent.hpp"

#include "superdeg/error.hpp"

#include <numeric>
#include <regex>
#include <sstream>

namespace superdeg {

unsigned MultiExponent::odd_degree() const {
  return std::accumulate(odd.begin(), odd.end(), 0u);
}

unsigned MultiExponent::even_degree() const {
  return std::accumulate(even.begin(), even.end(), 0u);
}

bool MultiExponent::valid() const {
  for (auto b : odd)
    if (b > 1)
      return false;
  return true;
}

std::vector<unsigned> MultiExponent::flat() const {
  std::vector<unsigned> c(even.begin(), even.end());
  c.insert(c.end(), odd.begin(), odd.end());
  return c;
}

MultiExponent MultiExponent::from_flat(const std::vector<unsigned> &c,
                                       std::size_t n, std::size_t q) {
  if (c.size() != n + q)
    throw Error("flat exponent has wrong length");
  MultiExponent e(n, q);
  for (std::size_t i = 0; i < n; ++i)
    e.even[i] = c[i];
  for (std::size_t i = 0; i < q; ++i)
    e.odd[i] = static_cast<std::uint8_t>(c[n + i]);
  return e;
}

MultiExponent MultiExponent::operator+(const MultiExponent &o) const {
  if (n() != o.n() || q() != o.q())
    throw Error("exponent ambient mismatch");
  MultiExponent r = *this;
  for (std::size_t i = 0; i < q(); ++i)
    r.odd[i] += o.odd[i];
  for (std::size_t i = 0; i < n(); ++i)
    r.even[i] += o.even[i];
  return r;
}

MultiExponent MultiExponent::operator-(const MultiExponent &o) const {
  if (!o.divides(*this))
    throw Error("exponent difference would be negative");
  MultiExponent r = *this;
  for (std::size_t i = 0; i < q(); ++i)
    r.odd[i] -= o.odd[i];
  for (std::size_t i = 0; i < n(); ++i)
    r.even[i] -= o.even[i];
  return r;
}

bool MultiExponent::divides(const MultiExponent &o) const {
  if (n() != o.n() || q() != o.q())
    return false;
  for (std::size_t i = 0; i < q(); ++i)
    if (odd[i] > o.odd[i])
      return false;
  for (std::size_t i = 0; i < n(); ++i)
    if (even[i] > o.even[i])
      return false;
  return true;
}

std::string MultiExponent::to_string() const {
  std::ostringstream os;
  os << "I=";
  for (auto b : odd)
    os << static_cast<unsigned>(b);
  os << " m=(";
  for (std::size_t i = 0; i < even.size(); ++i)
    os << (i ? "," : "") << even[i];
  os << ")";
  return os.str();
}

MultiExponent MultiExponent::parse(const std::string &text) {
  static const std::regex re(R"(^\s*I=([01]*)\s+m=\(([0-9,\s]*)\)\s*$)");
  std::smatch match;
  if (!std::regex_match(text, match, re))
    throw ParseError("malformed exponent '" + text + "'", 0);
  MultiExponent e;
  for (char c : match[1].str())
    e.odd.push_back(static_cast<std::uint8_t>(c - '0'));
  std::string body = match[2].str();
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto first = item.find_first_not_of(" \t");
    if (first == std::string::npos)
      continue;
    e.even.push_back(static_cast<unsigned>(std::stoul(item)));
  }
  return e;
}

unsigned koszul_count(const std::vector<std::uint8_t> &j1,
                      const std::vector<std::uint8_t> &j2) {
  if (j1.size() != j2.size())
    throw Error("koszul_count: length mismatch");
  unsigned k = 0, seen = 0;
  for (std::size_t i = 0; i < j1.size(); ++i) {
    k += seen * j2[i];
    seen += j1[i];
  }
  return k;
}

namespace {

void fill(std::vector<unsigned> &cur, std::size_t pos, std::size_t n,
          unsigned remaining, bool exact, std::vector<std::vector<unsigned>> &out) {
  if (pos == cur.size()) {
    if (!exact || remaining == 0)
      out.push_back(cur);
    return;
  }
  unsigned cap = pos < n ? remaining : std::min(1u, remaining);
  for (unsigned v = 0; v <= cap; ++v) {
    cur[pos] = v;
    fill(cur, pos + 1, n, remaining - v, exact, out);
  }
  cur[pos] = 0;
}

std::vector<MultiExponent> generate(std::size_t n, std::size_t q, unsigned d,
                                    bool exact) {
  std::vector<std::vector<unsigned>> flats;
  std::vector<unsigned> cur(n + q, 0);
  fill(cur, 0, n, d, exact, flats);
  std::vector<MultiExponent> out;
  out.reserve(flats.size());
  for (const auto &f : flats)
    out.push_back(MultiExponent::from_flat(f, n, q));
  return out;
}

} // namespace

std::vector<MultiExponent> all_exponents(std::size_t n, std::size_t q,
                                         unsigned bound) {
  return generate(n, q, bound, false);
}

std::vector<MultiExponent> exponents_of_degree(std::size_t n, std::size_t q,
                                               unsigned degree) {
  return generate(n, q, degree, true);
}

} // namespace superdeg
