#include "superdeg/sparse_vector.hpp"

#include <algorithm>
#include <sstream>

namespace superdeg {

SparseVector SparseVector::unit(std::size_t index) {
  SparseVector v;
  v.entries_.emplace_back(index, Rational(1));
  return v;
}

SparseVector SparseVector::from_dense(const std::vector<Rational> &dense) {
  SparseVector v;
  for (std::size_t i = 0; i < dense.size(); ++i)
    if (sgn(dense[i]) != 0)
      v.entries_.emplace_back(i, dense[i]);
  return v;
}

SparseVector SparseVector::from_dense(std::initializer_list<long> dense) {
  SparseVector v;
  std::size_t i = 0;
  for (long x : dense) {
    if (x != 0)
      v.entries_.emplace_back(i, Rational(x));
    ++i;
  }
  return v;
}

Rational SparseVector::get(std::size_t index) const {
  auto it = std::lower_bound(
      entries_.begin(), entries_.end(), index,
      [](const Entry &e, std::size_t i) { return e.first < i; });
  if (it != entries_.end() && it->first == index)
    return it->second;
  return Rational(0);
}

void SparseVector::set(std::size_t index, const Rational &value) {
  auto it = std::lower_bound(
      entries_.begin(), entries_.end(), index,
      [](const Entry &e, std::size_t i) { return e.first < i; });
  bool present = it != entries_.end() && it->first == index;
  if (sgn(value) == 0) {
    if (present)
      entries_.erase(it);
    return;
  }
  if (present)
    it->second = value;
  else
    entries_.insert(it, Entry(index, value));
}

void SparseVector::add_to(std::size_t index, const Rational &value) {
  if (sgn(value) == 0)
    return;
  auto it = std::lower_bound(
      entries_.begin(), entries_.end(), index,
      [](const Entry &e, std::size_t i) { return e.first < i; });
  if (it != entries_.end() && it->first == index) {
    it->second += value;
    if (sgn(it->second) == 0)
      entries_.erase(it);
  } else {
    entries_.insert(it, Entry(index, value));
  }
}

void SparseVector::axpy(const Rational &a, const SparseVector &x) {
  if (sgn(a) == 0 || x.entries_.empty())
    return;
  std::vector<Entry> out;
  out.reserve(entries_.size() + x.entries_.size());
  auto i = entries_.begin();
  auto j = x.entries_.begin();
  while (i != entries_.end() || j != x.entries_.end()) {
    if (j == x.entries_.end() || (i != entries_.end() && i->first < j->first)) {
      out.push_back(std::move(*i));
      ++i;
    } else if (i == entries_.end() || j->first < i->first) {
      out.emplace_back(j->first, a * j->second);
      ++j;
    } else {
      Rational s = i->second + a * j->second;
      if (sgn(s) != 0)
        out.emplace_back(i->first, std::move(s));
      ++i;
      ++j;
    }
  }
  entries_ = std::move(out);
}

void SparseVector::scale(const Rational &a) {
  if (sgn(a) == 0) {
    entries_.clear();
    return;
  }
  for (auto &e : entries_)
    e.second *= a;
}

SparseVector SparseVector::operator+(const SparseVector &o) const {
  SparseVector r = *this;
  r.axpy(Rational(1), o);
  return r;
}

SparseVector SparseVector::operator-(const SparseVector &o) const {
  SparseVector r = *this;
  r.axpy(Rational(-1), o);
  return r;
}

SparseVector SparseVector::operator*(const Rational &a) const {
  SparseVector r = *this;
  r.scale(a);
  return r;
}

SparseVector SparseVector::operator-() const { return *this * Rational(-1); }

Rational SparseVector::dot(const SparseVector &o) const {
  Rational s = 0;
  auto i = entries_.begin();
  auto j = o.entries_.begin();
  while (i != entries_.end() && j != o.entries_.end()) {
    if (i->first < j->first)
      ++i;
    else if (j->first < i->first)
      ++j;
    else {
      s += i->second * j->second;
      ++i;
      ++j;
    }
  }
  return s;
}

std::vector<Rational> SparseVector::to_dense(std::size_t dim) const {
  std::vector<Rational> d(dim, Rational(0));
  for (const auto &[i, v] : entries_)
    if (i < dim)
      d[i] = v;
  return d;
}

std::string SparseVector::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto &[i, v] : entries_) {
    if (!first)
      os << ", ";
    os << i << ": " << v.get_str();
    first = false;
  }
  os << '}';
  return os.str();
}

SparseVector kron(const SparseVector &lhs, const SparseVector &rhs,
                  std::size_t rhs_dim) {
  SparseVector out;
  // Row-major order of (i, j) keeps indices sorted.
  for (const auto &[i, a] : lhs.entries())
    for (const auto &[j, b] : rhs.entries())
      out.append(i * rhs_dim + j, a * b);
  return out;
}

SparseVector SparseMatrix::apply(const SparseVector &v) const {
  SparseVector out;
  for (const auto &[j, a] : v.entries())
    out.axpy(a, columns_[j]);
  return out;
}

SparseMatrix SparseMatrix::operator*(const SparseMatrix &o) const {
  SparseMatrix out(rows_, o.cols_);
  for (std::size_t j = 0; j < o.cols_; ++j)
    out.columns_[j] = apply(o.columns_[j]);
  return out;
}

SparseMatrix SparseMatrix::operator+(const SparseMatrix &o) const {
  SparseMatrix out = *this;
  out.axpy(Rational(1), o);
  return out;
}

SparseMatrix SparseMatrix::operator-(const SparseMatrix &o) const {
  SparseMatrix out = *this;
  out.axpy(Rational(-1), o);
  return out;
}

SparseMatrix SparseMatrix::scaled(const Rational &a) const {
  SparseMatrix out = *this;
  for (auto &c : out.columns_)
    c.scale(a);
  return out;
}

void SparseMatrix::axpy(const Rational &a, const SparseMatrix &o) {
  for (std::size_t j = 0; j < cols_; ++j)
    columns_[j].axpy(a, o.columns_[j]);
}

bool SparseMatrix::is_zero() const {
  return std::all_of(columns_.begin(), columns_.end(),
                     [](const SparseVector &c) { return c.is_zero(); });
}

} // namespace superdeg
