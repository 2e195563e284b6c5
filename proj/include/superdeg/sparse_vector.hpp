#pragma once

#include "superdeg/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace superdeg {

/// Sparse rational vector. Entries are kept sorted by index and zero
/// entries are never stored.
class SparseVector {
public:
  using Entry = std::pair<std::size_t, Rational>;

  SparseVector() = default;
  static SparseVector unit(std::size_t index);
  static SparseVector from_dense(const std::vector<Rational> &dense);
  static SparseVector from_dense(std::initializer_list<long> dense);

  const std::vector<Entry> &entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool is_zero() const { return entries_.empty(); }

  Rational get(std::size_t index) const;
  void set(std::size_t index, const Rational &value);
  void add_to(std::size_t index, const Rational &value);
  /// Append past the current maximum index; value must be nonzero.
  void append(std::size_t index, Rational value) {
    entries_.emplace_back(index, std::move(value));
  }

  /// this += a * x
  void axpy(const Rational &a, const SparseVector &x);
  void scale(const Rational &a);

  SparseVector operator+(const SparseVector &o) const;
  SparseVector operator-(const SparseVector &o) const;
  SparseVector operator*(const Rational &a) const;
  SparseVector operator-() const;

  Rational dot(const SparseVector &o) const;

  /// Smallest stored index; requires !is_zero().
  std::size_t lead_index() const { return entries_.front().first; }
  std::size_t max_index() const { return entries_.back().first; }

  std::vector<Rational> to_dense(std::size_t dim) const;
  std::string to_string() const;

  bool operator==(const SparseVector &o) const { return entries_ == o.entries_; }

private:
  std::vector<Entry> entries_;
};

inline std::ostream &operator<<(std::ostream &os, const SparseVector &v) {
  return os << v.to_string();
}

/// Kronecker product of coordinate vectors: index (i, j) -> i * rhs_dim + j.
SparseVector kron(const SparseVector &lhs, const SparseVector &rhs,
                  std::size_t rhs_dim);

/// Sparse linear map stored by columns: column j is the image of e_j.
class SparseMatrix {
public:
  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), columns_(cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const SparseVector &column(std::size_t j) const { return columns_[j]; }
  SparseVector &column(std::size_t j) { return columns_[j]; }
  Rational get(std::size_t i, std::size_t j) const { return columns_[j].get(i); }
  void set(std::size_t i, std::size_t j, const Rational &v) { columns_[j].set(i, v); }

  SparseVector apply(const SparseVector &v) const;
  SparseMatrix operator*(const SparseMatrix &o) const;
  SparseMatrix operator+(const SparseMatrix &o) const;
  SparseMatrix operator-(const SparseMatrix &o) const;
  SparseMatrix scaled(const Rational &a) const;
  void axpy(const Rational &a, const SparseMatrix &o);
  bool is_zero() const;

  bool operator==(const SparseMatrix &o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && columns_ == o.columns_;
  }

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<SparseVector> columns_;
};

} // namespace superdeg
