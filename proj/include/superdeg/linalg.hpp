#pragma once

#include "superdeg/rational.hpp"
#include "superdeg/sparse_vector.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <variant>
#include <vector>

namespace superdeg {

struct Independent {};
struct Dependent {
  /// Expansion coefficients over the independent vectors inserted so far,
  /// in insertion order.
  std::vector<Rational> coefficients;
};
using InsertResult = std::variant<Independent, Dependent>;

/// Incremental span/rank tracker over exact rationals.
///
/// Rows are kept in reduced row echelon form keyed by pivot column. Every
/// reduced row also records its expansion over the original vectors that
/// were accepted as independent, so a dependent vector can be written back
/// in terms of those originals.
class SpanAccumulator {
public:
  InsertResult insert(const SparseVector &v);

  /// Expansion of v over the accepted originals, or nullopt when v is not
  /// in the span. Does not modify the accumulator.
  std::optional<std::vector<Rational>> express(const SparseVector &v) const;
  /// Same as express, returned sparsely (index = insertion position).
  std::optional<SparseVector> express_sparse(const SparseVector &v) const;

  bool contains(const SparseVector &v) const;

  std::size_t rank() const { return originals_.size(); }
  const std::vector<SparseVector> &originals() const { return originals_; }

  /// Pivot column -> reduced row, pivots ascending.
  const std::map<std::size_t, SparseVector> &rows() const { return rows_; }

private:
  struct Reduction {
    SparseVector residual;
    SparseVector combination; // v = residual + sum combination[i] * original_i
  };
  Reduction reduce(const SparseVector &v) const;

  std::map<std::size_t, SparseVector> rows_;
  std::map<std::size_t, SparseVector> combos_;
  std::vector<SparseVector> originals_;
};

/// Basis of the right kernel {x : row . x = 0 for every row} in Q^dim.
std::vector<SparseVector> nullspace(const std::vector<SparseVector> &rows,
                                    std::size_t dim);

/// Rank of a list of vectors.
std::size_t rank_of(const std::vector<SparseVector> &vectors);

class IntegerMatrix {
public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Integer(0)) {}
  static IntegerMatrix from_rows(const std::vector<std::vector<long>> &rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Integer &at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer &at(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

struct SmithForm {
  IntegerMatrix diagonal_form;
  /// Nonzero invariant factors d1 | d2 | ..., all positive.
  std::vector<Integer> invariant_factors;
};

SmithForm smith_normal_form(const IntegerMatrix &m);

/// True iff the rows of m generate Z^cols.
bool generates_full_lattice(const IntegerMatrix &m);

/// Determinant of a square integer matrix (fraction-free elimination).
Integer determinant(const IntegerMatrix &m);

/// coeffs . x >= rhs
struct LinearInequality {
  std::vector<Rational> coeffs;
  Rational rhs;
};

/// Fourier-Motzkin elimination over Q. Returns a rational point satisfying
/// every inequality, or nullopt when the system is infeasible. Values are
/// chosen integral whenever the projected bounds allow it.
std::optional<std::vector<Rational>>
fourier_motzkin_solve(const std::vector<LinearInequality> &system,
                      std::size_t num_vars);

struct VariableBounds {
  std::optional<Rational> lower;
  std::optional<Rational> upper;
  bool feasible = true;
};

/// Exact bounds of variable `var` over the rational polyhedron.
VariableBounds fourier_motzkin_bounds(const std::vector<LinearInequality> &system,
                                      std::size_t num_vars, std::size_t var);

} // namespace superdeg
