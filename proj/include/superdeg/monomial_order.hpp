#pragma once

#include "superdeg/multi_exponent.hpp"

#include <string>
#include <vector>

namespace superdeg {

enum class OrderKind { GradedLex, GradedRevLex, Weighted };

/// Monomial order on N^{n+q} restricted to {0,1}^q x N^n. Coordinates are
/// the flattened ones of MultiExponent::flat(); `priority` lists them from
/// most to least significant.
class MonomialOrder {
public:
  MonomialOrder() = default;
  MonomialOrder(OrderKind kind, std::vector<std::size_t> priority,
                std::vector<long> weights = {});

  static MonomialOrder graded_lex(std::size_t dim);
  static MonomialOrder graded_revlex(std::size_t dim);
  /// "graded-lex", "graded-revlex" or "weighted:w1,w2,..."; optional
  /// priority permutation (empty means identity).
  static MonomialOrder from_name(const std::string &name, std::size_t dim,
                                 const std::vector<std::size_t> &priority = {});

  OrderKind kind() const { return kind_; }
  const std::vector<std::size_t> &priority() const { return priority_; }
  const std::vector<long> &weights() const { return weights_; }
  std::size_t dim() const { return priority_.size(); }

  /// -1, 0 or +1.
  int compare(const MultiExponent &a, const MultiExponent &b) const;
  bool less(const MultiExponent &a, const MultiExponent &b) const {
    return compare(a, b) < 0;
  }

  int compare_flat(const std::vector<unsigned> &a,
                   const std::vector<unsigned> &b) const;

  std::string describe() const;

private:

  OrderKind kind_ = OrderKind::GradedLex;
  std::vector<std::size_t> priority_;
  std::vector<long> weights_;
};

/// Every exponent of total degree <= bound, ascending in `order`.
std::vector<MultiExponent> enumerate_monomials(const MonomialOrder &order,
                                               std::size_t n, std::size_t q,
                                               unsigned bound);

} // namespace superdeg
