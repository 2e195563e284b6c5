#include "superdeg/monomial_order.hpp"

#include "superdeg/error.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace superdeg {

namespace {

std::vector<std::size_t> identity(std::size_t dim) {
  std::vector<std::size_t> p(dim);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

void check_permutation(const std::vector<std::size_t> &p) {
  std::vector<std::size_t> s = p;
  std::sort(s.begin(), s.end());
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s[i] != i)
      throw UsageError("order priority is not a permutation");
}

} // namespace

MonomialOrder::MonomialOrder(OrderKind kind, std::vector<std::size_t> priority,
                             std::vector<long> weights)
    : kind_(kind), priority_(std::move(priority)), weights_(std::move(weights)) {
  check_permutation(priority_);
  if (kind_ == OrderKind::Weighted && weights_.size() != priority_.size())
    throw UsageError("weight vector length does not match the variable count");
}

MonomialOrder MonomialOrder::graded_lex(std::size_t dim) {
  return MonomialOrder(OrderKind::GradedLex, identity(dim));
}

MonomialOrder MonomialOrder::graded_revlex(std::size_t dim) {
  return MonomialOrder(OrderKind::GradedRevLex, identity(dim));
}

MonomialOrder MonomialOrder::from_name(const std::string &name, std::size_t dim,
                                       const std::vector<std::size_t> &priority) {
  std::vector<std::size_t> p = priority.empty() ? identity(dim) : priority;
  if (p.size() != dim)
    throw UsageError("order priority has length " + std::to_string(p.size()) +
                     ", expected " + std::to_string(dim));
  if (name == "graded-lex")
    return MonomialOrder(OrderKind::GradedLex, p);
  if (name == "graded-revlex")
    return MonomialOrder(OrderKind::GradedRevLex, p);
  const std::string prefix = "weighted:";
  if (name.rfind(prefix, 0) == 0) {
    std::vector<long> w;
    std::stringstream ss(name.substr(prefix.size()));
    std::string item;
    while (std::getline(ss, item, ','))
      w.push_back(std::stol(item));
    return MonomialOrder(OrderKind::Weighted, p, w);
  }
  throw UsageError("unknown monomial order '" + name + "'");
}

int MonomialOrder::compare_flat(const std::vector<unsigned> &a,
                                const std::vector<unsigned> &b) const {
  if (kind_ == OrderKind::Weighted) {
    long wa = 0, wb = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      wa += weights_[i] * static_cast<long>(a[i]);
      wb += weights_[i] * static_cast<long>(b[i]);
    }
    if (wa != wb)
      return wa < wb ? -1 : 1;
  }
  unsigned da = std::accumulate(a.begin(), a.end(), 0u);
  unsigned db = std::accumulate(b.begin(), b.end(), 0u);
  if (da != db)
    return da < db ? -1 : 1;
  if (kind_ == OrderKind::GradedRevLex) {
    for (std::size_t k = priority_.size(); k-- > 0;) {
      std::size_t i = priority_[k];
      if (a[i] != b[i])
        return a[i] < b[i] ? 1 : -1;
    }
    return 0;
  }
  for (std::size_t i : priority_)
    if (a[i] != b[i])
      return a[i] < b[i] ? -1 : 1;
  return 0;
}

int MonomialOrder::compare(const MultiExponent &a, const MultiExponent &b) const {
  if (a.n() + a.q() != dim() || b.n() + b.q() != dim())
    throw Error("monomial order dimension mismatch");
  return compare_flat(a.flat(), b.flat());
}

std::string MonomialOrder::describe() const {
  std::ostringstream os;
  switch (kind_) {
  case OrderKind::GradedLex:
    os << "graded-lex";
    break;
  case OrderKind::GradedRevLex:
    os << "graded-revlex";
    break;
  case OrderKind::Weighted:
    os << "weighted:";
    for (std::size_t i = 0; i < weights_.size(); ++i)
      os << (i ? "," : "") << weights_[i];
    break;
  }
  os << " priority=";
  for (std::size_t i = 0; i < priority_.size(); ++i)
    os << (i ? "," : "") << priority_[i];
  return os.str();
}

std::vector<MultiExponent> enumerate_monomials(const MonomialOrder &order,
                                               std::size_t n, std::size_t q,
                                               unsigned bound) {
  auto all = all_exponents(n, q, bound);
  std::vector<std::pair<std::vector<unsigned>, std::size_t>> keyed;
  keyed.reserve(all.size());
  for (std::size_t i = 0; i < all.size(); ++i)
    keyed.emplace_back(all[i].flat(), i);
  std::sort(keyed.begin(), keyed.end(), [&](const auto &x, const auto &y) {
    return order.compare_flat(x.first, y.first) < 0;
  });
  std::vector<MultiExponent> out;
  out.reserve(all.size());
  for (const auto &k : keyed)
    out.push_back(all[k.second]);
  return out;
}

} // namespace superdeg
