#pragma once

#include "superdeg/monomial_order.hpp"
#include "superdeg/representation.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace superdeg {

/// es(k lambda): exponents whose PBW vector escapes the span of all smaller
/// ones, ascending in the order. Also keeps the essential vectors so any
/// PBW vector can be expanded over them (the dual basis values eta).
class EssentialSet {
public:
  unsigned level = 0;
  MonomialOrder order;
  std::vector<MultiExponent> monomials;

  std::size_t size() const { return monomials.size(); }
  bool contains(const MultiExponent &e) const { return index_.count(e) > 0; }
  std::size_t index_of(const MultiExponent &e) const { return index_.at(e); }

  /// eta-values of f^{(e)} v over the essential basis (index = position in
  /// `monomials`).
  SparseVector express(const MultiExponent &e) const;

  /// "I=0110 m=(2,0,1) k=1" per line.
  std::string serialize() const;

private:
  friend EssentialSet essential_monomials(PbwEvaluator &, std::size_t,
                                         const MonomialOrder &, unsigned);
  PbwEvaluator *eval_ = nullptr;
  std::map<MultiExponent, std::size_t> index_;
  std::map<Weight, CyclicModule::Block> blocks_;
};

/// Scans monomials in ascending order up to the evaluator's degree bound
/// and stops once `module_dim` essential vectors are found.
EssentialSet essential_monomials(PbwEvaluator &eval, std::size_t module_dim,
                                 const MonomialOrder &order, unsigned level);

/// Element of Gamma(lambda, <): an exponent at a level, or the absorbing
/// bottom element.
struct SemigroupElement {
  std::optional<MultiExponent> exponent;
  unsigned level = 0;
  bool is_bottom() const { return !exponent.has_value(); }
  static SemigroupElement bottom() { return {}; }
};

SemigroupElement semigroup_add(const SemigroupElement &a, const SemigroupElement &b);

struct SemigroupReport {
  std::size_t pairs_checked = 0;
  std::size_t compatible_pairs = 0;
  std::vector<std::pair<MultiExponent, MultiExponent>> violations;
  bool ok() const { return violations.empty(); }
};

/// Every compatible sum a + b (a in es_k1, b in es_k2) must lie in es_sum.
SemigroupReport check_semigroup_property(const EssentialSet &es_k1,
                                         const EssentialSet &es_k2,
                                         const EssentialSet &es_sum);

struct FavourableReport {
  bool favourable = true;
  unsigned checked_up_to = 1;
  /// (level, exponent) pairs without a decomposition.
  std::vector<std::pair<unsigned, MultiExponent>> failures;
  /// One decomposition into level-1 essentials per element, keyed by level.
  std::map<unsigned, std::map<MultiExponent, std::vector<std::size_t>>> witnesses;
};

/// es[k-1] holds es(k lambda) for k = 1..K. Each element of es(k lambda) must
/// be a sum of k elements of es(lambda); partial sums stay in {0,1}^q x N^n.
FavourableReport is_favourable(const std::vector<const EssentialSet *> &es);

/// Decompositions of `target` into exactly k level-1 essentials (indices
/// into es1, nondecreasing), at most `limit` of them.
std::vector<std::vector<std::size_t>> decompositions(const EssentialSet &es1,
                                                     const MultiExponent &target,
                                                     unsigned k, std::size_t limit);

/// Exponent rewritten as a multiset of positive roots (weight -> count).
using RootCounts = std::map<Weight, unsigned>;
RootCounts root_counts(const MultiExponent &e, const LieSuperalgebra &g,
                       const NegativeBasis &nb);

/// Parse essential-set / exponent text: one "I=... m=(...)" per line,
/// optional " k=N"; '#' starts a comment.
std::vector<std::pair<MultiExponent, unsigned>> parse_exponent_lines(const std::string &text);

} // namespace superdeg
