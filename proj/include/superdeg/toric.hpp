#pragma once

#include "superdeg/linalg.hpp"
#include "superdeg/multi_exponent.hpp"
#include "superdeg/super_poly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace superdeg {

/// Finite K in {0,1}^q x N^n; every element stands for xi^I x^m v.
struct ExponentSet {
  std::size_t n = 0, q = 0;
  std::vector<MultiExponent> elements;

  static ExponentSet from(std::vector<MultiExponent> elements);
  bool contains(const MultiExponent &e) const;
  std::string serialize() const;
};

/// Sums of elements of K (odd cap respected), up to `bound` summands, with
/// the v-degree equal to the number of summands.
class SemigroupSearch {
public:
  SemigroupSearch(const ExponentSet &k, unsigned bound);

  enum class Answer { Yes, No, Inconclusive };
  /// Any v-degree.
  Answer member(const MultiExponent &e) const;
  /// v-degree exactly d.
  Answer member_at(const MultiExponent &e, unsigned d) const;
  /// A decomposition (indices into K) with the fewest summands.
  std::optional<std::vector<std::size_t>> witness(const MultiExponent &e) const;
  unsigned bound() const { return bound_; }

private:
  const ExponentSet *k_;
  unsigned bound_;
  bool has_zero_ = false;
  // exponent -> (summand count -> one decomposition) over nonzero summands
  std::map<MultiExponent, std::map<unsigned, std::vector<std::size_t>>> reached_;
};

std::string to_string(SemigroupSearch::Answer a);

struct OddRemovalReport {
  bool ok = true;
  /// (element, i): I_i = 1 but (I - e_i, m) is missing.
  std::vector<std::pair<MultiExponent, std::size_t>> violations;
};
OddRemovalReport check_odd_removal(const ExponentSet &k);

struct LaurentReport {
  bool ok = false;
  std::size_t generators = 0;
  std::vector<Integer> invariant_factors;
};
/// The vectors (m, 1), (0, m) in K, generate Z^{n+1}.
LaurentReport check_even_laurent(const ExponentSet &k);

struct ReachabilityReport {
  bool ok = true;
  /// Per odd index: answer and a witness sum (indices into K).
  std::vector<SemigroupSearch::Answer> answers;
  std::vector<std::vector<std::size_t>> witnesses;
};
/// For each i some (e_i, m^i) in <K>, any v-degree.
ReachabilityReport check_odd_reachable(const ExponentSet &k, unsigned bound);

/// Admissible c_ij in Q^{n+1} (last coordinate pairs with the v-degree).
/// The constraints do not depend on i, so one space per j is stored.
struct ActionSpace {
  /// Rows (m, 1) that must be orthogonal to c_ij.
  std::vector<std::vector<SparseVector>> constraints;
  std::vector<std::vector<SparseVector>> basis;
  /// (element, j) whose membership query was inconclusive; treated as
  /// absent, which only adds constraints.
  std::vector<std::pair<MultiExponent, std::size_t>> inconclusive;
  bool residuals_zero() const;
};

struct SuperTorusAction {
  /// (I + e_j, m) tested at v-degree 1.
  ActionSpace graded;
  /// (I + e_j, m) tested at any v-degree.
  ActionSpace ungraded;
  bool readings_differ() const;
};
SuperTorusAction solve_action(const ExponentSet &k, unsigned bound);

struct ClosureFailure {
  MultiExponent generator;
  std::size_t direction = 0; // i
  std::optional<std::size_t> parameter; // j, or nullopt for the -d/dxi_i term
  SuperPolynomial residual;
};

struct ClosureReport {
  bool ok = true;
  std::size_t derivatives_checked = 0;
  std::vector<ClosureFailure> failures;
};
/// Applies theta_i = sum_j xi_j <t d/dt, c_ij> - d/dxi_i to every generator,
/// once for the odd derivative and once per basis vector of each c_ij, and
/// checks that the result lies in the degree-1 part of A.
ClosureReport verify_derivation_closure(const ExponentSet &k, const ActionSpace &action);

/// Left derivative d/dxi_i of a polynomial in n even and q odd variables.
SuperPolynomial odd_derivative(const SuperPolynomial &p, std::size_t i);

struct ToricCertificate {
  enum class Verdict { Toric, HypothesesNotMet, Inconclusive };
  Verdict verdict = Verdict::Inconclusive;
  bool faithful = false;
  std::vector<std::string> reasons;
  OddRemovalReport odd_removal;
  LaurentReport laurent;
  ReachabilityReport reachability;
  SuperTorusAction action;
  ClosureReport closure;
  /// Product of the even generators x^m v; localizing at it gives C[T].
  MultiExponent localization_witness;
  unsigned localization_v_degree = 0;
  unsigned bound = 0;
};
std::string to_string(ToricCertificate::Verdict v);

/// bound = 0 means 2q + 2.
ToricCertificate certify(const ExponentSet &k, unsigned bound = 0);

} // namespace superdeg
