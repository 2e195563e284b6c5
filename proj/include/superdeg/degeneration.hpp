#pragma once

#include "superdeg/essential.hpp"
#include "superdeg/super_poly.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace superdeg {

/// c^{I''}_{a,b}: for each pair (a in es_k1, b in es_k2) the product
/// eta_a eta_b expanded over es_sum.
using StructureTable = std::map<std::pair<std::size_t, std::size_t>, SparseVector>;

StructureTable structure_constants(const EssentialSet &es_k1, const EssentialSet &es_k2,
                                   const EssentialSet &es_sum);

/// The presentation ring S = Q[x_1..x_r, xi_1..xi_s]: x_i are the even
/// elements of es(lambda) and xi_j the odd ones, each in ascending order.
class Presentation {
public:
  explicit Presentation(const EssentialSet &es1);

  std::size_t r() const { return even_.size(); }
  std::size_t s() const { return odd_.size(); }
  const EssentialSet &es1() const { return *es1_; }
  /// es(lambda) index of a generator.
  std::size_t even_generator(std::size_t i) const { return even_[i]; }
  std::size_t odd_generator(std::size_t j) const { return odd_[j]; }
  /// Variable of an es(lambda) element as an S-polynomial.
  SuperPolynomial variable(std::size_t es_index) const;

  /// Sum of the generator exponents of an S-monomial, odd entries unclamped.
  MultiExponent formal_sum(const MultiExponent &s_monomial) const;
  /// Gamma-component of an S-monomial, nullopt for the bottom element.
  std::optional<MultiExponent> component(const MultiExponent &s_monomial) const;
  /// Image xi^I x^m (times v^h) in the monomial algebra with its sign; zero
  /// for bottom monomials.
  SuperPolynomial monomial_image(const MultiExponent &s_monomial) const;

  VariableNames names() const;
  /// Names with an extra even variable "t" appended.
  VariableNames names_with_t() const;

private:
  const EssentialSet *es1_;
  std::vector<std::size_t> even_, odd_;
  std::vector<std::pair<bool, std::size_t>> var_of_;
};

/// R(lambda) in levels 1..D through its structure constants. Generators of
/// S map to eps(I) eta_{I,m,1} with eps(I) = (-1)^{|I|(|I|-1)/2}.
class RingModel {
public:
  RingModel(const Presentation &pres, std::vector<const EssentialSet *> es);

  unsigned max_level() const { return static_cast<unsigned>(es_.size()); }
  const EssentialSet &es(unsigned k) const { return *es_.at(k - 1); }
  /// x (in R_k) times eta_b (b in es(lambda)) in R_{k+1}.
  SparseVector times_generator(unsigned k, const SparseVector &x, std::size_t b) const;
  /// Phi of a homogeneous S-polynomial of degree h (1 <= h <= D): a vector
  /// over es(h lambda).
  SparseVector evaluate(const SuperPolynomial &p) const;
  static int eps(const MultiExponent &e);

private:
  const Presentation *pres_;
  std::vector<const EssentialSet *> es_;
  std::vector<StructureTable> tables_; // tables_[k-1]: levels (k, 1) -> k+1
};

struct GradedRelation {
  SuperPolynomial lead;
  unsigned degree = 0;
  /// Gamma-component of the lead; nullopt for pure monomials (bottom).
  std::optional<MultiExponent> component;
  /// Formal exponent sum of the lead's monomials; equals the component
  /// unless the lead is bottom. Weights of t are measured from it.
  MultiExponent exponent_sum;
  /// (U, g_{k,j}) with every monomial of g_{k,j} in component U.
  std::vector<std::pair<MultiExponent, SuperPolynomial>> corrections;

  SuperPolynomial full() const;
};

/// Minimal generators of ker(S -> gr R) in total degrees 2..D: binomials
/// per Gamma-component and pure monomials in the bottom component.
std::vector<GradedRelation> gr_ideal(const Presentation &pres, unsigned degree_bound);

/// Every binomial relation inside the component of the largest element of
/// es(h lambda).
std::vector<SuperPolynomial> exchange_relations(const Presentation &pres,
                                                const EssentialSet &es_h, unsigned h);

/// Adds corrections until g(eta) = 0 holds exactly in R.
std::vector<GradedRelation> lift_relations(const std::vector<GradedRelation> &leads,
                                           const RingModel &ring);

/// w over the flattened coordinates (m_1..m_n, I_1..I_q) with
/// w(U) - w(J) >= 1 for every correction component U of a lead with
/// exponent sum J.
std::vector<long> find_weight_vector(const std::vector<GradedRelation> &relations);

long apply_weight(const std::vector<long> &w, const MultiExponent &e);

struct DegenerationFamily {
  std::size_t r = 0, s = 0;
  unsigned degree_bound = 0;
  std::vector<long> weight;
  std::vector<GradedRelation> relations;
  /// Exchange sets I'_h, h <= D.
  std::map<unsigned, std::vector<SuperPolynomial>> exchange;
  /// Generators in S[t]; t is the last even variable.
  std::vector<SuperPolynomial> generators;
  std::vector<std::string> warnings;
};

DegenerationFamily family_ideal(const Presentation &pres,
                                const std::vector<GradedRelation> &relations,
                                const std::vector<long> &w,
                                const std::vector<const EssentialSet *> &es,
                                unsigned degree_bound);

/// Generators of the fiber at t = a, as polynomials in S.
std::vector<SuperPolynomial> specialize(const DegenerationFamily &family, const Rational &a);

struct HilbertRow {
  Rational sample;
  std::vector<std::size_t> dims; // index h = 0..D
};

struct HilbertReport {
  std::vector<std::size_t> expected; // |es(h lambda)|, es(0) = 1
  std::vector<HilbertRow> rows;
  bool ok() const;
};

/// dim S_h / (ideal)_h per sample, compared with |es(h lambda)|.
HilbertReport hilbert_check(const DegenerationFamily &family,
                            const std::vector<Rational> &samples,
                            const std::vector<std::size_t> &expected);

/// Dimension of the degree-h part of S modulo the ideal generated by the
/// given homogeneous polynomials.
std::size_t quotient_dimension(const std::vector<SuperPolynomial> &generators,
                               std::size_t r, std::size_t s, unsigned h);

} // namespace superdeg
