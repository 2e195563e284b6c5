#pragma once

#include "superdeg/linalg.hpp"
#include "superdeg/rational.hpp"
#include "superdeg/sparse_vector.hpp"

#include <string>
#include <vector>

namespace superdeg {

using Weight = std::vector<Rational>;

std::string weight_to_string(const Weight &w);

/// Root of the diagonal Cartan: values alpha(W_k) on the weight basis.
struct Root {
  Weight coords;
  unsigned parity = 0;
  std::size_t basis_index = 0; // root vector inside LieSuperalgebra::basis
};

/// Matrix realization of gl(p|q), sl(p|q) or osp(m|2n) on C^{p|q}, with the
/// diagonal Cartan and its root decomposition. The first `cartan_dim()`
/// basis elements span the Cartan; every other basis element spans a root
/// space.
class LieSuperalgebra {
public:
  static LieSuperalgebra build(const std::string &family, std::size_t m,
                               std::size_t n);

  const std::string &family() const { return family_; }
  std::size_t param_m() const { return m_; }
  std::size_t param_n() const { return n_; }
  /// Ambient super dimension p|q of the natural representation.
  std::size_t even_dim() const { return p_; }
  std::size_t odd_dim() const { return q_; }
  std::size_t ambient_dim() const { return p_ + q_; }
  /// Parity of ambient basis vector i.
  unsigned vector_parity(std::size_t i) const { return i < p_ ? 0 : 1; }

  std::size_t dim() const { return basis_.size(); }
  std::size_t even_part_dim() const;
  std::size_t odd_part_dim() const { return dim() - even_part_dim(); }
  std::size_t cartan_dim() const { return cartan_dim_; }

  const std::vector<SparseMatrix> &basis() const { return basis_; }
  const SparseMatrix &element(std::size_t i) const { return basis_[i]; }
  unsigned parity(std::size_t i) const { return parity_[i]; }
  const std::vector<Root> &roots() const { return roots_; }
  /// Weights are measured on diagonal matrices W_1..W_r: the Cartan basis
  /// itself, except for sl(n|n) where all diagonal matrices are used.
  std::size_t weight_dim() const { return weight_basis_.size(); }
  const Weight &weight_diagonal(std::size_t k) const { return weight_basis_[k]; }

  /// xy - (-1)^{|x||y|} yx for homogeneous matrices of the given parities.
  static SparseMatrix bracket(const SparseMatrix &x, unsigned px,
                              const SparseMatrix &y, unsigned py);
  SparseMatrix bracket(std::size_t a, std::size_t b) const;
  /// Coordinates of a matrix in the basis; throws if it is not in the algebra.
  SparseVector coordinates(const SparseMatrix &x) const;
  /// Weight of the ambient basis vector e_i: (W_k)_{ii}.
  Weight ambient_weight(std::size_t i) const;
  /// Pairing of sum_k phi_k W_k with a weight.
  static Rational evaluate(const Weight &cartan_element, const Weight &root);

  const std::vector<std::string> &warnings() const { return warnings_; }

private:
  void decompose(const std::vector<std::vector<SparseVector>> &constraints);

  std::string family_;
  std::size_t m_ = 0, n_ = 0, p_ = 0, q_ = 0;
  std::vector<SparseMatrix> basis_;
  std::vector<unsigned> parity_;
  std::size_t cartan_dim_ = 0;
  std::vector<Weight> weight_basis_;
  bool full_diagonal_weights_ = false;
  std::vector<Root> roots_;
  SpanAccumulator span_;
  std::vector<std::string> warnings_;
};

/// Positive system cut out by a Cartan element phi: alpha > 0 iff
/// alpha(phi) > 0.
struct BorelChoice {
  Weight functional;
  std::vector<std::size_t> positive; // indices into roots()
  std::vector<std::size_t> negative;
  std::vector<std::size_t> simple;
  /// Height of each positive root over the simple roots (index aligned with
  /// `positive`).
  std::vector<Rational> heights;
  /// Expansion of each positive root over the simple roots.
  std::vector<std::vector<Rational>> simple_coords;

  bool is_positive(std::size_t root) const;
};

BorelChoice choose_borel(const LieSuperalgebra &g, const Weight &functional);
/// Functional (c^{l-1}, ..., c, 1) for the smallest c >= 2 that is nonzero on
/// every root.
Weight default_functional(const LieSuperalgebra &g);

/// Ordered basis f_1..f_N of n^-; position k holds the root vector of
/// roots()[root_of[k]]. Odd and even positions are recorded ascending so an
/// exponent (I, m) sits at positions odd_positions / even_positions.
struct NegativeBasis {
  std::vector<std::size_t> root_of;
  std::vector<std::size_t> odd_positions;
  std::vector<std::size_t> even_positions;
  /// Matching positive root for each position.
  std::vector<std::size_t> positive_of;

  std::size_t size() const { return root_of.size(); }
  std::size_t n() const { return even_positions.size(); }
  std::size_t q() const { return odd_positions.size(); }
};

/// Default order: ascending (height, positive root coordinates); f_N has the
/// largest height. `permutation[k]` (if nonempty) names the default position
/// placed at position k.
NegativeBasis negative_basis(const LieSuperalgebra &g, const BorelChoice &borel,
                             const std::vector<std::size_t> &permutation = {});

/// Human-readable root label in terms of simple roots, e.g. "a1+a2".
std::string root_label(const BorelChoice &borel, std::size_t positive_root);

} // namespace superdeg
