#pragma once

#include "superdeg/lie_super.hpp"
#include "superdeg/multi_exponent.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace superdeg {

/// Finite-dimensional representation with a weight basis: one action matrix
/// per algebra basis element, plus parity and weight of every basis vector.
struct Representation {
  std::size_t dim = 0;
  std::vector<SparseMatrix> action;
  std::vector<unsigned> parity;
  std::vector<Weight> weights;

  static Representation natural(const LieSuperalgebra &g);
  /// x acts by M_{ji} = -(-1)^{|x||i|} x_{ij}.
  static Representation dual(const LieSuperalgebra &g);
  static Representation trivial(const LieSuperalgebra &g);
  static Representation from_name(const std::string &name, const LieSuperalgebra &g);

  /// x(v (x) w) = xv (x) w + (-1)^{|x||v|} v (x) xw.
  static Representation tensor(const Representation &a, const Representation &b,
                               const LieSuperalgebra &g);
  static Representation tensor_power(const Representation &a, unsigned k,
                                     const LieSuperalgebra &g);

  /// Number of basis pairs (a, b) on which rho([x,y]) differs from the
  /// super commutator of rho(x), rho(y).
  std::size_t axiom_violations(const LieSuperalgebra &g) const;
};

/// Vector annihilated by every positive root vector, with weight lambda.
struct HighestWeightVector {
  SparseVector vector;
  Weight weight;
};

/// Tensor product of unit vectors e_{i_1} (x) ... (x) e_{i_k} (0-based
/// indices), checked to be a highest weight vector.
HighestWeightVector highest_weight_by_index(const std::vector<Representation> &factors,
                                            const Representation &product,
                                            const std::vector<std::size_t> &indices,
                                            const LieSuperalgebra &g,
                                            const BorelChoice &borel);
/// The unique (up to scale) n^+-annihilated vector of the given weight.
HighestWeightVector highest_weight_by_weight(const Representation &rep,
                                             const Weight &weight,
                                             const LieSuperalgebra &g,
                                             const BorelChoice &borel);

/// Memoized evaluation of f^{(e)} v = f_N^{e_N} ... f_1^{e_1} v, applied
/// right to left. Divided powers include the factor 1 / prod e_t!.
class PbwEvaluator {
public:
  PbwEvaluator(const Representation &rep, const LieSuperalgebra &g,
               const BorelChoice &borel, const NegativeBasis &nb, SparseVector hw,
               Weight lambda, bool divided = true);

  SparseVector act(const MultiExponent &e);
  /// Same with exponents indexed by basis position 0..N-1.
  SparseVector act_positions(const std::vector<unsigned> &exps);

  Weight weight_of(const MultiExponent &e) const;
  bool weight_occurs(const Weight &w) const { return ambient_weights_.count(w) > 0; }
  std::vector<unsigned> positions(const MultiExponent &e) const;
  MultiExponent exponent(const std::vector<unsigned> &positions) const;

  const Representation &rep() const { return *rep_; }
  const NegativeBasis &basis() const { return nb_; }
  const Weight &lambda() const { return lambda_; }
  const SparseVector &hw() const { return hw_; }
  bool divided() const { return divided_; }
  /// Upper bound on the degree of a nonzero f^{(e)} v.
  unsigned degree_bound() const { return degree_bound_; }

private:
  const Representation *rep_;
  NegativeBasis nb_;
  std::vector<const SparseMatrix *> f_;
  std::vector<Weight> f_weight_;
  SparseVector hw_;
  Weight lambda_;
  bool divided_;
  std::map<std::vector<unsigned>, SparseVector> memo_;
  std::map<Weight, std::size_t> ambient_weights_;
  unsigned degree_bound_ = 0;
};

/// Span of all f^{(e)} v, organized in weight blocks. Basis vectors are PBW
/// vectors, hence weight vectors; the first one is v itself.
struct CyclicModule {
  struct Block {
    SpanAccumulator acc;
    std::vector<std::size_t> members; // global basis indices, insertion order
  };
  std::vector<MultiExponent> exponents;
  std::vector<SparseVector> vectors;
  std::vector<Weight> weights;
  std::map<Weight, Block> blocks;
  unsigned stabilized_at = 0;

  std::size_t dim() const { return vectors.size(); }
  /// Coordinates of a weight vector of weight w over the basis; nullopt if
  /// it is not in the span.
  std::optional<SparseVector> express(const SparseVector &v, const Weight &w) const;
};

/// Breadth-first over PBW degree; stops once a whole degree layer adds no
/// rank. Throws NotConvergedError if that has not happened by degree_cap.
CyclicModule cyclic_span(PbwEvaluator &eval, unsigned degree_cap);

/// Action on the cyclic module in its own basis.
Representation restrict_to(const Representation &rep, const CyclicModule &mod,
                           const LieSuperalgebra &g);

/// Terms f^{(J')} v (x) f^{(J'')} w with J' + J'' = e: returns
/// ((J', J''), (-1)^{K_{J',J''}} prod C(m_i, m'_i)); the binomials are dropped
/// for divided powers.
std::vector<std::pair<std::pair<MultiExponent, MultiExponent>, Rational>>
cartan_expand(const MultiExponent &e, bool divided = true);

/// Level-k modules K(k lambda) realized as cyclic spans inside the k-th
/// tensor power of the level-1 module.
class ModuleTower {
public:
  /// `level_one` is the ambient of the level-1 module with its hw vector.
  ModuleTower(const LieSuperalgebra &g, const BorelChoice &borel, NegativeBasis nb,
              Representation level_one, HighestWeightVector hw, unsigned degree_cap = 0);

  const LieSuperalgebra &algebra() const { return *g_; }
  const NegativeBasis &basis() const { return nb_; }
  const Weight &lambda() const { return lambda_; }
  /// Realized level (k >= 1); built on demand.
  struct Level {
    Representation ambient;
    std::unique_ptr<PbwEvaluator> eval;
    CyclicModule module;
  };
  Level &level(unsigned k);
  const Representation &level_one_rep() const { return restricted_; }

private:
  const LieSuperalgebra *g_;
  const BorelChoice *borel_;
  NegativeBasis nb_;
  Weight lambda_;
  unsigned degree_cap_;
  Representation restricted_;
  std::map<unsigned, std::unique_ptr<Level>> levels_;
};

} // namespace superdeg
