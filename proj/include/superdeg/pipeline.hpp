#pragma once

#include "superdeg/essential.hpp"
#include "superdeg/lie_super.hpp"
#include "superdeg/monomial_order.hpp"
#include "superdeg/representation.hpp"

#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace superdeg {

/// Job description read from a sectioned key-value file:
///
///   [algebra]     family, m, n, functional, basis_perm (1-based)
///   [realization] factors, hw = "weight c1 c2 ..." | "index i1 i2 ..." (1-based)
///   [order]       name, priority (1-based), search
///   [bounds]      favourable_k, degree, semigroup, samples, degree_cap
///   [polytope]    file
///   [output]      dir
struct JobConfig {
  std::string family = "osp";
  unsigned m = 1, n = 2;
  std::optional<Weight> functional;
  std::vector<std::size_t> basis_perm; // 0-based; empty = default

  std::vector<std::string> factors{"natural", "natural"};
  enum class HwMode { Weight, Index } hw_mode = HwMode::Weight;
  Weight hw_weight{1, 1};
  std::vector<std::size_t> hw_index; // 0-based

  std::string order = "graded-lex";
  std::vector<std::size_t> priority; // 0-based; empty = identity
  bool search = false;

  unsigned favourable_k = 3;
  unsigned degree = 3;
  unsigned semigroup = 0; // reachability bound B; 0 means 2q + 2
  std::vector<Rational> samples{0, 1, 2, 5};
  unsigned degree_cap = 0;

  std::filesystem::path polytope;
  std::filesystem::path out_dir = "out";

  static JobConfig parse(const std::string &text,
                         const std::filesystem::path &base_dir = {});
  static JobConfig load(const std::filesystem::path &file);
  std::string describe() const;
};

/// Parses "1 2 3" or "1,2,3" into numbers.
std::vector<Rational> parse_rational_list(const std::string &text);
std::vector<std::size_t> parse_index_list(const std::string &text, bool one_based);

/// Algebra, Borel, negative basis, module tower and essential sets for one
/// job, built lazily.
class Pipeline {
public:
  explicit Pipeline(JobConfig config);
  Pipeline(const Pipeline &) = delete;
  Pipeline &operator=(const Pipeline &) = delete;

  const JobConfig &config() const { return config_; }
  const LieSuperalgebra &algebra() const { return *g_; }
  const BorelChoice &borel() const { return borel_; }
  const NegativeBasis &basis() const { return tower_->basis(); }
  const MonomialOrder &order() const { return order_; }
  ModuleTower &tower() { return *tower_; }
  const Weight &lambda() const { return tower_->lambda(); }

  const EssentialSet &essential(unsigned k);
  /// es(k lambda) for k = 1..K.
  std::vector<const EssentialSet *> essentials(unsigned K);
  std::vector<std::string> warnings() const;

private:
  JobConfig config_;
  std::unique_ptr<LieSuperalgebra> g_;
  BorelChoice borel_;
  MonomialOrder order_;
  std::unique_ptr<ModuleTower> tower_;
  std::map<unsigned, std::unique_ptr<EssentialSet>> es_;
};

struct CatalogEntry {
  std::string order;
  std::vector<std::size_t> basis_perm; // 0-based
};

struct CatalogResult {
  std::size_t tried = 0;
  std::optional<CatalogEntry> match;
  /// Smallest symmetric difference seen, with its entry.
  std::size_t best_difference = 0;
  std::optional<CatalogEntry> best;
};

/// Orders {graded-lex, graded-revlex} times every permutation of the
/// negative basis; stops at the first es(lambda) whose root multisets equal
/// `target`.
CatalogResult search_catalog(const JobConfig &base, const std::vector<RootCounts> &target);

/// Size of the multiset symmetric difference.
std::size_t root_count_difference(std::vector<RootCounts> a, std::vector<RootCounts> b);

} // namespace superdeg
