#pragma once

#include "superdeg/essential.hpp"
#include "superdeg/lie_super.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace superdeg {

/// Rows a . s <= b over labeled variables, with s >= 0 and s <= 1 on odd
/// variables implied.
///
/// File format:
///   var <label> <even|odd> <root coordinates...>
///   a_1 a_2 ... a_N <= b
/// '#' starts a comment.
struct InequalitySystem {
  struct Variable {
    std::string label;
    bool odd = false;
    Weight root;
  };
  std::vector<Variable> variables;
  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> rhs;

  std::size_t size() const { return variables.size(); }
  std::size_t even_count() const;
  std::size_t odd_count() const;
  /// Row of the form s_odd <= 1.
  bool is_odd_cap(std::size_t row) const;
  bool satisfies(const std::vector<long> &point) const;

  static InequalitySystem parse(const std::string &text);
  static InequalitySystem load(const std::filesystem::path &file);
  std::string serialize() const;
};

/// Every integer point, sorted lexicographically in variable order.
std::vector<std::vector<long>> enumerate(const InequalitySystem &system);

/// Right-hand sides times k; odd caps unchanged.
InequalitySystem dilate(const InequalitySystem &system, unsigned k);

/// Odd variables (in file order) become I, even ones become m.
MultiExponent to_exponent(const InequalitySystem &system, const std::vector<long> &point);
RootCounts point_root_counts(const InequalitySystem &system, const std::vector<long> &point);

struct CompareReport {
  std::vector<std::string> polytope_only;
  std::vector<std::string> essential_only;
  std::size_t polytope_points = 0;
  std::size_t essential_size = 0;
  bool equal() const { return polytope_only.empty() && essential_only.empty(); }
};

/// Multiset comparison through positive-root counts. Throws
/// LabelingMismatchError when a variable's root is not a positive root of
/// the same parity.
CompareReport compare(const InequalitySystem &system,
                      const std::vector<std::vector<long>> &points, const EssentialSet &es,
                      const LieSuperalgebra &g, const BorelChoice &borel,
                      const NegativeBasis &nb);

/// "xi_{d2} x_{a1}^2" using the system's labels where available.
std::string describe_counts(const RootCounts &c, const InequalitySystem &system,
                            const LieSuperalgebra &g, const BorelChoice &borel);

} // namespace superdeg
