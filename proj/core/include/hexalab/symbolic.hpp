#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hexalab/group.hpp"
#include "hexalab/rational.hpp"
#include "hexalab/space.hpp"

namespace hexalab {

/// Abstract interval space (X, f, mu): f is a |X| x |X| table over a finite
/// alphabet of symbols. f need not be symmetric.
class IntervalTable {
 public:
  IntervalTable() = default;
  /// `values` is row-major and holds indices into `symbols`.
  IntervalTable(std::vector<std::string> points, std::vector<std::string> symbols, std::vector<std::uint32_t> values,
                std::vector<Rational> weights);

  /// Build from symbol strings; the alphabet is the sorted set of distinct cells.
  static IntervalTable from_cells(std::vector<std::string> points, const std::vector<std::vector<std::string>>& cells,
                                  std::vector<Rational> weights = {});

  std::size_t size() const { return points_.size(); }
  std::size_t alphabet_size() const { return symbols_.size(); }
  std::uint32_t at(std::size_t x, std::size_t y) const { return values_[x * size() + y]; }
  const std::string& symbol(std::uint32_t v) const { return symbols_[v]; }
  const std::string& cell(std::size_t x, std::size_t y) const { return symbols_[at(x, y)]; }
  const std::string& point(std::size_t x) const { return points_[x]; }
  const Rational& weight(std::size_t x) const { return weights_[x]; }

  const std::vector<std::string>& points() const { return points_; }
  const std::vector<std::string>& symbols() const { return symbols_; }
  const std::vector<Rational>& weights() const { return weights_; }

  std::optional<std::uint32_t> find_symbol(const std::string& s) const;
  std::optional<std::size_t> find_point(const std::string& s) const;
  std::vector<std::size_t> support() const;
  bool is_symmetric() const;

 private:
  std::vector<std::string> points_;
  std::vector<std::string> symbols_;
  std::vector<std::uint32_t> values_;
  std::vector<Rational> weights_;
};

/// f(x, y) = value id of d(x, y); symbols are the values as "p/q".
IntervalTable table_from_space(const FiniteMetricMeasureSpace& space);

enum class Coordinate { row, column };
std::string to_string(Coordinate c);

/// Where a kernel or conditional law is not constant.
struct KernelWitness {
  Coordinate coordinate;
  std::size_t point;        // the offending point
  std::size_t other_point;  // a point whose kernel differs (same as point for (Ind))
  std::uint32_t value;
};

struct IndVerdict {
  bool holds = false;
  bool x_independent_of_f = false;
  bool y_independent_of_f = false;
  std::optional<KernelWitness> witness;
};

/// Pairwise independence of X, Y, F = f(X, Y) under mu x mu, via the
/// factorization P(X = x, F = v) = mu(x) P(F = v) and its Y analogue.
IndVerdict check_ind(const IntervalTable& t);

struct KernelVerdict {
  bool holds = false;
  std::optional<KernelWitness> witness;
};

/// For every value v: x -> mu{y : f(x,y) = v} and y -> mu{x : f(x,y) = v}
/// are constant on supp(mu). Equivalent to equal laws of F under every
/// pair of balanced decompositions.
KernelVerdict check_hex_doubleprime(const IntervalTable& t);

/// For every value v: x -> mu{y : f(x,y) = v} + mu{y : f(y,x) = v} is
/// constant on supp(mu). Equivalent to equal laws of F under every single
/// balanced decomposition used on both coordinates.
KernelVerdict check_hex_prime(const IntervalTable& t);

/// Perturbations of mu on the grid 1 / (2^16 * lcm of weight denominators).
/// mu0 = mu + alpha, mu1 = mu - alpha; likewise beta for the column law.
struct Decomposition {
  std::int64_t denominator = 1;
  std::vector<std::int64_t> alpha;  // numerators over `denominator`
  std::vector<std::int64_t> beta;
};

enum class OracleMode { hex_prime, hex_doubleprime };

/// Laws of F_0 = f(X_0, Y_0) and F_1 = f(X_1, Y_1) for X_i ~ mu +- alpha,
/// Y_i ~ mu +- beta, as exact numerators over denominator^2.
std::pair<std::vector<__int128>, std::vector<__int128>> decomposition_laws(const IntervalTable& t,
                                                                          const Decomposition& d);

struct OracleResult {
  bool consistent = true;  // no violating decomposition found
  std::size_t trials = 0;
  std::optional<Decomposition> violation;
};

/// Randomized verifier of the (Hex') or (Hex'') quantifier: draws seeded
/// random balanced decompositions and compares the exact laws of F.
OracleResult sample_decomposition_oracle(const IntervalTable& t, std::size_t trials, std::uint64_t seed,
                                         OracleMode mode);

/// Law of F given X in A and Y in A (normalized by mu(A)^2), indexed by
/// symbol id. `members` flags points of the table.
std::vector<Rational> conditional_interval_distribution(const IntervalTable& t, const std::vector<bool>& members);

enum class GroupTableMode { product, left_quotient };

/// f(x, y) = x y or x^-1 y with uniform mu. Symbols are the group labels in
/// group order.
IntervalTable group_interval_table(const FiniteGroup& group, GroupTableMode mode);

struct AntisymmetryVerdict {
  bool antisymmetric = false;
  std::optional<std::pair<std::size_t, std::size_t>> witness;
  IndVerdict ind;
};

/// f(x, y) = i(f(y, x)) for all pairs, with `involution` a map on symbol
/// ids. Throws InputError if it is not an involution. When f is
/// antisymmetric and one of X, Y is independent of F, full (Ind) must
/// follow; InvariantViolation otherwise.
AntisymmetryVerdict verify_antisymmetric(const IntervalTable& t, const std::vector<std::uint32_t>& involution);

/// Every symbol exactly once per row and per column.
bool is_latin_square(const IntervalTable& t);

struct LoopVerdict {
  bool is_group = false;
  std::size_t identity = 0;
  /// (a, b, c) with (ab)c != a(bc), when not associative.
  std::optional<std::array<std::size_t, 3>> non_associative;
};

/// Reads the table as a binary operation on its points (symbols must name
/// points). Requires a Latin square with a two-sided identity
/// (PreconditionError otherwise) and decides associativity.
LoopVerdict loop_is_group(const IntervalTable& t);

}  // namespace hexalab
