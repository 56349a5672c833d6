#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hexalab/group.hpp"
#include "hexalab/rational.hpp"
#include "hexalab/space.hpp"

namespace hexalab {

/// Points x, y whose closed balls of radius r have different measure.
struct CvcWitness {
  std::size_t x;
  std::size_t y;
  Rational radius;
  Rational volume_x;
  Rational volume_y;
};

struct CvcVerdict {
  bool holds = false;
  std::optional<VolumeFunction> rho;
  std::optional<CvcWitness> witness;
};

/// Constant volume condition on the support of mu: every positive-weight
/// point has the same ball-volume function. Zero-weight points are ignored.
CvcVerdict check_cvc(const FiniteMetricMeasureSpace& space);

struct HexVerdict {
  bool holds = false;
  DistanceDistribution dist_a;
  DistanceDistribution dist_complement;
  /// Smallest value at which the two laws differ.
  std::optional<Rational> first_divergence;
};

/// Compares the unnormalized laws of d on A x A and on A^c x A^c.
/// Throws PreconditionError unless mu(A) = 1/2 exactly.
HexVerdict check_hex(const FiniteMetricMeasureSpace& space, const SubsetMask& a);

/// mu^2{A^2, d <= r} - mu^2{(A^c)^2, d <= r}.
///
/// Requires CVC (PreconditionError otherwise). The result is checked
/// against rho(r) * (mu(A) - mu(A^c)) and InvariantViolation is thrown on
/// mismatch.
Rational hex_defect(const FiniteMetricMeasureSpace& space, const SubsetMask& a, const Rational& r);

/// Equality of distance laws. Spaces of different value kinds are compared
/// after squaring the plain side.
bool homometric(const FiniteMetricMeasureSpace& x1, const FiniteMetricMeasureSpace& x2);

/// Subset form: unnormalized laws of d on A1^2 and A2^2.
bool homometric(const FiniteMetricMeasureSpace& x1, const SubsetMask& a1, const FiniteMetricMeasureSpace& x2,
                const SubsetMask& a2);

/// Pat_A(g) = mu(A cap g.A) on a finite group with uniform measure.
/// `members` flags group elements (size = group order).
std::vector<Rational> patterson(const FiniteGroup& group, const std::vector<bool>& members);

struct PattersonReport {
  bool holds = false;
  /// Pat_A(g) - Pat_{A^c}(g) per element.
  std::vector<Rational> difference;
  /// mu(A) - mu(A^c), the value every difference must equal.
  Rational expected_difference;
  bool inverse_symmetric = false;
};

/// Checks Pat_A - Pat_{A^c} == mu(A) - mu(A^c) pointwise (pointwise equality
/// when mu(A) = 1/2) and Pat_A(g^-1) == Pat_A(g).
PattersonReport check_patterson_equality(const FiniteGroup& group, const std::vector<bool>& members);

/// Some measure-preserving isometry maps every point to every other point.
/// Backtracking search; practical up to a few hundred points for graphs.
bool is_transitive(const FiniteMetricMeasureSpace& space);

/// An isometry (as a permutation) sending `from` to `to`, if one exists.
std::optional<std::vector<std::size_t>> find_isometry(const FiniteMetricMeasureSpace& space, std::size_t from,
                                                      std::size_t to);

}  // namespace hexalab
