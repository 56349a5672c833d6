#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hexalab/rational.hpp"

namespace hexalab {

/// How stored distance values relate to the actual distance.
/// `squared` holds d^2; every verdict in this library is invariant under
/// strictly increasing relabeling of values, so the two are interchangeable
/// except for power means.
enum class ValueKind { plain, squared };

std::string to_string(ValueKind kind);
ValueKind parse_value_kind(std::string_view text);

/// Finite metric measure space with exact rational distances and weights.
///
/// Distinct distance values are interned at construction: value_id(i, j)
/// indexes into values(), which is sorted strictly increasing. Most
/// algorithms work on the ids and only touch Rationals when accumulating
/// masses.
class FiniteMetricMeasureSpace {
 public:
  FiniteMetricMeasureSpace() = default;

  /// `dist` is row-major n*n. Throws InputError if sizes disagree. Semantic
  /// checks (symmetry, normalization, ...) are left to validate_space.
  FiniteMetricMeasureSpace(std::vector<std::string> labels, std::vector<Rational> dist,
                           std::vector<Rational> weights, ValueKind kind = ValueKind::plain);

  /// Uniform-weight convenience constructor; labels default to "0".."n-1".
  static FiniteMetricMeasureSpace uniform(std::size_t n, std::vector<Rational> dist,
                                          ValueKind kind = ValueKind::plain,
                                          std::vector<std::string> labels = {});

  std::size_t size() const { return weights_.size(); }
  ValueKind value_kind() const { return kind_; }

  const Rational& d(std::size_t i, std::size_t j) const { return values_[ids_[i * size() + j]]; }
  std::uint32_t value_id(std::size_t i, std::size_t j) const { return ids_[i * size() + j]; }
  const Rational& weight(std::size_t i) const { return weights_[i]; }
  const std::string& label(std::size_t i) const { return labels_[i]; }

  std::span<const Rational> values() const { return values_; }
  std::span<const Rational> weights() const { return weights_; }
  std::span<const std::string> labels() const { return labels_; }

  /// Index of the point labelled `label`, if any.
  std::optional<std::size_t> find(std::string_view label) const;

  /// Indices of positive-weight points.
  std::vector<std::size_t> support() const;

  /// Largest stored value among all pairs (0 for the empty space).
  Rational diameter() const { return values_.empty() ? Rational{} : values_.back(); }

  /// Largest stored value among pairs of positive-mass points.
  Rational essential_diameter() const;

  /// Full row-major value matrix (materialized on demand).
  std::vector<Rational> dist_matrix() const;

  /// Same points and weights, every value squared; kind becomes `squared`.
  /// Requires kind == plain.
  FiniteMetricMeasureSpace squared() const;

  /// Same distances, new weights (validated for size only).
  FiniteMetricMeasureSpace with_weights(std::vector<Rational> weights) const;

  /// Relabel values through a strictly increasing map given as the list of
  /// new values in the order of values(). Used by invariance tests.
  FiniteMetricMeasureSpace remap_values(std::span<const Rational> new_values) const;

  /// Permute points: new point k is old point perm[k].
  FiniteMetricMeasureSpace permuted(std::span<const std::size_t> perm) const;

 private:
  std::vector<std::string> labels_;
  std::vector<Rational> values_;
  std::vector<std::uint32_t> ids_;
  std::vector<Rational> weights_;
  ValueKind kind_ = ValueKind::plain;
};

/// Subset of a space's points with its cached exact measure.
class SubsetMask {
 public:
  SubsetMask() = default;
  /// Empty subset of `space`.
  explicit SubsetMask(const FiniteMetricMeasureSpace& space);
  SubsetMask(const FiniteMetricMeasureSpace& space, std::span<const std::size_t> members);
  SubsetMask(const FiniteMetricMeasureSpace& space, std::vector<bool> bits);

  static SubsetMask full(const FiniteMetricMeasureSpace& space);
  /// Members given by label; throws InputError on unknown labels.
  static SubsetMask from_labels(const FiniteMetricMeasureSpace& space,
                                std::span<const std::string> labels);

  std::size_t universe() const { return bits_.size(); }
  bool contains(std::size_t i) const { return bits_[i]; }
  const Rational& measure() const { return measure_; }
  std::size_t count() const;
  std::vector<std::size_t> members() const;
  const std::vector<bool>& bits() const { return bits_; }

  SubsetMask complement(const FiniteMetricMeasureSpace& space) const;

  friend bool operator==(const SubsetMask& a, const SubsetMask& b) { return a.bits_ == b.bits_; }

 private:
  std::vector<bool> bits_;
  Rational measure_;
};

/// Finite law: strictly increasing values with positive masses.
struct DistanceDistribution {
  std::vector<std::pair<Rational, Rational>> entries;
  Rational total;

  /// Mass at exactly `value` (0 if absent).
  Rational mass_at(const Rational& value) const;
  /// Cumulative mass of values <= r.
  Rational cdf(const Rational& r) const;
  /// Every mass divided by `by` (by != 0).
  DistanceDistribution scaled(const Rational& by) const;

  friend bool operator==(const DistanceDistribution&, const DistanceDistribution&) = default;
};

/// Right-continuous step function r -> mu(B(x, r)) sampled at realized radii.
struct VolumeFunction {
  std::vector<std::pair<Rational, Rational>> steps;

  /// Value at an arbitrary radius: cumulative mass at the largest step <= r.
  Rational at(const Rational& r) const;

  friend bool operator==(const VolumeFunction&, const VolumeFunction&) = default;
};

struct Violation {
  enum class Kind { shape, diagonal, symmetry, negative, weight, normalization, triangle };
  Kind kind;
  std::vector<std::size_t> witness;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> errors;
  std::vector<Violation> warnings;
  bool valid() const { return errors.empty(); }
};

std::string to_string(Violation::Kind kind);

ValidationReport validate_space(const FiniteMetricMeasureSpace& space, bool require_triangle = false);

/// Law of d(X, Y) for X, Y independent with law mu.
DistanceDistribution distance_distribution(const FiniteMetricMeasureSpace& space);

/// Pushforward of (mu|A) x (mu|B) under d; total = mu(A) mu(B).
DistanceDistribution restricted_distribution(const FiniteMetricMeasureSpace& space, const SubsetMask& a,
                                             const SubsetMask& b);

/// Exponent for power means: a positive rational or infinity.
struct PowerExponent {
  std::optional<Rational> value;  // nullopt = infinity
  static PowerExponent infinity() { return {}; }
  static PowerExponent of(Rational p) { return {p}; }
};

/// M_p(A) = (mu(A)^-2 * integral over A x A of d^p)^(1/p); p = inf gives the
/// essential diameter of A. Squared-kind values are square-rooted first.
double power_mean(const FiniteMetricMeasureSpace& space, const SubsetMask& a, PowerExponent p);

/// Per point x, r -> mu(B(x, r)) at every realized value of the space.
std::vector<VolumeFunction> volume_function(const FiniteMetricMeasureSpace& space);

}  // namespace hexalab
