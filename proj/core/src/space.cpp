#include "hexalab/space.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hexalab/error.hpp"
#include "space_internal.hpp"

namespace hexalab {

std::string to_string(ValueKind kind) { return kind == ValueKind::plain ? "plain" : "squared"; }

ValueKind parse_value_kind(std::string_view text) {
  if (text == "plain") return ValueKind::plain;
  if (text == "squared") return ValueKind::squared;
  throw InputError("unknown value_kind '" + std::string(text) + "' (expected plain|squared)");
}

std::string to_string(Violation::Kind kind) {
  switch (kind) {
    case Violation::Kind::shape: return "shape";
    case Violation::Kind::diagonal: return "diagonal";
    case Violation::Kind::symmetry: return "symmetry";
    case Violation::Kind::negative: return "negative";
    case Violation::Kind::weight: return "weight";
    case Violation::Kind::normalization: return "normalization";
    case Violation::Kind::triangle: return "triangle";
  }
  return "unknown";
}

// ---------------------------------------------------------------------------
// FiniteMetricMeasureSpace

FiniteMetricMeasureSpace::FiniteMetricMeasureSpace(std::vector<std::string> labels, std::vector<Rational> dist,
                                                   std::vector<Rational> weights, ValueKind kind)
    : labels_(std::move(labels)), weights_(std::move(weights)), kind_(kind) {
  const std::size_t n = weights_.size();
  if (dist.size() != n * n) {
    throw InputError("distance matrix has " + std::to_string(dist.size()) + " entries, expected " +
                     std::to_string(n * n));
  }
  if (labels_.empty()) {
    labels_.reserve(n);
    for (std::size_t i = 0; i < n; ++i) labels_.push_back(std::to_string(i));
  }
  if (labels_.size() != n) throw InputError("label count does not match point count");

  values_ = dist;
  std::sort(values_.begin(), values_.end());
  values_.erase(std::unique(values_.begin(), values_.end()), values_.end());
  if (values_.size() > std::numeric_limits<std::uint32_t>::max()) throw InputError("too many distinct values");

  ids_.resize(dist.size());
  for (std::size_t k = 0; k < dist.size(); ++k) {
    const auto it = std::lower_bound(values_.begin(), values_.end(), dist[k]);
    ids_[k] = static_cast<std::uint32_t>(it - values_.begin());
  }
}

FiniteMetricMeasureSpace FiniteMetricMeasureSpace::uniform(std::size_t n, std::vector<Rational> dist, ValueKind kind,
                                                           std::vector<std::string> labels) {
  std::vector<Rational> w(n, n == 0 ? Rational{} : Rational(1, static_cast<std::int64_t>(n)));
  return FiniteMetricMeasureSpace(std::move(labels), std::move(dist), std::move(w), kind);
}

std::optional<std::size_t> FiniteMetricMeasureSpace::find(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return i;
  }
  return std::nullopt;
}

std::vector<std::size_t> FiniteMetricMeasureSpace::support() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < size(); ++i) {
    if (weights_[i].sign() > 0) out.push_back(i);
  }
  return out;
}

Rational FiniteMetricMeasureSpace::essential_diameter() const {
  const auto supp = support();
  std::uint32_t best = 0;
  for (std::size_t i : supp) {
    for (std::size_t j : supp) best = std::max(best, value_id(i, j));
  }
  return supp.empty() ? Rational{} : values_[best];
}

std::vector<Rational> FiniteMetricMeasureSpace::dist_matrix() const {
  std::vector<Rational> out(ids_.size());
  for (std::size_t k = 0; k < ids_.size(); ++k) out[k] = values_[ids_[k]];
  return out;
}

FiniteMetricMeasureSpace FiniteMetricMeasureSpace::squared() const {
  if (kind_ != ValueKind::plain) throw InputError("space already holds squared values");
  FiniteMetricMeasureSpace out = *this;
  for (auto& v : out.values_) v = v * v;
  out.kind_ = ValueKind::squared;
  return out;
}

FiniteMetricMeasureSpace FiniteMetricMeasureSpace::with_weights(std::vector<Rational> weights) const {
  if (weights.size() != size()) throw InputError("weight count does not match point count");
  FiniteMetricMeasureSpace out = *this;
  out.weights_ = std::move(weights);
  return out;
}

FiniteMetricMeasureSpace FiniteMetricMeasureSpace::remap_values(std::span<const Rational> new_values) const {
  if (new_values.size() != values_.size()) throw InputError("remap needs one new value per distinct value");
  for (std::size_t k = 1; k < new_values.size(); ++k) {
    if (!(new_values[k - 1] < new_values[k])) throw InputError("remap must be strictly increasing");
  }
  FiniteMetricMeasureSpace out = *this;
  out.values_.assign(new_values.begin(), new_values.end());
  return out;
}

FiniteMetricMeasureSpace FiniteMetricMeasureSpace::permuted(std::span<const std::size_t> perm) const {
  const std::size_t n = size();
  if (perm.size() != n) throw InputError("permutation size mismatch");
  std::vector<std::string> labels(n);
  std::vector<Rational> weights(n);
  std::vector<Rational> dist(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    labels[a] = labels_[perm[a]];
    weights[a] = weights_[perm[a]];
    for (std::size_t b = 0; b < n; ++b) dist[a * n + b] = d(perm[a], perm[b]);
  }
  return FiniteMetricMeasureSpace(std::move(labels), std::move(dist), std::move(weights), kind_);
}

// ---------------------------------------------------------------------------
// SubsetMask

namespace {

Rational sum_weights(const FiniteMetricMeasureSpace& space, const std::vector<bool>& bits) {
  Rational m;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i]) m += space.weight(i);
  }
  return m;
}

}  // namespace

SubsetMask::SubsetMask(const FiniteMetricMeasureSpace& space) : bits_(space.size(), false) {}

SubsetMask::SubsetMask(const FiniteMetricMeasureSpace& space, std::span<const std::size_t> members)
    : bits_(space.size(), false) {
  for (std::size_t i : members) {
    if (i >= space.size()) throw InputError("subset member " + std::to_string(i) + " out of range");
    bits_[i] = true;
  }
  measure_ = sum_weights(space, bits_);
}

SubsetMask::SubsetMask(const FiniteMetricMeasureSpace& space, std::vector<bool> bits) : bits_(std::move(bits)) {
  if (bits_.size() != space.size()) throw InputError("subset mask size does not match space");
  measure_ = sum_weights(space, bits_);
}

SubsetMask SubsetMask::full(const FiniteMetricMeasureSpace& space) {
  return SubsetMask(space, std::vector<bool>(space.size(), true));
}

SubsetMask SubsetMask::from_labels(const FiniteMetricMeasureSpace& space, std::span<const std::string> labels) {
  std::vector<bool> bits(space.size(), false);
  for (const auto& l : labels) {
    const auto idx = space.find(l);
    if (!idx) throw InputError("unknown point label '" + l + "'");
    bits[*idx] = true;
  }
  return SubsetMask(space, std::move(bits));
}

std::size_t SubsetMask::count() const { return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), true)); }

std::vector<std::size_t> SubsetMask::members() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i]) out.push_back(i);
  }
  return out;
}

SubsetMask SubsetMask::complement(const FiniteMetricMeasureSpace& space) const {
  std::vector<bool> bits(bits_.size());
  for (std::size_t i = 0; i < bits_.size(); ++i) bits[i] = !bits_[i];
  return SubsetMask(space, std::move(bits));
}

// ---------------------------------------------------------------------------
// Distributions

Rational DistanceDistribution::mass_at(const Rational& value) const {
  const auto it = std::lower_bound(entries.begin(), entries.end(), value,
                                   [](const auto& e, const Rational& v) { return e.first < v; });
  return (it != entries.end() && it->first == value) ? it->second : Rational{};
}

Rational DistanceDistribution::cdf(const Rational& r) const {
  Rational acc;
  for (const auto& [v, m] : entries) {
    if (v > r) break;
    acc += m;
  }
  return acc;
}

DistanceDistribution DistanceDistribution::scaled(const Rational& by) const {
  DistanceDistribution out;
  out.entries.reserve(entries.size());
  for (const auto& [v, m] : entries) out.entries.emplace_back(v, m / by);
  out.total = total / by;
  return out;
}

Rational VolumeFunction::at(const Rational& r) const {
  Rational acc;
  for (const auto& [radius, mass] : steps) {
    if (radius > r) break;
    acc = mass;
  }
  return acc;
}

namespace detail {

bool uniform_on(const FiniteMetricMeasureSpace& space, const std::vector<bool>& bits, Rational& common) {
  bool first = true;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (!bits[i]) continue;
    if (first) {
      common = space.weight(i);
      first = false;
    } else if (space.weight(i) != common) {
      return false;
    }
  }
  if (first) common = Rational{};
  return true;
}

std::vector<Rational> pair_masses_by_id(const FiniteMetricMeasureSpace& space, const std::vector<bool>& a,
                                        const std::vector<bool>& b) {
  const std::size_t n = space.size();
  const std::size_t nv = space.values().size();
  std::vector<Rational> mass(nv);
  Rational wa, wb;
  if (uniform_on(space, a, wa) && uniform_on(space, b, wb)) {
    std::vector<std::int64_t> counts(nv, 0);
    for (std::size_t i = 0; i < n; ++i) {
      if (!a[i]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (b[j]) ++counts[space.value_id(i, j)];
      }
    }
    const Rational w = wa * wb;
    for (std::size_t v = 0; v < nv; ++v) {
      if (counts[v] != 0) mass[v] = w * Rational(counts[v]);
    }
    return mass;
  }
  std::vector<Rational> row(nv);
  std::vector<std::uint32_t> touched;
  for (std::size_t i = 0; i < n; ++i) {
    if (!a[i] || space.weight(i).is_zero()) continue;
    touched.clear();
    for (std::size_t j = 0; j < n; ++j) {
      if (!b[j] || space.weight(j).is_zero()) continue;
      const auto v = space.value_id(i, j);
      if (row[v].is_zero()) touched.push_back(v);
      row[v] += space.weight(j);
    }
    for (auto v : touched) {
      mass[v] += space.weight(i) * row[v];
      row[v] = Rational{};
    }
  }
  return mass;
}

std::vector<Rational> sphere_masses(const FiniteMetricMeasureSpace& space, std::size_t x) {
  std::vector<Rational> mass(space.values().size());
  for (std::size_t y = 0; y < space.size(); ++y) {
    if (!space.weight(y).is_zero()) mass[space.value_id(x, y)] += space.weight(y);
  }
  return mass;
}

DistanceDistribution to_distribution(const FiniteMetricMeasureSpace& space, const std::vector<Rational>& by_id) {
  DistanceDistribution out;
  for (std::size_t v = 0; v < by_id.size(); ++v) {
    if (by_id[v].is_zero()) continue;
    out.entries.emplace_back(space.values()[v], by_id[v]);
    out.total += by_id[v];
  }
  return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Operations

namespace {

// sqrt(a) <= sqrt(b) + sqrt(c) for nonnegative rationals, exactly.
bool squared_triangle_ok(const Rational& a, const Rational& b, const Rational& c) {
  const Rational e = a - b - c;
  if (e.sign() <= 0) return true;
  return e * e <= Rational(4) * b * c;
}

}  // namespace

ValidationReport validate_space(const FiniteMetricMeasureSpace& space, bool require_triangle) {
  ValidationReport report;
  const std::size_t n = space.size();
  constexpr std::size_t kMaxWitnesses = 16;

  auto add = [&](std::vector<Violation>& into, Violation::Kind kind, std::vector<std::size_t> w, std::string msg) {
    if (into.size() < kMaxWitnesses) into.push_back({kind, std::move(w), std::move(msg)});
  };

  if (space.labels().size() != n) add(report.errors, Violation::Kind::shape, {}, "label count mismatch");

  for (std::size_t i = 0; i < n; ++i) {
    if (!space.d(i, i).is_zero()) {
      add(report.errors, Violation::Kind::diagonal, {i}, "dist[" + std::to_string(i) + "][" + std::to_string(i) +
                                                              "] = " + space.d(i, i).str() + " != 0");
    }
    if (space.weight(i).sign() < 0) {
      add(report.errors, Violation::Kind::weight, {i}, "negative weight at " + std::to_string(i));
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (space.d(i, j).sign() < 0) {
        add(report.errors, Violation::Kind::negative, {i, j},
            "negative distance at (" + std::to_string(i) + "," + std::to_string(j) + ")");
      }
      if (i < j && space.value_id(i, j) != space.value_id(j, i)) {
        add(report.errors, Violation::Kind::symmetry, {i, j},
            "dist[" + std::to_string(i) + "][" + std::to_string(j) + "] = " + space.d(i, j).str() + " but dist[" +
                std::to_string(j) + "][" + std::to_string(i) + "] = " + space.d(j, i).str());
      }
    }
  }
  Rational total;
  for (const auto& w : space.weights()) total += w;
  if (total != Rational(1)) {
    add(report.errors, Violation::Kind::normalization, {}, "weights sum to " + total.str() + ", expected 1/1");
  }

  // Triangle scan on doubles, confirmed exactly near ties.
  std::vector<double> dv;
  dv.reserve(space.values().size());
  for (const auto& v : space.values()) dv.push_back(v.to_double());
  const bool sq = space.value_kind() == ValueKind::squared;
  auto& triangle_sink = require_triangle ? report.errors : report.warnings;
  std::size_t found = 0;
  for (std::size_t i = 0; i < n && found < kMaxWitnesses; ++i) {
    for (std::size_t j = i + 1; j < n && found < kMaxWitnesses; ++j) {
      const auto ij = space.value_id(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        const auto ik = space.value_id(i, k);
        const auto kj = space.value_id(k, j);
        const double a = sq ? std::sqrt(dv[ij]) : dv[ij];
        const double b = sq ? std::sqrt(dv[ik]) : dv[ik];
        const double c = sq ? std::sqrt(dv[kj]) : dv[kj];
        if (a <= (b + c) * (1 - 1e-12)) continue;
        const bool ok = sq ? squared_triangle_ok(space.values()[ij], space.values()[ik], space.values()[kj])
                           : space.values()[ij] <= space.values()[ik] + space.values()[kj];
        if (!ok) {
          ++found;
          add(triangle_sink, Violation::Kind::triangle, {i, j, k},
              "d(" + std::to_string(i) + "," + std::to_string(j) + ") > d(" + std::to_string(i) + "," +
                  std::to_string(k) + ") + d(" + std::to_string(k) + "," + std::to_string(j) + ")");
          break;
        }
      }
    }
  }
  return report;
}

DistanceDistribution distance_distribution(const FiniteMetricMeasureSpace& space) {
  const std::vector<bool> all(space.size(), true);
  return detail::to_distribution(space, detail::pair_masses_by_id(space, all, all));
}

DistanceDistribution restricted_distribution(const FiniteMetricMeasureSpace& space, const SubsetMask& a,
                                             const SubsetMask& b) {
  if (a.universe() != space.size() || b.universe() != space.size()) {
    throw InputError("subset mask does not belong to this space");
  }
  return detail::to_distribution(space, detail::pair_masses_by_id(space, a.bits(), b.bits()));
}

double power_mean(const FiniteMetricMeasureSpace& space, const SubsetMask& a, PowerExponent p) {
  if (a.universe() != space.size()) throw InputError("subset mask does not belong to this space");
  if (a.measure().sign() <= 0) throw PreconditionError("power_mean: subset has zero measure");
  const bool sq = space.value_kind() == ValueKind::squared;
  auto actual = [&](const Rational& v) { return sq ? std::sqrt(v.to_double()) : v.to_double(); };

  if (!p.value) {
    std::uint32_t best = 0;
    for (std::size_t i = 0; i < space.size(); ++i) {
      if (!a.contains(i) || space.weight(i).is_zero()) continue;
      for (std::size_t j = 0; j < space.size(); ++j) {
        if (a.contains(j) && !space.weight(j).is_zero()) best = std::max(best, space.value_id(i, j));
      }
    }
    return actual(space.values()[best]);
  }
  if (p.value->sign() <= 0) throw PreconditionError("power_mean: exponent must be positive");

  const auto masses = detail::pair_masses_by_id(space, a.bits(), a.bits());
  const double exponent = p.value->to_double();
  double acc = 0.0;
  for (std::size_t v = 0; v < masses.size(); ++v) {
    if (masses[v].is_zero()) continue;
    acc += masses[v].to_double() * std::pow(actual(space.values()[v]), exponent);
  }
  const double m = a.measure().to_double();
  return std::pow(acc / (m * m), 1.0 / exponent);
}

std::vector<VolumeFunction> volume_function(const FiniteMetricMeasureSpace& space) {
  std::vector<VolumeFunction> out(space.size());
  for (std::size_t x = 0; x < space.size(); ++x) {
    const auto spheres = detail::sphere_masses(space, x);
    Rational acc;
    out[x].steps.reserve(spheres.size());
    for (std::size_t v = 0; v < spheres.size(); ++v) {
      acc += spheres[v];
      out[x].steps.emplace_back(space.values()[v], acc);
    }
  }
  return out;
}

}  // namespace hexalab
