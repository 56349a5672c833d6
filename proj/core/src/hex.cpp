#include "hexalab/hex.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>

#include "hexalab/error.hpp"
#include "space_internal.hpp"

namespace hexalab {

namespace {

void require_same_space(const FiniteMetricMeasureSpace& space, const SubsetMask& a) {
  if (a.universe() != space.size()) throw InputError("subset mask does not belong to this space");
}

}  // namespace

CvcVerdict check_cvc(const FiniteMetricMeasureSpace& space) {
  CvcVerdict verdict;
  const auto supp = space.support();
  if (supp.empty()) {
    verdict.holds = true;
    verdict.rho = VolumeFunction{};
    return verdict;
  }
  const auto reference = detail::sphere_masses(space, supp.front());
  for (std::size_t k = 1; k < supp.size(); ++k) {
    const auto other = detail::sphere_masses(space, supp[k]);
    if (other == reference) continue;
    // First radius at which the cumulative volumes disagree.
    Rational cx, cy;
    for (std::size_t v = 0; v < reference.size(); ++v) {
      cx += reference[v];
      cy += other[v];
      if (cx != cy) {
        verdict.witness = CvcWitness{supp.front(), supp[k], space.values()[v], cx, cy};
        return verdict;
      }
    }
  }
  VolumeFunction rho;
  Rational acc;
  for (std::size_t v = 0; v < reference.size(); ++v) {
    acc += reference[v];
    rho.steps.emplace_back(space.values()[v], acc);
  }
  verdict.holds = true;
  verdict.rho = std::move(rho);
  return verdict;
}

HexVerdict check_hex(const FiniteMetricMeasureSpace& space, const SubsetMask& a) {
  require_same_space(space, a);
  if (a.measure() != Rational(1, 2)) {
    throw PreconditionError("check_hex requires mu(A) = 1/2, got " + a.measure().str());
  }
  const SubsetMask c = a.complement(space);
  HexVerdict verdict;
  verdict.dist_a = restricted_distribution(space, a, a);
  verdict.dist_complement = restricted_distribution(space, c, c);
  verdict.holds = verdict.dist_a == verdict.dist_complement;
  if (!verdict.holds) {
    for (const auto& v : space.values()) {
      if (verdict.dist_a.mass_at(v) != verdict.dist_complement.mass_at(v)) {
        verdict.first_divergence = v;
        break;
      }
    }
  }
  return verdict;
}

Rational hex_defect(const FiniteMetricMeasureSpace& space, const SubsetMask& a, const Rational& r) {
  require_same_space(space, a);
  const auto cvc = check_cvc(space);
  if (!cvc.holds) throw PreconditionError("hex_defect requires the constant volume condition");

  const SubsetMask c = a.complement(space);
  const auto in_a = detail::pair_masses_by_id(space, a.bits(), a.bits());
  const auto in_c = detail::pair_masses_by_id(space, c.bits(), c.bits());
  Rational defect;
  for (std::size_t v = 0; v < space.values().size() && space.values()[v] <= r; ++v) {
    defect += in_a[v] - in_c[v];
  }
  const Rational predicted = cvc.rho->at(r) * (a.measure() - c.measure());
  if (defect != predicted) {
    throw InvariantViolation("defect identity failed at r = " + r.str() + ": " + defect.str() +
                             " != " + predicted.str());
  }
  return defect;
}

namespace {

DistanceDistribution as_squared(const DistanceDistribution& d) {
  DistanceDistribution out = d;
  for (auto& [v, m] : out.entries) v = v * v;
  return out;
}

bool same_law(DistanceDistribution a, ValueKind ka, DistanceDistribution b, ValueKind kb) {
  if (ka != kb) {
    if (ka == ValueKind::plain) a = as_squared(a);
    if (kb == ValueKind::plain) b = as_squared(b);
  }
  return a == b;
}

}  // namespace

bool homometric(const FiniteMetricMeasureSpace& x1, const FiniteMetricMeasureSpace& x2) {
  return same_law(distance_distribution(x1), x1.value_kind(), distance_distribution(x2), x2.value_kind());
}

bool homometric(const FiniteMetricMeasureSpace& x1, const SubsetMask& a1, const FiniteMetricMeasureSpace& x2,
                const SubsetMask& a2) {
  require_same_space(x1, a1);
  require_same_space(x2, a2);
  return same_law(restricted_distribution(x1, a1, a1), x1.value_kind(), restricted_distribution(x2, a2, a2),
                  x2.value_kind());
}

std::vector<Rational> patterson(const FiniteGroup& group, const std::vector<bool>& members) {
  const std::size_t n = group.order();
  if (members.size() != n) throw InputError("subset size does not match group order");
  std::vector<Rational> pat(n);
  for (std::size_t g = 0; g < n; ++g) {
    std::int64_t count = 0;
    for (std::size_t a = 0; a < n; ++a) {
      if (members[a] && members[group.multiply(g, a)]) ++count;
    }
    pat[g] = Rational(count, static_cast<std::int64_t>(n));
  }
  return pat;
}

PattersonReport check_patterson_equality(const FiniteGroup& group, const std::vector<bool>& members) {
  const std::size_t n = group.order();
  if (members.size() != n) throw InputError("subset size does not match group order");
  std::vector<bool> comp(n);
  std::int64_t size_a = 0;
  for (std::size_t g = 0; g < n; ++g) {
    comp[g] = !members[g];
    size_a += members[g] ? 1 : 0;
  }
  const auto pa = patterson(group, members);
  const auto pc = patterson(group, comp);

  PattersonReport report;
  const auto order = static_cast<std::int64_t>(n);
  report.expected_difference = Rational(size_a, order) - Rational(order - size_a, order);
  report.difference.resize(n);
  report.holds = true;
  report.inverse_symmetric = true;
  for (std::size_t g = 0; g < n; ++g) {
    report.difference[g] = pa[g] - pc[g];
    if (report.difference[g] != report.expected_difference) report.holds = false;
    if (pa[group.inverse(g)] != pa[g]) report.inverse_symmetric = false;
  }
  report.holds = report.holds && report.inverse_symmetric;
  return report;
}

// ---------------------------------------------------------------------------
// Isometry search

namespace {

using Bits = std::vector<std::uint64_t>;

class IsometrySearch {
 public:
  explicit IsometrySearch(const FiniteMetricMeasureSpace& space)
      : space_(space), n_(space.size()), words_((n_ + 63) / 64) {
    // Points can only map to points with the same weight and the same
    // multiset of (value, weight) around them.
    std::map<std::pair<Rational, std::vector<std::pair<std::uint32_t, Rational>>>, std::size_t> classes;
    class_of_.resize(n_);
    for (std::size_t p = 0; p < n_; ++p) {
      std::vector<std::pair<std::uint32_t, Rational>> profile;
      profile.reserve(n_);
      for (std::size_t q = 0; q < n_; ++q) profile.emplace_back(space.value_id(p, q), space.weight(q));
      std::sort(profile.begin(), profile.end(), [](const auto& a, const auto& b) {
        return a.first != b.first ? a.first < b.first : a.second < b.second;
      });
      const auto key = std::make_pair(space.weight(p), std::move(profile));
      const auto [it, inserted] = classes.try_emplace(key, classes.size());
      class_of_[p] = it->second;
    }
    value_masks_.assign(space.values().size(), Bits(words_, 0));
  }

  bool same_class(std::size_t p, std::size_t q) const { return class_of_[p] == class_of_[q]; }
  std::size_t class_count() const {
    return class_of_.empty() ? 0 : *std::max_element(class_of_.begin(), class_of_.end()) + 1;
  }

  std::optional<std::vector<std::size_t>> find(std::size_t from, std::size_t to) {
    if (!same_class(from, to)) return std::nullopt;
    std::vector<Bits> cand(n_, Bits(words_, 0));
    for (std::size_t p = 0; p < n_; ++p) {
      for (std::size_t q = 0; q < n_; ++q) {
        if (same_class(p, q)) set(cand[p], q);
      }
    }
    std::vector<std::size_t> image(n_, kUnassigned);
    if (!assign(cand, image, from, to)) return std::nullopt;
    if (!search(cand, image, 1)) return std::nullopt;
    return image;
  }

 private:
  static constexpr std::size_t kUnassigned = static_cast<std::size_t>(-1);

  static void set(Bits& b, std::size_t i) { b[i / 64] |= std::uint64_t{1} << (i % 64); }
  static bool test(const Bits& b, std::size_t i) { return (b[i / 64] >> (i % 64)) & 1u; }
  static std::size_t popcount(const Bits& b) {
    std::size_t c = 0;
    for (auto w : b) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  // Fix p -> q and filter every other unassigned candidate set.
  bool assign(std::vector<Bits>& cand, std::vector<std::size_t>& image, std::size_t p, std::size_t q) {
    image[p] = q;
    std::vector<std::uint32_t> touched;
    for (std::size_t r = 0; r < n_; ++r) {
      const auto v = space_.value_id(r, q);
      if (popcount_is_zero(value_masks_[v])) touched.push_back(v);
      set(value_masks_[v], r);
    }
    bool ok = true;
    for (std::size_t p2 = 0; p2 < n_ && ok; ++p2) {
      if (image[p2] != kUnassigned) continue;
      const Bits& keep = value_masks_[space_.value_id(p2, p)];
      bool any = false;
      for (std::size_t w = 0; w < words_; ++w) {
        cand[p2][w] &= keep[w];
        any = any || cand[p2][w] != 0;
      }
      cand[p2][q / 64] &= ~(std::uint64_t{1} << (q % 64));
      any = any && popcount(cand[p2]) > 0;
      ok = any;
    }
    for (auto v : touched) std::fill(value_masks_[v].begin(), value_masks_[v].end(), 0);
    return ok;
  }

  static bool popcount_is_zero(const Bits& b) {
    return std::all_of(b.begin(), b.end(), [](std::uint64_t w) { return w == 0; });
  }

  bool search(std::vector<Bits>& cand, std::vector<std::size_t>& image, std::size_t assigned) {
    if (assigned == n_) return true;
    std::size_t best = kUnassigned;
    std::size_t best_count = n_ + 1;
    for (std::size_t p = 0; p < n_; ++p) {
      if (image[p] != kUnassigned) continue;
      const auto c = popcount(cand[p]);
      if (c < best_count) {
        best_count = c;
        best = p;
      }
    }
    for (std::size_t q = 0; q < n_; ++q) {
      if (!test(cand[best], q)) continue;
      auto cand_next = cand;
      auto image_next = image;
      if (!assign(cand_next, image_next, best, q)) continue;
      if (search(cand_next, image_next, assigned + 1)) {
        image = std::move(image_next);
        return true;
      }
    }
    return false;
  }

  const FiniteMetricMeasureSpace& space_;
  std::size_t n_;
  std::size_t words_;
  std::vector<std::size_t> class_of_;
  std::vector<Bits> value_masks_;
};

}  // namespace

std::optional<std::vector<std::size_t>> find_isometry(const FiniteMetricMeasureSpace& space, std::size_t from,
                                                      std::size_t to) {
  if (from >= space.size() || to >= space.size()) throw InputError("point index out of range");
  IsometrySearch search(space);
  return search.find(from, to);
}

bool is_transitive(const FiniteMetricMeasureSpace& space) {
  const std::size_t n = space.size();
  if (n <= 1) return true;
  IsometrySearch search(space);
  if (search.class_count() != 1) return false;

  // Grow the orbit of point 0 under the isometries found so far; only search
  // for targets the current generators cannot reach.
  std::vector<std::vector<std::size_t>> generators;
  std::vector<bool> in_orbit(n, false);
  std::vector<std::size_t> orbit{0};
  in_orbit[0] = true;
  auto close_orbit = [&] {
    for (std::size_t k = 0; k < orbit.size(); ++k) {
      for (const auto& g : generators) {
        const auto y = g[orbit[k]];
        if (!in_orbit[y]) {
          in_orbit[y] = true;
          orbit.push_back(y);
        }
      }
    }
  };
  for (std::size_t y = 1; y < n; ++y) {
    if (in_orbit[y]) continue;
    auto iso = search.find(0, y);
    if (!iso) return false;
    generators.push_back(std::move(*iso));
    close_orbit();
  }
  return true;
}

}  // namespace hexalab
