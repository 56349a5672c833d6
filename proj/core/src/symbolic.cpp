#include "hexalab/symbolic.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "hexalab/error.hpp"
#include "hexalab/seed.hpp"

namespace hexalab {

IntervalTable::IntervalTable(std::vector<std::string> points, std::vector<std::string> symbols,
                             std::vector<std::uint32_t> values, std::vector<Rational> weights)
    : points_(std::move(points)), symbols_(std::move(symbols)), values_(std::move(values)), weights_(std::move(weights)) {
  const std::size_t n = points_.size();
  if (values_.size() != n * n) throw InputError("interval table must be square");
  if (weights_.empty() && n > 0) weights_.assign(n, Rational(1, static_cast<std::int64_t>(n)));
  if (weights_.size() != n) throw InputError("interval table weight count mismatch");
  for (auto v : values_) {
    if (v >= symbols_.size()) throw InputError("interval table value outside the alphabet");
  }
  Rational total;
  for (const auto& w : weights_) {
    if (w.sign() < 0) throw InputError("interval table has a negative weight");
    total += w;
  }
  if (n > 0 && total != Rational(1)) throw InputError("interval table weights sum to " + total.str() + ", not 1");
}

IntervalTable IntervalTable::from_cells(std::vector<std::string> points,
                                        const std::vector<std::vector<std::string>>& cells,
                                        std::vector<Rational> weights) {
  const std::size_t n = points.size();
  if (cells.size() != n) throw InputError("interval table needs one row per point");
  std::set<std::string> alphabet;
  for (const auto& row : cells) {
    if (row.size() != n) throw InputError("interval table row has " + std::to_string(row.size()) + " cells, expected " +
                                          std::to_string(n));
    alphabet.insert(row.begin(), row.end());
  }
  std::vector<std::string> symbols(alphabet.begin(), alphabet.end());
  std::vector<std::uint32_t> values(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const auto it = std::lower_bound(symbols.begin(), symbols.end(), cells[x][y]);
      values[x * n + y] = static_cast<std::uint32_t>(it - symbols.begin());
    }
  }
  return IntervalTable(std::move(points), std::move(symbols), std::move(values), std::move(weights));
}

std::optional<std::uint32_t> IntervalTable::find_symbol(const std::string& s) const {
  const auto it = std::find(symbols_.begin(), symbols_.end(), s);
  if (it == symbols_.end()) return std::nullopt;
  return static_cast<std::uint32_t>(it - symbols_.begin());
}

std::optional<std::size_t> IntervalTable::find_point(const std::string& s) const {
  const auto it = std::find(points_.begin(), points_.end(), s);
  if (it == points_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - points_.begin());
}

std::vector<std::size_t> IntervalTable::support() const {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < size(); ++x) {
    if (weights_[x].sign() > 0) out.push_back(x);
  }
  return out;
}

bool IntervalTable::is_symmetric() const {
  for (std::size_t x = 0; x < size(); ++x) {
    for (std::size_t y = x + 1; y < size(); ++y) {
      if (at(x, y) != at(y, x)) return false;
    }
  }
  return true;
}

IntervalTable table_from_space(const FiniteMetricMeasureSpace& space) {
  const std::size_t n = space.size();
  std::vector<std::string> points(space.labels().begin(), space.labels().end());
  std::vector<std::string> symbols;
  for (const auto& v : space.values()) symbols.push_back(v.str());
  std::vector<std::uint32_t> values(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) values[x * n + y] = space.value_id(x, y);
  }
  return IntervalTable(std::move(points), std::move(symbols), std::move(values),
                       std::vector<Rational>(space.weights().begin(), space.weights().end()));
}

std::string to_string(Coordinate c) { return c == Coordinate::row ? "X" : "Y"; }

namespace {

// kernel[x][v] = mu{y : f(x, y) = v} (row) or mu{y : f(y, x) = v} (column).
std::vector<std::vector<Rational>> kernels(const IntervalTable& t, Coordinate c) {
  const std::size_t n = t.size();
  std::vector<std::vector<Rational>> k(n, std::vector<Rational>(t.alphabet_size()));
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const auto v = c == Coordinate::row ? t.at(x, y) : t.at(y, x);
      k[x][v] += t.weight(y);
    }
  }
  return k;
}

std::optional<KernelWitness> first_nonconstant(const IntervalTable& t, const std::vector<std::vector<Rational>>& k,
                                               Coordinate c) {
  const auto supp = t.support();
  if (supp.empty()) return std::nullopt;
  const auto ref = supp.front();
  for (auto x : supp) {
    for (std::uint32_t v = 0; v < t.alphabet_size(); ++v) {
      if (k[x][v] != k[ref][v]) return KernelWitness{c, x, ref, v};
    }
  }
  return std::nullopt;
}

}  // namespace

IndVerdict check_ind(const IntervalTable& t) {
  const std::size_t n = t.size();
  const std::size_t m = t.alphabet_size();
  // Joint laws of (X, F) and (Y, F), and the marginal of F.
  std::vector<Rational> joint_x(n * m), joint_y(n * m), law(m);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const Rational p = t.weight(x) * t.weight(y);
      if (p.is_zero()) continue;
      const auto v = t.at(x, y);
      joint_x[x * m + v] += p;
      joint_y[y * m + v] += p;
      law[v] += p;
    }
  }
  IndVerdict verdict;
  auto factorizes = [&](const std::vector<Rational>& joint, Coordinate c) -> bool {
    for (std::size_t x = 0; x < n; ++x) {
      for (std::uint32_t v = 0; v < m; ++v) {
        if (joint[x * m + v] != t.weight(x) * law[v]) {
          if (!verdict.witness) verdict.witness = KernelWitness{c, x, x, v};
          return false;
        }
      }
    }
    return true;
  };
  verdict.x_independent_of_f = factorizes(joint_x, Coordinate::row);
  verdict.y_independent_of_f = factorizes(joint_y, Coordinate::column);
  verdict.holds = verdict.x_independent_of_f && verdict.y_independent_of_f;
  return verdict;
}

KernelVerdict check_hex_doubleprime(const IntervalTable& t) {
  KernelVerdict verdict;
  verdict.witness = first_nonconstant(t, kernels(t, Coordinate::row), Coordinate::row);
  if (!verdict.witness) verdict.witness = first_nonconstant(t, kernels(t, Coordinate::column), Coordinate::column);
  verdict.holds = !verdict.witness;
  return verdict;
}

KernelVerdict check_hex_prime(const IntervalTable& t) {
  auto sym = kernels(t, Coordinate::row);
  const auto col = kernels(t, Coordinate::column);
  for (std::size_t x = 0; x < t.size(); ++x) {
    for (std::size_t v = 0; v < t.alphabet_size(); ++v) sym[x][v] += col[x][v];
  }
  KernelVerdict verdict;
  verdict.witness = first_nonconstant(t, sym, Coordinate::row);
  verdict.holds = !verdict.witness;
  return verdict;
}

// ---------------------------------------------------------------------------
// Decomposition oracle

std::pair<std::vector<__int128>, std::vector<__int128>> decomposition_laws(const IntervalTable& t,
                                                                          const Decomposition& d) {
  const std::size_t n = t.size();
  if (d.alpha.size() != n || d.beta.size() != n) throw InputError("decomposition size mismatch");
  std::vector<__int128> base(n);
  for (std::size_t x = 0; x < n; ++x) {
    const Rational scaled = t.weight(x) * Rational(d.denominator);
    if (!scaled.is_integer()) throw InputError("decomposition denominator does not clear the weights");
    base[x] = scaled.num();
  }
  std::vector<__int128> law0(t.alphabet_size(), 0), law1(t.alphabet_size(), 0);
  for (std::size_t x = 0; x < n; ++x) {
    const __int128 x0 = base[x] + d.alpha[x];
    const __int128 x1 = base[x] - d.alpha[x];
    if (x0 < 0 || x1 < 0) throw InputError("decomposition leaves a negative mass");
    for (std::size_t y = 0; y < n; ++y) {
      const __int128 y0 = base[y] + d.beta[y];
      const __int128 y1 = base[y] - d.beta[y];
      if (y0 < 0 || y1 < 0) throw InputError("decomposition leaves a negative mass");
      law0[t.at(x, y)] += x0 * y0;
      law1[t.at(x, y)] += x1 * y1;
    }
  }
  return {std::move(law0), std::move(law1)};
}

namespace {

// Random zero-sum integer perturbation with |a_x| <= bound_x.
std::vector<std::int64_t> random_perturbation(const std::vector<std::int64_t>& bound, std::mt19937_64& rng) {
  const std::size_t n = bound.size();
  std::vector<std::int64_t> a(n, 0);
  std::int64_t sum = 0;
  for (std::size_t x = 0; x < n; ++x) {
    if (bound[x] == 0) continue;
    a[x] = std::uniform_int_distribution<std::int64_t>(-bound[x], bound[x])(rng);
    sum += a[x];
  }
  // Push the sum back to zero, visiting coordinates in random order.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  for (auto x : order) {
    if (sum == 0) break;
    const std::int64_t room = sum > 0 ? a[x] + bound[x] : bound[x] - a[x];
    const std::int64_t step = std::min(room, sum > 0 ? sum : -sum);
    a[x] += sum > 0 ? -step : step;
    sum += sum > 0 ? -step : step;
  }
  return a;
}

}  // namespace

OracleResult sample_decomposition_oracle(const IntervalTable& t, std::size_t trials, std::uint64_t seed,
                                         OracleMode mode) {
  const std::size_t n = t.size();
  std::int64_t lcm = 1;
  for (const auto& w : t.weights()) {
    if (!w.is_zero()) lcm = std::lcm(lcm, w.den());
  }
  constexpr std::int64_t kGrid = std::int64_t{1} << 16;
  if (lcm > (std::int64_t{1} << 30)) throw InputError("weight denominators too large for the oracle grid");
  Decomposition d;
  d.denominator = kGrid * lcm;
  std::vector<std::int64_t> bound(n);
  for (std::size_t x = 0; x < n; ++x) bound[x] = (t.weight(x) * Rational(d.denominator)).num();

  OracleResult result;
  for (std::size_t k = 0; k < trials; ++k) {
    std::mt19937_64 rng(stream_seed(seed, k));
    d.alpha = random_perturbation(bound, rng);
    d.beta = mode == OracleMode::hex_prime ? d.alpha : random_perturbation(bound, rng);
    const auto [law0, law1] = decomposition_laws(t, d);
    ++result.trials;
    if (law0 != law1) {
      result.consistent = false;
      result.violation = d;
      break;
    }
  }
  return result;
}

std::vector<Rational> conditional_interval_distribution(const IntervalTable& t, const std::vector<bool>& members) {
  const std::size_t n = t.size();
  if (members.size() != n) throw InputError("subset size does not match table");
  Rational mass;
  for (std::size_t x = 0; x < n; ++x) {
    if (members[x]) mass += t.weight(x);
  }
  if (mass.is_zero()) throw PreconditionError("conditioning subset has zero measure");
  std::vector<Rational> law(t.alphabet_size());
  for (std::size_t x = 0; x < n; ++x) {
    if (!members[x]) continue;
    for (std::size_t y = 0; y < n; ++y) {
      if (members[y]) law[t.at(x, y)] += t.weight(x) * t.weight(y);
    }
  }
  const Rational norm = mass * mass;
  for (auto& p : law) p /= norm;
  return law;
}

IntervalTable group_interval_table(const FiniteGroup& group, GroupTableMode mode) {
  const std::size_t n = group.order();
  std::vector<std::uint32_t> values(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    const auto left = mode == GroupTableMode::product ? x : group.inverse(x);
    for (std::size_t y = 0; y < n; ++y) values[x * n + y] = static_cast<std::uint32_t>(group.multiply(left, y));
  }
  return IntervalTable(group.labels(), group.labels(), std::move(values), {});
}

AntisymmetryVerdict verify_antisymmetric(const IntervalTable& t, const std::vector<std::uint32_t>& involution) {
  if (involution.size() != t.alphabet_size()) throw InputError("involution must map every symbol");
  for (std::uint32_t m = 0; m < involution.size(); ++m) {
    if (involution[m] >= involution.size() || involution[involution[m]] != m) {
      throw InputError("map is not an involution at symbol '" + t.symbol(m) + "'");
    }
  }
  AntisymmetryVerdict verdict;
  verdict.antisymmetric = true;
  for (std::size_t x = 0; x < t.size() && verdict.antisymmetric; ++x) {
    for (std::size_t y = 0; y < t.size(); ++y) {
      if (t.at(x, y) != involution[t.at(y, x)]) {
        verdict.antisymmetric = false;
        verdict.witness = std::make_pair(x, y);
        break;
      }
    }
  }
  verdict.ind = check_ind(t);
  if (verdict.antisymmetric && (verdict.ind.x_independent_of_f || verdict.ind.y_independent_of_f) &&
      !verdict.ind.holds) {
    throw InvariantViolation("antisymmetric table with one-sided independence but without (Ind)");
  }
  return verdict;
}

bool is_latin_square(const IntervalTable& t) {
  const std::size_t n = t.size();
  if (t.alphabet_size() != n) return false;
  std::vector<char> seen(n);
  for (std::size_t x = 0; x < n; ++x) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t y = 0; y < n; ++y) {
      if (seen[t.at(x, y)]++) return false;
    }
  }
  for (std::size_t y = 0; y < n; ++y) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t x = 0; x < n; ++x) {
      if (seen[t.at(x, y)]++) return false;
    }
  }
  return true;
}

LoopVerdict loop_is_group(const IntervalTable& t) {
  const std::size_t n = t.size();
  if (!is_latin_square(t)) throw PreconditionError("loop_is_group needs a Latin square");
  // symbol id -> point index
  std::vector<std::size_t> point_of(t.alphabet_size());
  for (std::uint32_t v = 0; v < t.alphabet_size(); ++v) {
    const auto p = t.find_point(t.symbol(v));
    if (!p) throw PreconditionError("symbol '" + t.symbol(v) + "' does not name a point");
    point_of[v] = *p;
  }
  auto op = [&](std::size_t a, std::size_t b) { return point_of[t.at(a, b)]; };

  std::optional<std::size_t> identity;
  for (std::size_t e = 0; e < n && !identity; ++e) {
    bool ok = true;
    for (std::size_t y = 0; y < n && ok; ++y) ok = op(e, y) == y && op(y, e) == y;
    if (ok) identity = e;
  }
  if (!identity) throw PreconditionError("table has no two-sided identity");

  LoopVerdict verdict;
  verdict.identity = *identity;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const auto ab = op(a, b);
      for (std::size_t c = 0; c < n; ++c) {
        if (op(ab, c) != op(a, op(b, c))) {
          verdict.non_associative = std::array<std::size_t, 3>{a, b, c};
          return verdict;
        }
      }
    }
  }
  verdict.is_group = true;
  return verdict;
}

}  // namespace hexalab
