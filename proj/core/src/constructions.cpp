#include "hexalab/constructions.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <set>

#include "hexalab/error.hpp"
#include "hexalab/hex.hpp"

namespace hexalab {

namespace {

constexpr std::size_t kMaxPoints = 2048;

void check_size(std::size_t n) {
  if (n > kMaxPoints) {
    throw InputError("space with " + std::to_string(n) + " points exceeds the limit of " + std::to_string(kMaxPoints));
  }
}

std::vector<std::int64_t> bfs(const std::vector<std::vector<std::size_t>>& adj, std::size_t source) {
  std::vector<std::int64_t> dist(adj.size(), -1);
  std::deque<std::size_t> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const auto u = queue.front();
    queue.pop_front();
    for (auto v : adj[u]) {
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

void assert_cvc(const FiniteMetricMeasureSpace& space, const char* what) {
  if (!check_cvc(space).holds) throw InvariantViolation(std::string(what) + " produced a space without CVC");
}

}  // namespace

FiniteMetricMeasureSpace graph_space(std::size_t vertices, const std::vector<std::pair<std::size_t, std::size_t>>& edges,
                                     std::vector<std::string> labels) {
  check_size(vertices);
  std::vector<std::vector<std::size_t>> adj(vertices);
  for (auto [u, v] : edges) {
    if (u >= vertices || v >= vertices) throw InputError("edge endpoint out of range");
    if (u == v) continue;
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<Rational> dist(vertices * vertices);
  for (std::size_t s = 0; s < vertices; ++s) {
    const auto row = bfs(adj, s);
    for (std::size_t t = 0; t < vertices; ++t) {
      if (row[t] < 0) throw InputError("graph is disconnected");
      dist[s * vertices + t] = Rational(row[t]);
    }
  }
  return FiniteMetricMeasureSpace::uniform(vertices, std::move(dist), ValueKind::plain, std::move(labels));
}

FiniteMetricMeasureSpace cayley_graph(const CayleySpec& spec) {
  const FiniteGroup& g = spec.group;
  const std::size_t n = g.order();
  std::set<std::size_t> sigma;
  for (auto s : spec.generators) {
    if (s >= n) throw InputError("generator index out of range");
    if (s == g.identity()) throw InputError("the identity cannot be a generator");
    sigma.insert(s);
    sigma.insert(g.inverse(s));
  }
  // Left translations are isometries, so d(x, y) = d(e, x^-1 y).
  std::vector<std::vector<std::size_t>> adj(n);
  for (std::size_t x = 0; x < n; ++x) {
    for (auto s : sigma) adj[x].push_back(g.multiply(x, s));
  }
  const auto from_identity = bfs(adj, g.identity());
  for (std::size_t x = 0; x < n; ++x) {
    if (from_identity[x] < 0) {
      throw InputError("generators do not generate " + g.name() + " (element " + g.label(x) + " unreachable)");
    }
  }
  std::vector<Rational> dist(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    const auto xinv = g.inverse(x);
    for (std::size_t y = 0; y < n; ++y) dist[x * n + y] = Rational(from_identity[g.multiply(xinv, y)]);
  }
  return FiniteMetricMeasureSpace::uniform(n, std::move(dist), ValueKind::plain, g.labels());
}

FiniteMetricMeasureSpace named_graph(const std::string& name, std::size_t n) {
  using Edges = std::vector<std::pair<std::size_t, std::size_t>>;
  Edges e;
  if (name == "cycle") {
    if (n < 1) throw InputError("cycle needs n >= 1");
    for (std::size_t i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    if (n > 2) e.emplace_back(n - 1, 0);
    return graph_space(n, e);
  }
  if (name == "path") {
    if (n < 1) throw InputError("path needs n >= 1");
    for (std::size_t i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return graph_space(n, e);
  }
  if (name == "petersen" || name == "dodecahedron") {
    // Generalized Petersen graphs GP(5,2) and GP(10,2).
    const std::size_t k = name == "petersen" ? 5 : 10;
    for (std::size_t i = 0; i < k; ++i) {
      e.emplace_back(i, (i + 1) % k);
      e.emplace_back(i, i + k);
      e.emplace_back(i + k, (i + 2) % k + k);
    }
    return graph_space(2 * k, e);
  }
  // Icosahedron: apex 0, upper ring 1..5, lower ring 6..10, apex 11.
  Edges ico;
  for (std::size_t k = 0; k < 5; ++k) {
    ico.emplace_back(0, 1 + k);
    ico.emplace_back(1 + k, 1 + (k + 1) % 5);
    ico.emplace_back(6 + k, 6 + (k + 1) % 5);
    ico.emplace_back(1 + k, 6 + k);
    ico.emplace_back(1 + k, 6 + (k + 1) % 5);
    ico.emplace_back(11, 6 + k);
  }
  if (name == "icosahedron") return graph_space(12, ico);
  if (name == "truncated_icosahedron") {
    // One vertex per directed icosahedron edge u->v. (u->v) ~ (v->u), and
    // (u->v) ~ (u->w) when v, w are adjacent (consecutive around u).
    std::vector<std::set<std::size_t>> adj(12);
    for (auto [u, v] : ico) {
      adj[u].insert(v);
      adj[v].insert(u);
    }
    std::vector<std::pair<std::size_t, std::size_t>> darts;
    for (std::size_t u = 0; u < 12; ++u) {
      for (auto v : adj[u]) darts.emplace_back(u, v);
    }
    auto dart_index = [&](std::size_t u, std::size_t v) {
      return static_cast<std::size_t>(std::find(darts.begin(), darts.end(), std::make_pair(u, v)) - darts.begin());
    };
    for (std::size_t a = 0; a < darts.size(); ++a) {
      const auto [u, v] = darts[a];
      if (u < v) e.emplace_back(a, dart_index(v, u));
      for (auto w : adj[u]) {
        if (w > v && adj[v].count(w)) e.emplace_back(a, dart_index(u, w));
      }
    }
    return graph_space(darts.size(), e);
  }
  throw InputError("unknown named graph '" + name +
                   "' (expected petersen|dodecahedron|icosahedron|truncated_icosahedron|cycle|path)");
}

std::string to_string(ProductNorm norm) {
  switch (norm) {
    case ProductNorm::l1: return "1";
    case ProductNorm::l2: return "2";
    case ProductNorm::linf: return "inf";
  }
  return "?";
}

ProductNorm parse_product_norm(const std::string& p) {
  if (p == "1") return ProductNorm::l1;
  if (p == "2") return ProductNorm::l2;
  if (p == "inf" || p == "infinity" || p == "∞") return ProductNorm::linf;
  throw PreconditionError("product exponent p = " + p + " cannot be represented exactly (use 1, 2 or inf)");
}

FiniteMetricMeasureSpace product_space(const FiniteMetricMeasureSpace& a_in, const FiniteMetricMeasureSpace& b_in,
                                       ProductNorm norm) {
  const FiniteMetricMeasureSpace* a = &a_in;
  const FiniteMetricMeasureSpace* b = &b_in;
  FiniteMetricMeasureSpace a_sq, b_sq;
  ValueKind kind = ValueKind::plain;
  switch (norm) {
    case ProductNorm::l1:
      if (a->value_kind() != ValueKind::plain || b->value_kind() != ValueKind::plain) {
        throw PreconditionError("l1 product needs plain factors; sums of squared values are not l1 distances");
      }
      break;
    case ProductNorm::l2:
      if (a->value_kind() == ValueKind::plain) a = &(a_sq = a->squared());
      if (b->value_kind() == ValueKind::plain) b = &(b_sq = b->squared());
      kind = ValueKind::squared;
      break;
    case ProductNorm::linf:
      if (a->value_kind() != b->value_kind()) throw PreconditionError("linf product of plain and squared factors");
      kind = a->value_kind();
      break;
  }
  const std::size_t na = a->size();
  const std::size_t nb = b->size();
  const std::size_t n = na * nb;
  check_size(n);
  std::vector<std::string> labels(n);
  std::vector<Rational> weights(n);
  std::vector<Rational> dist(n * n);
  for (std::size_t i = 0; i < na; ++i) {
    for (std::size_t j = 0; j < nb; ++j) {
      const std::size_t p = i * nb + j;
      labels[p] = a->label(i) + "|" + b->label(j);
      weights[p] = a->weight(i) * b->weight(j);
      for (std::size_t k = 0; k < na; ++k) {
        for (std::size_t l = 0; l < nb; ++l) {
          const Rational& da = a->d(i, k);
          const Rational& db = b->d(j, l);
          dist[p * n + k * nb + l] = norm == ProductNorm::linf ? std::max(da, db) : da + db;
        }
      }
    }
  }
  return FiniteMetricMeasureSpace(std::move(labels), std::move(dist), std::move(weights), kind);
}

Construction union_space(const FiniteMetricMeasureSpace& a, const FiniteMetricMeasureSpace& b, const Rational& cross) {
  if (cross.sign() <= 0) throw PreconditionError("union cross distance L must be positive");
  if (a.value_kind() != b.value_kind()) throw PreconditionError("union of plain and squared spaces");
  if (!check_cvc(a).holds || !check_cvc(b).holds) throw PreconditionError("union parts must satisfy CVC");
  if (distance_distribution(a) != distance_distribution(b)) {
    throw PreconditionError("union parts have differing volume functions");
  }
  const bool sq = a.value_kind() == ValueKind::squared;
  const Rational link = sq ? cross * cross : cross;
  const std::size_t na = a.size();
  const std::size_t n = na + b.size();
  check_size(n);

  std::vector<std::string> labels(n);
  std::vector<Rational> weights(n);
  std::vector<Rational> dist(n * n, link);
  const Rational half(1, 2);
  for (std::size_t i = 0; i < n; ++i) {
    const bool in_a = i < na;
    const std::size_t li = in_a ? i : i - na;
    labels[i] = (in_a ? "a:" : "b:") + (in_a ? a.label(li) : b.label(li));
    weights[i] = half * (in_a ? a.weight(li) : b.weight(li));
    for (std::size_t j = 0; j < n; ++j) {
      const bool j_in_a = j < na;
      if (in_a != j_in_a) continue;
      const std::size_t lj = j_in_a ? j : j - na;
      dist[i * n + j] = in_a ? a.d(li, lj) : b.d(li, lj);
    }
  }
  Construction out{FiniteMetricMeasureSpace(std::move(labels), std::move(dist), std::move(weights), a.value_kind()), {}};
  assert_cvc(out.space, "union_space");

  const Rational bound = sq ? Rational(4) * link : Rational(2) * cross;
  if (a.diameter() > bound || b.diameter() > bound) {
    out.warnings.push_back("triangle inequality fails: a part has diameter greater than 2L = " +
                           (Rational(2) * cross).str());
  }
  return out;
}

Construction graph_substitution(const FiniteMetricMeasureSpace& backbone,
                                const std::vector<FiniteMetricMeasureSpace>& parts, const Rational& scale) {
  if (scale.sign() <= 0) throw PreconditionError("substitution scale L must be positive");
  if (backbone.value_kind() != ValueKind::plain) throw PreconditionError("backbone must hold plain distances");
  if (parts.size() != backbone.size()) {
    throw PreconditionError("substitution needs one part per backbone point (" + std::to_string(backbone.size()) +
                            "), got " + std::to_string(parts.size()));
  }
  if (parts.empty()) throw PreconditionError("substitution needs a nonempty backbone");
  for (std::size_t i = 1; i < backbone.size(); ++i) {
    if (backbone.weight(i) != backbone.weight(0)) throw PreconditionError("backbone measure must be uniform");
  }
  if (!check_cvc(backbone).holds) throw PreconditionError("backbone must satisfy CVC");

  const ValueKind kind = parts.front().value_kind();
  const auto law = distance_distribution(parts.front());
  const bool sq = kind == ValueKind::squared;
  const Rational bound = sq ? Rational(4) * scale * scale : Rational(2) * scale;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].value_kind() != kind) throw PreconditionError("parts mix plain and squared values");
    if (!check_cvc(parts[i]).holds) throw PreconditionError("part " + std::to_string(i) + " does not satisfy CVC");
    if (distance_distribution(parts[i]) != law) {
      throw PreconditionError("part " + std::to_string(i) + " has a different volume function than part 0");
    }
    if (!(parts[i].diameter() < bound)) {
      throw PreconditionError("part " + std::to_string(i) + " has diameter " + parts[i].diameter().str() +
                              (sq ? " (squared)" : "") + ", not below 2L");
    }
  }

  std::vector<std::size_t> offset(parts.size() + 1, 0);
  for (std::size_t i = 0; i < parts.size(); ++i) offset[i + 1] = offset[i] + parts[i].size();
  const std::size_t n = offset.back();
  check_size(n);
  std::vector<std::size_t> owner(n);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    std::fill(owner.begin() + static_cast<std::ptrdiff_t>(offset[i]),
              owner.begin() + static_cast<std::ptrdiff_t>(offset[i + 1]), i);
  }
  std::vector<std::string> labels(n);
  std::vector<Rational> weights(n);
  std::vector<Rational> dist(n * n);
  for (std::size_t p = 0; p < n; ++p) {
    const auto i = owner[p];
    const auto li = p - offset[i];
    labels[p] = backbone.label(i) + ":" + parts[i].label(li);
    weights[p] = backbone.weight(i) * parts[i].weight(li);
    for (std::size_t q = 0; q < n; ++q) {
      const auto j = owner[q];
      if (i == j) {
        dist[p * n + q] = parts[i].d(li, q - offset[j]);
      } else {
        const Rational cross = scale * backbone.d(i, j);
        dist[p * n + q] = sq ? cross * cross : cross;
      }
    }
  }
  Construction out{FiniteMetricMeasureSpace(std::move(labels), std::move(dist), std::move(weights), kind), {}};
  assert_cvc(out.space, "graph_substitution");
  return out;
}

FiniteMetricMeasureSpace hamming_space(std::size_t n, const std::vector<Rational>& weights) {
  if (n < 1) throw InputError("hamming space needs n >= 1");
  if (n > 10) throw InputError("hamming space limited to n <= 10 tosses");
  if (weights.size() != n) throw InputError("hamming space needs one weight per coordinate");
  for (const auto& a : weights) {
    if (a.sign() <= 0) throw InputError("hamming weights must be positive");
  }
  const std::size_t size = std::size_t{1} << n;
  std::vector<std::string> labels(size);
  for (std::size_t x = 0; x < size; ++x) {
    std::string s(n, 'h');
    for (std::size_t i = 0; i < n; ++i) {
      if ((x >> (n - 1 - i)) & 1u) s[i] = 't';
    }
    labels[x] = s;
  }
  std::vector<Rational> per_diff(size);
  for (std::size_t diff = 0; diff < size; ++diff) {
    for (std::size_t i = 0; i < n; ++i) {
      if ((diff >> (n - 1 - i)) & 1u) per_diff[diff] += weights[i];
    }
  }
  std::vector<Rational> dist(size * size);
  for (std::size_t x = 0; x < size; ++x) {
    for (std::size_t y = 0; y < size; ++y) dist[x * size + y] = per_diff[x ^ y];
  }
  return FiniteMetricMeasureSpace::uniform(size, std::move(dist), ValueKind::plain, std::move(labels));
}

SubsetMask hamming_run_subset(const FiniteMetricMeasureSpace& hamming, std::size_t tosses, std::size_t run) {
  if (run < 1) throw InputError("run length must be >= 1");
  std::vector<bool> bits(hamming.size(), false);
  for (std::size_t p = 0; p < hamming.size(); ++p) {
    const auto& s = hamming.label(p);
    if (s.size() != tosses) throw InputError("space is not a hamming space over " + std::to_string(tosses) + " tosses");
    std::size_t len = 1;
    std::size_t best = s.empty() ? 0 : 1;
    for (std::size_t i = 1; i < s.size(); ++i) {
      len = s[i] == s[i - 1] ? len + 1 : 1;
      best = std::max(best, len);
    }
    bits[p] = best >= run;
  }
  return SubsetMask(hamming, std::move(bits));
}

FiniteMetricMeasureSpace cantor_space(std::size_t depth) {
  if (depth < 1 || depth > 10) throw InputError("cantor depth must be in 1..10");
  const std::size_t size = std::size_t{1} << depth;
  std::int64_t denom = 1;
  for (std::size_t i = 0; i < depth; ++i) denom *= 3;
  // Digit i (1-based, leftmost = most significant bit) weighs 2 * 3^(depth - i) / 3^depth.
  std::vector<Rational> per_diff(size);
  for (std::size_t diff = 0; diff < size; ++diff) {
    std::int64_t num = 0;
    std::int64_t w = 2 * denom / 3;
    for (std::size_t i = 0; i < depth; ++i, w /= 3) {
      if ((diff >> (depth - 1 - i)) & 1u) num += w;
    }
    per_diff[diff] = Rational(num, denom);
  }
  std::vector<std::string> labels(size);
  for (std::size_t x = 0; x < size; ++x) {
    std::string s(depth, '0');
    for (std::size_t i = 0; i < depth; ++i) {
      if ((x >> (depth - 1 - i)) & 1u) s[i] = '1';
    }
    labels[x] = s;
  }
  std::vector<Rational> dist(size * size);
  for (std::size_t x = 0; x < size; ++x) {
    for (std::size_t y = 0; y < size; ++y) dist[x * size + y] = per_diff[x ^ y];
  }
  return FiniteMetricMeasureSpace::uniform(size, std::move(dist), ValueKind::plain, std::move(labels));
}

FiniteMetricMeasureSpace zmod_graph(std::size_t n, const std::vector<long long>& generators) {
  if (n < 1) throw InputError("zmod graph needs n >= 1");
  const auto m = static_cast<long long>(n);
  std::set<long long> steps;
  for (auto g : generators) steps.insert(((g % m) + m) % m);
  for (auto s : steps) {
    if (!steps.count((m - s) % m)) throw InputError("generator set must be closed under negation");
  }
  steps.erase(0);
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t x = 0; x < n; ++x) {
    for (auto s : steps) e.emplace_back(x, (x + static_cast<std::size_t>(s)) % n);
  }
  return graph_space(n, e);
}

}  // namespace hexalab
