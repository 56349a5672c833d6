#pragma once

// Independent reference computations used as test oracles. Nothing here
// calls into the library's algorithms beyond its plain data types.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "hexalab/rational.hpp"
#include "hexalab/space.hpp"

namespace oracle {

using hexalab::Rational;

/// All-pairs shortest path lengths by Floyd-Warshall; -1 when unreachable.
inline std::vector<std::vector<int>> floyd(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  constexpr int inf = 1 << 28;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (std::size_t i = 0; i < n; ++i) d[i][i] = 0;
  for (auto [a, b] : edges) d[a][b] = d[b][a] = 1;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  for (auto& row : d)
    for (auto& x : row)
      if (x == inf) x = -1;
  return d;
}

/// mu(B(x, r)) by direct summation.
inline Rational ball(const hexalab::FiniteMetricMeasureSpace& s, std::size_t x, const Rational& r) {
  Rational m;
  for (std::size_t y = 0; y < s.size(); ++y)
    if (s.d(x, y) <= r) m += s.weight(y);
  return m;
}

/// CVC by comparing every supported point's ball at every realized radius.
inline bool cvc(const hexalab::FiniteMetricMeasureSpace& s) {
  std::vector<std::size_t> supp;
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s.weight(i).sign() > 0) supp.push_back(i);
  std::set<Rational> radii;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = 0; j < s.size(); ++j) radii.insert(s.d(i, j));
  for (const auto& r : radii)
    for (auto x : supp)
      if (ball(s, x, r) != ball(s, supp.front(), r)) return false;
  return true;
}

/// Unnormalized law of d on A x B as a map value -> mass.
inline std::map<Rational, Rational> law(const hexalab::FiniteMetricMeasureSpace& s, const std::vector<bool>& a,
                                        const std::vector<bool>& b) {
  std::map<Rational, Rational> out;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = 0; j < s.size(); ++j)
      if (a[i] && b[j]) {
        const Rational w = s.weight(i) * s.weight(j);
        if (!w.is_zero()) out[s.d(i, j)] += w;
      }
  return out;
}

inline std::vector<bool> complement(std::vector<bool> a) {
  a.flip();
  return a;
}

/// Random connected graph metric on n points with random positive weights
/// (denominators dividing 60) or uniform weights.
inline hexalab::FiniteMetricMeasureSpace random_graph_space(std::size_t n, double edge_p, bool uniform,
                                                            std::mt19937_64& rng) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::uniform_real_distribution<double> u(0, 1);
  for (std::size_t i = 1; i < n; ++i) edges.emplace_back(std::uniform_int_distribution<std::size_t>(0, i - 1)(rng), i);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (u(rng) < edge_p) edges.emplace_back(i, j);
  const auto d = floyd(n, edges);
  std::vector<Rational> dist;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) dist.emplace_back(d[i][j]);
  std::vector<Rational> w(n, Rational(1, static_cast<std::int64_t>(n)));
  if (!uniform) {
    std::vector<std::int64_t> raw(n);
    std::int64_t total = 0;
    for (auto& x : raw) total += (x = std::uniform_int_distribution<std::int64_t>(1, 5)(rng));
    for (std::size_t i = 0; i < n; ++i) w[i] = Rational(raw[i], total);
  }
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return hexalab::FiniteMetricMeasureSpace(labels, dist, w);
}

/// Circular interval counts of a residue list, by pair enumeration.
inline std::vector<std::uint32_t> intervals(std::size_t n, const std::vector<std::size_t>& a) {
  std::vector<std::uint32_t> v(n / 2, 0);
  for (auto x : a)
    for (auto y : a)
      if (x < y) {
        const std::size_t d = y - x;
        ++v[std::min(d, n - d) - 1];
      }
  return v;
}

/// T/I canonical form as the minimum over the 2n images of the sorted list.
inline std::vector<std::size_t> ti_min(std::size_t n, const std::vector<std::size_t>& a) {
  std::vector<std::size_t> best;
  bool first = true;
  for (std::size_t t = 0; t < n; ++t)
    for (int sign : {1, -1}) {
      std::vector<std::size_t> img;
      for (auto x : a) {
        const long long v = sign * static_cast<long long>(x) + static_cast<long long>(t);
        img.push_back(static_cast<std::size_t>(((v % static_cast<long long>(n)) + static_cast<long long>(n)) %
                                               static_cast<long long>(n)));
      }
      std::sort(img.begin(), img.end());
      if (first || img < best) best = img;
      first = false;
    }
  return best;
}

inline std::vector<std::size_t> residues(std::uint64_t mask) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < 64; ++i)
    if (mask >> i & 1) out.push_back(i);
  return out;
}

}  // namespace oracle
