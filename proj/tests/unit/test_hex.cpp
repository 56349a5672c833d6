#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "hexalab/constructions.hpp"
#include "hexalab/error.hpp"
#include "hexalab/hex.hpp"
#include "oracles.hpp"

using namespace hexalab;

namespace {

std::vector<bool> random_half(std::size_t n, std::mt19937_64& rng) {
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::shuffle(idx.begin(), idx.end(), rng);
  std::vector<bool> a(n, false);
  for (std::size_t i = 0; i < n / 2; ++i) a[idx[i]] = true;
  return a;
}

// Transitivity by trying every permutation; n <= 8.
bool brute_transitive(const FiniteMetricMeasureSpace& s) {
  const std::size_t n = s.size();
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<bool> reached(n, false);
  do {
    bool iso = true;
    for (std::size_t i = 0; i < n && iso; ++i) {
      if (s.weight(i) != s.weight(p[i])) iso = false;
      for (std::size_t j = 0; j < n && iso; ++j) iso = s.d(i, j) == s.d(p[i], p[j]);
    }
    if (iso) reached[p[0]] = true;
  } while (std::next_permutation(p.begin(), p.end()));
  return std::all_of(reached.begin(), reached.end(), [](bool b) { return b; });
}

}  // namespace

TEST_SUITE("hex") {
  TEST_CASE("CVC on cycles and the failure on paths") {
    const auto c = named_graph("cycle", 12);
    const auto v = check_cvc(c);
    REQUIRE(v.holds);
    REQUIRE(v.rho);
    CHECK(v.rho->at(0) == Rational(1, 12));
    CHECK(v.rho->at(1) == Rational(3, 12));
    CHECK(v.rho->at(6) == Rational(1));

    const auto p = named_graph("path", 3);
    const auto w = check_cvc(p);
    CHECK_FALSE(w.holds);
    REQUIRE(w.witness);
    CHECK(w.witness->volume_x != w.witness->volume_y);
    CHECK(oracle::ball(p, w.witness->x, w.witness->radius) == w.witness->volume_x);
    CHECK(oracle::ball(p, w.witness->y, w.witness->radius) == w.witness->volume_y);
  }

  TEST_CASE("CVC ignores zero-weight points") {
    auto p = named_graph("path", 3);
    const auto q = p.with_weights({Rational(1, 2), 0, Rational(1, 2)});
    CHECK(check_cvc(q).holds);
  }

  TEST_CASE("check_cvc agrees with the ball oracle on random spaces") {
    std::mt19937_64 rng(11);
    int holds = 0;
    for (int iter = 0; iter < 200; ++iter) {
      const std::size_t n = 2 + iter % 6;
      const auto s = oracle::random_graph_space(n, 0.5, iter % 3 != 0, rng);
      const bool c = check_cvc(s).holds;
      holds += c;
      CHECK(c == oracle::cvc(s));
    }
    CHECK(holds > 0);
  }

  TEST_CASE("Hex on every hexachord of the 12-cycle") {
    const auto c = named_graph("cycle", 12);
    int count = 0;
    for (std::uint32_t m = 0; m < (1u << 12); ++m) {
      if (__builtin_popcount(m) != 6) continue;
      std::vector<bool> a(12);
      for (int i = 0; i < 12; ++i) a[i] = m >> i & 1;
      const auto v = check_hex(c, SubsetMask(c, a));
      CHECK(v.holds);
      CHECK_FALSE(v.first_divergence);
      ++count;
    }
    CHECK(count == 924);
  }

  TEST_CASE("check_hex agrees with the law oracle on non-CVC spaces") {
    std::mt19937_64 rng(5);
    for (int iter = 0; iter < 200; ++iter) {
      const std::size_t n = 2 * (1 + iter % 4);
      const auto s = oracle::random_graph_space(n, 0.4, true, rng);
      const auto a = random_half(n, rng);
      const auto v = check_hex(s, SubsetMask(s, a));
      const bool expect = oracle::law(s, a, a) == oracle::law(s, oracle::complement(a), oracle::complement(a));
      CHECK(v.holds == expect);
      CHECK(v.first_divergence.has_value() == !expect);
    }
  }

  TEST_CASE("check_hex needs measure one half") {
    const auto c = named_graph("cycle", 6);
    CHECK_THROWS_AS(check_hex(c, SubsetMask(c, std::vector<std::size_t>{0})), PreconditionError);
  }

  TEST_CASE("defect identity on CVC spaces") {
    std::mt19937_64 rng(9);
    const std::vector<FiniteMetricMeasureSpace> spaces{
        named_graph("cycle", 9), named_graph("petersen"), zmod_graph(7, {1, -1, 3, -3}),
        cayley_graph({FiniteGroup::symmetric(3), FiniteGroup::symmetric(3).transpositions()})};
    for (const auto& s : spaces) {
      const auto rho = *check_cvc(s).rho;
      for (int iter = 0; iter < 20; ++iter) {
        std::vector<bool> a(s.size());
        for (std::size_t i = 0; i < s.size(); ++i) a[i] = rng() & 1;
        const SubsetMask mask(s, a);
        const auto lhs_a = oracle::law(s, a, a);
        const auto ac = oracle::complement(a);
        const auto lhs_c = oracle::law(s, ac, ac);
        for (const auto& r : s.values()) {
          Rational direct;
          for (const auto& [v, m] : lhs_a)
            if (v <= r) direct += m;
          for (const auto& [v, m] : lhs_c)
            if (v <= r) direct -= m;
          const Rational defect = hex_defect(s, mask, r);
          CHECK(defect == direct);
          CHECK(defect == rho.at(r) * (mask.measure() - (Rational(1) - mask.measure())));
        }
      }
    }
    CHECK_THROWS_AS(hex_defect(named_graph("path", 4), SubsetMask(named_graph("path", 4)), 1), PreconditionError);
  }

  TEST_CASE("homometry of spaces and subsets") {
    const auto z7 = zmod_graph(7, {1, -1, 3, -3});
    CHECK(homometric(z7, z7.permuted(std::vector<std::size_t>{3, 1, 4, 0, 6, 5, 2})));
    CHECK_FALSE(homometric(z7, named_graph("cycle", 7)));
    CHECK(homometric(z7, z7.squared()));
    const auto c = named_graph("cycle", 12);
    // {0,1,4,6} and {0,1,3,7} share an interval vector.
    CHECK(homometric(c, SubsetMask(c, std::vector<std::size_t>{0, 1, 4, 6}), c,
                     SubsetMask(c, std::vector<std::size_t>{0, 1, 3, 7})));
    CHECK_FALSE(homometric(c, SubsetMask(c, std::vector<std::size_t>{0, 1, 2, 3}), c,
                           SubsetMask(c, std::vector<std::size_t>{0, 1, 3, 7})));
  }

  TEST_CASE("Patterson function against direct counting") {
    const auto g = FiniteGroup::cyclic_product({12});
    std::mt19937_64 rng(2);
    for (int iter = 0; iter < 100; ++iter) {
      std::vector<bool> a(12);
      for (auto&& b : a) b = rng() & 1;
      const auto pat = patterson(g, a);
      for (std::size_t t = 0; t < 12; ++t) {
        int hits = 0;
        for (std::size_t x = 0; x < 12; ++x) hits += a[x] && a[(x + 12 - t) % 12];
        CHECK(pat[t] == Rational(hits, 12));
      }
      const auto rep = check_patterson_equality(g, a);
      CHECK(rep.holds);
      CHECK(rep.inverse_symmetric);
      for (const auto& d : rep.difference) CHECK(d == rep.expected_difference);
    }
    const auto s3 = FiniteGroup::symmetric(3);
    CHECK(check_patterson_equality(s3, {true, true, false, true, false, false}).holds);
  }

  TEST_CASE("transitivity") {
    CHECK(is_transitive(named_graph("petersen")));
    CHECK(is_transitive(named_graph("cycle", 10)));
    CHECK(is_transitive(hamming_space(4, {1, 1, 1, 1})));
    CHECK(is_transitive(named_graph("dodecahedron")));
    CHECK(is_transitive(named_graph("truncated_icosahedron")));
    CHECK(is_transitive(cayley_graph({FiniteGroup::symmetric(4), FiniteGroup::symmetric(4).transpositions()})));
    CHECK_FALSE(is_transitive(named_graph("path", 4)));

    std::mt19937_64 rng(4);
    for (int iter = 0; iter < 60; ++iter) {
      const std::size_t n = 3 + iter % 5;
      const auto s = oracle::random_graph_space(n, 0.5, true, rng);
      CHECK(is_transitive(s) == brute_transitive(s));
    }
    const auto pet = named_graph("petersen");
    const auto iso = find_isometry(pet, 0, 7);
    REQUIRE(iso);
    CHECK((*iso)[0] == 7);
    for (std::size_t i = 0; i < pet.size(); ++i)
      for (std::size_t j = 0; j < pet.size(); ++j) CHECK(pet.d(i, j) == pet.d((*iso)[i], (*iso)[j]));
    CHECK_FALSE(find_isometry(named_graph("path", 3), 0, 1));
  }
}
