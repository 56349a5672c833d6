#include <doctest.h>

#include <random>

#include "hexalab/constructions.hpp"
#include "hexalab/error.hpp"
#include "hexalab/hex.hpp"
#include "hexalab/symbolic.hpp"
#include "oracles.hpp"

using namespace hexalab;

namespace {

IntervalTable table(const std::vector<std::string>& rows) {
  std::vector<std::string> points;
  std::vector<std::vector<std::string>> cells;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    points.push_back("p" + std::to_string(i));
    std::vector<std::string> row;
    for (char c : rows[i]) row.emplace_back(1, c);
    cells.push_back(row);
  }
  return IntervalTable::from_cells(points, cells);
}

// Rows of the three 4 x 4 tables used throughout.
const std::vector<std::string> kLeft{"0123", "1230", "2301", "3012"};
const std::vector<std::string> kMiddle{"0123", "1230", "3012", "2301"};
const std::vector<std::string> kRight{"0133", "1230", "2012", "2301"};

IntervalTable random_table(std::size_t n, std::size_t alphabet, std::mt19937_64& rng) {
  std::vector<std::string> rows(n);
  for (auto& r : rows)
    for (std::size_t j = 0; j < n; ++j) r += static_cast<char>('a' + rng() % alphabet);
  return table(rows);
}

// Independent brute force of (Ind): P(X=x, F=v) = mu(x) P(F=v) and likewise for Y.
bool brute_ind(const IntervalTable& t) {
  const std::size_t n = t.size();
  std::vector<Rational> law(t.alphabet_size());
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) law[t.at(x, y)] += t.weight(x) * t.weight(y);
  for (std::size_t x = 0; x < n; ++x)
    for (std::uint32_t v = 0; v < t.alphabet_size(); ++v) {
      Rational px, py;
      for (std::size_t y = 0; y < n; ++y) {
        if (t.at(x, y) == v) px += t.weight(x) * t.weight(y);
        if (t.at(y, x) == v) py += t.weight(x) * t.weight(y);
      }
      if (px != t.weight(x) * law[v] || py != t.weight(x) * law[v]) return false;
    }
  return true;
}

}  // namespace

TEST_SUITE("symbolic") {
  TEST_CASE("the three 4 x 4 tables") {
    const auto left = table(kLeft), middle = table(kMiddle), right = table(kRight);
    CHECK(check_hex_prime(left).holds);
    CHECK(check_hex_doubleprime(left).holds);
    CHECK(check_ind(left).holds);
    CHECK(check_hex_prime(middle).holds);
    CHECK(check_hex_doubleprime(middle).holds);
    CHECK(check_ind(middle).holds);
    CHECK(check_hex_prime(right).holds);
    const auto dd = check_hex_doubleprime(right);
    CHECK_FALSE(dd.holds);
    REQUIRE(dd.witness);
    const auto ind = check_ind(right);
    CHECK_FALSE(ind.holds);
    CHECK(ind.witness.has_value());
    CHECK(is_latin_square(left));
    CHECK(is_latin_square(middle));
    CHECK_FALSE(is_latin_square(right));
  }

  TEST_CASE("the 6 x 6 Latin square is a loop but not a group") {
    const std::vector<std::string> pts{"♥", "□", "△", "♣", "♦", "♠"};
    const std::vector<std::vector<std::string>> cells{
        {"♥", "□", "△", "♣", "♦", "♠"}, {"□", "△", "♦", "♠", "♥", "♣"}, {"△", "♣", "□", "♦", "♠", "♥"},
        {"♣", "♠", "♥", "□", "△", "♦"}, {"♦", "♥", "♠", "△", "♣", "□"}, {"♠", "♦", "♣", "♥", "□", "△"}};
    const auto t = IntervalTable::from_cells(pts, cells);
    CHECK(is_latin_square(t));
    CHECK(check_ind(t).holds);
    const auto loop = loop_is_group(t);
    CHECK_FALSE(loop.is_group);
    CHECK(t.point(loop.identity) == "♥");
    REQUIRE(loop.non_associative);
    const auto [a, b, c] = *loop.non_associative;
    auto op = [&](std::size_t x, std::size_t y) { return *t.find_point(t.cell(x, y)); };
    CHECK(op(op(a, b), c) != op(a, op(b, c)));
  }

  TEST_CASE("group tables") {
    for (const auto& g : {FiniteGroup::cyclic_product({3, 4}), FiniteGroup::symmetric(3), FiniteGroup::symmetric(4)}) {
      for (auto mode : {GroupTableMode::product, GroupTableMode::left_quotient}) {
        const auto t = group_interval_table(g, mode);
        CHECK(is_latin_square(t));
        CHECK(check_ind(t).holds);
        CHECK(check_hex_doubleprime(t).holds);
      }
      const auto loop = loop_is_group(group_interval_table(g, GroupTableMode::product));
      CHECK(loop.is_group);
      CHECK(loop.identity == g.identity());
    }
    CHECK_THROWS_AS(loop_is_group(table(kRight)), PreconditionError);
  }

  TEST_CASE("Ind agrees with a brute force count") {
    std::mt19937_64 rng(8);
    for (int iter = 0; iter < 300; ++iter) {
      const auto t = random_table(2 + iter % 4, 2 + iter % 3, rng);
      CHECK(check_ind(t).holds == brute_ind(t));
    }
  }

  TEST_CASE("kernel criteria agree with the decomposition oracle") {
    std::mt19937_64 rng(12);
    int fails_dd = 0, fails_p = 0;
    std::vector<IntervalTable> tables{table(kLeft), table(kMiddle), table(kRight)};
    for (int iter = 0; iter < 150; ++iter) tables.push_back(random_table(2 + iter % 4, 2 + iter % 2, rng));
    for (std::size_t i = 0; i < tables.size(); ++i) {
      const auto& t = tables[i];
      const auto dd = check_hex_doubleprime(t).holds;
      const auto p = check_hex_prime(t).holds;
      CHECK((!dd || p));  // Hex'' implies Hex'
      const auto odd = sample_decomposition_oracle(t, 200, i, OracleMode::hex_doubleprime);
      const auto op = sample_decomposition_oracle(t, 200, i, OracleMode::hex_prime);
      CHECK(odd.consistent == dd);
      CHECK(op.consistent == p);
      fails_dd += !dd;
      fails_p += !p;
      if (odd.violation) {
        const auto [l0, l1] = decomposition_laws(t, *odd.violation);
        CHECK(l0 != l1);
      }
    }
    CHECK(fails_dd > 10);
    CHECK(fails_p > 10);
  }

  TEST_CASE("Ind implies Hex'' for random tables with non-uniform weights") {
    std::mt19937_64 rng(21);
    for (int iter = 0; iter < 200; ++iter) {
      auto t = random_table(3, 2, rng);
      const auto w = std::vector<Rational>{Rational(1, 2), Rational(1, 3), Rational(1, 6)};
      const IntervalTable tw(t.points(), t.symbols(),
                             [&] {
                               std::vector<std::uint32_t> v;
                               for (std::size_t x = 0; x < 3; ++x)
                                 for (std::size_t y = 0; y < 3; ++y) v.push_back(t.at(x, y));
                               return v;
                             }(),
                             w);
      if (check_ind(tw).holds) CHECK(check_hex_doubleprime(tw).holds);
      CHECK(check_ind(tw).holds == brute_ind(tw));
    }
  }

  TEST_CASE("metric tables: Hex' is CVC on the support") {
    std::mt19937_64 rng(30);
    int cvc_count = 0;
    for (int iter = 0; iter < 150; ++iter) {
      const auto s = oracle::random_graph_space(2 + iter % 7, 0.5, iter % 2 == 0, rng);
      const auto t = table_from_space(s);
      CHECK(t.is_symmetric());
      const bool cvc = check_cvc(s).holds;
      cvc_count += cvc;
      CHECK(check_hex_prime(t).holds == cvc);
      CHECK(check_hex_doubleprime(t).holds == cvc);
    }
    CHECK(cvc_count > 5);
  }

  TEST_CASE("conditional interval distribution") {
    const auto g = FiniteGroup::cyclic_product({3, 4});
    const auto t = group_interval_table(g, GroupTableMode::left_quotient);
    std::vector<bool> a(12, false);
    for (const char* l : {"1,0", "1,2", "2,0", "2,1", "2,2", "2,3"}) a[*g.find(l)] = true;
    const auto law = conditional_interval_distribution(t, a);
    Rational total;
    for (const auto& p : law) total += p;
    CHECK(total == Rational(1));
    CHECK(law[*t.find_symbol("0,0")] == Rational(6, 36));
    CHECK(law[*t.find_symbol("0,2")] == Rational(6, 36));
    CHECK(law[*t.find_symbol("1,1")] == Rational(2, 36));
    std::vector<bool> ac(a);
    ac.flip();
    CHECK(conditional_interval_distribution(t, ac) == law);
    CHECK_THROWS_AS(conditional_interval_distribution(t, std::vector<bool>(12, false)), PreconditionError);
  }

  TEST_CASE("antisymmetric tables") {
    const auto g = FiniteGroup::cyclic_product({5});
    const auto t = group_interval_table(g, GroupTableMode::left_quotient);
    std::vector<std::uint32_t> inv(5);
    for (std::uint32_t v = 0; v < 5; ++v) inv[v] = static_cast<std::uint32_t>(g.inverse(v));
    const auto v = verify_antisymmetric(t, inv);
    CHECK(v.antisymmetric);
    CHECK(v.ind.holds);
    std::vector<std::uint32_t> id(5);
    for (std::uint32_t i = 0; i < 5; ++i) id[i] = i;
    const auto w = verify_antisymmetric(t, id);
    CHECK_FALSE(w.antisymmetric);
    CHECK(w.witness.has_value());
    CHECK_THROWS_AS(verify_antisymmetric(t, {1, 2, 3, 4, 0}), InputError);
  }

  TEST_CASE("malformed tables") {
    CHECK_THROWS_AS(IntervalTable::from_cells({"a", "b"}, {{"0", "1"}}), InputError);
    CHECK_THROWS_AS(IntervalTable::from_cells({"a", "b"}, {{"0", "1"}, {"1"}}), InputError);
    CHECK_THROWS_AS(IntervalTable::from_cells({"a", "b"}, {{"0", "1"}, {"1", "0"}}, {Rational(1, 3), Rational(1, 3)}),
                    InputError);
  }
}
