// Acceptance suite: one PASS/FAIL line per criterion. With no arguments every
// criterion runs; otherwise the listed numbers run. Exit status is 0 iff all
// selected criteria pass.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "hexalab/constructions.hpp"
#include "hexalab/cyclic.hpp"
#include "hexalab/error.hpp"
#include "hexalab/hex.hpp"
#include "hexalab/io.hpp"
#include "hexalab/montecarlo.hpp"
#include "hexalab/symbolic.hpp"
#include "hexalab/tiling.hpp"
#include "hexalab/zrelation.hpp"

using namespace hexalab;

namespace {

std::size_t threads() { return std::max(1u, std::thread::hardware_concurrency()); }

struct Outcome {
  bool pass = false;
  std::string detail;
};

IntervalTable rows_table(const std::vector<std::string>& rows) {
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

// The Z/3 x Z/4 example subset.
const std::vector<std::string> kExampleA{"1,0", "1,2", "2,0", "2,1", "2,2", "2,3"};

std::string law_str(const std::vector<std::pair<std::string, Rational>>& law) {
  std::string s = "{";
  for (std::size_t i = 0; i < law.size(); ++i) {
    if (i) s += ", ";
    s += law[i].first + ":" + render_over(law[i].second, 36);
  }
  return s + "}";
}

Outcome criterion1() {
  const auto g = FiniteGroup::cyclic_product({3, 4});
  const auto t = group_interval_table(g, GroupTableMode::left_quotient);
  std::vector<bool> a(12, false);
  for (const auto& l : kExampleA) a[*g.find(l)] = true;
  std::vector<bool> ac(a);
  ac.flip();
  const auto law = conditional_interval_distribution(t, a);
  const auto law_c = conditional_interval_distribution(t, ac);
  const std::map<std::string, Rational> printed{
      {"0,0", Rational(6, 36)}, {"0,2", Rational(6, 36)}, {"0,1", Rational(4, 36)}, {"0,3", Rational(4, 36)},
      {"1,0", Rational(2, 36)}, {"2,0", Rational(2, 36)}, {"1,1", Rational(3, 36)}, {"2,3", Rational(3, 36)},
      {"1,2", Rational(2, 36)}, {"2,2", Rational(2, 36)}, {"1,3", Rational(2, 36)}, {"2,1", Rational(2, 36)}};
  std::vector<std::pair<std::string, Rational>> shown;
  std::vector<std::string> mismatches;
  Rational printed_total;
  for (const auto& [v, m] : printed) {
    printed_total += m;
    const auto got = law[*t.find_symbol(v)];
    shown.emplace_back(v, got);
    if (got != m) mismatches.push_back(v + " computed " + render_over(got, 36) + " vs " + render_over(m, 36));
  }
  const bool complement_equal = law == law_c;
  std::string detail = "computed " + law_str(shown) + "; complement law equal: " + (complement_equal ? "yes" : "no");
  if (!mismatches.empty()) {
    detail += "; mismatches:";
    for (const auto& m : mismatches) detail += " [" + m + "]";
    detail += "; expected masses sum to " + render_over(printed_total, 36);
  }
  return {complement_equal && mismatches.empty(), detail};
}

Outcome criterion2() {
  const auto c = build_from_recipe(R"({"kind": "cayley", "group": "cyclic:3,4", "generators": "standard"})").space;
  const auto a = SubsetMask::from_labels(c, kExampleA);
  const auto law = restricted_distribution(c, a, a).scaled(a.measure() * a.measure());
  const std::map<Rational, Rational> expected{
      {0, Rational(6, 36)}, {1, Rational(12, 36)}, {2, Rational(10, 36)}, {3, Rational(8, 36)}};
  std::vector<std::pair<std::string, Rational>> shown;
  bool ok = law.entries.size() == expected.size();
  for (const auto& [r, m] : law.entries) {
    shown.emplace_back(r.str(), m);
    const auto it = expected.find(r);
    ok = ok && it != expected.end() && it->second == m;
  }
  const bool complement_equal = law == restricted_distribution(c, a.complement(c), a.complement(c))
                                           .scaled(a.measure() * a.measure());
  return {ok && complement_equal, "computed " + law_str(shown) + ", expected {0:6/36, 1:12/36, 2:10/36, 3:8/36}" +
                                      "; complement law equal: " + (complement_equal ? "yes" : "no")};
}

Outcome criterion3() {
  const std::vector<std::pair<std::string, std::vector<std::string>>> tables{
      {"left", {"0123", "1230", "2301", "3012"}},
      {"middle", {"0123", "1230", "3012", "2301"}},
      {"right", {"0133", "1230", "2012", "2301"}}};
  const bool expect_dd[] = {true, true, false};
  const bool expect_ind[] = {true, true, false};
  bool ok = true;
  std::string detail;
  for (std::size_t i = 0; i < tables.size(); ++i) {
    const auto t = rows_table(tables[i].second);
    const bool p = check_hex_prime(t).holds;
    const bool dd = check_hex_doubleprime(t).holds;
    const bool ind = check_ind(t).holds;
    const auto op = sample_decomposition_oracle(t, 1000, 1000 + i, OracleMode::hex_prime);
    const auto odd = sample_decomposition_oracle(t, 1000, 2000 + i, OracleMode::hex_doubleprime);
    ok = ok && p && dd == expect_dd[i] && ind == expect_ind[i] && op.consistent == p && odd.consistent == dd;
    detail += tables[i].first + ": Hex'=" + (p ? "T" : "F") + " Hex''=" + (dd ? "T" : "F") + " Ind=" +
              (ind ? "T" : "F") + " oracle(" + (op.consistent ? "T" : "F") + "," + (odd.consistent ? "T" : "F") +
              ")" + (i + 1 < tables.size() ? "; " : "");
  }
  return {ok, detail};
}

Outcome criterion4() {
  const std::vector<std::string> pts{"♥", "□", "△", "♣", "♦", "♠"};
  const std::vector<std::vector<std::string>> cells{
      {"♥", "□", "△", "♣", "♦", "♠"}, {"□", "△", "♦", "♠", "♥", "♣"}, {"△", "♣", "□", "♦", "♠", "♥"},
      {"♣", "♠", "♥", "□", "△", "♦"}, {"♦", "♥", "♠", "△", "♣", "□"}, {"♠", "♦", "♣", "♥", "□", "△"}};
  const auto t = IntervalTable::from_cells(pts, cells);
  const bool latin = is_latin_square(t);
  const bool ind = check_ind(t).holds;
  const auto loop = loop_is_group(t);
  std::string detail = std::string("latin=") + (latin ? "T" : "F") + " Ind=" + (ind ? "T" : "F") +
                       " group=" + (loop.is_group ? "T" : "F");
  if (loop.non_associative) {
    const auto [a, b, c] = *loop.non_associative;
    detail += "; (" + t.point(a) + t.point(b) + ")" + t.point(c) + " != " + t.point(a) + "(" + t.point(b) +
              t.point(c) + ")";
  }
  return {latin && ind && !loop.is_group, detail};
}

Outcome criterion5() {
  const auto c = named_graph("cycle", 12);
  const auto g = FiniteGroup::cyclic_product({12});
  std::size_t count = 0, hex_ok = 0, pat_ok = 0;
  for (std::uint64_t m = 0; m < (1u << 12); ++m) {
    if (__builtin_popcountll(m) != 6) continue;
    ++count;
    std::vector<bool> bits(12);
    for (std::size_t i = 0; i < 12; ++i) bits[i] = m >> i & 1;
    hex_ok += check_hex(c, SubsetMask(c, bits)).holds;
    std::vector<bool> members(12);
    for (std::size_t i = 0; i < 12; ++i) members[*g.find(std::to_string(i))] = bits[i];
    pat_ok += check_patterson_equality(g, members).holds;
  }
  return {count == 924 && hex_ok == count && pat_ok == count,
          std::to_string(count) + " hexachords, Hex " + std::to_string(hex_ok) + ", Patterson " +
              std::to_string(pat_ok)};
}

Outcome criterion6() {
  const auto r = homometry_classes(24, 12, threads());
  std::size_t at_max = r.histogram.count(12) ? r.histogram.at(12) : 0;
  std::string hist;
  for (const auto& [size, n] : r.histogram) hist += (hist.empty() ? "" : " ") + std::to_string(size) + ":" + std::to_string(n);
  std::ostringstream d;
  d << r.ti_classes << " T/I classes, " << r.classes.size() << " interval vectors, max class size "
    << r.max_class_size() << " attained " << at_max << " times; histogram {" << hist << "}";
  return {r.max_class_size() == 12 && at_max == 3, d.str()};
}

// Random recipes for CVC spaces drawn from the construction families.
std::string random_cvc_recipe(std::mt19937_64& rng, int depth = 0) {
  auto pick = [&](std::size_t n) { return static_cast<std::size_t>(rng() % n); };
  const std::size_t family = depth > 0 ? pick(6) : pick(9);
  switch (family) {
    case 0:
      return R"({"kind": "named", "name": "cycle", "n": )" + std::to_string(3 + pick(10)) + "}";
    case 1: {
      const std::size_t n = 5 + pick(10);
      std::vector<long long> gens{1};
      for (std::size_t g = 2; g < n / 2; ++g)
        if (rng() % 3 == 0) gens.push_back(static_cast<long long>(g));
      std::string s = R"({"kind": "zmod", "n": )" + std::to_string(n) + R"(, "generators": [)";
      for (std::size_t i = 0; i < gens.size(); ++i)
        s += (i ? ", " : "") + std::to_string(gens[i]) + ", " + std::to_string(-gens[i]);
      return s + "]}";
    }
    case 2: {
      const std::size_t n = 1 + pick(4);
      std::string s = R"({"kind": "hamming", "n": )" + std::to_string(n) + R"(, "weights": [)";
      for (std::size_t i = 0; i < n; ++i) s += (i ? ", " : "") + std::string("\"") + std::to_string(1 + pick(4)) + "/" + std::to_string(1 + pick(3)) + "\"";
      return s + "]}";
    }
    case 3:
      return R"({"kind": "cantor", "depth": )" + std::to_string(1 + pick(4)) + "}";
    case 4: {
      const char* groups[] = {"cyclic:3,4", "cyclic:2,2,3", "cyclic:5", "symmetric:3", "cyclic:4,4"};
      return R"({"kind": "cayley", "group": ")" + std::string(groups[pick(5)]) + R"(", "generators": "standard"})";
    }
    case 5:
      return R"({"kind": "named", "name": ")" + std::string(rng() % 2 ? "petersen" : "icosahedron") + R"("})";
    case 6: {
      const char* norms[] = {"1", "2", "\"inf\""};
      return R"({"kind": "product", "p": )" + std::string(norms[pick(3)]) + R"(, "left": )" +
             random_cvc_recipe(rng, depth + 1) + R"(, "right": )" + random_cvc_recipe(rng, depth + 1) + "}";
    }
    case 7: {
      const auto part = random_cvc_recipe(rng, depth + 1);
      return R"({"kind": "union", "L": )" + std::to_string(10 + pick(5)) + R"(, "left": )" + part +
             R"(, "right": )" + part + "}";
    }
    default: {
      const auto part = random_cvc_recipe(rng, 2);
      return R"({"kind": "substitution", "L": 20, "backbone": {"kind": "named", "name": "cycle", "n": )" +
             std::to_string(3 + pick(4)) + R"(}, "part": )" + part + "}";
    }
  }
}

Outcome criterion7() {
  std::mt19937_64 rng(7);
  std::size_t spaces = 0, checks = 0, skipped = 0;
  std::string first_failure;
  while (spaces < 100) {
    const auto recipe = random_cvc_recipe(rng);
    FiniteMetricMeasureSpace s;
    try {
      s = build_from_recipe(recipe).space;
    } catch (const std::runtime_error&) {
      ++skipped;  // e.g. a product with a squared factor under l1
      continue;
    }
    if (s.size() > 160) {
      ++skipped;
      continue;
    }
    const auto cvc = check_cvc(s);
    if (!cvc.holds) {
      if (first_failure.empty()) first_failure = "not CVC: " + recipe;
      ++spaces;
      continue;
    }
    ++spaces;
    for (int k = 0; k < 100; ++k) {
      std::vector<bool> bits(s.size());
      for (std::size_t i = 0; i < s.size(); ++i) bits[i] = rng() & 1;
      const SubsetMask a(s, bits);
      const auto ac = a.complement(s);
      const auto da = restricted_distribution(s, a, a);
      const auto dc = restricted_distribution(s, ac, ac);
      for (const auto& r : s.values()) {
        ++checks;
        const Rational expected = cvc.rho->at(r) * (a.measure() - ac.measure());
        Rational defect;
        try {
          defect = hex_defect(s, a, r);
        } catch (const InvariantViolation& e) {
          if (first_failure.empty()) first_failure = e.what();
          continue;
        }
        if (defect != expected || da.cdf(r) - dc.cdf(r) != expected) {
          if (first_failure.empty()) first_failure = "defect mismatch on " + recipe + " at r=" + r.str();
        }
      }
    }
  }
  return {first_failure.empty(), std::to_string(spaces) + " spaces, " + std::to_string(checks) +
                                     " (subset, r) checks, " + std::to_string(skipped) + " recipes redrawn" +
                                     (first_failure.empty() ? "" : "; first failure: " + first_failure)};
}

Outcome criterion8() {
  std::uint64_t pairs = 0, tiling = 0, disagreements = 0;
  std::string first;
  for (std::size_t n = 1; n <= 16; ++n) {
    const auto r = tiling_proposition_sweep(n, threads());
    pairs += r.pairs;
    tiling += r.tiling_pairs;
    disagreements += r.disagreements;
    if (r.first_disagreement && first.empty()) first = r.first_disagreement->first.str() + " + " + r.first_disagreement->second.str();
  }
  return {disagreements == 0, std::to_string(pairs) + " pairs with |A||B|=n over n<=16, " + std::to_string(tiling) +
                                  " tiling pairs, " + std::to_string(disagreements) + " disagreements" +
                                  (first.empty() ? "" : "; first: " + first)};
}

Outcome criterion9() {
  const auto s2 = ContinuousSpaceSpec::sphere(2);
  const std::size_t n = 1000000;
  const auto sample = sample_pairs(s2, Predicate::parse("band"), n, 42, threads());
  const auto caps = conditional_cdf(sample, Stratum::AcAc, std::sqrt(2.0));
  const auto ks = ks_two_sample(stratum_distances(sample, Stratum::AA), stratum_distances(sample, Stratum::AcAc), 0.01);
  const auto chord = mean_of(sample.distances);
  std::vector<double> grid;
  for (int i = 0; i <= 10; ++i) grid.push_back(0.2 * i);
  const auto vol = estimate_volume_function(s2, grid, n, 42, threads());
  std::size_t vol_ok = 0;
  double worst = 0;
  for (const auto& v : vol) {
    vol_ok += v.exact && v.estimate.within(*v.exact);
    if (v.exact && v.estimate.std_error > 0) worst = std::max(worst, std::abs(v.estimate.value - *v.exact) / v.estimate.std_error);
  }
  const bool ok = caps.within(0.5) && ks.pass && chord.within(4.0 / 3.0) && vol_ok == grid.size();
  std::ostringstream d;
  d.precision(6);
  d << "caps P(D<=sqrt2)=" << caps.value << " (se " << caps.std_error << "); KS band vs caps D=" << ks.statistic
    << " crit " << ks.critical << (ks.pass ? " pass" : " fail") << "; mean chord " << chord.value << " (se "
    << chord.std_error << "); volume " << vol_ok << "/" << grid.size() << " within 3se (worst " << worst << " se)";
  return {ok, d.str()};
}

// Shortest-path metric of a random connected graph with integer edge lengths.
FiniteMetricMeasureSpace random_metric_space(std::mt19937_64& rng) {
  const std::size_t n = 2 + rng() % 9;
  const long long inf = 1LL << 40;
  std::vector<long long> d(n * n, inf);
  for (std::size_t i = 0; i < n; ++i) d[i * n + i] = 0;
  const int mode = static_cast<int>(rng() % 3);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const bool edge = j == i + 1 || (mode == 2 && j == n - 1 && i == 0) || rng() % 3 == 0;
      if (edge) d[i * n + j] = d[j * n + i] = mode == 0 ? 1 + static_cast<long long>(rng() % 3) : 1;
    }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) d[i * n + j] = std::min(d[i * n + j], d[i * n + k] + d[k * n + j]);
  std::vector<Rational> dist;
  std::vector<std::string> labels;
  for (auto x : d) dist.emplace_back(x);
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  auto s = FiniteMetricMeasureSpace::uniform(n, dist);
  if (rng() % 4 == 0) {
    std::vector<Rational> w(n);
    std::int64_t total = 0;
    std::vector<std::int64_t> raw(n);
    for (auto& x : raw) total += x = static_cast<std::int64_t>(rng() % 3);
    if (total == 0) raw[0] = total = 1;
    for (std::size_t i = 0; i < n; ++i) w[i] = Rational(raw[i], total);
    s = s.with_weights(w);
  }
  return s;
}

Outcome criterion10() {
  std::mt19937_64 rng(10);
  std::size_t cvc_count = 0, agree = 0;
  for (int i = 0; i < 50; ++i) {
    const auto s = random_metric_space(rng);
    const bool cvc = check_cvc(s).holds;
    cvc_count += cvc;
    agree += check_hex_prime(table_from_space(s)).holds == cvc;
  }
  return {agree == 50, std::to_string(agree) + "/50 agree (" + std::to_string(cvc_count) + " CVC)"};
}

Outcome criterion11() {
  std::vector<std::pair<std::string, FiniteMetricMeasureSpace>> corpus;
  corpus.emplace_back("cycle12", named_graph("cycle", 12));
  for (std::size_t k = 1; k <= 6; ++k)
    corpus.emplace_back("cube" + std::to_string(k), hamming_space(k, std::vector<Rational>(k, 1)));
  corpus.emplace_back("petersen", named_graph("petersen"));
  const auto s3 = FiniteGroup::symmetric(3), s4 = FiniteGroup::symmetric(4);
  corpus.emplace_back("S3", cayley_graph({s3, s3.transpositions()}));
  corpus.emplace_back("S4", cayley_graph({s4, s4.transpositions()}));
  corpus.emplace_back("S4'", cayley_graph({s4, {s4.permutation({1, 0, 2, 3}), s4.permutation({1, 2, 3, 0})}}));
  const auto z7 = zmod_graph(7, {1, -1, 3, -3});
  corpus.emplace_back("Z7", z7);
  const auto c3 = named_graph("cycle", 3), c4 = named_graph("cycle", 4), c5 = named_graph("cycle", 5);
  corpus.emplace_back("C3xC4/l1", product_space(c3, c4, ProductNorm::l1));
  corpus.emplace_back("C3xC4/l2", product_space(c3, c4, ProductNorm::l2));
  corpus.emplace_back("C3xC4/linf", product_space(c3, c4, ProductNorm::linf));
  corpus.emplace_back("Z7xPetersen/l1", product_space(z7, named_graph("petersen"), ProductNorm::l1));
  corpus.emplace_back("Z7+Z7", union_space(z7, z7, 3).space);
  corpus.emplace_back("cube3+cube3", union_space(hamming_space(3, {1, 1, 1}), hamming_space(3, {1, 1, 1}), 5).space);
  corpus.emplace_back("C5[C4]", graph_substitution(c5, std::vector<FiniteMetricMeasureSpace>(5, c4), 2).space);
  corpus.emplace_back("C4[Z7]", graph_substitution(c4, std::vector<FiniteMetricMeasureSpace>(4, z7), 3).space);
  for (std::size_t k = 1; k <= 10; ++k) corpus.emplace_back("cantor" + std::to_string(k), cantor_space(k));

  std::size_t passed = 0;
  std::string failures;
  for (const auto& [name, s] : corpus) {
    if (check_cvc(s).holds) ++passed;
    else failures += " " + name;
  }
  std::size_t paths_ok = 0;
  std::string witness;
  for (std::size_t n = 3; n <= 8; ++n) {
    const auto p = named_graph("path", n);
    const auto v = check_cvc(p);
    if (!v.holds && v.witness && v.witness->volume_x != v.witness->volume_y) {
      ++paths_ok;
      if (witness.empty())
        witness = "path3: mu(B(" + p.label(v.witness->x) + "," + v.witness->radius.str() + "))=" +
                  v.witness->volume_x.str() + " vs mu(B(" + p.label(v.witness->y) + "," + v.witness->radius.str() +
                  "))=" + v.witness->volume_y.str();
    }
  }
  return {passed == corpus.size() && paths_ok == 6,
          std::to_string(passed) + "/" + std::to_string(corpus.size()) + " corpus spaces CVC, " +
              std::to_string(paths_ok) + "/6 paths fail with witness (" + witness + ")" +
              (failures.empty() ? "" : "; not CVC:" + failures)};
}

struct Criterion {
  int id;
  const char* name;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> all{
      {1, "interval distribution on Z/3 x Z/4", criterion1},
      {2, "distance distribution on Z/3 x Z/4", criterion2},
      {3, "4x4 tables: Hex', Hex'', Ind and oracle agreement", criterion3},
      {4, "6x6 Latin square: Ind holds, not a group", criterion4},
      {5, "924 hexachords: Hex and Patterson equality", criterion5},
      {6, "Z/24 12-subsets: three classes of size 12", criterion6},
      {7, "defect identity on random CVC spaces", criterion7},
      {8, "tiling proposition for n <= 16", criterion8},
      {9, "sphere experiment at N = 10^6, seed 42", criterion9},
      {10, "Hex' on metric tables equals CVC", criterion10},
      {11, "CVC corpus and path witnesses", criterion11},
  };
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) selected.push_back(std::atoi(argv[i]));
  int failed = 0;
  for (const auto& c : all) {
    if (!selected.empty() && std::find(selected.begin(), selected.end(), c.id) == selected.end()) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s criterion %d: %s [%.2fs] %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, secs, o.detail.c_str());
    std::fflush(stdout);
    failed += !o.pass;
  }
  return failed == 0 ? 0 : 1;
}
