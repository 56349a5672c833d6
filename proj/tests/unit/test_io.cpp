#include <doctest.h>

#include "hexalab/constructions.hpp"
#include "hexalab/error.hpp"
#include "hexalab/hex.hpp"
#include "hexalab/io.hpp"

using namespace hexalab;

namespace {

bool same_space(const FiniteMetricMeasureSpace& a, const FiniteMetricMeasureSpace& b) {
  if (a.size() != b.size() || a.value_kind() != b.value_kind()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.label(i) != b.label(i) || a.weight(i) != b.weight(i)) return false;
    for (std::size_t j = 0; j < a.size(); ++j)
      if (a.d(i, j) != b.d(i, j)) return false;
  }
  return true;
}

}  // namespace

TEST_SUITE("io") {
  TEST_CASE("space JSON round trips") {
    for (const auto& s : {named_graph("petersen"), cantor_space(3), named_graph("cycle", 5).squared(),
                          hamming_space(3, {1, 2, 3})}) {
      const auto back = build_from_recipe(space_to_json(s));
      CHECK(same_space(s, back.space));
      CHECK(build_from_recipe(space_to_json(back.space, -1)).space.size() == s.size());
    }
  }

  TEST_CASE("explicit spaces") {
    const auto c = build_from_recipe(R"({"dist": [[0, 1], ["1", "0"]]})");
    CHECK(c.space.size() == 2);
    CHECK(c.space.weight(0) == Rational(1, 2));
    CHECK(c.space.label(1) == "1");
    const auto w = build_from_recipe(R"({"kind": "explicit", "points": ["a", "b"], "weights": ["1/3", "2/3"],
                                         "dist": [["0", "3/2"], ["3/2", "0"]]})");
    CHECK(w.space.weight(1) == Rational(2, 3));
    CHECK(w.space.d(0, 1) == Rational(3, 2));
  }

  TEST_CASE("every recipe kind") {
    CHECK(build_from_recipe(R"({"kind": "cayley", "group": "cyclic:3,4", "generators": "standard"})").space.size() ==
          12);
    CHECK(build_from_recipe(R"({"kind": "cayley", "group": "symmetric:3", "generators": ["102", "021"]})")
              .space.size() == 6);
    CHECK(build_from_recipe(R"({"kind": "named", "name": "cycle", "n": 7})").space.size() == 7);
    const auto prod = build_from_recipe(
        R"({"kind": "product", "p": 2, "left": {"kind": "named", "name": "cycle", "n": 3},
            "right": {"kind": "named", "name": "cycle", "n": 4}})");
    CHECK(prod.space.value_kind() == ValueKind::squared);
    CHECK(build_from_recipe(R"({"kind": "product", "p": "inf", "left": {"kind": "cantor", "depth": 1},
                                "right": {"kind": "cantor", "depth": 2}})")
              .space.size() == 8);
    const auto u = build_from_recipe(R"({"kind": "union", "L": "2.5", "left": {"kind": "zmod", "n": 7,
        "generators": [1, -1, 3, -3]}, "right": {"kind": "zmod", "n": 7, "generators": [1, -1, 3, -3]}})");
    CHECK(u.space.size() == 14);
    CHECK(u.space.d(0, 7) == Rational(5, 2));
    const auto sub = build_from_recipe(R"({"kind": "substitution", "L": 2,
        "backbone": {"kind": "named", "name": "cycle", "n": 5}, "part": {"kind": "named", "name": "cycle", "n": 4}})");
    CHECK(sub.space.size() == 20);
    CHECK(check_cvc(sub.space).holds);
    CHECK(build_from_recipe(R"({"kind": "hamming", "n": 5})").space.size() == 32);
    CHECK(build_from_recipe(R"({"kind": "cantor", "depth": 4})").space.size() == 16);
    CHECK(recipe_group(R"({"kind": "cayley", "group": "cyclic:3,4", "generators": "standard"})")->order() == 12);
    CHECK_FALSE(recipe_group(R"({"kind": "cantor", "depth": 4})"));
  }

  TEST_CASE("bad recipes are input errors") {
    for (const char* bad : {"", "{", "[1, 2]", R"({"kind": "teapot"})", R"({"kind": "named"})",
                            R"({"kind": "cantor", "depth": -1})", R"({"kind": "zmod", "n": 5, "generators": 1})",
                            R"({"dist": [[0, "x"], [1, 0]]})", R"({"kind": "cayley", "group": "dihedral:4",
                            "generators": "standard"})"}) {
      CAPTURE(bad);
      CHECK_THROWS_AS(build_from_recipe(bad), InputError);
    }
    CHECK_THROWS_AS(parse_group_spec("cyclic:"), InputError);
  }

  TEST_CASE("table CSV") {
    const auto t = parse_table("\xEF\xBB\xBF" "f,a,b\r\na,0,1\r\nb,1,0\r\n");
    CHECK(t.size() == 2);
    CHECK(t.cell(0, 1) == "1");
    CHECK(table_to_csv(t) == "f,a,b\na,0,1\nb,1,0\n");
    const auto hash = parse_table("f,\"#\",b\n\"#\",0,1\nb,1,0\n");
    CHECK(hash.point(0) == "#");
    CHECK(parse_table(table_to_csv(hash)).point(0) == "#");
    CHECK(parse_table("# seed=0\nf,a,b\n# note\na,0,1\nb,1,0\n").cell(0, 1) == "1");
    CHECK(parse_table(table_to_csv(t)).cell(1, 0) == "1");
    const auto q = parse_table("x,\"p,q\",r\n\"p,q\",\"s\"\"t\",u\nr,u,v\n");
    CHECK(q.point(0) == "p,q");
    CHECK(q.cell(0, 0) == "s\"t");
    CHECK(parse_table(table_to_csv(q)).cell(0, 0) == "s\"t");
    CHECK_THROWS_AS(parse_table(""), InputError);
    CHECK_THROWS_AS(parse_table("f,a,b\na,0,1\n"), InputError);
    CHECK_THROWS_AS(parse_table("f,a,b\na,0,1\nc,1,0\n"), InputError);
    CHECK_THROWS_AS(parse_table("f,a,b\na,0\nb,1,0\n"), InputError);
  }

  TEST_CASE("table JSON") {
    const auto t = parse_table(R"({"points": ["a", "b"], "values": [["x", "y"], ["y", "x"]],
                                   "weights": ["1/4", "3/4"], "symbols": ["y", "x"]})");
    CHECK(t.symbol(0) == "y");
    CHECK(t.weight(1) == Rational(3, 4));
    const auto back = parse_table(table_to_json(t));
    CHECK(back.symbols() == t.symbols());
    CHECK(back.weight(0) == Rational(1, 4));
    CHECK(back.cell(0, 1) == "y");
    CHECK_THROWS_AS(parse_table(R"({"points": ["a"], "values": [["z"]], "symbols": ["y"]})"), InputError);
    CHECK_THROWS_AS(parse_table(R"({"points": ["a"]})"), InputError);
  }

  TEST_CASE("rendering helpers") {
    CHECK(render_over(Rational(1, 6), 36) == "6/36");
    CHECK(render_over(Rational(0), 36) == "0/36");
    CHECK(render_over(Rational(1, 5), 36) == "1/5");
    CHECK(csv_field("abc") == "abc");
    CHECK(csv_field("#") == "\"#\"");
    CHECK(csv_field("a,b") == "\"a,b\"");
    CHECK(csv_field("a\"b") == "\"a\"\"b\"");
  }
}
