#include <doctest.h>

#include "hexalab/error.hpp"
#include "hexalab/group.hpp"

using hexalab::FiniteGroup;

namespace {

void check_group_axioms(const FiniteGroup& g) {
  const auto n = g.order();
  for (std::size_t a = 0; a < n; ++a) {
    CHECK(g.multiply(a, g.identity()) == a);
    CHECK(g.multiply(g.identity(), a) == a);
    CHECK(g.multiply(a, g.inverse(a)) == g.identity());
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) REQUIRE(g.multiply(g.multiply(a, b), c) == g.multiply(a, g.multiply(b, c)));
  }
}

}  // namespace

TEST_SUITE("group") {
  TEST_CASE("cyclic products") {
    const auto g = FiniteGroup::cyclic_product({3, 4});
    CHECK(g.order() == 12);
    CHECK(g.name() == "Z/3 x Z/4");
    CHECK(g.label(0) == "0,0");
    CHECK(g.label(1) == "0,1");
    CHECK(g.label(4) == "1,0");
    const auto a = *g.find("2,3");
    const auto b = *g.find("1,2");
    CHECK(g.label(g.multiply(a, b)) == "0,1");
    CHECK(g.label(g.inverse(a)) == "1,1");
    CHECK(g.element({5, -1}) == *g.find("2,3"));
    CHECK(g.unit_vectors().size() == 2);
    check_group_axioms(g);
    CHECK_THROWS_AS(FiniteGroup::cyclic_product({0}), hexalab::InputError);
    CHECK_THROWS_AS(FiniteGroup::cyclic_product({64, 64}), hexalab::InputError);
  }

  TEST_CASE("symmetric groups compose right to left") {
    const auto g = FiniteGroup::symmetric(3);
    CHECK(g.order() == 6);
    CHECK(g.label(0) == "012");
    const auto s01 = g.permutation({1, 0, 2});
    const auto s12 = g.permutation({0, 2, 1});
    // (s01 * s12)(i) = s01(s12(i)): 0->0->1, 1->2->2, 2->1->0
    CHECK(g.label(g.multiply(s01, s12)) == "120");
    CHECK(g.transpositions().size() == 3);
    check_group_axioms(g);
    check_group_axioms(FiniteGroup::symmetric(4));
    CHECK(FiniteGroup::symmetric(5).order() == 120);
    CHECK_THROWS_AS(FiniteGroup::symmetric(7), hexalab::InputError);
    CHECK_THROWS_AS(g.permutation({0, 0, 1}), hexalab::InputError);
  }
}
