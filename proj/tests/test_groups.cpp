#include <doctest.h>

#include <set>

#include "groupbell/errors.hpp"
#include "groupbell/groups.hpp"

using namespace groupbell;

namespace {

void check_group_axioms(const FiniteGroup& g) {
  // Latin square
  for (int row = 0; row < g.order; ++row) {
    std::set<int> across, down;
    for (int col = 0; col < g.order; ++col) {
      across.insert(g.multiply(row, col));
      down.insert(g.multiply(col, row));
    }
    CHECK(static_cast<int>(across.size()) == g.order);
    CHECK(static_cast<int>(down.size()) == g.order);
  }
  // associativity and inverses
  for (int a = 0; a < g.order; ++a) {
    CHECK(g.multiply(a, g.inverse(a)) == g.identity);
    for (int b = 0; b < g.order; ++b)
      for (int c = 0; c < g.order; ++c)
        CHECK(g.multiply(g.multiply(a, b), c) == g.multiply(a, g.multiply(b, c)));
  }
}

}  // namespace

TEST_SUITE("groups") {

TEST_CASE("trivial cyclic group") {
  const FiniteGroup g = make_cyclic(1);
  CHECK(g.order == 1);
  CHECK(g.name(0) == "e");
}

TEST_CASE("cyclic groups are abelian") {
  const FiniteGroup g = make_cyclic(6);
  CHECK(g.order == 6);
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) CHECK(g.multiply(a, b) == g.multiply(b, a));
}

TEST_CASE("Z4 generator has order four") {
  const FiniteGroup g = make_cyclic(4);
  CHECK(g.element_order(g.parse_element("r")) == 4);
}

TEST_CASE("dihedral orders") {
  CHECK(make_dihedral(3).order == 6);
  CHECK(make_dihedral(6).order == 12);
  CHECK_THROWS_AS(make_dihedral(1), Error);
}

TEST_CASE("dihedral relation s r s = r^-1") {
  const FiniteGroup g = make_dihedral(3);
  const int r = g.parse_element("r");
  const int s = g.parse_element("s");
  CHECK(g.multiply(g.multiply(s, r), s) == g.parse_element("r^2"));
}

TEST_CASE("group axioms hold for the small families") {
  for (int n = 1; n <= 8; ++n) check_group_axioms(make_cyclic(n));
  for (int n = 2; n <= 6; ++n) check_group_axioms(make_dihedral(n));
}

TEST_CASE("element orders in dihedral groups") {
  for (int n = 2; n <= 6; ++n) {
    const FiniteGroup g = make_dihedral(n);
    CHECK(g.element_order(g.parse_element("r")) == n);
    for (int a = 0; a < n; ++a) CHECK(g.element_order(n + a) == 2);
  }
}

TEST_CASE("conjugacy classes of Z6 are singletons") {
  const auto classes = conjugacy_classes(make_cyclic(6));
  CHECK(classes.classes.size() == 6);
  for (const auto& cls : classes.classes) CHECK(cls.size() == 1);
}

TEST_CASE("conjugacy classes of D3") {
  const FiniteGroup g = make_dihedral(3);
  const auto classes = conjugacy_classes(g);
  REQUIRE(classes.classes.size() == 3);
  CHECK(classes.classes[0] == std::vector<int>{g.parse_element("e")});
  CHECK(classes.classes[1] ==
        std::vector<int>{g.parse_element("r"), g.parse_element("r^2")});
  CHECK(classes.classes[2] == std::vector<int>{g.parse_element("s"), g.parse_element("r*s"),
                                               g.parse_element("r^2*s")});
}

TEST_CASE("conjugacy classes of D6") {
  const FiniteGroup g = make_dihedral(6);
  const auto classes = conjugacy_classes(g);
  REQUIRE(classes.classes.size() == 6);
  std::vector<std::size_t> sizes;
  for (const auto& cls : classes.classes) sizes.push_back(cls.size());
  CHECK(sizes == std::vector<std::size_t>{1, 2, 2, 1, 3, 3});
  CHECK(classes.classes[5] == std::vector<int>{g.parse_element("r*s"), g.parse_element("r^3*s"),
                                               g.parse_element("r^5*s")});
}

TEST_CASE("class sizes divide the group order") {
  for (int n = 2; n <= 6; ++n) {
    const FiniteGroup g = make_dihedral(n);
    for (const auto& cls : conjugacy_classes(g).classes)
      CHECK(g.order % static_cast<int>(cls.size()) == 0);
  }
}

TEST_CASE("element names parse back to themselves") {
  for (const FiniteGroup& g : {make_cyclic(6), make_dihedral(6)})
    for (int e = 0; e < g.order; ++e) CHECK(g.parse_element(g.name(e)) == e);
}

TEST_CASE("word parsing handles products and negative powers") {
  const FiniteGroup g = make_dihedral(6);
  CHECK(g.parse_element("r^4*s") == g.multiply(g.parse_element("r^4"), g.parse_element("s")));
  CHECK(g.parse_element("r^-1") == g.parse_element("r^5"));
  CHECK(g.parse_element("s*s") == g.identity);
  CHECK_THROWS_AS(g.parse_element("q"), Error);
  CHECK_THROWS_AS(make_cyclic(4).parse_element("s"), Error);
}

}  // TEST_SUITE
