#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "packlab/constructions.hpp"
#include "packlab/packing.hpp"
#include "packlab/planarity.hpp"

using namespace packlab;

TEST_CASE("planarity check") {
  CHECK(is_planar(Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}})).planar);
  CHECK(!is_planar(Graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4},
                             {2, 3}, {2, 4}, {3, 4}}))
             .planar);
  CHECK(!is_planar(Graph(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3},
                             {2, 4}, {2, 5}}))
             .planar);
}

TEST_CASE("three-cycle gadget, smallest instance") {
  auto inst = girth_construction(3);
  CHECK(inst.graph.n == 21);
  for (const auto& c : inst.claims) CHECK_MESSAGE(c.holds, c.name);
  // independent search route agrees that no packing exists
  CHECK(!find_packing(inst.cover).has_value());
}

TEST_CASE("three-cycle gadget, girth four and five") {
  for (int g : {4, 5}) {
    auto inst = girth_construction(g);
    CHECK(girth(inst.graph) >= g);
    for (const auto& c : inst.claims) CHECK_MESSAGE(c.holds, c.name << " at g=" << g);
  }
  CHECK(girth_construction(5).graph.n == 63);
  CHECK_THROWS(girth_construction(2));
}

TEST_CASE("the bad 4-fold cover of K5 minus an edge") {
  auto inst = k5_minus_bad_cover();
  for (const auto& c : inst.claims) CHECK_MESSAGE(c.holds, c.name);
  CHECK(count_transversals(inst.cover) == 54);
  CHECK(!find_packing(inst.cover).has_value());
  CHECK(inst.cover.full());
}

TEST_CASE("random 5-fold covers of K5 minus an edge pack") {
  CHECK(k5_minus_5fold_sample_packs(300, 20240825));
}

TEST_CASE("the bad 4-fold cover is unique up to isomorphism") {
  auto rep = k5_minus_uniqueness();
  CHECK(rep.covers_checked == 1658880);
  CHECK(rep.bad_covers == 1);
  CHECK(rep.bad_classes == 1);
  CHECK(rep.matches_construction);
}

TEST_CASE("two-tree cover with fractional clique 22/7") {
  auto inst = outerplanar_2tree_cover();
  for (const auto& c : inst.claims) CHECK_MESSAGE(c.holds, c.name);
  // this cover is so tight that it has no independent transversal at all
  CHECK(count_transversals(inst.cover) == 0);
}

TEST_CASE("pendant distribution that cannot be extended") {
  auto inst = nonextendable_fractional_example();
  CHECK(inst.graph.n == 6);
  for (const auto& c : inst.claims) CHECK_MESSAGE(c.holds, c.name);
}

TEST_CASE("K23 plus an edge") {
  auto inst = k23_plus_edge();
  for (const auto& c : inst.claims) CHECK_MESSAGE(c.holds, c.name);
  CHECK(mad_exhaustive(inst.graph).mad == Rational(14, 5));
  // the stored witness cover really fails the fractional LP
  CHECK(!has_fractional_packing(inst.cover).feasible);
}

TEST_CASE("construction dispatch") {
  CHECK(construct_by_name("k5_minus", 0).name == "k5_minus");
  CHECK(construct_by_name("girth", 3).graph.n == 21);
  CHECK_THROWS(construct_by_name("nope", 0));
}
