#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "packlab/catalog.hpp"
#include "packlab/fractional.hpp"
#include "packlab/packing.hpp"
#include "packlab/simplex.hpp"

using namespace packlab;

namespace {

Cover random_full_cover(const Graph& g, int k, std::mt19937& rng) {
  const PermTable& t = perm_table(k);
  std::vector<int> ep(g.m());
  for (int& x : ep) x = (int)(rng() % t.fact);
  return cover_from_perm_indices(g, k, ep);
}

}  // namespace

TEST_CASE("equality feasibility: solvable system") {
  // x0 + x1 = 1, x0 - x1 = 1/3 has x = (2/3, 1/3)
  std::vector<std::vector<Rational>> A = {{1, 1}, {1, -1}};
  std::vector<Rational> b = {1, Rational(1, 3)};
  auto r = solve_equality_feasibility(A, b);
  REQUIRE(r.feasible);
  CHECK(r.x[0] == Rational(2, 3));
  CHECK(r.x[1] == Rational(1, 3));
}

TEST_CASE("equality feasibility: infeasible with certificate") {
  // x0 + x1 = 1 and x0 + x1 = 2 cannot both hold
  std::vector<std::vector<Rational>> A = {{1, 1}, {1, 1}};
  std::vector<Rational> b = {1, 2};
  auto r = solve_equality_feasibility(A, b);
  REQUIRE(!r.feasible);
  REQUIRE(r.farkas.size() == 2);
  Rational yb = r.farkas[0] * b[0] + r.farkas[1] * b[1];
  CHECK(yb > 0);
  for (int j = 0; j < 2; ++j) CHECK(r.farkas[0] * A[0][j] + r.farkas[1] * A[1][j] <= 0);
}

TEST_CASE("equality feasibility: negative rhs needs a negative variable") {
  std::vector<std::vector<Rational>> A = {{1}};
  std::vector<Rational> b = {-1};
  auto r = solve_equality_feasibility(A, b);
  CHECK(!r.feasible);
}

TEST_CASE("maximize_leq basics") {
  // max x0 + x1 with x0 + 2 x1 <= 4, x0 <= 3 gives 7/2 at (3, 1/2)
  std::vector<std::vector<Rational>> A = {{1, 2}, {1, 0}};
  std::vector<Rational> b = {4, 3};
  auto r = maximize_leq(A, b, {1, 1});
  REQUIRE(r.bounded);
  CHECK(r.value == Rational(7, 2));
  CHECK(r.x[0] == 3);
  CHECK(r.x[1] == Rational(1, 2));

  auto u = maximize_leq({{Rational(-1), 0}}, {1}, {1, 0});
  CHECK(!u.bounded);
}

TEST_CASE("fractional packing of small identity covers") {
  auto r2 = has_fractional_packing(full_identity_cover(catalog("K2"), 2));
  REQUIRE(r2.feasible);
  CHECK(r2.transversal_count == 2);
  CHECK(r2.dist.support.size() == 2);
  for (const auto& w : r2.dist.weights) CHECK(w == Rational(1, 2));

  auto r3 = has_fractional_packing(full_identity_cover(catalog("C3"), 3));
  CHECK(r3.feasible);

  auto r4 = has_fractional_packing(full_identity_cover(catalog("C4"), 2));
  CHECK(r4.feasible);
}

TEST_CASE("triangle with two colors is infeasible and carries a clique") {
  auto r = has_fractional_packing(full_identity_cover(catalog("K3"), 2));
  REQUIRE(!r.feasible);
  CHECK(r.farkas.size() == 6);
  REQUIRE(r.has_clique);
  CHECK(r.clique.total == 3);
  CHECK(r.clique.total > 2);
  auto [ok, total] = verify_fractional_clique(full_identity_cover(catalog("K3"), 2), r.clique);
  CHECK(ok);
  CHECK(total == 3);
}

TEST_CASE("farkas vector cuts every transversal") {
  Cover c = full_identity_cover(catalog("K3"), 2);
  auto r = has_fractional_packing(c);
  REQUIRE(!r.feasible);
  auto trans = enumerate_transversals(c, 1000);
  std::vector<int> off = {0, 2, 4};
  for (const auto& t : trans) {
    Rational s = 0;
    for (int v = 0; v < 3; ++v) s += r.farkas[off[v] + t[v]];
    CHECK(s <= 0);
  }
  Rational yb = 0;
  for (const auto& y : r.farkas) yb += y * Rational(1, 2);
  CHECK(yb > 0);
}

TEST_CASE("distribution validation rejects broken inputs") {
  Cover c = full_identity_cover(catalog("K2"), 2);
  TransversalDistribution good;
  good.support = {{0, 1}, {1, 0}};
  good.weights = {Rational(1, 2), Rational(1, 2)};
  CHECK_NOTHROW(validate_distribution(c, good));

  TransversalDistribution skew = good;
  skew.weights = {Rational(1, 3), Rational(2, 3)};
  CHECK_THROWS(validate_distribution(c, skew));

  TransversalDistribution dep;
  dep.support = {{0, 0}, {1, 1}};
  dep.weights = {Rational(1, 2), Rational(1, 2)};
  CHECK_THROWS(validate_distribution(c, dep));
}

TEST_CASE("packings imply fractional packings on random full covers") {
  std::mt19937 rng(991);
  for (const char* name : {"P4", "C5", "K4"}) {
    Graph g = catalog(name);
    for (int rep = 0; rep < 4; ++rep) {
      Cover c = random_full_cover(g, 3, rng);
      if (find_packing(c).has_value()) CHECK(has_fractional_packing(c).feasible);
    }
  }
}

TEST_CASE("feasibility is invariant under untwisting a spanning forest") {
  std::mt19937 rng(414);
  Graph g = catalog("C5");
  std::vector<int> forest = {0, 1, 2, 3};
  for (int rep = 0; rep < 6; ++rep) {
    Cover c = random_full_cover(g, 2, rep % 2 ? rng : rng);
    Cover u = untwist(c, forest).cover;
    CHECK(has_fractional_packing(c).feasible == has_fractional_packing(u).feasible);
  }
}

TEST_CASE("adding free colors preserves feasibility") {
  std::mt19937 rng(2718);
  Graph g = catalog("P4");
  int done = 0;
  while (done < 5) {
    Cover c = random_full_cover(g, 2, rng);
    if (!has_fractional_packing(c).feasible) continue;
    CHECK(check_monotonicity(c, (int)(rng() % g.n), 1));
    ++done;
  }
  CHECK_THROWS(check_monotonicity(full_identity_cover(catalog("K3"), 2), 0, 1));
}

TEST_CASE("composition across a separating set") {
  Graph p3 = catalog("P3");
  Cover c = full_identity_cover(p3, 2);
  auto d = compose_via_T(c, {2});
  CHECK(d.support.size() == 2);

  Graph p4 = catalog("P4");
  Cover c2 = full_identity_cover(p4, 2);
  c2.match[2].assign(2, -1);
  auto d2 = compose_via_T(c2, {2, 3});
  CHECK_NOTHROW(validate_distribution(c2, d2));

  // identity matching inside T forces an infeasible reduced cover
  Cover c3 = full_identity_cover(p4, 2);
  CHECK_THROWS_AS(compose_via_T(c3, {2, 3}), std::invalid_argument);

  // two outside neighbors violate the separator hypothesis
  CHECK_THROWS_AS(compose_via_T(full_identity_cover(catalog("C4"), 2), {1}),
                  std::invalid_argument);
}

TEST_CASE("degree-2 suppression on concrete instances") {
  auto c4_base = [] { return full_identity_cover(catalog("C4"), 2); };
  CHECK(suppress_degree2(c4_base(), 1));

  // lists (2,3,2) at the suppressed vertex, both matchings aligned on {0,1}
  {
    Cover c = c4_base();
    c.list_size[1] = 3;
    c.match[0].assign(2, -1);
    c.match[0][0] = 0;
    c.match[0][1] = 1;
    c.match[1].assign(3, -1);
    c.match[1][0] = 0;
    c.match[1][1] = 1;
    CHECK(suppress_degree2(c, 1));
  }

  // twisted overlap on a path: u sees colors {0,1}, w sees {1,2}
  {
    Graph g = catalog("P3");
    Cover c = full_identity_cover(g, 2);
    c.list_size[1] = 3;
    c.match[0].assign(2, -1);
    c.match[0][0] = 0;
    c.match[0][1] = 1;
    c.match[1].assign(3, -1);
    c.match[1][1] = 0;
    c.match[1][2] = 1;
    CHECK(suppress_degree2(c, 1));
  }

  // size-3 list at a neighbor
  {
    Graph g = catalog("P3");
    Cover c = full_identity_cover(g, 2);
    c.list_size[2] = 3;
    c.match[1].assign(2, -1);
    c.match[1][0] = 0;
    c.match[1][1] = 1;
    CHECK(suppress_degree2(c, 1));
  }

  // infeasible twisted instance: both reductions fail and so does the cover
  {
    Cover c = c4_base();
    c.list_size[1] = 3;
    c.match[0].assign(2, -1);
    c.match[0][0] = 0;
    c.match[0][1] = 1;
    c.match[1].assign(3, -1);
    c.match[1][1] = 0;
    c.match[1][2] = 1;
    CHECK(!suppress_degree2(c, 1));
  }

  CHECK_THROWS(suppress_degree2(full_identity_cover(catalog("K3"), 2), 0));
}

TEST_CASE("cycle cover profiles on the triangle") {
  auto rep = cycle_profiles(3);
  CHECK(rep.n == 3);
  CHECK(rep.exhaustive);
  CHECK(rep.covers_checked == 2285);
  CHECK(rep.all_three3_feasible);
  CHECK(rep.two3_infeasible_found);
  REQUIRE(rep.witness.has_value());
  CHECK(!has_fractional_packing(*rep.witness).feasible);
  int threes = 0;
  for (int s : rep.witness->list_size) threes += s == 3;
  CHECK(threes <= 2);
}

TEST_CASE("terminal coloring table for the series-parallel induction") {
  CHECK(verify_table2());
}
