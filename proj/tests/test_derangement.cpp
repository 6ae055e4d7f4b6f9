#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "packlab/derangement.hpp"
#include "packlab/perm_family.hpp"

using namespace packlab;

namespace {

Perm random_perm(int k, std::mt19937& rng) {
  Perm p(k);
  for (int i = 0; i < k; ++i) p[i] = i;
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

BipartiteGraph complement_of_cycle16() {
  // the 16-cycle rows 0,1,...,7 with columns i and i+1 (mod 8) removed
  std::vector<uint32_t> rows(8);
  for (int i = 0; i < 8; ++i) rows[i] = 0xffu & ~((1u << i) | (1u << ((i + 1) % 8)));
  return BipartiteGraph(8, rows);
}

}  // namespace

TEST_CASE("derangement counts") {
  CHECK(count_derangements(1) == 0);
  CHECK(count_derangements(2) == 1);
  CHECK(count_derangements(4) == 9);
  CHECK(count_derangements(5) == 44);
  CHECK(count_derangements(8) == 14833);
}

TEST_CASE("common derangements match the brute-force scan") {
  std::mt19937 rng(55);
  for (int k : {4, 5, 6}) {
    for (int rep = 0; rep < 8; ++rep) {
      std::vector<Perm> ps;
      for (int t = 0, m = 1 + (int)(rng() % 3); t < m; ++t) ps.push_back(random_perm(k, rng));
      CHECK(common_derangements(ps) == common_derangements_brute(ps));
    }
  }
  Perm id5 = {0, 1, 2, 3, 4};
  CHECK(common_derangements({id5}) == 44);
}

TEST_CASE("common derangement count is conjugation invariant") {
  std::mt19937 rng(77);
  for (int rep = 0; rep < 6; ++rep) {
    std::vector<Perm> ps = {random_perm(5, rng), random_perm(5, rng)};
    Perm g = random_perm(5, rng);
    std::vector<Perm> conj;
    for (const Perm& p : ps) {
      Perm q(5);
      for (int i = 0; i < 5; ++i) q[g[i]] = g[p[i]];
      conj.push_back(q);
    }
    CHECK(common_derangements(ps) == common_derangements(conj));
  }
}

TEST_CASE("permanent agrees with brute enumeration") {
  std::mt19937 rng(13);
  for (int rep = 0; rep < 10; ++rep) {
    std::vector<uint32_t> rows(6);
    for (auto& r : rows) r = rng() & 0x3fu;
    BipartiteGraph g(6, rows);
    CHECK(permanent(g) == permanent_brute(g));
  }
  BipartiteGraph full(8, std::vector<uint32_t>(8, 0xffu));
  CHECK(permanent(full) == 40320);
  std::vector<uint32_t> no_diag(8);
  for (int i = 0; i < 8; ++i) no_diag[i] = 0xffu ^ (1u << i);
  CHECK(permanent(BipartiteGraph(8, no_diag)) == 14833);
  CHECK(permanent(complement_of_cycle16()) == 4738);
}

TEST_CASE("pair and triple structure over S5") {
  auto rep = classify_triples_5();
  CHECK(rep.pairs_min == 12);
  CHECK(rep.triples_checked == 14400);
  CHECK(rep.zero_triples == 80);
  CHECK(rep.exactly_two_triples == 432);
  CHECK(rep.never_exactly_one);
  CHECK(rep.exactly_two_always_mutual);
  CHECK(rep.zero_structure_verified);
  CHECK(rep.pair_zero_extensions_at_most_two);
  CHECK(rep.pair_zero_extensions_never_mutual);
}

TEST_CASE("blocked fifth rows of the first 4x8 stack") {
  auto a = perm_matrix_from_digit_rows({"51234786", "45123678", "34512867", "23451687"});
  auto bad = bad_permutations(a);
  auto direct = bad_permutations_direct(a);
  CHECK(bad.size() == 96);
  REQUIRE(bad.size() == direct.size());
  for (size_t i = 0; i < bad.size(); ++i) CHECK(bad[i].sigma == direct[i]);
  for (const auto& b : bad) CHECK(b.tag == BadTag::I4N3);
}

TEST_CASE("blocked fifth rows of the second 4x8 stack include the identity") {
  auto a = perm_matrix_from_digit_rows({"51234786", "45123678", "34512867", "23461587"});
  auto bad = bad_permutations(a);
  auto direct = bad_permutations_direct(a);
  CHECK(bad.size() == 42);
  REQUIRE(bad.size() == direct.size());
  for (size_t i = 0; i < bad.size(); ++i) CHECK(bad[i].sigma == direct[i]);
  Perm id(8);
  for (int i = 0; i < 8; ++i) id[i] = i;
  CHECK(std::any_of(bad.begin(), bad.end(), [&](const BadPermutation& b) { return b.sigma == id; }));
}

TEST_CASE("five-pair avoidance check") {
  BipartiteGraph full(8, std::vector<uint32_t>(8, 0xffu));
  std::vector<std::pair<int, int>> pairs = {{0, 0}, {1, 1}, {2, 2}, {3, 3}, {4, 4}};
  CHECK(check_five_pairs(full, pairs));
  // forcing all five pairs: row i only has column i for i < 5
  std::vector<uint32_t> rows(8, 0xffu);
  for (int i = 0; i < 5; ++i) rows[i] = 1u << i;
  CHECK(!check_five_pairs(BipartiteGraph(8, rows), pairs));
}

TEST_CASE("minimum matching count over min-degree-6 subgraphs") {
  auto r = min_permanent_family(6, false);
  CHECK(r.complete);
  CHECK(r.graphs_checked == 11);
  CHECK(r.min_permanent == 4738);
  CHECK(r.attaining_classes == 2);
}

TEST_CASE("minimum matching count over min-degree-5 subgraphs") {
  auto r = min_permanent_family(5, false);
  CHECK(r.complete);
  CHECK(r.graphs_checked == 887040);
  CHECK(r.min_permanent == 1249);
  CHECK(r.attaining_classes == 1);
}

TEST_CASE("minimum matching count over min-degree-4 subgraphs, fast tier") {
  auto r = min_permanent_family(4, false);
  CHECK(!r.complete);
  CHECK(r.min_permanent == 248);
  CHECK(r.attaining_classes == 1);
}

TEST_CASE("min-degree-3 subgraphs: zeros, augmentations, regular minimum") {
  auto r = min_permanent_family(3, false);
  CHECK(r.min_permanent == 33);
  CHECK(r.attaining_classes == 3);
  CHECK(r.zero_classes == 6);
  CHECK(r.min_augmented == 36);
  CHECK(r.regular_attaining_classes == 3);
  for (const auto& g : r.zero_graphs) {
    CHECK(permanent(g) == 0);
    CHECK(g.min_degree() >= 3);
  }
}
