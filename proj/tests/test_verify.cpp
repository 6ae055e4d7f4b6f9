#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>

#include "packlab/catalog.hpp"
#include "packlab/cover.hpp"
#include "packlab/verify.hpp"

using namespace packlab;

TEST_CASE("extension across an induced C3 or P3 of degree-3 vertices") {
  auto r = verify_C3P3_lemma();
  CHECK(r.verified());
  // 5 * 24^2 triangle cases, 24^4 path cases, 81 * 24 * 300 list cases
  CHECK(r.cases_checked == 917856);
}

TEST_CASE("two disjoint colorings extend across a degree-(2,3,2) path") {
  auto r = verify_g8_two_colorings();
  CHECK(r.verified());
  CHECK(r.cases_checked == 294);
}

TEST_CASE("safe hub column counts of the seven-vertex chord graph") {
  auto r = verify_g733();
  CHECK(r.verified());
  CHECK(r.detail.find("class 0: 9") != std::string::npos);
  CHECK(r.detail.find("class 1: 4") != std::string::npos);
  CHECK(r.detail.find("class 3: 3") != std::string::npos);
  CHECK(r.detail.find("class 7: 4") != std::string::npos);
  CHECK(r.detail.find("class 9: 2") != std::string::npos);
}

TEST_CASE("cycle prepackings extend for all lengths up to seven") {
  uint64_t cases[] = {1296, 14712, 147816, 1362408, 11872872};
  for (int n = 3; n <= 7; ++n) {
    auto r = verify_cycle_prepacking(n);
    CHECK_MESSAGE(r.verified(), "n=" << n << " witness: " << r.witness);
    CHECK(r.cases_checked == cases[n - 3]);
  }
  CHECK_THROWS(verify_cycle_prepacking(2));
  CHECK_THROWS(verify_cycle_prepacking(8));
}

TEST_CASE("triangle prepackings, direct list enumeration oracle") {
  // independent route for the n=3 case: explicit 3-lists on a triangle with
  // L(x) = L(y) = {0,1,2} and L(z) any 3-subset of {0..5}; every proper
  // prepacking of x, y must extend to z
  Graph tri(3, {{0, 1}, {0, 2}, {1, 2}});
  std::vector<std::string> base = {"0", "1", "2"};
  for (int a = 0; a < 6; ++a)
    for (int b = a + 1; b < 6; ++b)
      for (int c = b + 1; c < 6; ++c) {
        std::vector<std::string> lz = {std::to_string(a), std::to_string(b), std::to_string(c)};
        Cover cov = list_cover(tri, {base, base, lz});
        int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
        for (auto& px : perms)
          for (auto& py : perms) {
            Perm cx(px, px + 3), cy(py, py + 3);
            if (!columns_compatible(cov, 0, cx, cy)) continue;
            bool found = false;
            for (auto& pz : perms) {
              Perm cz(pz, pz + 3);
              if (columns_compatible(cov, 1, cx, cz) && columns_compatible(cov, 2, cy, cz))
                found = true;
            }
            CHECK_MESSAGE(found, "lists " << a << b << c);
          }
      }
}

TEST_CASE("exhaustive cover enumeration for the K4 sanity case") {
  auto r = verify_small_k24("K4");
  CHECK(r.verified());
  CHECK(r.cases_checked == 2880);
}

TEST_CASE("cover exhaustion reports timeout and resumes") {
  auto part = verify_small_k24("K4", 1000);
  CHECK(part.status == VerifyStatus::TIMEOUT);
  CHECK(part.resume_index == 1000);
  auto rest = verify_small_k24("K4", UINT64_MAX, part.resume_index);
  CHECK(rest.verified());
  CHECK(part.cases_checked + rest.cases_checked == 2880);
}

TEST_CASE("every full 4-fold cover of the two six-vertex exceptions packs") {
  for (const char* name : {"A+", "G6+"}) {
    auto r = verify_small_k24(name);
    CHECK_MESSAGE(r.verified(), name);
    CHECK(r.cases_checked == 39813120);
  }
}

TEST_CASE("lemma table and dispatch") {
  std::set<std::string> ids;
  int fast = 0;
  for (const auto& e : lemma_table()) {
    CHECK(ids.insert(e.id).second);
    fast += e.fast_tier;
  }
  CHECK(fast == 9);
  CHECK(ids.size() == 14);
  CHECK(verify_by_id("girth8").verified());
  CHECK_THROWS(verify_by_id("nope"));
  CHECK_THROWS(run_all("fastest"));
}

TEST_CASE("fast tier runs every quick check") {
  auto reports = run_all("fast");
  CHECK(reports.size() == 9);
  for (const auto& r : reports) CHECK_MESSAGE(r.verified(), r.lemma_id);
}
