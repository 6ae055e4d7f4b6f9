#pragma once

#include <optional>
#include <vector>

#include "packlab/cover.hpp"
#include "packlab/packing.hpp"
#include "packlab/rational.hpp"

namespace packlab {

struct TransversalDistribution {
  std::vector<Transversal> support;
  std::vector<Rational> weights;
};

// Exact check: weights >= 0, sum 1, and each cover vertex x in L(v) is hit
// with total weight 1/|L(v)|.  Throws on violation.
void validate_distribution(const Cover& c, const TransversalDistribution& d);

struct FractionalClique {
  std::vector<std::vector<Rational>> weights;  // [vertex][list index]
  Rational total;
};

struct FracResult {
  bool feasible = false;
  TransversalDistribution dist;
  bool has_clique = false;
  FractionalClique clique;               // uniform infeasible covers only
  std::vector<Rational> farkas;          // per cover vertex, flattened vertex-major
  uint64_t transversal_count = 0;
};

// Marginal-equality LP over all independent transversals, exact rationals.
FracResult has_fractional_packing(const Cover& c, uint64_t budget = 10'000'000);

// Valid iff weights lie in [0,1] and every independent set of the cover
// graph has total weight <= 1; second component is the total weight.
std::pair<bool, Rational> verify_fractional_clique(const Cover& c, const FractionalClique& w);

// Does adding `added` unmatched colors at v preserve feasibility?
bool check_monotonicity(const Cover& c, int v, int added, uint64_t budget = 10'000'000);

// Assemble a fractional packing of c from one of G minus T and packings of
// the reduced covers of T; T-vertices may have at most one outside neighbor.
// Throws identifying the violated hypothesis.
TransversalDistribution compose_via_T(const Cover& c, const std::vector<int>& t_set,
                                      uint64_t budget = 10'000'000);

// Validates the degree-2 suppression transfer on a concrete instance: builds
// the reduced cover(s) on G minus v plus uw, and when they are feasible,
// assembles an exact extension and checks it.  Returns feasibility of c.
bool suppress_degree2(const Cover& c, int v, uint64_t budget = 10'000'000);

struct CycleProfileReport {
  int n = 0;
  uint64_t covers_checked = 0;
  bool all_three3_feasible = true;
  bool exhaustive = false;            // three-3 enumeration covered all covers
  bool two3_infeasible_found = false;
  std::optional<Cover> witness;       // infeasible cover with two size-3 lists
};

// Covers of the n-cycle with three size-3 lists and the rest size 2
// (exhaustive up to relabeling for n <= 5, sampled beyond), plus a search
// for an infeasible cover with only two size-3 lists.
CycleProfileReport cycle_profiles(int n, uint64_t budget = 10'000'000);

// The twelve terminal-coloring triples used in the series-parallel girth-4
// induction: weights sum to 1, adjacent-pair marginals 1/6, far-pair 1/9.
bool verify_table2();

}  // namespace packlab
