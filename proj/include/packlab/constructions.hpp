#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "packlab/cover.hpp"
#include "packlab/fractional.hpp"
#include "packlab/graph.hpp"

namespace packlab {

struct Claim {
  std::string name;
  bool holds = false;
  std::string detail;
};

// A generated graph-plus-cover instance; claims are recomputed from scratch
// on every construction, never cached.
struct ConstructedInstance {
  std::string name;
  Graph graph;
  Cover cover;
  std::vector<Claim> claims;

  bool all_hold() const;
};



// Three odd cycles with alternating 3-lists, joined by length-g paths with
// inherited lists.  Claims: planar, girth >= g, no 3-list packing, and each
// same-list vertex class induces a connected subgraph.
ConstructedInstance girth_construction(int g);

// The 4-fold cover of K5 minus an edge with identity matchings on five edges
// and a 3-cycle permutation along the bold path.  Claims: 54 transversals,
// no packing of 4 colorings.
ConstructedInstance k5_minus_bad_cover();

// Spot check: random full 5-fold covers of K5 minus an edge all pack.
bool k5_minus_5fold_sample_packs(int samples, uint32_t seed);

// Exhaustive check over symmetry-reduced full 4-fold covers of K5 minus an
// edge: exactly one isomorphism class (under list relabelings and graph
// automorphisms) has no packing, and it is the class of k5_minus_bad_cover.
struct UniquenessReport {
  uint64_t covers_checked = 0;
  uint64_t bad_covers = 0;
  uint64_t bad_classes = 0;
  bool matches_construction = false;
};
UniquenessReport k5_minus_uniqueness(uint64_t budget = UINT64_MAX);

// The two-tree on six vertices from Fig-style triangle plus three midpoint
// vertices, with three 3-lists and three 2-lists.  Claims: no fractional
// packing, and the stated dual weighting is a valid fractional clique of
// total 22/7.
ConstructedInstance outerplanar_2tree_cover();

// An edge with a 4-fold identity cover and four pendant vertices; the given
// outside distribution has uniform marginals yet admits no extension to the
// edge, while dropping any one pendant makes it extendable.
ConstructedInstance nonextendable_fractional_example();

// K_{2,3} plus an edge between two degree-2 vertices.  Claims: mad 14/5, no
// induced subtree whose vertices all have exactly one outside neighbor, and
// a 3-fold cover with no fractional packing exists.
ConstructedInstance k23_plus_edge();

ConstructedInstance construct_by_name(const std::string& name, int g);

}  // namespace packlab
