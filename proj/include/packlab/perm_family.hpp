#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "packlab/bipartite.hpp"

namespace packlab {

// Extremal analysis of perfect-matching counts in min-degree-d subgraphs of
// K_{8,8}, the engine behind the common-derangement lower bounds.
struct FamilyReport {
  int d = 0;
  bool complete = false;          // declared case space fully exhausted
  uint64_t graphs_checked = 0;
  uint64_t min_permanent = 0;     // minimum over graphs with >= 1 perfect matching
  uint64_t attaining_classes = 0; // isomorphism classes attaining the minimum
  std::vector<BipartiteGraph> attaining;

  // d = 3 only
  uint64_t zero_classes = 0;                   // edge-minimal classes without any matching
  std::vector<BipartiteGraph> zero_graphs;
  uint64_t min_augmented = 0;                  // min over minimal matching-creating augmentations
  uint64_t regular_attaining_classes = 0;      // 3-regular classes attaining the minimum

  std::string notes;
};

// d = 6: the 11-class complement family (unions of even cycles, possibly one
//        extra edge), exhaustive.
// d = 5: exhaustive over all triples of permutations via conjugacy reduction.
// d = 4: fast tier exhausts the 4-regular family plus a seeded randomized
//        sweep over edge-minimal graphs; full tier exhausts all quadruples of
//        permutations via conjugacy reduction.
// d = 3: zero classes by Hall-violator structure, minimal augmentations, and
//        the full 3-regular family; full tier scans all edge-minimal
//        min-degree-3 graphs.
FamilyReport min_permanent_family(int d, bool full_tier = false,
                                  uint64_t budget = 2'000'000'000ull);

}  // namespace packlab
