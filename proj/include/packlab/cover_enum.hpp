#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "packlab/cover.hpp"

namespace packlab {

// Symmetry-reduced stream of full k-fold covers: identity on a spanning
// forest, first non-forest edge restricted to conjugacy-class representatives,
// remaining non-forest edges over all k! permutations.  Deterministic and
// indexable, so runs are resumable and splittable by index range.
struct FullCoverEnum {
  Graph g;
  int k = 0;
  std::vector<int> forest_edges;  // edge indices carrying the identity
  std::vector<int> free_edges;    // remaining edge indices, lex order by endpoints
  std::vector<int> first_reps;    // perm indices (conjugacy class reps, lex-least)

  FullCoverEnum(const Graph& g, int k,
                std::optional<std::vector<int>> spanning_forest = std::nullopt);

  uint64_t size() const;
  // fill edge_perm (length m) with perm-table indices for cover #idx
  void assign(uint64_t idx, std::vector<int>& edge_perm) const;
  Cover cover_at(uint64_t idx) const;
};

std::vector<int> bfs_spanning_forest(const Graph& g);

// Canonical key for full k-fold covers of g under list relabelings and
// (optionally) base-graph automorphisms; equal keys iff isomorphic covers.
// Covers must be identity on the given spanning forest.
std::vector<int> cover_canonical_key(const FullCoverEnum& en, const std::vector<int>& edge_perm,
                                     bool use_automorphisms);

// All automorphisms of g, as vertex permutations.
std::vector<std::vector<int>> graph_automorphisms(const Graph& g);

}  // namespace packlab
