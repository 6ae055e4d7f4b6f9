#pragma once

#include <string>
#include <vector>

#include "packlab/graph.hpp"
#include "packlab/perm.hpp"

namespace packlab {

// Correspondence cover (L,H): per-vertex list sizes plus a partial injective
// matching on every edge, stored once in the edge's (u,v) orientation with
// u < v.  match[e][i] is the L(v)-index matched to L(u)-index i, or -1.
struct Cover {
  Graph g;
  std::vector<int> list_size;
  std::vector<std::vector<int>> match;
  // optional color labels (present for list covers), empty otherwise
  std::vector<std::vector<std::string>> labels;

  int k_uniform() const;  // common list size, or -1 if non-uniform
  bool edge_full(int e) const;
  bool full() const;
  // matched partner of color i at u across edge e, oriented from u; -1 if none
  int map_from(int e, int u, int i) const;
  void validate() const;  // throws on any broken invariant
};

// A transversal assigns one list index per vertex; independent iff no edge
// matching joins the chosen pair.
using Transversal = std::vector<int>;

bool transversal_independent(const Cover& c, const Transversal& t);

// Partial packing: per-vertex permutation columns; -1 rows mark unassigned.
struct PartialPacking {
  std::vector<Perm> cols;  // empty Perm = unassigned
  bool assigned(int v) const { return !cols[v].empty(); }
};

bool partial_packing_valid(const Cover& c, const PartialPacking& p);

// Compatibility of permutation columns across one edge, both formulations.
bool columns_compatible(const Cover& c, int e, const Perm& cu, const Perm& cv);
bool columns_compatible_derangement(const Cover& c, int e, const Perm& cu, const Perm& cv);

Cover list_cover(const Graph& g, const std::vector<std::vector<std::string>>& lists);
Cover full_identity_cover(const Graph& g, int k);

struct UntwistResult {
  Cover cover;
  std::vector<Perm> relabel;  // new index = relabel[v][old index]
};
// Relabel lists so every forest edge carries the identity matching.
UntwistResult untwist(const Cover& c, const std::vector<int>& forest_edges);

Cover restrict_cover(const Cover& c, const Graph& sub, const std::vector<int>& embed);
Cover restrict_cover(const Cover& c, const Graph& sub);  // embed = identity

// Build a full cover from per-edge permutation indices into perm_table(k).
Cover cover_from_perm_indices(const Graph& g, int k, const std::vector<int>& perm_idx);

}  // namespace packlab
