#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "packlab/cover.hpp"
#include "packlab/cover_enum.hpp"

namespace packlab {

// k disjoint independent transversals, stored as permutation columns.
struct Packing {
  std::vector<Perm> cols;
  int k = 0;
};

bool packing_valid(const Cover& c, const Packing& p);

struct SearchStats {
  uint64_t nodes = 0;
};

// Exhaustive deterministic DFS; vertices in reverse degeneracy order with
// forward checking.  Requires uniform list size.
std::optional<Packing> find_packing(const Cover& c, SearchStats* stats = nullptr);

uint64_t count_transversals(const Cover& c);
std::vector<Transversal> enumerate_transversals(const Cover& c, uint64_t budget = 10'000'000);

bool extendable(const Cover& c, const PartialPacking& p, const std::vector<int>& frontier);

enum class VerdictKind { HOLDS, FAILS, INCONCLUSIVE };

struct Verdict {
  VerdictKind kind = VerdictKind::INCONCLUSIVE;
  std::optional<Cover> witness;       // FAILS: a cover with no packing
  uint64_t witness_index = 0;         // index in the enumeration
  uint64_t covers_checked = 0;
  uint64_t resume_index = 0;          // INCONCLUSIVE: continue from here
  uint64_t nodes_expanded = 0;
  std::vector<std::vector<std::string>> witness_lists;  // list_packing_upper only
};

// Every full k-fold cover (symmetry-reduced) packs?
Verdict corr_packing_upper(const Graph& g, int k, uint64_t budget = UINT64_MAX,
                           uint64_t start_index = 0, int jobs = 1);

// Every k-list-assignment (canonicalized up to color renaming) packs?
Verdict list_packing_upper(const Graph& g, int k, uint64_t budget = UINT64_MAX);

// Fast path used by bulk enumeration loops: searches a full uniform cover
// given per-edge perm-table indices, via precomputed tables only.
struct FullCoverSearcher {
  explicit FullCoverSearcher(const Graph& g, int k);
  // true iff a packing exists
  bool packs(const std::vector<int>& edge_perm, SearchStats* stats = nullptr) const;

  const Graph& graph() const { return g_; }

 private:
  Graph g_;
  int k_;
  std::vector<int> order_;  // assignment order (reverse degeneracy)
  struct Nb {
    int vertex;
    int edge;
    bool forward;  // edge stored (u,v) with u = this vertex
  };
  std::vector<std::vector<Nb>> later_;  // neighbors appearing later in order_
  std::vector<int> pos_;
  bool dfs(int depth, std::vector<Mask128>& cand, const std::vector<int>& edge_perm,
           SearchStats* stats) const;
};

}  // namespace packlab
