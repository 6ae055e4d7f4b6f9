#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace packlab {

// Balanced bipartite graph as row bitmasks of the biadjacency matrix.
struct BipartiteGraph {
  int n = 0;
  std::vector<uint32_t> rows;  // rows[i] = neighbor set of left vertex i

  BipartiteGraph() = default;
  BipartiteGraph(int n_, std::vector<uint32_t> rows_) : n(n_), rows(std::move(rows_)) {}
  static BipartiteGraph from_matrix(const std::vector<std::vector<int>>& m);

  bool edge(int i, int j) const { return rows[i] >> j & 1; }
  int left_degree(int i) const { return __builtin_popcount(rows[i]); }
  int right_degree(int j) const;
  int min_degree() const;
  uint64_t edge_count() const;
  BipartiteGraph complement() const;
  BipartiteGraph transpose() const;
};

// Number of perfect matchings, exact (n <= 16); throws on overflow.
uint64_t permanent(const BipartiteGraph& g);
uint64_t permanent(int n, const uint32_t* rows);

// Allocation-free 8x8 fast path for bulk scans (counts fit in 8! trivially).
inline uint64_t permanent8(const uint32_t rows[8]) {
  uint64_t dp[256] = {0};
  dp[0] = 1;
  for (uint32_t mask = 0; mask < 255; ++mask) {
    uint64_t v = dp[mask];
    if (!v) continue;
    uint32_t avail = rows[__builtin_popcount(mask)] & ~mask & 0xffu;
    while (avail) {
      uint32_t b = avail & (~avail + 1);
      avail ^= b;
      dp[mask | b] += v;
    }
  }
  return dp[255];
}

bool has_perfect_matching(const BipartiteGraph& g);
bool has_perfect_matching(int n, const uint32_t* rows);

// Oracle: count perfect matchings by plain row-by-row enumeration.
uint64_t permanent_brute(const BipartiteGraph& g);

// Deterministic isomorphism key (row/column relabelings and side swap).
// Equal keys iff isomorphic.  Intended for n <= 8.
std::vector<uint32_t> bipartite_canonical_key(const BipartiteGraph& g);

// Is some perfect matching using fewer than four of the given pairs?
// Throws if the graph has no perfect matching at all.
bool check_five_pairs(const BipartiteGraph& g, const std::vector<std::pair<int, int>>& pairs);

// Matrix file format: first line n, then n lines of n 0/1 entries.
BipartiteGraph read_bipartite(std::istream& in);
BipartiteGraph read_bipartite_file(const std::string& path);

}  // namespace packlab
