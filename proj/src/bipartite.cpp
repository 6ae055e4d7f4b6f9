#include "packlab/bipartite.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <numeric>
#include <stdexcept>

namespace packlab {

BipartiteGraph BipartiteGraph::from_matrix(const std::vector<std::vector<int>>& m) {
  BipartiteGraph g;
  g.n = (int)m.size();
  for (const auto& row : m) {
    if ((int)row.size() != g.n) throw std::invalid_argument("bipartite: non-square matrix");
    uint32_t r = 0;
    for (int j = 0; j < g.n; ++j)
      if (row[j]) r |= 1u << j;
    g.rows.push_back(r);
  }
  return g;
}

int BipartiteGraph::right_degree(int j) const {
  int d = 0;
  for (uint32_t r : rows) d += r >> j & 1;
  return d;
}

int BipartiteGraph::min_degree() const {
  int d = n;
  for (int i = 0; i < n; ++i) d = std::min(d, left_degree(i));
  for (int j = 0; j < n; ++j) d = std::min(d, right_degree(j));
  return d;
}

uint64_t BipartiteGraph::edge_count() const {
  uint64_t e = 0;
  for (uint32_t r : rows) e += __builtin_popcount(r);
  return e;
}

BipartiteGraph BipartiteGraph::complement() const {
  BipartiteGraph g = *this;
  uint32_t all = (n == 32) ? ~0u : ((1u << n) - 1);
  for (auto& r : g.rows) r = ~r & all;
  return g;
}

BipartiteGraph BipartiteGraph::transpose() const {
  BipartiteGraph g;
  g.n = n;
  g.rows.assign(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (rows[i] >> j & 1) g.rows[j] |= 1u << i;
  return g;
}

uint64_t permanent(int n, const uint32_t* rows) {
  if (n > 16) throw std::invalid_argument("permanent: n > 16");
  // dp over used-column sets, rows processed in popcount order
  std::vector<uint64_t> dp((size_t)1 << n, 0);
  dp[0] = 1;
  uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
  for (uint32_t mask = 0; mask < full; ++mask) {
    if (!dp[mask]) continue;
    int r = __builtin_popcount(mask);
    uint32_t avail = rows[r] & ~mask;
    while (avail) {
      uint32_t b = avail & (~avail + 1);
      avail ^= b;
      if (__builtin_add_overflow(dp[mask | b], dp[mask], &dp[mask | b]))
        throw std::overflow_error("permanent overflow");
    }
  }
  return dp[full];
}

uint64_t permanent(const BipartiteGraph& g) { return permanent(g.n, g.rows.data()); }

namespace {

bool augment(int i, int n, const uint32_t* rows, int* matchC, uint32_t& visited) {
  uint32_t avail = rows[i] & ~visited;
  while (avail) {
    int j = __builtin_ctz(avail);
    avail &= avail - 1;
    visited |= 1u << j;
    if (matchC[j] < 0 || augment(matchC[j], n, rows, matchC, visited)) {
      matchC[j] = i;
      return true;
    }
  }
  return false;
}

}  // namespace

bool has_perfect_matching(int n, const uint32_t* rows) {
  int matchC[32];
  std::fill(matchC, matchC + n, -1);
  for (int i = 0; i < n; ++i) {
    uint32_t visited = 0;
    if (!augment(i, n, rows, matchC, visited)) return false;
  }
  return true;
}

bool has_perfect_matching(const BipartiteGraph& g) {
  return has_perfect_matching(g.n, g.rows.data());
}

uint64_t permanent_brute(const BipartiteGraph& g) {
  uint64_t count = 0;
  auto rec = [&](auto&& self, int i, uint32_t used) -> void {
    if (i == g.n) {
      ++count;
      return;
    }
    uint32_t avail = g.rows[i] & ~used;
    while (avail) {
      uint32_t b = avail & (~avail + 1);
      avail ^= b;
      self(self, i + 1, used | b);
    }
  };
  rec(rec, 0, 0);
  return count;
}

namespace {

// max over row orders of the descending-sorted column bit-strings
std::vector<uint32_t> canon_side(const BipartiteGraph& g) {
  int n = g.n;
  std::vector<uint32_t> best;  // empty = none yet
  std::vector<uint32_t> col(n, 0);
  std::vector<int> chosen;
  std::vector<char> used(n, 0);
  uint32_t low_bits_cache[33];
  for (int t = 0; t <= n; ++t) low_bits_cache[t] = (t == 0) ? 0 : ((1u << t) - 1);

  std::vector<uint32_t> opt(n), fin(n);
  auto rec = [&](auto&& self, int t) -> void {
    if (t == n) {
      fin = col;
      std::sort(fin.begin(), fin.end(), std::greater<>());
      if (best.empty() || fin > best) best = fin;
      return;
    }
    if (!best.empty()) {
      // optimistic bound: every column gets all remaining bits
      uint32_t extra = low_bits_cache[n - t];
      for (int j = 0; j < n; ++j) opt[j] = col[j] | extra;
      std::sort(opt.begin(), opt.end(), std::greater<>());
      if (opt < best) return;
    }
    for (int i = 0; i < n; ++i) {
      if (used[i]) continue;
      used[i] = 1;
      uint32_t bit = 1u << (n - 1 - t);
      for (int j = 0; j < n; ++j)
        if (g.rows[i] >> j & 1) col[j] |= bit;
      self(self, t + 1);
      for (int j = 0; j < n; ++j)
        if (g.rows[i] >> j & 1) col[j] &= ~bit;
      used[i] = 0;
    }
  };
  rec(rec, 0);
  return best;
}

}  // namespace

std::vector<uint32_t> bipartite_canonical_key(const BipartiteGraph& g) {
  auto a = canon_side(g);
  auto b = canon_side(g.transpose());
  return std::max(a, b);
}

bool check_five_pairs(const BipartiteGraph& g, const std::vector<std::pair<int, int>>& pairs) {
  if (!has_perfect_matching(g)) throw std::runtime_error("check_five_pairs: no perfect matching");
  std::vector<uint32_t> pair_cols(g.n, 0);
  for (auto [i, j] : pairs) pair_cols[i] |= 1u << j;
  bool found = false;
  auto rec = [&](auto&& self, int i, uint32_t used, int hits) -> void {
    if (found || hits >= 4) return;
    if (i == g.n) {
      found = true;
      return;
    }
    uint32_t avail = g.rows[i] & ~used;
    while (avail && !found) {
      uint32_t b = avail & (~avail + 1);
      avail ^= b;
      self(self, i + 1, used | b, hits + ((pair_cols[i] & b) ? 1 : 0));
    }
  };
  rec(rec, 0, 0, 0);
  return found;
}

BipartiteGraph read_bipartite(std::istream& in) {
  int n;
  if (!(in >> n)) throw std::runtime_error("matrix format: expected n");
  std::vector<std::vector<int>> m(n, std::vector<int>(n));
  for (auto& row : m)
    for (auto& x : row)
      if (!(in >> x)) throw std::runtime_error("matrix format: expected 0/1 entry");
  return BipartiteGraph::from_matrix(m);
}

BipartiteGraph read_bipartite_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_bipartite(in);
}

}  // namespace packlab
