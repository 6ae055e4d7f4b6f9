#include "packlab/cover_enum.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace packlab {

std::vector<int> bfs_spanning_forest(const Graph& g) {
  std::vector<int> forest;
  std::vector<char> seen(g.n, 0);
  for (int s = 0; s < g.n; ++s) {
    if (seen[s]) continue;
    seen[s] = 1;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v : g.adj[u])
        if (!seen[v]) {
          seen[v] = 1;
          forest.push_back(g.edge_index(u, v));
          q.push(v);
        }
    }
  }
  return forest;
}

FullCoverEnum::FullCoverEnum(const Graph& g_, int k_, std::optional<std::vector<int>> sf)
    : g(g_), k(k_) {
  forest_edges = sf ? *sf : bfs_spanning_forest(g);
  std::vector<char> in_forest(g.m(), 0);
  for (int e : forest_edges) in_forest[e] = 1;
  for (int e = 0; e < g.m(); ++e)
    if (!in_forest[e]) free_edges.push_back(e);
  std::sort(free_edges.begin(), free_edges.end(),
            [&](int a, int b) { return g.edges[a] < g.edges[b]; });
  first_reps = perm_table(k).class_reps;
}

uint64_t FullCoverEnum::size() const {
  if (free_edges.empty()) return 1;
  uint64_t s = first_reps.size();
  for (size_t i = 1; i < free_edges.size(); ++i) s *= (uint64_t)perm_table(k).fact;
  return s;
}

void FullCoverEnum::assign(uint64_t idx, std::vector<int>& edge_perm) const {
  edge_perm.assign(g.m(), 0);  // identity everywhere by default
  if (free_edges.empty()) return;
  int fact = perm_table(k).fact;
  // least significant digit = last free edge
  for (size_t i = free_edges.size(); i-- > 1;) {
    edge_perm[free_edges[i]] = (int)(idx % fact);
    idx /= fact;
  }
  if (idx >= first_reps.size()) throw std::out_of_range("cover index out of range");
  edge_perm[free_edges[0]] = first_reps[idx];
}

Cover FullCoverEnum::cover_at(uint64_t idx) const {
  std::vector<int> ep;
  assign(idx, ep);
  return cover_from_perm_indices(g, k, ep);
}

std::vector<std::vector<int>> graph_automorphisms(const Graph& g) {
  std::vector<std::vector<int>> autos;
  std::vector<int> map(g.n, -1), used(g.n, 0);
  auto rec = [&](auto&& self, int v) -> void {
    if (v == g.n) {
      autos.push_back(map);
      return;
    }
    for (int w = 0; w < g.n; ++w) {
      if (used[w] || g.degree(w) != g.degree(v)) continue;
      bool ok = true;
      for (int u = 0; u < v && ok; ++u)
        if (g.has_edge(u, v) != g.has_edge(map[u], w)) ok = false;
      if (!ok) continue;
      map[v] = w;
      used[w] = 1;
      self(self, v + 1);
      used[w] = 0;
      map[v] = -1;
    }
  };
  rec(rec, 0);
  return autos;
}

namespace {

// conjugate perm index a by perm index h: h a h^{-1}
inline int conj(const PermTable& t, int h, int a) { return t.comp[t.comp[h][a]][t.inv[h]]; }

}  // namespace

std::vector<int> cover_canonical_key(const FullCoverEnum& en, const std::vector<int>& edge_perm,
                                     bool use_automorphisms) {
  const Graph& g = en.g;
  const PermTable& t = perm_table(en.k);

  std::vector<std::vector<int>> autos;
  if (use_automorphisms)
    autos = graph_automorphisms(g);
  else
    autos.push_back([&] {
      std::vector<int> id(g.n);
      std::iota(id.begin(), id.end(), 0);
      return id;
    }());

  // forest adjacency for re-untwisting
  std::vector<std::vector<std::pair<int, int>>> fadj(g.n);
  for (int e : en.forest_edges) {
    auto [u, v] = g.edges[e];
    fadj[u].push_back({v, e});
    fadj[v].push_back({u, e});
  }

  std::vector<int> best;
  std::vector<int> mapped(g.m());  // perm index per edge after automorphism
  std::vector<int> rho(g.n);       // per-vertex relabel (perm index) after re-untwist
  std::vector<int> reduced(en.free_edges.size());
  for (const auto& sigma : autos) {
    // remap: matching of edge e lands on edge sigma(e), flipping on reversal
    for (int e = 0; e < g.m(); ++e) {
      auto [u, v] = g.edges[e];
      int su = sigma[u], sv = sigma[v];
      int se = g.edge_index(su, sv);
      mapped[se] = (su < sv) ? edge_perm[e] : t.inv[edge_perm[e]];
    }
    // re-untwist onto the fixed forest
    std::vector<char> done(g.n, 0);
    for (int root = 0; root < g.n; ++root) {
      if (done[root]) continue;
      rho[root] = 0;
      done[root] = 1;
      std::vector<int> stack{root};
      while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (auto [v, e] : fadj[u]) {
          if (done[v]) continue;
          int m = (g.edges[e].first == u) ? mapped[e] : t.inv[mapped[e]];
          rho[v] = t.comp[rho[u]][t.inv[m]];
          done[v] = 1;
          stack.push_back(v);
        }
      }
    }
    // residual matchings on free edges: rho_v o M o rho_u^{-1}
    for (size_t i = 0; i < en.free_edges.size(); ++i) {
      int e = en.free_edges[i];
      auto [u, v] = g.edges[e];
      reduced[i] = t.comp[t.comp[rho[v]][mapped[e]]][t.inv[rho[u]]];
    }
    // minimize over global conjugation
    std::vector<int> key(reduced.size());
    for (int h = 0; h < t.fact; ++h) {
      for (size_t i = 0; i < reduced.size(); ++i) key[i] = conj(t, h, reduced[i]);
      if (best.empty() || key < best) best = key;
    }
  }
  return best;
}

}  // namespace packlab
