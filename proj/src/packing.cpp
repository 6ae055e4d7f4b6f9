#include "packlab/packing.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <numeric>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace packlab {

bool packing_valid(const Cover& c, const Packing& p) {
  int k = c.k_uniform();
  if (k <= 0 || p.k != k || (int)p.cols.size() != c.g.n) return false;
  for (int v = 0; v < c.g.n; ++v)
    if ((int)p.cols[v].size() != k || !is_permutation_of_k(p.cols[v])) return false;
  for (int e = 0; e < c.g.m(); ++e) {
    auto [u, v] = c.g.edges[e];
    if (!columns_compatible(c, e, p.cols[u], p.cols[v])) return false;
  }
  // each row really is an independent transversal
  for (int i = 0; i < k; ++i) {
    Transversal t(c.g.n);
    for (int v = 0; v < c.g.n; ++v) t[v] = p.cols[v][i];
    if (!transversal_independent(c, t)) return false;
  }
  return true;
}

namespace {

std::vector<int> reverse_degeneracy_order(const Graph& g) {
  auto d = degeneracy(g);
  std::reverse(d.order.begin(), d.order.end());
  return d.order;
}

}  // namespace

FullCoverSearcher::FullCoverSearcher(const Graph& g, int k) : g_(g), k_(k) {
  perm_table(k);  // build tables up front
  order_ = reverse_degeneracy_order(g);
  pos_.assign(g.n, -1);
  for (int i = 0; i < g.n; ++i) pos_[order_[i]] = i;
  later_.resize(g.n);
  for (int i = 0; i < g.n; ++i) {
    int u = order_[i];
    for (int v : g.adj[u])
      if (pos_[v] > i) {
        int e = g.edge_index(u, v);
        later_[i].push_back({pos_[v], e, g.edges[e].first == u});
      }
  }
}

bool FullCoverSearcher::dfs(int depth, std::vector<Mask128>& buf,
                            const std::vector<int>& edge_perm, SearchStats* stats) const {
  int n = g_.n;
  if (depth == n) return true;
  const PermTable& t = perm_table(k_);
  const Mask128* cur = buf.data() + (size_t)depth * n;
  Mask128* next = buf.data() + (size_t)(depth + 1) * n;
  Mask128 avail = cur[depth];
  for (int p = avail.first(); p != -1; p = avail.next(p)) {
    if (stats) ++stats->nodes;
    std::copy(cur, cur + n, next);
    bool ok = true;
    for (const auto& nb : later_[depth]) {
      int m = edge_perm[nb.edge];
      int meff = nb.forward ? m : t.inv[m];
      next[nb.vertex] &= t.derange[t.comp[meff][p]];
      if (next[nb.vertex].empty()) {
        ok = false;
        break;
      }
    }
    if (ok && dfs(depth + 1, buf, edge_perm, stats)) return true;
  }
  return false;
}

bool FullCoverSearcher::packs(const std::vector<int>& edge_perm, SearchStats* stats) const {
  const PermTable& t = perm_table(k_);
  int n = g_.n;
  thread_local std::vector<Mask128> buf;
  buf.assign((size_t)(n + 1) * n, Mask128{});
  Mask128 all = full_mask(t.fact);
  for (int i = 0; i < n; ++i) buf[i] = all;
  // packing existence is invariant under a global row reorder, so pin the
  // first assigned vertex to the identity column
  if (n > 0) {
    Mask128 only;
    only.set(0);
    buf[0] = only;
  }
  return dfs(0, buf, edge_perm, stats);
}

std::optional<Packing> find_packing(const Cover& c, SearchStats* stats) {
  int k = c.k_uniform();
  if (k <= 0) throw std::invalid_argument("find_packing: non-uniform list sizes");
  const PermTable& t = perm_table(k);
  const Graph& g = c.g;

  // per-edge compatibility tables in both orientations
  std::vector<std::vector<Mask128>> fwd(g.m()), bwd(g.m());
  for (int e = 0; e < g.m(); ++e) {
    fwd[e].assign(t.fact, {});
    bwd[e].assign(t.fact, {});
    for (int a = 0; a < t.fact; ++a)
      for (int b = 0; b < t.fact; ++b)
        if (columns_compatible(c, e, t.perms[a], t.perms[b])) {
          fwd[e][a].set(b);
          bwd[e][b].set(a);
        }
  }

  auto order = reverse_degeneracy_order(g);
  std::vector<int> pos(g.n);
  for (int i = 0; i < g.n; ++i) pos[order[i]] = i;
  struct Nb {
    int vpos, edge;
    bool forward;
  };
  std::vector<std::vector<Nb>> later(g.n);
  for (int i = 0; i < g.n; ++i) {
    int u = order[i];
    for (int v : g.adj[u])
      if (pos[v] > i) {
        int e = g.edge_index(u, v);
        later[i].push_back({pos[v], e, g.edges[e].first == u});
      }
  }

  std::vector<int> chosen(g.n, -1);
  std::vector<Mask128> buf((size_t)(g.n + 1) * std::max(1, g.n));
  for (int i = 0; i < g.n; ++i) buf[i] = full_mask(t.fact);
  std::function<bool(int)> dfs = [&](int depth) -> bool {
    if (depth == g.n) return true;
    const Mask128* cur = buf.data() + (size_t)depth * g.n;
    Mask128* next = buf.data() + (size_t)(depth + 1) * g.n;
    Mask128 avail = cur[depth];
    for (int p = avail.first(); p != -1; p = avail.next(p)) {
      if (stats) ++stats->nodes;
      std::copy(cur, cur + g.n, next);
      bool ok = true;
      for (const auto& nb : later[depth]) {
        next[nb.vpos] &= nb.forward ? fwd[nb.edge][p] : bwd[nb.edge][p];
        if (next[nb.vpos].empty()) {
          ok = false;
          break;
        }
      }
      if (ok) {
        chosen[depth] = p;
        if (dfs(depth + 1)) return true;
      }
    }
    return false;
  };

  if (!dfs(0)) return std::nullopt;
  Packing pk;
  pk.k = k;
  pk.cols.resize(g.n);
  for (int i = 0; i < g.n; ++i) pk.cols[order[i]] = t.perms[chosen[i]];
  return pk;
}

namespace {

template <typename Visit>
void transversal_dfs(const Cover& c, Visit&& visit) {
  const Graph& g = c.g;
  std::vector<int> cur(g.n);
  // allowed color masks, one row per recursion level
  std::vector<uint32_t> buf((size_t)(g.n + 1) * std::max(1, g.n));
  for (int v = 0; v < g.n; ++v) buf[v] = (1u << c.list_size[v]) - 1;
  std::function<void(int)> dfs = [&](int v) {
    if (v == g.n) {
      visit(cur);
      return;
    }
    const uint32_t* al = buf.data() + (size_t)v * g.n;
    uint32_t* next = buf.data() + (size_t)(v + 1) * g.n;
    uint32_t av = al[v];
    while (av) {
      int i = __builtin_ctz(av);
      av &= av - 1;
      std::copy(al, al + g.n, next);
      bool ok = true;
      for (int w : g.adj[v]) {
        if (w <= v) continue;
        int e = g.edge_index(v, w);
        int j = c.map_from(e, v, i);
        if (j >= 0) {
          next[w] &= ~(1u << j);
          if (next[w] == 0) {
            ok = false;
            break;
          }
        }
      }
      if (ok) {
        cur[v] = i;
        dfs(v + 1);
      }
    }
  };
  dfs(0);
}

}  // namespace

uint64_t count_transversals(const Cover& c) {
  uint64_t count = 0;
  transversal_dfs(c, [&](const Transversal&) { ++count; });
  return count;
}

std::vector<Transversal> enumerate_transversals(const Cover& c, uint64_t budget) {
  uint64_t prod = 1;
  for (int v = 0; v < c.g.n; ++v) {
    prod *= (uint64_t)c.list_size[v];
    if (prod > budget) throw std::runtime_error("enumerate_transversals: budget exceeded");
  }
  std::vector<Transversal> out;
  transversal_dfs(c, [&](const Transversal& t) { out.push_back(t); });
  return out;
}

bool extendable(const Cover& c, const PartialPacking& p, const std::vector<int>& frontier) {
  if (!partial_packing_valid(c, p))
    throw std::invalid_argument("extendable: invalid partial packing");
  PartialPacking work = p;
  std::function<bool(size_t)> dfs = [&](size_t i) -> bool {
    if (i == frontier.size()) return true;
    int v = frontier[i];
    const PermTable& t = perm_table(c.list_size[v]);
    for (int pi = 0; pi < t.fact; ++pi) {
      const Perm& cv = t.perms[pi];
      bool ok = true;
      for (int w : c.g.adj[v]) {
        if (!work.assigned(w)) continue;
        int e = c.g.edge_index(v, w);
        bool fwd = c.g.edges[e].first == v;
        if (!(fwd ? columns_compatible(c, e, cv, work.cols[w])
                  : columns_compatible(c, e, work.cols[w], cv))) {
          ok = false;
          break;
        }
      }
      if (ok) {
        work.cols[v] = cv;
        if (dfs(i + 1)) return true;
        work.cols[v].clear();
      }
    }
    return false;
  };
  return dfs(0);
}

Verdict corr_packing_upper(const Graph& g, int k, uint64_t budget, uint64_t start_index,
                           int jobs) {
  FullCoverEnum en(g, k);
  FullCoverSearcher searcher(g, k);
  uint64_t total = en.size();
  uint64_t end = total;
  if (budget != UINT64_MAX && start_index + budget < total) end = start_index + budget;

  Verdict v;
  std::atomic<uint64_t> fail_idx(UINT64_MAX);
  std::atomic<uint64_t> nodes(0);
  auto note_failure = [&](uint64_t idx) {
    uint64_t cur = fail_idx.load();
    while (idx < cur && !fail_idx.compare_exchange_weak(cur, idx)) {
    }
  };
  const uint64_t chunk = 65536;
  uint64_t checked = 0;
  for (uint64_t base = start_index; base < end && fail_idx.load() == UINT64_MAX;
       base += chunk) {
    uint64_t hi = std::min(end, base + chunk);
#ifdef _OPENMP
#pragma omp parallel num_threads(std::max(1, jobs)) if (jobs > 1)
#endif
    {
      std::vector<int> ep;
      uint64_t local_nodes = 0;
#ifdef _OPENMP
#pragma omp for schedule(dynamic, 256)
#endif
      // a chunk always runs to completion so the reported witness is the
      // smallest failing index regardless of thread scheduling
      for (long long i = (long long)base; i < (long long)hi; ++i) {
        en.assign((uint64_t)i, ep);
        SearchStats st;
        if (!searcher.packs(ep, &st)) note_failure((uint64_t)i);
        local_nodes += st.nodes;
      }
      nodes += local_nodes;
    }
    checked = hi - start_index;
  }
  v.nodes_expanded = nodes.load();
  v.covers_checked = checked;
  if (fail_idx.load() != UINT64_MAX) {
    v.kind = VerdictKind::FAILS;
    v.witness_index = fail_idx.load();
    v.witness = en.cover_at(v.witness_index);
  } else if (end < total) {
    v.kind = VerdictKind::INCONCLUSIVE;
    v.resume_index = end;
  } else {
    v.kind = VerdictKind::HOLDS;
  }
  return v;
}

namespace {

// Canonical k-list assignments: fresh colors are interchangeable, so each
// vertex takes some old colors plus a consecutive block of brand-new ones.
void enumerate_list_assignments(int n, int k, std::vector<std::vector<int>>& lists, int used,
                                const std::function<bool(const std::vector<std::vector<int>>&)>& cb,
                                bool& stop) {
  if (stop) return;
  if ((int)lists.size() == n) {
    if (!cb(lists)) stop = true;
    return;
  }
  std::vector<int> old_pick;
  std::function<void(int, int)> rec = [&](int from, int need_old) {
    if (stop) return;
    if (need_old == 0) {
      int fresh = k - (int)old_pick.size();
      std::vector<int> list = old_pick;
      for (int t = 0; t < fresh; ++t) list.push_back(used + t);
      lists.push_back(list);
      enumerate_list_assignments(n, k, lists, used + fresh, cb, stop);
      lists.pop_back();
      return;
    }
    for (int c = from; c <= used - need_old; ++c) {
      old_pick.push_back(c);
      rec(c + 1, need_old - 1);
      old_pick.pop_back();
    }
  };
  for (int old_count = std::min(k, used); old_count >= 0; --old_count) rec(0, old_count);
}

}  // namespace

Verdict list_packing_upper(const Graph& g, int k, uint64_t budget) {
  Verdict v;
  uint64_t checked = 0;
  bool failed = false;
  bool truncated = false;
  std::vector<std::vector<int>> lists;
  bool stop = false;
  auto cb = [&](const std::vector<std::vector<int>>& ls) -> bool {
    if (checked >= budget) {
      truncated = true;
      return false;
    }
    ++checked;
    std::vector<std::vector<std::string>> labs(ls.size());
    for (size_t i = 0; i < ls.size(); ++i)
      for (int c : ls[i]) labs[i].push_back(std::to_string(c));
    Cover cov = list_cover(g, labs);
    SearchStats st;
    auto pk = find_packing(cov, &st);
    v.nodes_expanded += st.nodes;
    if (!pk) {
      failed = true;
      v.witness = cov;
      v.witness_lists = labs;
      return false;
    }
    return true;
  };
  enumerate_list_assignments(g.n, k, lists, 0, cb, stop);
  v.covers_checked = checked;
  if (failed)
    v.kind = VerdictKind::FAILS;
  else if (truncated) {
    v.kind = VerdictKind::INCONCLUSIVE;
    v.resume_index = checked;
  } else
    v.kind = VerdictKind::HOLDS;
  return v;
}

}  // namespace packlab
