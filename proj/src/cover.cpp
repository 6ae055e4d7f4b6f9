#include "packlab/cover.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace packlab {

int Cover::k_uniform() const {
  if (list_size.empty()) return -1;
  int k = list_size[0];
  for (int s : list_size)
    if (s != k) return -1;
  return k;
}

bool Cover::edge_full(int e) const {
  auto [u, v] = g.edges[e];
  if (list_size[u] != list_size[v]) return false;
  for (int i = 0; i < list_size[u]; ++i)
    if (match[e][i] < 0) return false;
  return true;
}

bool Cover::full() const {
  for (int e = 0; e < g.m(); ++e)
    if (!edge_full(e)) return false;
  return true;
}

int Cover::map_from(int e, int u, int i) const {
  auto [a, b] = g.edges[e];
  if (u == a) return match[e][i];
  // reverse orientation: find the preimage
  for (int j = 0; j < list_size[a]; ++j)
    if (match[e][j] == i) return j;
  return -1;
}

void Cover::validate() const {
  if ((int)list_size.size() != g.n) throw std::runtime_error("cover: list_size size mismatch");
  for (int s : list_size)
    if (s <= 0) throw std::runtime_error("cover: empty list");
  if ((int)match.size() != g.m()) throw std::runtime_error("cover: matchings size mismatch");
  for (int e = 0; e < g.m(); ++e) {
    auto [u, v] = g.edges[e];
    if ((int)match[e].size() != list_size[u]) throw std::runtime_error("cover: matching domain size");
    std::vector<char> used(list_size[v], 0);
    for (int j : match[e]) {
      if (j == -1) continue;
      if (j < 0 || j >= list_size[v]) throw std::runtime_error("cover: matching image out of range");
      if (used[j]) throw std::runtime_error("cover: matching not injective");
      used[j] = 1;
    }
  }
  if (!labels.empty()) {
    if ((int)labels.size() != g.n) throw std::runtime_error("cover: labels size mismatch");
    for (int v = 0; v < g.n; ++v)
      if ((int)labels[v].size() != list_size[v])
        throw std::runtime_error("cover: label list size mismatch");
  }
}

bool transversal_independent(const Cover& c, const Transversal& t) {
  for (int e = 0; e < c.g.m(); ++e) {
    auto [u, v] = c.g.edges[e];
    if (c.match[e][t[u]] == t[v]) return false;
  }
  return true;
}

bool columns_compatible(const Cover& c, int e, const Perm& cu, const Perm& cv) {
  for (size_t i = 0; i < cu.size(); ++i) {
    int img = c.match[e][cu[i]];
    if (img >= 0 && img == cv[i]) return false;
  }
  return true;
}

bool columns_compatible_derangement(const Cover& c, int e, const Perm& cu, const Perm& cv) {
  // M_uv o c(u) must be a derangement of c(v), treating unmatched colors as safe
  for (size_t i = 0; i < cu.size(); ++i) {
    int img = c.match[e][cu[i]];
    if (img == cv[i]) return false;
  }
  return true;
}

bool partial_packing_valid(const Cover& c, const PartialPacking& p) {
  for (int v = 0; v < c.g.n; ++v)
    if (p.assigned(v) &&
        ((int)p.cols[v].size() != c.list_size[v] || !is_permutation_of_k(p.cols[v])))
      return false;
  for (int e = 0; e < c.g.m(); ++e) {
    auto [u, v] = c.g.edges[e];
    if (p.assigned(u) && p.assigned(v) && !columns_compatible(c, e, p.cols[u], p.cols[v]))
      return false;
  }
  return true;
}

Cover list_cover(const Graph& g, const std::vector<std::vector<std::string>>& lists) {
  Cover c;
  c.g = g;
  c.labels = lists;
  c.list_size.resize(g.n);
  for (int v = 0; v < g.n; ++v) {
    if (lists[v].empty()) throw std::invalid_argument("list_cover: empty list");
    c.list_size[v] = (int)lists[v].size();
  }
  c.match.resize(g.m());
  for (int e = 0; e < g.m(); ++e) {
    auto [u, v] = g.edges[e];
    c.match[e].assign(c.list_size[u], -1);
    for (int i = 0; i < c.list_size[u]; ++i)
      for (int j = 0; j < c.list_size[v]; ++j)
        if (lists[u][i] == lists[v][j]) c.match[e][i] = j;
  }
  return c;
}

Cover full_identity_cover(const Graph& g, int k) {
  if (k < 1) throw std::invalid_argument("full_identity_cover: k >= 1 required");
  Cover c;
  c.g = g;
  c.list_size.assign(g.n, k);
  Perm id = identity_perm(k);
  c.match.assign(g.m(), id);
  return c;
}

UntwistResult untwist(const Cover& c, const std::vector<int>& forest_edges) {
  // check forest: union-find
  std::vector<int> uf(c.g.n);
  std::iota(uf.begin(), uf.end(), 0);
  auto find = [&](int x) {
    while (uf[x] != x) x = uf[x] = uf[uf[x]];
    return x;
  };
  std::vector<std::vector<std::pair<int, int>>> fadj(c.g.n);  // (neighbor, edge)
  for (int e : forest_edges) {
    if (!c.edge_full(e)) throw std::invalid_argument("untwist: non-full forest edge");
    auto [u, v] = c.g.edges[e];
    int a = find(u), b = find(v);
    if (a == b) throw std::invalid_argument("untwist: forest contains a cycle");
    uf[a] = b;
    fadj[u].push_back({v, e});
    fadj[v].push_back({u, e});
  }

  UntwistResult r;
  r.relabel.resize(c.g.n);
  std::vector<char> done(c.g.n, 0);
  for (int root = 0; root < c.g.n; ++root) {
    if (done[root]) continue;
    r.relabel[root] = identity_perm(c.list_size[root]);
    done[root] = 1;
    std::vector<int> stack{root};
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (auto [v, e] : fadj[u]) {
        if (done[v]) continue;
        // choose pi_v so that pi_v o M o pi_u^{-1} = id along the tree edge
        Perm m(c.list_size[u]);
        auto [a, b] = c.g.edges[e];
        for (int i = 0; i < c.list_size[u]; ++i) m[i] = c.map_from(e, u, i);
        (void)a;
        (void)b;
        r.relabel[v] = compose(r.relabel[u], inverse(m));
        done[v] = 1;
        stack.push_back(v);
      }
    }
  }

  Cover out = c;
  out.labels.clear();
  for (int e = 0; e < c.g.m(); ++e) {
    auto [u, v] = c.g.edges[e];
    // M' = pi_v o M o pi_u^{-1}
    std::vector<int> nm(c.list_size[u], -1);
    for (int i = 0; i < c.list_size[u]; ++i) {
      int j = c.match[e][i];
      if (j >= 0) nm[r.relabel[u][i]] = r.relabel[v][j];
    }
    out.match[e] = nm;
  }
  r.cover = std::move(out);
  return r;
}

Cover restrict_cover(const Cover& c, const Graph& sub, const std::vector<int>& embed) {
  if ((int)embed.size() != sub.n) throw std::invalid_argument("restrict: embed size mismatch");
  Cover out;
  out.g = sub;
  out.list_size.resize(sub.n);
  for (int v = 0; v < sub.n; ++v) out.list_size[v] = c.list_size[embed[v]];
  if (!c.labels.empty()) {
    out.labels.resize(sub.n);
    for (int v = 0; v < sub.n; ++v) out.labels[v] = c.labels[embed[v]];
  }
  out.match.resize(sub.m());
  for (int e = 0; e < sub.m(); ++e) {
    auto [u, v] = sub.edges[e];
    int be = c.g.edge_index(embed[u], embed[v]);
    if (be < 0) throw std::invalid_argument("restrict: sub edge not in base graph");
    out.match[e].resize(out.list_size[u]);
    for (int i = 0; i < out.list_size[u]; ++i) out.match[e][i] = c.map_from(be, embed[u], i);
  }
  return out;
}

Cover restrict_cover(const Cover& c, const Graph& sub) {
  std::vector<int> id(sub.n);
  std::iota(id.begin(), id.end(), 0);
  return restrict_cover(c, sub, id);
}

Cover cover_from_perm_indices(const Graph& g, int k, const std::vector<int>& perm_idx) {
  const PermTable& t = perm_table(k);
  Cover c;
  c.g = g;
  c.list_size.assign(g.n, k);
  c.match.resize(g.m());
  for (int e = 0; e < g.m(); ++e) c.match[e] = t.perms[perm_idx[e]];
  return c;
}

}  // namespace packlab
