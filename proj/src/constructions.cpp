#include "packlab/constructions.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

#include "packlab/catalog.hpp"
#include "packlab/cover_enum.hpp"
#include "packlab/packing.hpp"
#include "packlab/planarity.hpp"
#include "packlab/simplex.hpp"

namespace packlab {

bool ConstructedInstance::all_hold() const {
  for (const auto& c : claims)
    if (!c.holds) return false;
  return true;
}

namespace {

struct GraphBuilder {
  std::vector<std::pair<int, int>> edges;
  std::vector<std::vector<std::string>> lists;

  int add_vertex(std::vector<std::string> list) {
    lists.push_back(std::move(list));
    return (int)lists.size() - 1;
  }
  void add_edge(int u, int v) { edges.push_back({u, v}); }
  // path with `len` edges; internal vertices carry the given list
  void add_path(int u, int v, int len, const std::vector<std::string>& list) {
    int prev = u;
    for (int i = 1; i < len; ++i) {
      int w = add_vertex(list);
      add_edge(prev, w);
      prev = w;
    }
    add_edge(prev, v);
  }
};

// Packing search specialized to uniform covers: a packing is one bijection
// colorings -> list positions per vertex, constrained edge-wise.  Arc
// consistency plus minimum-remaining-values branching handles the long
// induced paths of the girth construction, which defeat a fixed search order.
struct PackingCsp {
  int n, fact;
  struct Rel {
    int u, v;
    std::vector<uint64_t> allowed;  // allowed[a] = mask of v-perms compatible with u-perm a
  };
  std::vector<Rel> rels;
  std::vector<uint64_t> domain;
  std::vector<char> removed;
  bool contradiction = false;

  explicit PackingCsp(const Cover& c) : n(c.g.n) {
    int k = c.k_uniform();
    if (k < 0) throw std::invalid_argument("packing csp: non-uniform cover");
    const PermTable& t = perm_table(k);
    fact = t.fact;
    if (fact > 64) throw std::invalid_argument("packing csp: list size too large");
    domain.assign(n, fact == 64 ? ~0ull : (1ull << fact) - 1);
    removed.assign(n, 0);
    for (int e = 0; e < c.g.m(); ++e) {
      Rel r;
      r.u = c.g.edges[e].first;
      r.v = c.g.edges[e].second;
      r.allowed.assign(fact, 0);
      for (int a = 0; a < fact; ++a)
        for (int b = 0; b < fact; ++b) {
          // coloring i sits at u-position perms[a][i]; the matched v-position
          // must differ from perms[b][i]
          bool ok = true;
          for (int i = 0; i < k && ok; ++i)
            if (c.match[e][t.perms[a][i]] == t.perms[b][i]) ok = false;
          if (ok) r.allowed[a] |= 1ull << b;
        }
      add_rel(std::move(r));
    }
  }

  std::vector<uint64_t> transpose(const std::vector<uint64_t>& rel) const {
    std::vector<uint64_t> out(fact, 0);
    for (int a = 0; a < fact; ++a)
      for (uint64_t m = rel[a]; m; m &= m - 1) out[__builtin_ctzll(m)] |= 1ull << a;
    return out;
  }

  // merge parallel constraints so vertex degrees reflect distinct neighbors
  void add_rel(Rel r) {
    if (r.u == r.v) throw std::logic_error("packing csp: self-loop constraint");
    for (auto& q : rels) {
      if (q.u == r.u && q.v == r.v) {
        for (int a = 0; a < fact; ++a) q.allowed[a] &= r.allowed[a];
        return;
      }
      if (q.u == r.v && q.v == r.u) {
        auto tr = transpose(r.allowed);
        for (int a = 0; a < fact; ++a) q.allowed[a] &= tr[a];
        return;
      }
    }
    rels.push_back(std::move(r));
  }

  // exact series reduction: a vertex touching at most two constraints can be
  // eliminated, composing its two relations through its domain
  void eliminate_chains() {
    bool progress = true;
    while (progress && !contradiction) {
      progress = false;
      for (int w = 0; w < n && !contradiction; ++w) {
        if (removed[w]) continue;
        std::vector<int> inc;
        for (int i = 0; i < (int)rels.size(); ++i)
          if (rels[i].u == w || rels[i].v == w) inc.push_back(i);
        if (inc.size() > 2) continue;
        progress = true;
        removed[w] = 1;
        if (inc.empty()) {
          if (!domain[w]) contradiction = true;
          continue;
        }
        // orient both relations away from w
        auto oriented = [&](int i) {
          return rels[i].u == w ? rels[i].allowed : transpose(rels[i].allowed);
        };
        if (inc.size() == 1) {
          auto rel = oriented(inc[0]);
          int u = rels[inc[0]].u == w ? rels[inc[0]].v : rels[inc[0]].u;
          uint64_t du = 0;
          for (uint64_t m = domain[w]; m; m &= m - 1) du |= rel[__builtin_ctzll(m)];
          domain[u] &= du;
          if (!domain[u]) contradiction = true;
          rels.erase(rels.begin() + inc[0]);
          continue;
        }
        auto rel0 = transpose(oriented(inc[0]));  // u-perm -> allowed w-perms
        auto rel1 = oriented(inc[1]);             // w-perm -> allowed v-perms
        int u = rels[inc[0]].u == w ? rels[inc[0]].v : rels[inc[0]].u;
        int v = rels[inc[1]].u == w ? rels[inc[1]].v : rels[inc[1]].u;
        Rel comp;
        comp.u = u;
        comp.v = v;
        comp.allowed.assign(fact, 0);
        for (int a = 0; a < fact; ++a)
          for (uint64_t m = rel0[a] & domain[w]; m; m &= m - 1)
            comp.allowed[a] |= rel1[__builtin_ctzll(m)];
        rels.erase(rels.begin() + inc[1]);
        rels.erase(rels.begin() + inc[0]);
        if (u == v) {
          // both endpoints coincide: the composition is a unary filter
          uint64_t du = 0;
          for (uint64_t m = domain[u]; m; m &= m - 1) {
            int a = __builtin_ctzll(m);
            if (comp.allowed[a] >> a & 1) du |= 1ull << a;
          }
          domain[u] = du;
          if (!du) contradiction = true;
        } else {
          add_rel(std::move(comp));
        }
      }
    }
  }

  bool revise_all() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (auto& r : rels) {
        uint64_t du = 0, dv = 0;
        for (uint64_t m = domain[r.u]; m; m &= m - 1) {
          int a = __builtin_ctzll(m);
          if (r.allowed[a] & domain[r.v]) {
            du |= 1ull << a;
            dv |= r.allowed[a];
          }
        }
        dv &= domain[r.v];
        if (du != domain[r.u] || dv != domain[r.v]) changed = true;
        domain[r.u] = du;
        domain[r.v] = dv;
        if (!du || !dv) return false;
      }
    }
    return true;
  }

  bool dfs() {
    if (!revise_all()) return false;
    int best = -1, best_size = fact + 1;
    for (int v = 0; v < n; ++v) {
      if (removed[v]) continue;
      int s = __builtin_popcountll(domain[v]);
      if (s > 1 && s < best_size) {
        best = v;
        best_size = s;
      }
    }
    if (best < 0) return true;
    std::vector<uint64_t> saved = domain;
    for (uint64_t m = saved[best]; m; m &= m - 1) {
      domain = saved;
      domain[best] = m & (~m + 1);
      if (dfs()) return true;
    }
    return false;
  }

  bool solve() {
    eliminate_chains();
    if (contradiction) return false;
    return dfs();
  }
};

bool same_list_classes_connected(const Graph& g,
                                 const std::vector<std::vector<std::string>>& lists) {
  std::map<std::vector<std::string>, std::vector<int>> classes;
  for (int v = 0; v < g.n; ++v) classes[lists[v]].push_back(v);
  for (auto& [list, verts] : classes) {
    std::set<int> inside(verts.begin(), verts.end());
    std::vector<int> stack = {verts[0]};
    std::set<int> seen = {verts[0]};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : g.adj[v])
        if (inside.count(w) && !seen.count(w)) {
          seen.insert(w);
          stack.push_back(w);
        }
    }
    if (seen.size() != verts.size()) return false;
  }
  return true;
}

}  // namespace

ConstructedInstance girth_construction(int g) {
  if (g < 3) throw std::invalid_argument("girth_construction: g >= 3 required");
  int n = g % 2 ? g : g + 1;

  const std::vector<std::string> l123 = {"1", "2", "3"};
  const std::vector<std::string> l124 = {"1", "2", "4"};
  const std::vector<std::string> l134 = {"1", "3", "4"};
  auto cycle_list = [&](int which, int i) -> const std::vector<std::string>& {
    // which: 0 = A, 1 = B, 2 = C; i is 1-based along the cycle
    static const std::vector<std::string>* odd[3];
    static const std::vector<std::string>* even[3];
    odd[0] = &l123; odd[1] = &l124; odd[2] = &l134;
    even[0] = &l124; even[1] = &l134; even[2] = &l123;
    return i % 2 ? *odd[which] : *even[which];
  };

  GraphBuilder b;
  std::vector<std::vector<int>> cyc(3, std::vector<int>(n + 1));
  for (int w = 0; w < 3; ++w) {
    for (int i = 1; i <= n; ++i) cyc[w][i] = b.add_vertex(cycle_list(w, i));
    for (int i = 1; i <= n; ++i) b.add_edge(cyc[w][i], cyc[w][i % n + 1]);
    // chords joined by paths; endpoints i and i+2 share a parity and a list
    for (int i = 1; i <= n - 2; ++i)
      b.add_path(cyc[w][i], cyc[w][i + 2], g, cycle_list(w, i));
  }
  // the three cross paths; each joins two vertices with equal lists
  b.add_path(cyc[0][1], cyc[2][2], g, cycle_list(0, 1));
  b.add_path(cyc[1][1], cyc[0][2], g, cycle_list(1, 1));
  b.add_path(cyc[2][1], cyc[1][2], g, cycle_list(2, 1));

  ConstructedInstance inst;
  inst.name = "girth";
  inst.graph = Graph((int)b.lists.size(), b.edges);
  inst.cover = list_cover(inst.graph, b.lists);

  inst.claims.push_back({"planar", is_planar(inst.graph).planar, ""});
  int gir = girth(inst.graph);
  inst.claims.push_back({"girth_at_least_g", gir >= g, "girth " + std::to_string(gir)});
  inst.claims.push_back(
      {"same_list_classes_connected", same_list_classes_connected(inst.graph, b.lists), ""});
  bool packs = PackingCsp(inst.cover).solve();
  inst.claims.push_back({"no_3_list_packing", !packs, ""});
  return inst;
}

namespace {

Cover k5_minus_cover() {
  Graph g = catalog("K5-");
  Cover c = full_identity_cover(g, 4);
  // the missing edge is 0-1; edges at vertex 0 and the edge 1-2 carry the
  // identity, the rest the 3-cycle sigma = (1 2 3) or its inverse as below
  const std::vector<int> sigma = {0, 2, 3, 1};
  const std::vector<int> sigma_inv = {0, 3, 1, 2};
  c.match[g.edge_index(1, 3)] = sigma;
  c.match[g.edge_index(2, 4)] = sigma;
  c.match[g.edge_index(1, 4)] = sigma_inv;
  c.match[g.edge_index(2, 3)] = sigma_inv;
  c.match[g.edge_index(3, 4)] = sigma_inv;
  c.validate();
  return c;
}

}  // namespace

ConstructedInstance k5_minus_bad_cover() {
  ConstructedInstance inst;
  inst.name = "k5_minus";
  inst.graph = catalog("K5-");
  inst.cover = k5_minus_cover();
  uint64_t trans = count_transversals(inst.cover);
  inst.claims.push_back({"54_transversals", trans == 54, std::to_string(trans)});
  inst.claims.push_back({"no_packing", !find_packing(inst.cover).has_value(), ""});
  return inst;
}

bool k5_minus_5fold_sample_packs(int samples, uint32_t seed) {
  Graph g = catalog("K5-");
  FullCoverSearcher searcher(g, 5);
  const PermTable& t = perm_table(5);
  std::mt19937 rng(seed);
  std::vector<int> ep(g.m());
  for (int s = 0; s < samples; ++s) {
    for (int& x : ep) x = (int)(rng() % t.fact);
    if (!searcher.packs(ep)) return false;
  }
  return true;
}

UniquenessReport k5_minus_uniqueness(uint64_t budget) {
  Graph g = catalog("K5-");
  FullCoverEnum en(g, 4);
  FullCoverSearcher searcher(g, 4);
  UniquenessReport rep;
  std::set<std::vector<int>> bad_keys;
  std::vector<int> ep(g.m());
  uint64_t total = en.size();
  for (uint64_t idx = 0; idx < total && idx < budget; ++idx) {
    en.assign(idx, ep);
    if (searcher.packs(ep)) continue;
    ++rep.bad_covers;
    bad_keys.insert(cover_canonical_key(en, ep, true));
  }
  rep.covers_checked = std::min(total, budget);
  rep.bad_classes = bad_keys.size();

  // key of the construction itself: untwist the enumeration forest, then read
  // off the free-edge permutations
  Cover c = untwist(k5_minus_cover(), en.forest_edges).cover;
  const PermTable& t = perm_table(4);
  std::vector<int> cep(g.m(), t.index_of(identity_perm(4)));
  for (int e = 0; e < g.m(); ++e) cep[e] = t.index_of(c.match[e]);
  rep.matches_construction =
      bad_keys.size() == 1 && *bad_keys.begin() == cover_canonical_key(en, cep, true);
  return rep;
}

ConstructedInstance outerplanar_2tree_cover() {
  // vertices: x1, x2, x3 the triangle; x12, x13, x23 each joined to its pair
  Graph g(6, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {0, 4}, {2, 4}, {1, 5}, {2, 5}});
  Cover c;
  c.g = g;
  c.list_size = {3, 3, 3, 2, 2, 2};
  c.match.assign(g.m(), {});
  c.match[g.edge_index(0, 1)] = {0, 1, 2};
  c.match[g.edge_index(0, 2)] = {0, 2, 1};
  c.match[g.edge_index(1, 2)] = {1, 0, 2};
  c.match[g.edge_index(0, 3)] = {-1, 0, 1};
  c.match[g.edge_index(1, 3)] = {0, -1, 1};
  c.match[g.edge_index(0, 4)] = {0, 1, -1};
  c.match[g.edge_index(2, 4)] = {0, 1, -1};
  c.match[g.edge_index(1, 5)] = {-1, 0, 1};
  c.match[g.edge_index(2, 5)] = {-1, 0, 1};
  c.validate();

  ConstructedInstance inst;
  inst.name = "outerplanar_2tree";
  inst.graph = g;
  inst.cover = c;

  auto lp = has_fractional_packing(c);
  inst.claims.push_back({"no_fractional_packing", !lp.feasible,
                         std::to_string(lp.transversal_count) + " transversals"});

  const Rational b(2, 7), w(1, 7);
  FractionalClique clique;
  clique.weights = {{b, b, b}, {w, w, b}, {b, b, b}, {w, w}, {w, w}, {w, w}};
  auto [valid, total] = verify_fractional_clique(c, clique);
  inst.claims.push_back(
      {"clique_total_22_7", valid && total == Rational(22, 7) && total > 3, ""});

  // independent sets of the cover graph: brute force over all color subsets
  std::vector<int> off = {0, 3, 6, 9, 11, 13, 15};
  std::vector<uint32_t> adj(15, 0);
  for (int v = 0; v < 6; ++v)
    for (int i = 0; i < c.list_size[v]; ++i)
      for (int j = 0; j < c.list_size[v]; ++j)
        if (i != j) adj[off[v] + i] |= 1u << (off[v] + j);
  for (int e = 0; e < g.m(); ++e) {
    auto [u, v] = g.edges[e];
    for (int i = 0; i < c.list_size[u]; ++i)
      if (c.match[e][i] >= 0) {
        adj[off[u] + i] |= 1u << (off[v] + c.match[e][i]);
        adj[off[v] + c.match[e][i]] |= 1u << (off[u] + i);
      }
  }
  uint32_t black = 0;
  for (int x : {0, 1, 2, 5, 6, 7, 8}) black |= 1u << x;
  bool sets_ok = true;
  for (uint32_t s = 0; s < (1u << 15); ++s) {
    bool indep = true;
    for (uint32_t m = s; m && indep; m &= m - 1)
      if (adj[__builtin_ctz(m)] & s) indep = false;
    if (!indep) continue;
    if (__builtin_popcount(s) > 6 || __builtin_popcount(s & black) > 3) sets_ok = false;
  }
  inst.claims.push_back({"independent_sets_small", sets_ok, ""});
  return inst;
}

namespace {

Cover pendant_example_cover(const std::vector<int>& pendants_of_u,
                            const std::vector<int>& pendants_of_v) {
  // vertex 0 = u, 1 = v; pendant vertices follow.  A pendant colored j blocks
  // color col[j] at its neighbor; col is the identity or the 4-cycle-free
  // permutation (1,3,4,2) in 1-based reading.
  const std::vector<int> id = {0, 1, 2, 3};
  const std::vector<int> tw = {0, 2, 3, 1};  // pendant color j <-> neighbor color tw[j]
  std::vector<std::pair<int, int>> edges = {{0, 1}};
  std::vector<std::vector<int>> pendant_match;
  int next = 2;
  auto add = [&](int host, int kind) {
    edges.push_back({host, next++});
    const std::vector<int>& col = kind ? tw : id;
    // stored from the host (the smaller endpoint): host color col[j] <-> j
    std::vector<int> m(4, -1);
    for (int j = 0; j < 4; ++j) m[col[j]] = j;
    pendant_match.push_back(m);
  };
  for (int kind : pendants_of_u) add(0, kind);
  for (int kind : pendants_of_v) add(1, kind);
  Cover c;
  c.g = Graph(next, edges);
  c.list_size.assign(next, 4);
  c.match.push_back(id);
  for (auto& m : pendant_match) c.match.push_back(std::move(m));
  c.validate();
  return c;
}

// is the 1/4-1/4-1/4-1/4 distribution on the given pendant colorings
// extendable to a fractional packing of u and v?
bool pendant_extension_feasible(const Cover& c, const std::vector<std::vector<int>>& patterns) {
  auto trans = enumerate_transversals(c, 1000000);
  int np = (int)patterns.size();
  std::vector<std::vector<Rational>> A;
  std::vector<Rational> bvec;
  std::vector<int> col_pattern;
  std::vector<const Transversal*> cols;
  for (const auto& t : trans) {
    for (int p = 0; p < np; ++p) {
      bool match = true;
      for (size_t i = 0; i < patterns[p].size(); ++i)
        if (t[2 + i] != patterns[p][i]) match = false;
      if (match) {
        col_pattern.push_back(p);
        cols.push_back(&t);
        break;
      }
    }
  }
  int nc = (int)cols.size();
  // rows: one per pattern (total 1/4), then u and v marginals (1/4 each color)
  for (int p = 0; p < np; ++p) {
    std::vector<Rational> row(nc, 0);
    for (int j = 0; j < nc; ++j)
      if (col_pattern[j] == p) row[j] = 1;
    A.push_back(std::move(row));
    bvec.push_back(Rational(1, np));
  }
  for (int vtx = 0; vtx < 2; ++vtx)
    for (int color = 0; color < 4; ++color) {
      std::vector<Rational> row(nc, 0);
      for (int j = 0; j < nc; ++j)
        if ((*cols[j])[vtx] == color) row[j] = 1;
      A.push_back(std::move(row));
      bvec.push_back(Rational(1, 4));
    }
  return solve_equality_feasibility(A, bvec).feasible;
}

}  // namespace

ConstructedInstance nonextendable_fractional_example() {
  Cover c = pendant_example_cover({0, 1}, {0, 1});
  // outside colorings, 1-based in the source drawing, 0-based here; order is
  // (u-identity, u-twisted, v-identity, v-twisted)
  std::vector<std::vector<int>> patterns = {
      {0, 0, 0, 0}, {1, 2, 1, 2}, {2, 3, 2, 3}, {3, 1, 3, 1}};

  ConstructedInstance inst;
  inst.name = "nonextendable";
  inst.graph = c.g;
  inst.cover = c;

  // each pendant sees each of its colors exactly once across the patterns
  bool uniform = true;
  for (int pe = 0; pe < 4; ++pe) {
    std::vector<int> seen;
    for (auto& p : patterns) seen.push_back(p[pe]);
    std::sort(seen.begin(), seen.end());
    if (seen != std::vector<int>{0, 1, 2, 3}) uniform = false;
  }
  inst.claims.push_back({"outside_marginals_uniform", uniform, ""});

  inst.claims.push_back(
      {"extension_infeasible", !pendant_extension_feasible(c, patterns), ""});

  // dropping any single pendant makes the remaining distribution extendable
  bool all_droppable = true;
  for (int drop = 0; drop < 4; ++drop) {
    std::vector<int> pu, pv;
    if (drop != 0) pu.push_back(0);
    if (drop != 1) pu.push_back(1);
    if (drop != 2) pv.push_back(0);
    if (drop != 3) pv.push_back(1);
    Cover sub = pendant_example_cover(pu, pv);
    std::vector<std::vector<int>> sub_patterns;
    for (auto& p : patterns) {
      std::vector<int> q;
      for (int i = 0; i < 4; ++i)
        if (i != drop) q.push_back(p[i]);
      sub_patterns.push_back(q);
    }
    if (!pendant_extension_feasible(sub, sub_patterns)) all_droppable = false;
  }
  inst.claims.push_back({"extendable_after_dropping_one", all_droppable, ""});
  return inst;
}

ConstructedInstance k23_plus_edge() {
  Graph g = catalog("K23_plus_edge");
  ConstructedInstance inst;
  inst.name = "k23_plus_edge";
  inst.graph = g;

  auto m = mad_exhaustive(g);
  inst.claims.push_back({"mad_14_5", m.mad == Rational(14, 5), ""});

  // induced subtrees whose vertices each have exactly one neighbor outside
  bool found_subtree = false;
  for (uint32_t s = 1; s < (1u << g.n); ++s) {
    std::vector<int> verts;
    for (int v = 0; v < g.n; ++v)
      if (s >> v & 1) verts.push_back(v);
    Graph sub = induced_subgraph(g, verts);
    if (sub.m() != sub.n - 1) continue;  // tree edge count
    // connectivity
    std::vector<char> seen(sub.n, 0);
    std::vector<int> stack = {0};
    seen[0] = 1;
    int cnt = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : sub.adj[v])
        if (!seen[w]) {
          seen[w] = 1;
          ++cnt;
          stack.push_back(w);
        }
    }
    if (cnt != sub.n) continue;
    bool ok = true;
    for (int v : verts) {
      int outside = 0;
      for (int w : g.adj[v])
        if (!(s >> w & 1)) ++outside;
      if (outside != 1) ok = false;
    }
    if (ok) found_subtree = true;
  }
  inst.claims.push_back({"no_qualifying_induced_subtree", !found_subtree, ""});

  // deterministic scan for a 3-fold cover with no fractional packing
  FullCoverEnum en(g, 3);
  bool witness = false;
  std::vector<int> ep(g.m());
  for (uint64_t idx = 0; idx < en.size(); ++idx) {
    Cover c = en.cover_at(idx);
    if (!has_fractional_packing(c).feasible) {
      inst.cover = c;
      witness = true;
      break;
    }
  }
  inst.claims.push_back({"three_fold_cover_without_fractional_packing", witness, ""});
  return inst;
}

ConstructedInstance construct_by_name(const std::string& name, int g) {
  if (name == "girth") return girth_construction(g);
  if (name == "k5_minus") return k5_minus_bad_cover();
  if (name == "outerplanar_2tree") return outerplanar_2tree_cover();
  if (name == "nonextendable") return nonextendable_fractional_example();
  if (name == "k23_plus_edge") return k23_plus_edge();
  throw std::invalid_argument("unknown construction: " + name);
}

}  // namespace packlab
