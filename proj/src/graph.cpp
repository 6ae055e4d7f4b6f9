#include "packlab/graph.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

namespace packlab {

Graph::Graph(int n_, std::vector<std::pair<int, int>> es) : n(n_) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  adj.assign(n, {});
  std::set<std::pair<int, int>> seen;
  for (auto [u, v] : es) {
    if (u == v) throw std::invalid_argument("self-loop");
    if (u > v) std::swap(u, v);
    if (u < 0 || v >= n) throw std::invalid_argument("edge endpoint out of range");
    if (!seen.insert({u, v}).second) throw std::invalid_argument("parallel edge");
    eidx_[{u, v}] = (int)edges.size();
    edges.push_back({u, v});
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());
}

bool Graph::has_edge(int u, int v) const { return edge_index(u, v) >= 0; }

int Graph::edge_index(int u, int v) const {
  if (u > v) std::swap(u, v);
  auto it = eidx_.find({u, v});
  return it == eidx_.end() ? -1 : it->second;
}

int girth(const Graph& g) {
  // BFS from every vertex; a non-tree edge at depths d(x), d(y) closes a cycle
  // of length <= d(x)+d(y)+1, and the true girth is realized by some start.
  int best = -1;
  std::vector<int> dist(g.n), par(g.n);
  for (int s = 0; s < g.n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(par.begin(), par.end(), -1);
    std::queue<int> q;
    dist[s] = 0;
    q.push(s);
    while (!q.empty()) {
      int x = q.front();
      q.pop();
      for (int y : g.adj[x]) {
        if (dist[y] == -1) {
          dist[y] = dist[x] + 1;
          par[y] = x;
          q.push(y);
        } else if (y != par[x] && dist[y] >= dist[x]) {
          int len = dist[x] + dist[y] + 1;
          if (best == -1 || len < best) best = len;
        }
      }
    }
  }
  return best == -1 ? GIRTH_INFINITY : best;
}

DegeneracyResult degeneracy(const Graph& g) {
  DegeneracyResult r;
  std::vector<int> deg(g.n);
  std::vector<char> removed(g.n, 0);
  for (int v = 0; v < g.n; ++v) deg[v] = g.degree(v);
  for (int step = 0; step < g.n; ++step) {
    int best = -1;
    for (int v = 0; v < g.n; ++v)
      if (!removed[v] && (best == -1 || deg[v] < deg[best])) best = v;
    r.degeneracy = std::max(r.degeneracy, deg[best]);
    r.order.push_back(best);
    removed[best] = 1;
    for (int u : g.adj[best])
      if (!removed[u]) --deg[u];
  }
  return r;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
  std::vector<int> pos(g.n, -1);
  for (size_t i = 0; i < vertices.size(); ++i) pos[vertices[i]] = (int)i;
  std::vector<std::pair<int, int>> es;
  for (auto [u, v] : g.edges)
    if (pos[u] >= 0 && pos[v] >= 0) es.push_back({pos[u], pos[v]});
  return Graph((int)vertices.size(), es);
}

namespace {

// Dinic max-flow on a small integer-capacity network.
struct Flow {
  struct E {
    int to;
    long long cap;
    int rev;
  };
  std::vector<std::vector<E>> g;
  std::vector<int> level, it;
  explicit Flow(int n) : g(n), level(n), it(n) {}
  void add(int u, int v, long long c) {
    g[u].push_back({v, c, (int)g[v].size()});
    g[v].push_back({u, 0, (int)g[u].size() - 1});
  }
  bool bfs(int s, int t) {
    std::fill(level.begin(), level.end(), -1);
    std::deque<int> q{s};
    level[s] = 0;
    while (!q.empty()) {
      int x = q.front();
      q.pop_front();
      for (auto& e : g[x])
        if (e.cap > 0 && level[e.to] == -1) {
          level[e.to] = level[x] + 1;
          q.push_back(e.to);
        }
    }
    return level[t] >= 0;
  }
  long long dfs(int x, int t, long long f) {
    if (x == t) return f;
    for (int& i = it[x]; i < (int)g[x].size(); ++i) {
      auto& e = g[x][i];
      if (e.cap > 0 && level[e.to] == level[x] + 1) {
        long long d = dfs(e.to, t, std::min(f, e.cap));
        if (d > 0) {
          e.cap -= d;
          g[e.to][e.rev].cap += d;
          return d;
        }
      }
    }
    return 0;
  }
  long long max_flow(int s, int t) {
    long long fl = 0;
    while (bfs(s, t)) {
      std::fill(it.begin(), it.end(), 0);
      long long f;
      while ((f = dfs(s, t, (long long)4e18)) > 0) fl += f;
    }
    return fl;
  }
  std::vector<char> min_cut_source_side(int s) {
    std::vector<char> side(g.size(), 0);
    std::deque<int> q{s};
    side[s] = 1;
    while (!q.empty()) {
      int x = q.front();
      q.pop_front();
      for (auto& e : g[x])
        if (e.cap > 0 && !side[e.to]) {
          side[e.to] = 1;
          q.push_back(e.to);
        }
    }
    return side;
  }
};

// Is there a subgraph S with q|E(S)| - p|S| > 0?  If so return one.
std::optional<std::vector<int>> denser_than(const Graph& g, long long p, long long q) {
  int m = g.m();
  int src = g.n + m, snk = g.n + m + 1;
  Flow f(g.n + m + 2);
  const long long INF = (long long)1e15;
  for (int e = 0; e < m; ++e) {
    f.add(src, g.n + e, q);
    f.add(g.n + e, g.edges[e].first, INF);
    f.add(g.n + e, g.edges[e].second, INF);
  }
  for (int v = 0; v < g.n; ++v) f.add(v, snk, p);
  long long fl = f.max_flow(src, snk);
  // min cut = q*m - max_S (q|E(S)| - p|S|)
  if (fl >= q * (long long)m) return std::nullopt;
  auto side = f.min_cut_source_side(src);
  std::vector<int> S;
  for (int v = 0; v < g.n; ++v)
    if (side[v]) S.push_back(v);
  return S;
}

Rational density2(const Graph& g, const std::vector<int>& S) {
  std::vector<char> in(g.n, 0);
  for (int v : S) in[v] = 1;
  long long e = 0;
  for (auto [u, v] : g.edges)
    if (in[u] && in[v]) ++e;
  return Rational(2 * e, (long long)S.size());
}

}  // namespace

MadResult mad(const Graph& g) {
  if (g.n == 0) throw std::invalid_argument("mad of empty graph");
  std::vector<int> best(g.n);
  std::iota(best.begin(), best.end(), 0);
  // iterate: while a strictly denser subgraph exists, adopt it
  for (;;) {
    Rational d = density2(g, best) / 2;  // |E|/|S|
    long long p = (long long)boost::multiprecision::numerator(d).convert_to<long long>();
    long long q = (long long)boost::multiprecision::denominator(d).convert_to<long long>();
    auto S = denser_than(g, p, q);
    if (!S) break;
    best = *S;
  }
  return {density2(g, best), best};
}

MadResult mad_exhaustive(const Graph& g) {
  if (g.n == 0) throw std::invalid_argument("mad of empty graph");
  if (g.n > 20) throw std::invalid_argument("mad_exhaustive: n too large");
  Rational bestd(-1);
  std::vector<int> best;
  for (uint32_t mask = 1; mask < (1u << g.n); ++mask) {
    long long e = 0;
    for (auto [u, v] : g.edges)
      if ((mask >> u & 1) && (mask >> v & 1)) ++e;
    Rational d(2 * e, (long long)__builtin_popcount(mask));
    if (d > bestd) {
      bestd = d;
      best.clear();
      for (int v = 0; v < g.n; ++v)
        if (mask >> v & 1) best.push_back(v);
    }
  }
  return {bestd, best};
}

Graph read_graph(std::istream& in) {
  int n, m;
  if (!(in >> n >> m)) throw std::runtime_error("graph format: expected \"n m\"");
  std::vector<std::pair<int, int>> es(m);
  for (auto& [u, v] : es)
    if (!(in >> u >> v)) throw std::runtime_error("graph format: expected edge line");
  return Graph(n, es);
}

void write_graph(std::ostream& out, const Graph& g) {
  out << g.n << ' ' << g.m() << '\n';
  for (auto [u, v] : g.edges) out << u << ' ' << v << '\n';
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_graph(in);
}

Rational parse_rational(const std::string& s) {
  auto pos = s.find('/');
  using boost::multiprecision::cpp_int;
  if (pos == std::string::npos) return Rational(cpp_int(s));
  return Rational(cpp_int(s.substr(0, pos)), cpp_int(s.substr(pos + 1)));
}

}  // namespace packlab
