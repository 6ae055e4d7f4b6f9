#include "packlab/catalog.hpp"

#include <cstdio>
#include <filesystem>
#include <stdexcept>

namespace packlab {

namespace {

using EV = std::vector<std::pair<int, int>>;

Graph complete(int n) {
  EV es;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) es.push_back({u, v});
  return Graph(n, es);
}

Graph complete_minus(int n) {
  if (n < 2) throw std::invalid_argument("K_n- needs n >= 2");
  EV es;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!(u == 0 && v == 1)) es.push_back({u, v});
  return Graph(n, es);
}

Graph complete_bipartite(int a, int b) {
  EV es;
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) es.push_back({u, a + v});
  return Graph(a + b, es);
}

Graph cycle(int n) {
  if (n < 3) throw std::invalid_argument("C_n needs n >= 3");
  EV es;
  for (int i = 0; i < n; ++i) es.push_back({i, (i + 1) % n});
  return Graph(n, es);
}

Graph path(int n) {
  EV es;
  for (int i = 0; i + 1 < n; ++i) es.push_back({i, i + 1});
  return Graph(n, es);
}

Graph wheel(int n) {
  // hub 0 joined to a cycle on 1..n-1
  if (n < 4) throw std::invalid_argument("W_n needs n >= 4");
  EV es;
  for (int i = 1; i < n; ++i) {
    es.push_back({0, i});
    es.push_back({i, i == n - 1 ? 1 : i + 1});
  }
  return Graph(n, es);
}

Graph fan(int n) {
  // hub 0 joined to a path on 1..n-1
  if (n < 3) throw std::invalid_argument("F_n needs n >= 3");
  EV es;
  for (int i = 1; i < n; ++i) es.push_back({0, i});
  for (int i = 1; i + 1 < n; ++i) es.push_back({i, i + 1});
  return Graph(n, es);
}

// K3,3 on parts {0,1,2} / {3,4,5} with edges added inside parts.
Graph k33_plus(bool two_edges) {
  EV es;
  for (int u = 0; u < 3; ++u)
    for (int v = 3; v < 6; ++v) es.push_back({u, v});
  es.push_back({0, 1});
  if (two_edges) es.push_back({3, 4});
  return Graph(6, es);
}

// Vertices: t0..t3 = 0..3, b0 = 4, b1 = 5, b2 = 6.
Graph graph_B(bool plus) {
  EV es = {{0, 1}, {0, 5}, {1, 6}, {4, 0}, {4, 1}, {4, 2},
           {4, 3}, {2, 5}, {2, 6}, {3, 5}, {3, 6}};
  if (plus) es.push_back({2, 3});
  return Graph(7, es);
}

// Vertices: t0..t3 = 0..3, b0 = 4, b1 = 5, b2 = 6, m = 7.
Graph graph_C(bool plus) {
  EV es = {{0, 5}, {0, 1}, {1, 6}, {2, 4}, {4, 3}, {2, 5},
           {5, 3}, {2, 6}, {6, 3}, {0, 7}, {7, 1}, {4, 7}};
  if (plus) es.push_back({2, 3});
  return Graph(8, es);
}

// Vertices: p1..p4 = 0..3, q1 = 4, q2 = 5, q3 = 6.
Graph graph_D() {
  EV es = {{0, 1}, {0, 2}, {2, 5}, {5, 0}, {1, 6}, {6, 3},
           {3, 1}, {3, 2}, {2, 4}, {4, 0}, {4, 5}, {5, 6}};
  return Graph(7, es);
}

Graph gnrs(int n, int r, int s, bool plus) {
  if (!(2 <= r && r <= s && n - 2 <= r + s && r + s <= n - 1))
    throw std::invalid_argument("G(n,r,s) needs 2 <= r <= s and n-2 <= r+s <= n-1");
  EV es;
  for (int i = 0; i + 1 < n; ++i) es.push_back({i, i + 1});
  for (int i = 1; i <= r; ++i) es.push_back({0, n - 1 - i});
  for (int i = 1; i <= s; ++i) es.push_back({i, n - 1});
  if (plus) es.push_back({0, n - 1});
  return Graph(n, es);
}

Graph k23_plus_edge() {
  // parts {0,1} / {2,3,4}, extra edge inside the 3-side
  EV es;
  for (int u = 0; u < 2; ++u)
    for (int v = 2; v < 5; ++v) es.push_back({u, v});
  es.push_back({2, 3});
  return Graph(5, es);
}

Graph square_of_path(int n) {
  EV es;
  for (int i = 0; i + 1 < n; ++i) es.push_back({i, i + 1});
  for (int i = 0; i + 2 < n; ++i) es.push_back({i, i + 2});
  return Graph(n, es);
}

}  // namespace

Graph catalog(const std::string& name) {
  int a, b, c;
  char tail;
  if (name == "A") return k33_plus(false);
  if (name == "A+") return k33_plus(true);
  if (name == "B") return graph_B(false);
  if (name == "B+") return graph_B(true);
  if (name == "C") return graph_C(false);
  if (name == "C+") return graph_C(true);
  if (name == "D") return graph_D();
  if (name == "K23_plus_edge" || name == "K23+e") return k23_plus_edge();
  if (std::sscanf(name.c_str(), "square_of_path(%d%c", &a, &tail) == 2 && tail == ')')
    return square_of_path(a);
  if (std::sscanf(name.c_str(), "G+(%d,%d,%d%c", &a, &b, &c, &tail) == 4 && tail == ')')
    return gnrs(a, b, c, true);
  if (std::sscanf(name.c_str(), "G(%d,%d,%d%c", &a, &b, &c, &tail) == 4 && tail == ')')
    return gnrs(a, b, c, false);
  if (std::sscanf(name.c_str(), "K%d,%d", &a, &b) == 2) return complete_bipartite(a, b);
  if (std::sscanf(name.c_str(), "K%d%c", &a, &tail) == 2 && tail == '-') return complete_minus(a);
  if (std::sscanf(name.c_str(), "K%d", &a) == 1 && name == "K" + std::to_string(a))
    return complete(a);
  if (std::sscanf(name.c_str(), "C%d", &a) == 1 && name == "C" + std::to_string(a))
    return cycle(a);
  if (std::sscanf(name.c_str(), "P%d", &a) == 1 && name == "P" + std::to_string(a))
    return path(a);
  if (std::sscanf(name.c_str(), "W%d", &a) == 1 && name == "W" + std::to_string(a))
    return wheel(a);
  if (std::sscanf(name.c_str(), "F%d", &a) == 1 && name == "F" + std::to_string(a))
    return fan(a);
  throw std::invalid_argument("unknown catalog graph: " + name);
}

Graph resolve_graph(const std::string& arg) {
  if (std::filesystem::exists(arg)) return read_graph_file(arg);
  return catalog(arg);
}

std::vector<std::string> catalog_names() {
  return {"K<n>",  "K<n>-", "K<a>,<b>", "C<n>", "P<n>",     "W<n>",
          "F<n>",  "A",     "A+",       "B",    "B+",       "C",
          "C+",    "D",     "G(n,r,s)", "G+(n,r,s)",
          "K23_plus_edge",  "square_of_path(n)"};
}

}  // namespace packlab
