#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "packlab/rational.hpp"

namespace packlab {

// Finite simple undirected graph on vertices 0..n-1.
struct Graph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;  // normalized u < v, insertion order
  std::vector<std::vector<int>> adj;

  Graph() = default;
  Graph(int n_, std::vector<std::pair<int, int>> es);

  int m() const { return (int)edges.size(); }
  int degree(int v) const { return (int)adj[v].size(); }
  bool has_edge(int u, int v) const;
  int edge_index(int u, int v) const;  // -1 if absent

 private:
  std::map<std::pair<int, int>, int> eidx_;
};

constexpr int GIRTH_INFINITY = -1;

// Length of a shortest cycle; GIRTH_INFINITY for forests.
int girth(const Graph& g);

struct DegeneracyResult {
  int degeneracy = 0;
  std::vector<int> order;  // removal sequence (min-degree elimination)
};
DegeneracyResult degeneracy(const Graph& g);

struct MadResult {
  Rational mad;                // max over nonempty S of 2|E(S)|/|S|
  std::vector<int> witness;    // vertex set attaining the maximum
};
MadResult mad(const Graph& g);
// Oracle: direct maximization over all nonempty vertex subsets (n <= 20).
MadResult mad_exhaustive(const Graph& g);

Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices);

// Text format: first line "n m", then m lines "u v" (0-based).
Graph read_graph(std::istream& in);
void write_graph(std::ostream& out, const Graph& g);
Graph read_graph_file(const std::string& path);

}  // namespace packlab
