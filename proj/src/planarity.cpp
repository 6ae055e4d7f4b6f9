#include "packlab/planarity.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

namespace packlab {

PlanarityResult is_planar(const Graph& g) {
  using BGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                       boost::property<boost::vertex_index_t, int>,
                                       boost::property<boost::edge_index_t, int>>;
  BGraph bg(g.n);
  for (auto [u, v] : g.edges) boost::add_edge(u, v, bg);
  auto eindex = boost::get(boost::edge_index, bg);
  int ei = 0;
  for (auto [it, end] = boost::edges(bg); it != end; ++it) boost::put(eindex, *it, ei++);

  using Edge = boost::graph_traits<BGraph>::edge_descriptor;
  std::vector<std::vector<Edge>> embedding(g.n);
  std::vector<Edge> kura;

  PlanarityResult r;
  r.planar = boost::boyer_myrvold_planarity_test(
      boost::boyer_myrvold_params::graph = bg,
      boost::boyer_myrvold_params::embedding = embedding.data(),
      boost::boyer_myrvold_params::kuratowski_subgraph = std::back_inserter(kura));
  if (r.planar) {
    r.embedding.resize(g.n);
    for (int v = 0; v < g.n; ++v)
      for (const auto& e : embedding[v]) {
        int a = (int)boost::source(e, bg), b = (int)boost::target(e, bg);
        r.embedding[v].push_back(a == v ? b : a);
      }
  } else {
    for (const auto& e : kura)
      r.kuratowski.push_back({(int)boost::source(e, bg), (int)boost::target(e, bg)});
  }
  return r;
}

}  // namespace packlab
