#pragma once

#include <utility>
#include <vector>

#include "packlab/graph.hpp"

namespace packlab {

struct PlanarityResult {
  bool planar = false;
  // if planar: per-vertex cyclic neighbor order (rotation system)
  std::vector<std::vector<int>> embedding;
  // if not: edges of a Kuratowski subgraph (a K5 or K3,3 subdivision)
  std::vector<std::pair<int, int>> kuratowski;
};

PlanarityResult is_planar(const Graph& g);

}  // namespace packlab
