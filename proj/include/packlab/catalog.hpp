#pragma once

#include <string>
#include <vector>

#include "packlab/graph.hpp"

namespace packlab {

// Named graphs. Accepted names:
//   K<n>, K<n>- (complete minus one edge), K<a>,<b>, C<n>, P<n>,
//   W<n> (wheel: hub + cycle), F<n> (fan: hub + path),
//   A, A+, B, B+, C, C+, D,
//   G(n,r,s), G+(n,r,s), K23_plus_edge, square_of_path(n)
Graph catalog(const std::string& name);

// Resolve a CLI graph argument: catalog name, else file path.
Graph resolve_graph(const std::string& arg);

std::vector<std::string> catalog_names();

}  // namespace packlab
