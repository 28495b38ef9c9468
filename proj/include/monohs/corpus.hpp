#pragma once

#include <string>
#include <vector>

#include "monohs/graph.hpp"

namespace monohs {

struct NamedGraph {
  std::string name;
  Graph graph;
};

// K3, P4, C4, C5 and K4 with their conventional vertex names.
std::vector<NamedGraph> canonical_graphs();
Graph canonical_graph(const std::string& name);

// One representative per isomorphism class of connected graphs on n vertices.
std::vector<Graph> all_connected_graphs(std::size_t n);

}  // namespace monohs
