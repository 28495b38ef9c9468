#pragma once

#include <vector>

#include "monohs/graph.hpp"
#include "monohs/learn.hpp"

// Exponential-time reference implementations. They rely only on graph-core
// and on the definition of induced paths, never on the hull, shadow or
// decomposition code they are meant to check.
namespace monohs::oracle {

struct Budget {
  std::size_t max_n = 12;
  std::size_t max_subsets = std::size_t{1} << 20;
};

// Vertices on some induced u-v path, by DFS over all induced paths.
VertexSet interval(const Graph& g, Vertex u, Vertex v, const Budget& budget = {});

// All pairwise intervals, indexed [u][v].
std::vector<std::vector<VertexSet>> all_intervals(const Graph& g, const Budget& budget = {});

// Fixpoint of S <- S ∪ ⋃ I(x,y) over x, y in S.
VertexSet interval_closure(const std::vector<std::vector<VertexSet>>& iv, const VertexSet& s);

// Convex means closed under intervals.
bool interval_convex(const std::vector<std::vector<VertexSet>>& iv, const VertexSet& s);

std::vector<VertexSet> halfspaces(const Graph& g, const Budget& budget = {});

std::size_t vc_dimension(const std::vector<VertexSet>& family, const VertexSet& ground,
                         const Budget& budget = {});

Risk erm(const Graph& g, const Sample& x, const Budget& budget = {});
Risk erm(const std::vector<VertexSet>& family, const Sample& x);

VertexSet min_hull_set(const Graph& g, const Budget& budget = {});

}  // namespace monohs::oracle
