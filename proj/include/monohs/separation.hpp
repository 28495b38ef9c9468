#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "monohs/mconv.hpp"
#include "monohs/sample.hpp"
#include "monohs/twosat.hpp"

namespace monohs {

struct PhiFormula {
  ClosedPair pair;
  TwoSatInstance inst;
  std::vector<int> var_of;           // vertex -> variable, -1 outside R
  std::vector<Vertex> vertex_of;     // variable -> vertex, ascending
  std::vector<VertexSet> s_map;      // per variable; empty for Φ'
  std::vector<std::pair<Vertex, Vertex>> arcs_a;
  std::vector<std::pair<Vertex, Vertex>> arcs_b;
};

// x ->_A y for x, y in ∂R: some z in A with z ~ y, z !~ x, and x, y joined
// inside G[(R - N(z)) ∪ {y}]. With `side` = B this is ->_B.
bool implies_via(const Graph& g, const ClosedPair& pair, const VertexSet& side, Vertex x, Vertex y);

PhiFormula build_phi(const Graph& g, const ClosedPair& pair, HullCache* cache = nullptr);
PhiFormula build_phi_prime(const Graph& g, const ClosedPair& pair, HullCache* cache = nullptr);

// Halfspace selected by a model: A ∪ {x in R : x true}.
VertexSet model_to_set(const PhiFormula& phi, const Assignment& a);

using Halfspace = VertexSet;

// A halfspace H with A ⊆ H and B ∩ H = ∅, or nullopt.
std::optional<Halfspace> halfspace_separation(const Graph& g, const VertexSet& a,
                                              const VertexSet& b);

bool is_halfspace(const Graph& g, const VertexSet& h);

// Separation of the positive from the negative examples.
std::optional<Halfspace> is_realizable(const Graph& g, const Sample& x);

}  // namespace monohs
