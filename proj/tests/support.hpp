#pragma once

#include <random>
#include <string>
#include <vector>

#include "monohs/corpus.hpp"
#include "monohs/graph.hpp"
#include "monohs/oracle.hpp"

namespace testsupport {

using namespace monohs;

inline Graph named(const std::string& name) { return canonical_graph(name); }

inline VertexSet S(const Graph& g, std::initializer_list<std::string_view> names) {
  return g.set(names);
}

inline Sample labels(const Graph& g, std::initializer_list<std::pair<std::string_view, int>> l) {
  Sample s(g.n());
  for (auto [nm, lab] : l) s.set(g.vertex(nm), lab);
  return s;
}

// Small graphs for property checks: every connected graph up to five
// vertices, the canonical ones, a few trees and clique chains, and seeded
// random graphs up to `max_n` vertices.
inline std::vector<Graph> property_corpus(std::size_t random_count = 30, std::size_t max_n = 9,
                                          std::uint64_t seed = 99) {
  std::vector<Graph> out;
  for (auto& ng : canonical_graphs()) out.push_back(ng.graph);
  for (std::size_t n = 2; n <= 5; ++n)
    for (auto& g : all_connected_graphs(n)) out.push_back(g);
  out.push_back(generate(GenKind::CliqueChain, {.k = 2, .q = 3}, 0));
  out.push_back(generate(GenKind::CliqueChain, {.k = 3, .q = 3}, 0));
  out.push_back(generate(GenKind::Tree, {.n = 8}, 5));
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < random_count; ++i) {
    std::uniform_int_distribution<std::size_t> nd(5, max_n);
    std::uniform_real_distribution<double> pd(0.2, 0.7);
    out.push_back(generate(GenKind::GnpConnected, {.n = nd(rng), .p = pd(rng)}, rng()));
  }
  return out;
}

inline VertexSet random_subset(std::size_t n, std::mt19937_64& rng, double p = 0.5) {
  std::bernoulli_distribution coin(p);
  VertexSet s(n);
  for (Vertex v = 0; v < n; ++v)
    if (coin(rng)) s.insert(v);
  return s;
}

inline std::vector<VertexSet> sorted(std::vector<VertexSet> v) {
  std::sort(v.begin(), v.end(), VertexSetLex{});
  return v;
}

inline std::vector<VertexSet> sets(const Graph& g, std::initializer_list<std::initializer_list<std::string_view>> l) {
  std::vector<VertexSet> out;
  for (auto names : l) out.push_back(g.set(names));
  return sorted(out);
}

// Halfspaces of the oracle family with a ⊆ H and b ∩ H = ∅.
inline std::vector<VertexSet> separating(const std::vector<VertexSet>& family, const VertexSet& a,
                                         const VertexSet& b) {
  std::vector<VertexSet> out;
  for (const auto& h : family)
    if (a.subset_of(h) && !b.intersects(h)) out.push_back(h);
  return out;
}

}  // namespace testsupport
