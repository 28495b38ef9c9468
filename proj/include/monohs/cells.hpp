#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "monohs/separation.hpp"

namespace monohs {

struct CellPair {
  VertexSet first;   // C'
  VertexSet second;  // C'', possibly empty
};

enum class CaseTag { Antichain, Quasiorder, SingleTwin };
std::string to_string(CaseTag t);

// H = A* ∪ (C' of pairs in blocks before ℓ and of the chosen pairs of block ℓ)
//        ∪ (C'' of the unchosen pairs of block ℓ and of pairs in later blocks).
struct CellDecomposition {
  Edge edge;  // ordered (a, b)
  VertexSet a_star;
  VertexSet b_star;
  std::vector<CellPair> pairs;
  std::vector<std::vector<std::size_t>> blocks;  // 0-based, at least one block
  CaseTag tag = CaseTag::Antichain;
};

// A fully reduced pair or nullopt when Hm(ab) is empty.
std::optional<ClosedPair> eliminate_trivial(const Graph& g, const ClosedPair& pair,
                                            HullCache* cache = nullptr);

// Twin pairs of the free variables; C' is the group holding the smallest vertex.
std::vector<CellPair> compute_cells(const Graph& g, const ClosedPair& pair,
                                    HullCache* cache = nullptr);

struct ArcGraphs {
  std::vector<VertexSet> cells;     // nonempty cells
  std::vector<int> twin;            // index of the twin cell, -1 if empty
  std::vector<std::size_t> pair_of;
  // Adjacency matrices over cell indices.
  std::vector<std::vector<bool>> arcs_a, arcs_b, star, below;  // below[c][d]: d <= c, d != c
  bool has_arcs() const;
};

ArcGraphs build_arcs(const Graph& g, const ClosedPair& pair, const std::vector<CellPair>& pairs);

std::optional<CellDecomposition> decompose(const Graph& g, Vertex a, Vertex b,
                                           HullCache* cache = nullptr);

// `block` is 0-based; `chosen` lists pair indices of that block.
Halfspace reconstruct(const CellDecomposition& dec, std::size_t block,
                      std::span<const std::size_t> chosen);
std::vector<Halfspace> enumerate_edge(const CellDecomposition& dec);

std::size_t d_ab(const CellDecomposition& dec);
std::size_t vc_hat(const Graph& g);

// Decompositions of both orientations of every edge, in edge order.
struct DecompositionTable {
  std::vector<Edge> orientations;
  std::vector<std::optional<CellDecomposition>> decs;
};
DecompositionTable decompose_all(const Graph& g);

std::vector<Halfspace> enumerate_halfspaces(const Graph& g);
std::vector<Halfspace> enumerate_halfspaces(const Graph& g, const DecompositionTable& table);

// Smallest vertex of C' if nonempty, else of C''.
Vertex representative(const CellPair& p);

}  // namespace monohs
