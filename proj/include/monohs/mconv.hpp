#pragma once

#include <mutex>
#include <unordered_map>
#include <utility>

#include "monohs/graph.hpp"

namespace monohs {

// Duchet criterion: every component of G - s attaches to s along a clique.
bool is_mconvex(const Graph& g, const VertexSet& s);

// Smallest m-convex superset of s.
//
// Repeats until stable: for each component B of G - S whose attachment set
// T = N(B) ∩ S is not a clique, take the smallest x in T with a non-neighbour
// in T, run a BFS from x through B, and add the interior of a shortest x-y
// path for every y in T not adjacent to x. Such a path is chordless in
// G[B ∪ {x,y}] and therefore in G, so every added vertex is in the hull.
// The stable set passes the Duchet criterion.
VertexSet mhull(const Graph& g, const VertexSet& s);

// Same closure, abandoned as soon as the growing set meets `stop`.
// Returns true when it did; otherwise `out` receives the full hull.
bool mhull_meets(const Graph& g, const VertexSet& s, const VertexSet& stop, VertexSet* out);

// Memo of pairwise hulls m(x,y) for one graph. Safe for concurrent use.
class HullCache {
 public:
  explicit HullCache(const Graph& g) : g_(&g) {}
  const Graph& graph() const { return *g_; }
  VertexSet get(Vertex x, Vertex y);
  std::size_t size() const;

 private:
  const Graph* g_;
  mutable std::mutex mu_;
  std::unordered_map<std::uint64_t, VertexSet> memo_;
};

// A/B = {x : m(B ∪ {x}) meets A}.
VertexSet shadow(const Graph& g, const VertexSet& a_set, const VertexSet& b_set);

struct SetPair {
  VertexSet a;
  VertexSet b;
  bool disjoint() const { return !a.intersects(b); }
};

// Iterates (A,B) <- (m(A/B), m(B/A)) to a fixpoint. Stops early once the two
// sides intersect, since no halfspace can separate them from then on.
SetPair shadow_closure(const Graph& g, const VertexSet& a_set, const VertexSet& b_set);

class ClosedPair {
 public:
  const VertexSet& A() const { return a_; }
  const VertexSet& B() const { return b_; }
  const VertexSet& R() const { return r_; }
  const VertexSet& boundary_R() const { return dr_; }
  // Vertices of A with a neighbour in B, and vice versa.
  const VertexSet& bd_A() const { return dba_; }
  const VertexSet& bd_B() const { return dab_; }

  // For sets already produced by shadow_closure. Checks disjointness and
  // osculation only.
  static ClosedPair trusted(const Graph& g, VertexSet a, VertexSet b);

 private:
  ClosedPair() = default;
  VertexSet a_, b_, r_, dr_, dba_, dab_;
};

// nullopt when A and B intersect. Throws NotFixpoint when (A,B) is not
// shadow-closed and InvalidPair when no edge joins A and B.
std::optional<ClosedPair> make_closed_pair(const Graph& g, const VertexSet& a, const VertexSet& b);

// (Imp_B(A), Imp_A(B)).
SetPair imprints(const Graph& g, const VertexSet& a, const VertexSet& b);

// Inclusion-minimal hull set by single-vertex removal in descending index order.
VertexSet hull_set_greedy(const Graph& g);

}  // namespace monohs
