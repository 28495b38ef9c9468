#include "monohs/separation.hpp"

#include "monohs/errors.hpp"

namespace monohs {

namespace {

struct Vars {
  std::vector<int> var_of;
  std::vector<Vertex> vertex_of;
};

Vars number_residue(const Graph& g, const ClosedPair& pair) {
  Vars v{std::vector<int>(g.n(), -1), {}};
  for (Vertex x : pair.R()) {
    v.var_of[x] = static_cast<int>(v.vertex_of.size());
    v.vertex_of.push_back(x);
  }
  return v;
}

// arcs[x] = {y in ∂R : x ->_side y}.
std::vector<VertexSet> implication_arcs(const Graph& g, const ClosedPair& pair,
                                        const VertexSet& side) {
  std::vector<VertexSet> arcs(g.n(), VertexSet(g.n()));
  const VertexSet& dr = pair.boundary_R();
  for (Vertex z : side) {
    VertexSet heads = g.neighbors(z) & dr;
    if (heads.empty()) continue;
    // Paths x..y with only y adjacent to z: x lies in a component K of
    // G[R - N(z)] and y is adjacent to K.
    for (const auto& k : components(g, pair.R() - g.neighbors(z))) {
      VertexSet tails = k & dr;
      if (tails.empty()) continue;
      VertexSet nk(g.n());
      for (Vertex v : k) nk |= g.neighbors(v);
      VertexSet ys = heads & nk;
      if (ys.empty()) continue;
      for (Vertex x : tails) arcs[x] |= ys;
    }
  }
  return arcs;
}

void add_differences(const Graph& g, const ClosedPair& pair, const Vars& vars,
                     TwoSatInstance& inst) {
  const VertexSet& dr = pair.boundary_R();
  for (Vertex x : dr) {
    for (Vertex y : dr - g.neighbors(x)) {
      if (y <= x) continue;
      auto vx = static_cast<std::uint32_t>(vars.var_of[x]);
      auto vy = static_cast<std::uint32_t>(vars.var_of[y]);
      inst.add(pos(vx), pos(vy), ClauseTag::Difference);
      inst.add(neg(vx), neg(vy), ClauseTag::Difference);
    }
  }
}

}  // namespace

bool implies_via(const Graph& g, const ClosedPair& pair, const VertexSet& side, Vertex x,
                 Vertex y) {
  const VertexSet& dr = pair.boundary_R();
  if (x == y || !dr.contains(x) || !dr.contains(y)) return false;
  for (Vertex z : side & g.neighbors(y)) {
    if (g.adjacent(z, x)) continue;
    VertexSet within = pair.R() - g.neighbors(z);
    within.insert(y);
    if (shortest_path(g, VertexSet::single(g.n(), x), VertexSet::single(g.n(), y), within))
      return true;
  }
  return false;
}

PhiFormula build_phi(const Graph& g, const ClosedPair& pair, HullCache* cache) {
  HullCache local(g);
  HullCache& hc = cache ? *cache : local;
  auto vars = number_residue(g, pair);
  PhiFormula phi{pair, TwoSatInstance(vars.vertex_of.size()), vars.var_of, vars.vertex_of, {}, {}, {}};
  const VertexSet& dr = pair.boundary_R();

  std::vector<std::pair<Vertex, Vertex>> touching;
  for (Vertex a : pair.bd_A())
    for (Vertex b : g.neighbors(a) & pair.bd_B()) touching.push_back({a, b});

  for (Vertex x : pair.R()) {
    VertexSet s(g.n());
    for (auto [a, b] : touching) s |= hc.get(x, a) & hc.get(x, b);
    s &= dr;
    if (s.empty()) throw InternalError("empty S_x for vertex " + g.name(x));
    auto vx = static_cast<std::uint32_t>(phi.var_of[x]);
    for (Vertex x0 : s) {
      if (x0 == x) continue;
      auto v0 = static_cast<std::uint32_t>(phi.var_of[x0]);
      phi.inst.add(neg(vx), pos(v0), ClauseTag::Equality);
      phi.inst.add(pos(vx), neg(v0), ClauseTag::Equality);
    }
    phi.s_map.push_back(std::move(s));
  }

  add_differences(g, pair, vars, phi.inst);

  auto arcs_a = implication_arcs(g, pair, pair.A());
  auto arcs_b = implication_arcs(g, pair, pair.B());
  for (Vertex x : dr) {
    auto vx = static_cast<std::uint32_t>(phi.var_of[x]);
    for (Vertex y : arcs_a[x]) {
      if (y == x) continue;
      phi.arcs_a.push_back({x, y});
      phi.inst.add(neg(vx), pos(static_cast<std::uint32_t>(phi.var_of[y])), ClauseTag::ImplicationA);
    }
    for (Vertex y : arcs_b[x]) {
      if (y == x) continue;
      phi.arcs_b.push_back({x, y});
      phi.inst.add(pos(vx), neg(static_cast<std::uint32_t>(phi.var_of[y])), ClauseTag::ImplicationB);
    }
  }
  return phi;
}

PhiFormula build_phi_prime(const Graph& g, const ClosedPair& pair, HullCache* cache) {
  HullCache local(g);
  HullCache& hc = cache ? *cache : local;
  auto vars = number_residue(g, pair);
  PhiFormula phi{pair, TwoSatInstance(vars.vertex_of.size()), vars.var_of, vars.vertex_of, {}, {}, {}};
  add_differences(g, pair, vars, phi.inst);
  for (Vertex x : pair.R()) {
    VertexSet via_a(g.n()), via_b(g.n());
    for (Vertex z : pair.A()) via_a |= hc.get(x, z);
    for (Vertex z : pair.B()) via_b |= hc.get(x, z);
    via_a &= pair.R();
    via_b &= pair.R();
    via_a.erase(x);
    via_b.erase(x);
    auto vx = static_cast<std::uint32_t>(phi.var_of[x]);
    for (Vertex y : via_a) {
      phi.arcs_a.push_back({x, y});
      phi.inst.add(neg(vx), pos(static_cast<std::uint32_t>(phi.var_of[y])), ClauseTag::ImplicationA);
    }
    for (Vertex y : via_b) {
      phi.arcs_b.push_back({x, y});
      phi.inst.add(pos(vx), neg(static_cast<std::uint32_t>(phi.var_of[y])), ClauseTag::ImplicationB);
    }
  }
  return phi;
}

VertexSet model_to_set(const PhiFormula& phi, const Assignment& a) {
  VertexSet h = phi.pair.A();
  for (std::size_t i = 0; i < phi.vertex_of.size(); ++i)
    if (a[i]) h.insert(phi.vertex_of[i]);
  return h;
}

std::optional<Halfspace> halfspace_separation(const Graph& g, const VertexSet& a,
                                              const VertexSet& b) {
  if (a.empty() && b.empty()) return g.all();
  if (a.empty()) return g.empty_set();
  if (b.empty()) return g.all();
  if (a.intersects(b)) return std::nullopt;
  auto path = shortest_path(g, a, b, g.all());
  if (!path) throw InternalError("no path between the two sides of a connected graph");
  HullCache cache(g);
  for (std::size_t i = 0; i + 1 < path->size(); ++i) {
    VertexSet a1 = a, b1 = b;
    a1.insert((*path)[i]);
    b1.insert((*path)[i + 1]);
    auto cl = shadow_closure(g, a1, b1);
    if (!cl.disjoint()) continue;
    auto pair = ClosedPair::trusted(g, cl.a, cl.b);
    auto phi = build_phi(g, pair, &cache);
    if (auto model = solve(phi.inst)) return model_to_set(phi, *model);
  }
  return std::nullopt;
}

bool is_halfspace(const Graph& g, const VertexSet& h) {
  return is_mconvex(g, h) && is_mconvex(g, h.complement());
}

std::optional<Halfspace> is_realizable(const Graph& g, const Sample& x) {
  return halfspace_separation(g, x.positives(), x.negatives());
}

}  // namespace monohs
