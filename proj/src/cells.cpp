#include "monohs/cells.hpp"

#include <algorithm>
#include <unordered_set>

#include "monohs/errors.hpp"

namespace monohs {

std::string to_string(CaseTag t) {
  switch (t) {
    case CaseTag::Antichain:
      return "antichain";
    case CaseTag::Quasiorder:
      return "quasiorder";
    case CaseTag::SingleTwin:
      return "single-twin";
  }
  return "?";
}

std::optional<ClosedPair> eliminate_trivial(const Graph& g, const ClosedPair& pair,
                                            HullCache* cache) {
  ClosedPair cur = pair;
  while (true) {
    auto phi = build_phi(g, cur, cache);
    if (!solve(phi.inst)) return std::nullopt;
    VertexSet ones(g.n()), zeros(g.n());
    for (std::uint32_t v = 0; v < phi.vertex_of.size(); ++v) {
      switch (forced_value(phi.inst, v)) {
        case Forced::One:
          ones.insert(phi.vertex_of[v]);
          break;
        case Forced::Zero:
          zeros.insert(phi.vertex_of[v]);
          break;
        case Forced::Free:
          break;
      }
    }
    if (ones.empty() && zeros.empty()) return cur;
    VertexSet a = mhull(g, cur.A() | ones);
    VertexSet b = mhull(g, cur.B() | zeros);
    if (a.intersects(b)) return std::nullopt;
    auto cl = shadow_closure(g, a, b);
    if (!cl.disjoint()) return std::nullopt;
    cur = ClosedPair::trusted(g, std::move(cl.a), std::move(cl.b));
  }
}

std::vector<CellPair> compute_cells(const Graph& g, const ClosedPair& pair, HullCache* cache) {
  auto phi = build_phi(g, pair, cache);
  std::vector<std::uint32_t> vars(phi.vertex_of.size());
  for (std::uint32_t i = 0; i < vars.size(); ++i) vars[i] = i;
  std::vector<CellPair> out;
  for (const auto& cls : equivalence_groups(phi.inst, vars)) {
    CellPair p{VertexSet(g.n()), VertexSet(g.n())};
    for (auto v : cls.group1) p.first.insert(phi.vertex_of[v]);
    for (auto v : cls.group2) p.second.insert(phi.vertex_of[v]);
    if (p.second.any() && p.second.first() < p.first.first()) std::swap(p.first, p.second);
    for (const VertexSet* c : {&p.first, &p.second})
      if (c->any() && !c->intersects(pair.boundary_R()))
        throw InternalError("cell " + format_set(g, *c) + " misses the residue boundary");
    out.push_back(std::move(p));
  }
  return out;
}

bool ArcGraphs::has_arcs() const {
  for (const auto& row : star)
    for (bool b : row)
      if (b) return true;
  return false;
}

ArcGraphs build_arcs(const Graph& g, const ClosedPair& pair, const std::vector<CellPair>& pairs) {
  ArcGraphs ag;
  std::vector<int> cell_of(g.n(), -1);
  auto add_cell = [&](const VertexSet& c, std::size_t p) {
    auto idx = static_cast<int>(ag.cells.size());
    ag.cells.push_back(c);
    ag.pair_of.push_back(p);
    for (Vertex v : c) cell_of[v] = idx;
    return idx;
  };
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    int c1 = add_cell(pairs[i].first, i);
    ag.twin.push_back(-1);
    if (pairs[i].second.any()) {
      int c2 = add_cell(pairs[i].second, i);
      ag.twin.push_back(c1);
      ag.twin[static_cast<std::size_t>(c1)] = c2;
    }
  }
  const std::size_t k = ag.cells.size();
  auto matrix = [k] { return std::vector<std::vector<bool>>(k, std::vector<bool>(k, false)); };
  ag.arcs_a = matrix();
  ag.arcs_b = matrix();
  ag.star = matrix();
  ag.below = matrix();

  // Without trivial variables, x ->_A y forces x ~ y and is witnessed by a
  // vertex of A off the A-B boundary.
  const VertexSet inner_a = pair.A() - pair.bd_A();
  const VertexSet inner_b = pair.B() - pair.bd_B();
  const VertexSet& dr = pair.boundary_R();
  for (Vertex x : dr) {
    for (Vertex y : g.neighbors(x) & dr) {
      int cx = cell_of[x], cy = cell_of[y];
      if (cx < 0 || cy < 0) throw InternalError("boundary vertex outside every cell");
      if (cx == cy) continue;
      auto ux = static_cast<std::size_t>(cx), uy = static_cast<std::size_t>(cy);
      if (((g.neighbors(y) & inner_a) - g.neighbors(x)).any()) ag.arcs_a[ux][uy] = true;
      if (((g.neighbors(y) & inner_b) - g.neighbors(x)).any()) ag.arcs_b[ux][uy] = true;
    }
  }
  for (std::size_t c = 0; c < k; ++c)
    for (std::size_t d = 0; d < k; ++d)
      if (ag.arcs_a[c][d] || ag.arcs_b[d][c]) ag.star[c][d] = true;

  for (std::size_t c = 0; c < k; ++c) {
    std::vector<std::size_t> stack{c};
    std::vector<bool> seen(k, false);
    while (!stack.empty()) {
      std::size_t x = stack.back();
      stack.pop_back();
      for (std::size_t y = 0; y < k; ++y) {
        if (ag.star[x][y] && !seen[y]) {
          seen[y] = true;
          stack.push_back(y);
        }
      }
    }
    if (seen[c]) throw InternalError("cyclic star graph");
    for (std::size_t d = 0; d < k; ++d) ag.below[c][d] = seen[d];
  }
  return ag;
}

namespace {

bool comparable(const ArcGraphs& ag, std::size_t c, std::size_t d) {
  return ag.below[c][d] || ag.below[d][c];
}

// Cases with arcs: peel minimal elements when no twins exist, otherwise place
// the single twin pair on the side of the order it dominates.
void order_blocks(const ArcGraphs& ag, CellDecomposition& dec) {
  const std::size_t k = ag.cells.size();
  std::vector<std::size_t> twin_pairs;
  for (std::size_t i = 0; i < dec.pairs.size(); ++i)
    if (dec.pairs[i].second.any()) twin_pairs.push_back(i);

  if (twin_pairs.empty()) {
    dec.tag = CaseTag::Quasiorder;
    std::vector<bool> placed(k, false);
    std::size_t left = k;
    while (left > 0) {
      std::vector<std::size_t> level;
      for (std::size_t c = 0; c < k; ++c) {
        if (placed[c]) continue;
        bool minimal = true;
        for (std::size_t d = 0; d < k && minimal; ++d)
          if (!placed[d] && ag.below[c][d]) minimal = false;
        if (minimal) level.push_back(c);
      }
      std::vector<std::size_t> block;
      for (auto c : level) {
        placed[c] = true;
        block.push_back(ag.pair_of[c]);
      }
      left -= level.size();
      dec.blocks.push_back(std::move(block));
    }
    for (std::size_t i = 0; i < dec.blocks.size(); ++i)
      for (std::size_t j = i + 1; j < dec.blocks.size(); ++j)
        for (auto lo : dec.blocks[i])
          for (auto hi : dec.blocks[j])
            if (!ag.below[hi][lo]) throw InternalError("cell order is not a linear quasiorder");
    return;
  }

  if (twin_pairs.size() != 1) throw InternalError("more than one twin pair alongside arcs");
  dec.tag = CaseTag::SingleTwin;
  const std::size_t tp = twin_pairs.front();
  std::vector<std::size_t> rest, rest_pairs;
  std::size_t x = k, y = k;
  for (std::size_t c = 0; c < k; ++c) {
    if (ag.pair_of[c] == tp)
      (x == k ? x : y) = c;
    else {
      rest.push_back(c);
      rest_pairs.push_back(ag.pair_of[c]);
    }
  }
  for (auto c : rest)
    for (auto d : rest)
      if (c != d && comparable(ag, c, d)) throw InternalError("untwinned cells are not an antichain");

  auto isolated = [&](std::size_t t) {
    for (std::size_t c = 0; c < k; ++c)
      if (c != t && comparable(ag, c, t)) return false;
    return true;
  };
  for (std::size_t t : {x, y}) {
    std::size_t tw = t == x ? y : x;
    if (!isolated(tw)) continue;
    bool above = true, under = true;
    for (auto c : rest) {
      above = above && ag.below[t][c];
      under = under && ag.below[c][t];
    }
    if (!above && !under) continue;
    dec.pairs[tp] = CellPair{ag.cells[t], ag.cells[tw]};
    if (above)
      dec.blocks = {rest_pairs, {tp}};
    else
      dec.blocks = {{tp}, rest_pairs};
    return;
  }
  throw InternalError("twin pair matches no known layout");
}

}  // namespace

std::optional<CellDecomposition> decompose(const Graph& g, Vertex a, Vertex b, HullCache* cache) {
  if (!g.adjacent(a, b)) throw BadInput("decompose needs an edge");
  HullCache local(g);
  HullCache* hc = cache ? cache : &local;
  auto cl = shadow_closure(g, VertexSet::single(g.n(), a), VertexSet::single(g.n(), b));
  if (!cl.disjoint()) return std::nullopt;
  auto red = eliminate_trivial(g, ClosedPair::trusted(g, std::move(cl.a), std::move(cl.b)), hc);
  if (!red) return std::nullopt;

  CellDecomposition dec;
  dec.edge = {a, b};
  dec.a_star = red->A();
  dec.b_star = red->B();
  dec.pairs = compute_cells(g, *red, hc);
  if (dec.pairs.empty()) {
    dec.blocks = {{}};
    return dec;
  }
  auto ag = build_arcs(g, *red, dec.pairs);
  if (ag.cells.size() > red->boundary_R().count())
    throw InternalError("more cells than boundary vertices");
  if (!ag.has_arcs()) {
    dec.tag = CaseTag::Antichain;
    std::vector<std::size_t> all(dec.pairs.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    dec.blocks = {all};
    return dec;
  }
  order_blocks(ag, dec);
  return dec;
}

Halfspace reconstruct(const CellDecomposition& dec, std::size_t block,
                      std::span<const std::size_t> chosen) {
  if (block >= dec.blocks.size()) throw IndexOutOfRange("block index out of range");
  const auto& blk = dec.blocks[block];
  for (auto c : chosen)
    if (std::find(blk.begin(), blk.end(), c) == blk.end())
      throw IndexOutOfRange("pair " + std::to_string(c) + " is not in block " + std::to_string(block));
  VertexSet h = dec.a_star;
  for (std::size_t j = 0; j < dec.blocks.size(); ++j) {
    for (auto p : dec.blocks[j]) {
      bool take_first = j < block ||
                        (j == block && std::find(chosen.begin(), chosen.end(), p) != chosen.end());
      h |= take_first ? dec.pairs[p].first : dec.pairs[p].second;
    }
  }
  return h;
}

namespace {

void sort_sets(std::vector<Halfspace>& v) { std::sort(v.begin(), v.end(), VertexSetLex{}); }

}  // namespace

std::vector<Halfspace> enumerate_edge(const CellDecomposition& dec) {
  std::unordered_set<VertexSet, VertexSetHash> seen;
  std::vector<Halfspace> out;
  for (std::size_t l = 0; l < dec.blocks.size(); ++l) {
    const auto& blk = dec.blocks[l];
    if (blk.size() >= 40) throw BudgetExceeded("block too large to enumerate");
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << blk.size()); ++mask) {
      std::vector<std::size_t> chosen;
      for (std::size_t i = 0; i < blk.size(); ++i)
        if (mask >> i & 1) chosen.push_back(blk[i]);
      auto h = reconstruct(dec, l, chosen);
      if (seen.insert(h).second) out.push_back(std::move(h));
    }
  }
  sort_sets(out);
  return out;
}

std::size_t d_ab(const CellDecomposition& dec) {
  std::size_t d = 0;
  for (const auto& b : dec.blocks) d = std::max(d, b.size());
  return d;
}

std::size_t vc_hat(const Graph& g) {
  HullCache cache(g);
  std::size_t d = 0;
  for (const auto& e : g.edges())
    if (auto dec = decompose(g, e.u, e.v, &cache)) d = std::max(d, d_ab(*dec));
  return d;
}

DecompositionTable decompose_all(const Graph& g) {
  HullCache cache(g);
  DecompositionTable t;
  for (const auto& e : g.edges()) {
    for (Edge o : {e, Edge{e.v, e.u}}) {
      t.orientations.push_back(o);
      t.decs.push_back(decompose(g, o.u, o.v, &cache));
    }
  }
  return t;
}

std::vector<Halfspace> enumerate_halfspaces(const Graph& g, const DecompositionTable& table) {
  std::unordered_set<VertexSet, VertexSetHash> seen{g.empty_set(), g.all()};
  std::vector<Halfspace> out{g.empty_set(), g.all()};
  for (const auto& dec : table.decs) {
    if (!dec) continue;
    for (auto& h : enumerate_edge(*dec))
      if (seen.insert(h).second) out.push_back(std::move(h));
  }
  sort_sets(out);
  return out;
}

std::vector<Halfspace> enumerate_halfspaces(const Graph& g) {
  return enumerate_halfspaces(g, decompose_all(g));
}

Vertex representative(const CellPair& p) {
  return static_cast<Vertex>(p.first.any() ? p.first.first() : p.second.first());
}

}  // namespace monohs
