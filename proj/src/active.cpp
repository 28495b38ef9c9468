#include <algorithm>

#include "monohs/errors.hpp"
#include "monohs/learn.hpp"

namespace monohs {

LabelOracle LabelOracle::for_target(const VertexSet& target) {
  return LabelOracle([target](Vertex v) { return target.contains(v) ? 1 : -1; });
}

int LabelOracle::query(Vertex v) {
  for (const auto& [u, l] : asked_)
    if (u == v) return l;
  int l = answer_(v);
  if (l != 1 && l != -1) throw InconsistentOracle("label must be +1 or -1");
  asked_.push_back({v, l});
  return l;
}

namespace {

std::size_t ceil_log2(std::size_t x) {
  std::size_t r = 0;
  while ((std::size_t{1} << r) < x) ++r;
  return r;
}

}  // namespace

ActiveResult active_learn(const Graph& g, LabelOracle& oracle) {
  ActiveResult r;
  const VertexSet hs = hull_set_greedy(g);
  r.hull_set_size = hs.count();
  r.log_diam = ceil_log2(diameter(g));

  std::size_t u0 = g.n(), v0 = g.n();
  for (Vertex s : hs) {
    int l = oracle.query(s);
    if (l > 0 && u0 == g.n()) u0 = s;
    if (l < 0 && v0 == g.n()) v0 = s;
  }
  auto finish = [&](Halfspace h) {
    for (const auto& [v, l] : oracle.history())
      if (h.contains(v) != (l > 0))
        throw InconsistentOracle("answers fit no halfspace (vertex " + g.name(v) + ")");
    r.h = std::move(h);
    r.queries = oracle.queries();
    return r;
  };
  // Every vertex lies in the hull of the hull set, and halfspaces are convex.
  if (v0 == g.n()) return finish(g.all());
  if (u0 == g.n()) return finish(g.empty_set());

  // Positives form a prefix of any shortest path from a positive to a negative.
  auto path = *shortest_path(g, VertexSet::single(g.n(), static_cast<Vertex>(u0)),
                             VertexSet::single(g.n(), static_cast<Vertex>(v0)), g.all());
  std::size_t lo = 0, hi = path.size() - 1;
  while (hi - lo > 1) {
    std::size_t mid = (lo + hi) / 2;
    (oracle.query(path[mid]) > 0 ? lo : hi) = mid;
  }
  auto dec = decompose(g, path[lo], path[hi]);
  if (!dec) throw InconsistentOracle("sign switch on an edge without halfspaces");

  const std::size_t p = dec->blocks.size();
  r.log_blocks = ceil_log2(p);
  // True when the answer places C' of the pair inside the target.
  auto first_positive = [&](std::size_t pair) {
    const auto& cp = dec->pairs[pair];
    Vertex rep = representative(cp);
    return (oracle.query(rep) > 0) == cp.first.contains(rep);
  };
  std::size_t blo = 0, bhi = p - 1;
  while (bhi - blo > 1) {
    std::size_t j = (blo + bhi) / 2;
    (first_positive(dec->blocks[j].front()) ? blo : bhi) = j;
  }
  r.block_lo_size = dec->blocks[blo].size();
  r.block_hi_size = bhi != blo ? dec->blocks[bhi].size() : 0;

  auto firsts = [&](std::size_t block) {
    std::vector<std::size_t> out;
    for (auto i : dec->blocks[block])
      if (first_positive(i)) out.push_back(i);
    return out;
  };
  auto lo_first = firsts(blo);
  if (bhi == blo) return finish(reconstruct(*dec, blo, lo_first));
  auto hi_first = firsts(bhi);
  if (hi_first.empty()) return finish(reconstruct(*dec, blo, lo_first));
  if (lo_first.size() == dec->blocks[blo].size()) return finish(reconstruct(*dec, bhi, hi_first));
  throw InconsistentOracle("block answers fit no halfspace");
}

}  // namespace monohs
