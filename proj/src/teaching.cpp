#include <algorithm>

#include "monohs/errors.hpp"
#include "monohs/learn.hpp"

namespace monohs {

Sample teaching_set(const Graph& g, const Halfspace& h) {
  if (h.universe() != g.n() || !is_halfspace(g, h)) throw NotAHalfspace("input is not a halfspace");
  Sample out(g.n());
  if (h.empty()) {
    out.set(0, -1);
    return out;
  }
  if (h.count() == g.n()) {
    out.set(0, 1);
    return out;
  }
  const auto& edges = g.edges();
  auto it = std::find_if(edges.begin(), edges.end(),
                         [&](const Edge& e) { return h.contains(e.u) != h.contains(e.v); });
  const Vertex a = h.contains(it->u) ? it->u : it->v;
  const Vertex b = a == it->u ? it->v : it->u;
  out.set(a, 1);
  out.set(b, -1);

  auto dec = decompose(g, a, b);
  if (!dec) throw InternalError("halfspace on an edge without halfspaces");
  const std::size_t p = dec->blocks.size();
  auto in_first = [&](std::size_t i) { return dec->pairs[i].first.subset_of(h); };
  auto all_first = [&](std::size_t j) {
    return std::all_of(dec->blocks[j].begin(), dec->blocks[j].end(), in_first);
  };
  auto none_first = [&](std::size_t j) {
    return std::none_of(dec->blocks[j].begin(), dec->blocks[j].end(), in_first);
  };

  std::size_t l = 0;
  bool found_mixed = false;
  for (std::size_t j = 0; j < p && !found_mixed; ++j) {
    if (!all_first(j) && !none_first(j)) {
      l = j;
      found_mixed = true;
    }
  }
  if (!found_mixed) {
    for (std::size_t j = 0; j < p; ++j)
      if (!dec->blocks[j].empty() && all_first(j)) l = j;
  }

  auto emit = [&](std::size_t j) {
    for (auto i : dec->blocks[j]) {
      Vertex r = representative(dec->pairs[i]);
      out.set(r, h.contains(r) ? 1 : -1);
    }
  };
  emit(l);
  if (!dec->blocks[l].empty() && all_first(l) && l + 1 < p) emit(l + 1);

  std::vector<std::size_t> chosen;
  for (auto i : dec->blocks[l])
    if (in_first(i)) chosen.push_back(i);
  if (reconstruct(*dec, l, chosen) != h) throw InternalError("halfspace missing from its edge decomposition");
  return out;
}

}  // namespace monohs
