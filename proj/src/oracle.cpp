#include "monohs/oracle.hpp"

#include <algorithm>

#include "monohs/errors.hpp"

namespace monohs::oracle {

namespace {

void check_n(const Graph& g, const Budget& budget) {
  if (g.n() > budget.max_n)
    throw BudgetExceeded("graph has " + std::to_string(g.n()) + " vertices, budget allows " +
                         std::to_string(budget.max_n));
}

void check_subsets(std::size_t k, const Budget& budget) {
  if (k >= 63 || (std::size_t{1} << k) > budget.max_subsets)
    throw BudgetExceeded("2^" + std::to_string(k) + " subsets exceed the budget");
}

VertexSet closed_nbhd(const Graph& g, Vertex v) {
  VertexSet s = g.neighbors(v);
  s.insert(v);
  return s;
}

// Extends induced paths from `last`; `blocked` holds the closed
// neighbourhoods of every path vertex except `last`.
void walk(const Graph& g, Vertex last, VertexSet& path, const VertexSet& blocked,
          std::vector<VertexSet>& out) {
  out[last] |= path;
  VertexSet next_blocked = blocked | closed_nbhd(g, last);
  for (Vertex y : g.neighbors(last) - blocked) {
    if (path.contains(y)) continue;
    path.insert(y);
    walk(g, y, path, next_blocked, out);
    path.erase(y);
  }
}

std::vector<VertexSet> intervals_from(const Graph& g, Vertex u) {
  std::vector<VertexSet> out(g.n(), VertexSet(g.n()));
  VertexSet path = VertexSet::single(g.n(), u);
  walk(g, u, path, VertexSet(g.n()), out);
  return out;
}

VertexSet mask_to_set(std::size_t n, std::uint64_t mask) {
  VertexSet s(n);
  for (std::size_t v = 0; v < n; ++v)
    if (mask >> v & 1) s.insert(static_cast<Vertex>(v));
  return s;
}

}  // namespace

VertexSet interval(const Graph& g, Vertex u, Vertex v, const Budget& budget) {
  check_n(g, budget);
  return intervals_from(g, u)[v];
}

std::vector<std::vector<VertexSet>> all_intervals(const Graph& g, const Budget& budget) {
  check_n(g, budget);
  std::vector<std::vector<VertexSet>> iv;
  for (Vertex u = 0; u < g.n(); ++u) iv.push_back(intervals_from(g, u));
  return iv;
}

VertexSet interval_closure(const std::vector<std::vector<VertexSet>>& iv, const VertexSet& s) {
  VertexSet cur = s;
  while (true) {
    VertexSet next = cur;
    for (Vertex x : cur)
      for (Vertex y : cur)
        if (x < y) next |= iv[x][y];
    if (next == cur) return cur;
    cur = std::move(next);
  }
}

bool interval_convex(const std::vector<std::vector<VertexSet>>& iv, const VertexSet& s) {
  for (Vertex x : s)
    for (Vertex y : s)
      if (x < y && !iv[x][y].subset_of(s)) return false;
  return true;
}

std::vector<VertexSet> halfspaces(const Graph& g, const Budget& budget) {
  check_n(g, budget);
  check_subsets(g.n(), budget);
  const auto iv = all_intervals(g, budget);
  std::vector<VertexSet> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.n()); ++mask) {
    VertexSet s = mask_to_set(g.n(), mask);
    if (interval_convex(iv, s) && interval_convex(iv, s.complement())) out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), VertexSetLex{});
  return out;
}

std::size_t vc_dimension(const std::vector<VertexSet>& family, const VertexSet& ground,
                         const Budget& budget) {
  const auto pts = ground.members();
  const std::size_t k = pts.size();
  check_subsets(k, budget);
  std::vector<std::uint32_t> masks;
  for (const auto& f : family) {
    std::uint32_t m = 0;
    for (std::size_t i = 0; i < k; ++i)
      if (f.contains(pts[i])) m |= 1u << i;
    masks.push_back(m);
  }
  std::sort(masks.begin(), masks.end());
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  if (masks.empty()) return 0;

  std::vector<std::uint32_t> stamp(std::size_t{1} << k, 0);
  std::uint32_t round = 0;
  std::size_t best = 0;
  for (std::size_t s = 1; s <= k; ++s) {
    if (masks.size() < (std::size_t{1} << s)) break;
    bool shattered = false;
    // Gosper's hack over all s-subsets of k positions.
    for (std::uint64_t t = (std::uint64_t{1} << s) - 1; t < (std::uint64_t{1} << k) && !shattered;) {
      ++round;
      std::size_t distinct = 0;
      for (auto m : masks) {
        auto tr = m & static_cast<std::uint32_t>(t);
        if (stamp[tr] != round) {
          stamp[tr] = round;
          ++distinct;
        }
      }
      shattered = distinct == (std::size_t{1} << s);
      std::uint64_t c = t & (~t + 1), r = t + c;
      t = (((r ^ t) >> 2) / c) | r;
    }
    if (!shattered) break;
    best = s;
  }
  return best;
}

Risk erm(const std::vector<VertexSet>& family, const Sample& x) {
  const std::size_t support = x.size();
  if (support == 0) throw EmptySample("ERM needs at least one labeled vertex");
  Risk best{support + 1, support};
  for (const auto& h : family) best = std::min(best, Risk{count_mistakes(x, h), support});
  return best;
}

Risk erm(const Graph& g, const Sample& x, const Budget& budget) {
  return erm(halfspaces(g, budget), x);
}

VertexSet min_hull_set(const Graph& g, const Budget& budget) {
  check_n(g, budget);
  check_subsets(g.n(), budget);
  const auto iv = all_intervals(g, budget);
  const std::size_t n = g.n();
  const VertexSet all = g.all();
  for (std::size_t s = 1; s <= n; ++s) {
    std::vector<Vertex> comb(s);
    for (std::size_t i = 0; i < s; ++i) comb[i] = static_cast<Vertex>(i);
    while (true) {
      VertexSet cand = VertexSet::from(n, comb.begin(), comb.end());
      if (interval_closure(iv, cand) == all) return cand;
      std::size_t i = s;
      while (i > 0 && comb[i - 1] == n - s + i - 1) --i;
      if (i == 0) break;
      ++comb[i - 1];
      for (std::size_t j = i; j < s; ++j) comb[j] = comb[j - 1] + 1;
    }
  }
  return all;
}

}  // namespace monohs::oracle
