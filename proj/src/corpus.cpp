#include "monohs/corpus.hpp"

#include <algorithm>
#include <numeric>

#include "monohs/errors.hpp"

namespace monohs {

std::vector<NamedGraph> canonical_graphs() {
  return {
      {"K3", load_graph("a b\nb c\na c\n")},
      {"P4", load_graph("a b\nb c\nc d\n")},
      {"C4", load_graph("a b\nb c\nc d\nd a\n")},
      {"C5", load_graph("v1 v2\nv2 v3\nv3 v4\nv4 v5\nv5 v1\n")},
      {"K4", load_graph("1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n")},
  };
}

Graph canonical_graph(const std::string& name) {
  for (auto& ng : canonical_graphs())
    if (ng.name == name) return ng.graph;
  throw BadInput("unknown canonical graph " + name);
}

std::vector<Graph> all_connected_graphs(std::size_t n) {
  if (n == 0 || n > 7) throw BudgetExceeded("isomorphism classes are generated for 1 <= n <= 7");
  if (n == 1) return {Graph(1, {})};
  std::vector<std::pair<Vertex, Vertex>> slots;
  std::vector<std::vector<std::size_t>> slot_of(n, std::vector<std::size_t>(n));
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) {
      slot_of[i][j] = slot_of[j][i] = slots.size();
      slots.push_back({i, j});
    }
  std::vector<std::vector<Vertex>> perms;
  std::vector<Vertex> p(n);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));

  auto connected = [&](std::uint64_t mask) {
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    std::size_t comps = n;
    for (std::size_t s = 0; s < slots.size(); ++s) {
      if (!(mask >> s & 1)) continue;
      auto a = find(slots[s].first), b = find(slots[s].second);
      if (a != b) {
        parent[a] = b;
        --comps;
      }
    }
    return comps == 1;
  };

  std::vector<Graph> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
    if (!connected(mask)) continue;
    // Keep the mask only if no relabeling produces a smaller one.
    bool minimal = true;
    for (const auto& pm : perms) {
      std::uint64_t img = 0;
      for (std::size_t s = 0; s < slots.size(); ++s)
        if (mask >> s & 1) img |= std::uint64_t{1} << slot_of[pm[slots[s].first]][pm[slots[s].second]];
      if (img < mask) {
        minimal = false;
        break;
      }
    }
    if (!minimal) continue;
    std::vector<Edge> edges;
    for (std::size_t s = 0; s < slots.size(); ++s)
      if (mask >> s & 1) edges.push_back({slots[s].first, slots[s].second});
    out.emplace_back(n, edges);
  }
  return out;
}

}  // namespace monohs
