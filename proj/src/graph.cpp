#include "monohs/graph.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "monohs/errors.hpp"

namespace monohs {

Graph::Graph(std::size_t n, const std::vector<Edge>& edges, std::vector<std::string> names)
    : n_(n), adj_(n, VertexSet(n)), nbr_(n), names_(std::move(names)) {
  if (n == 0) throw ValidationError("empty graph");
  if (names_.empty()) {
    for (std::size_t i = 0; i < n; ++i) names_.push_back(std::to_string(i));
  }
  if (names_.size() != n) throw ValidationError("name table size mismatch");
  for (std::size_t i = 0; i < n; ++i) {
    if (!index_.emplace(names_[i], static_cast<Vertex>(i)).second)
      throw ValidationError("duplicate vertex name " + names_[i]);
  }
  for (const auto& e : edges) {
    if (e.u >= n || e.v >= n) throw ValidationError("edge endpoint out of range");
    if (e.u == e.v) throw ValidationError("loop at " + names_[e.u]);
    if (adj_[e.u].contains(e.v))
      throw ValidationError("duplicate edge " + names_[e.u] + " " + names_[e.v]);
    adj_[e.u].insert(e.v);
    adj_[e.v].insert(e.u);
    edges_.push_back(e.u < e.v ? e : Edge{e.v, e.u});
  }
  std::sort(edges_.begin(), edges_.end(),
            [](const Edge& a, const Edge& b) { return a.u != b.u ? a.u < b.u : a.v < b.v; });
  for (std::size_t v = 0; v < n; ++v) nbr_[v] = adj_[v].members();
  if (!is_connected(*this, all())) throw ValidationError("disconnected");
}

std::optional<Vertex> Graph::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Vertex Graph::vertex(std::string_view name) const {
  auto v = find(name);
  if (!v) throw BadInput("unknown vertex " + std::string(name));
  return *v;
}

VertexSet Graph::set(std::initializer_list<std::string_view> names) const {
  VertexSet s(n_);
  for (auto nm : names) s.insert(vertex(nm));
  return s;
}

VertexSet Graph::set(const std::vector<std::string>& names) const {
  VertexSet s(n_);
  for (const auto& nm : names) s.insert(vertex(nm));
  return s;
}

Graph load_graph(std::string_view text) {
  std::vector<std::string> names;
  std::unordered_map<std::string, Vertex> index;
  std::vector<Edge> edges;
  auto intern = [&](const std::string& s) {
    auto [it, fresh] = index.emplace(s, static_cast<Vertex>(names.size()));
    if (fresh) names.push_back(s);
    return it->second;
  };
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    if (tok.size() != 2)
      throw ParseError("line " + std::to_string(lineno) + ": expected two tokens, got " +
                       std::to_string(tok.size()));
    Vertex u = intern(tok[0]);
    Vertex v = intern(tok[1]);
    edges.push_back({u, v});
  }
  if (names.empty()) throw ParseError("no edges");
  std::size_t n = names.size();
  return Graph(n, edges, std::move(names));
}

Graph load_graph_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::ios_base::failure("cannot open " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return load_graph(ss.str());
}

std::string export_graph_json(const Graph& g) {
  nlohmann::json j;
  j["n"] = g.n();
  auto edges = nlohmann::json::array();
  for (const auto& e : g.edges()) edges.push_back({e.u, e.v});
  j["edges"] = edges;
  j["names"] = g.names();
  return j.dump();
}

std::string format_edge_list(const Graph& g) {
  std::string out;
  for (const auto& e : g.edges()) out += g.name(e.u) + " " + g.name(e.v) + "\n";
  return out;
}

std::vector<VertexSet> components(const Graph& g, const VertexSet& within) {
  std::vector<VertexSet> out;
  VertexSet left = within;
  std::vector<Vertex> stack;
  while (left.any()) {
    auto s = static_cast<Vertex>(left.first());
    VertexSet comp(g.n());
    comp.insert(s);
    left.erase(s);
    stack.assign(1, s);
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      for (Vertex y : g.neighbor_list(x)) {
        if (left.contains(y)) {
          left.erase(y);
          comp.insert(y);
          stack.push_back(y);
        }
      }
    }
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const Graph& g, const VertexSet& within) {
  return components(g, within).size() <= 1;
}

std::optional<std::vector<Vertex>> shortest_path(const Graph& g, const VertexSet& sources,
                                                 const VertexSet& targets, const VertexSet& within) {
  VertexSet src = sources & within;
  VertexSet dst = targets & within;
  if (sources.empty() || targets.empty()) throw EmptyTerminal("sources or targets empty");
  if (src.empty() || dst.empty()) return std::nullopt;
  if (src.intersects(dst)) return std::vector<Vertex>{static_cast<Vertex>((src & dst).first())};
  const Vertex none = static_cast<Vertex>(g.n());
  std::vector<Vertex> parent(g.n(), none);
  VertexSet seen = src;
  std::vector<Vertex> queue = src.members();
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex x = queue[head];
    for (Vertex y : g.neighbor_list(x)) {
      if (seen.contains(y) || !within.contains(y)) continue;
      seen.insert(y);
      parent[y] = x;
      if (dst.contains(y)) {
        std::vector<Vertex> path{y};
        while (parent[path.back()] != none) path.push_back(parent[path.back()]);
        std::reverse(path.begin(), path.end());
        return path;
      }
      queue.push_back(y);
    }
  }
  return std::nullopt;
}

std::vector<int> bfs_distances(const Graph& g, Vertex s) {
  std::vector<int> dist(g.n(), -1);
  std::vector<Vertex> queue{s};
  dist[s] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex x = queue[head];
    for (Vertex y : g.neighbor_list(x)) {
      if (dist[y] < 0) {
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
    }
  }
  return dist;
}

std::size_t diameter(const Graph& g) {
  int best = 0;
  for (Vertex v = 0; v < g.n(); ++v) {
    auto d = bfs_distances(g, v);
    best = std::max(best, *std::max_element(d.begin(), d.end()));
  }
  return static_cast<std::size_t>(best);
}

bool is_clique(const Graph& g, const VertexSet& s) {
  for (Vertex v : s) {
    VertexSet rest = s;
    rest.erase(v);
    if (!rest.subset_of(g.neighbors(v))) return false;
  }
  return true;
}

namespace {

// Branch and bound with a greedy colouring bound.
struct CliqueSearch {
  const Graph& g;
  std::size_t best = 0;

  void expand(std::size_t size, VertexSet cand) {
    if (cand.empty()) {
      best = std::max(best, size);
      return;
    }
    std::vector<Vertex> order;
    std::vector<std::size_t> colour;
    VertexSet uncoloured = cand;
    std::size_t c = 0;
    while (uncoloured.any()) {
      ++c;
      VertexSet avail = uncoloured;
      while (avail.any()) {
        auto v = static_cast<Vertex>(avail.first());
        avail.erase(v);
        avail -= g.neighbors(v);
        uncoloured.erase(v);
        order.push_back(v);
        colour.push_back(c);
      }
    }
    for (std::size_t i = order.size(); i-- > 0;) {
      if (size + colour[i] <= best) return;
      Vertex v = order[i];
      expand(size + 1, cand & g.neighbors(v));
      cand.erase(v);
    }
  }
};

}  // namespace

std::size_t clique_number(const Graph& g) {
  CliqueSearch s{g};
  s.expand(0, g.all());
  return s.best;
}

std::string format_set(const Graph& g, const VertexSet& s) {
  std::string out = "{";
  bool first = true;
  for (Vertex v : s) {
    if (!first) out += ",";
    out += g.name(v);
    first = false;
  }
  return out + "}";
}

}  // namespace monohs
