#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "monohs/vertex_set.hpp"

namespace monohs {

struct Edge {
  Vertex u;
  Vertex v;
  bool operator==(const Edge&) const = default;
};

// Immutable simple undirected connected graph with a vertex name table.
class Graph {
 public:
  // Validates simplicity and connectivity; throws ValidationError.
  Graph(std::size_t n, const std::vector<Edge>& edges, std::vector<std::string> names = {});

  std::size_t n() const { return n_; }
  std::size_t m() const { return edges_.size(); }
  const VertexSet& neighbors(Vertex v) const { return adj_[v]; }
  const std::vector<Vertex>& neighbor_list(Vertex v) const { return nbr_[v]; }
  bool adjacent(Vertex u, Vertex v) const { return adj_[u].contains(v); }
  // Edges with u < v, sorted lexicographically.
  const std::vector<Edge>& edges() const { return edges_; }

  const std::string& name(Vertex v) const { return names_[v]; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<Vertex> find(std::string_view name) const;
  // Throws BadInput on unknown names.
  Vertex vertex(std::string_view name) const;
  VertexSet set(std::initializer_list<std::string_view> names) const;
  VertexSet set(const std::vector<std::string>& names) const;

  VertexSet empty_set() const { return VertexSet(n_); }
  VertexSet all() const { return VertexSet::full(n_); }

 private:
  std::size_t n_;
  std::vector<VertexSet> adj_;
  std::vector<std::vector<Vertex>> nbr_;
  std::vector<Edge> edges_;
  std::vector<std::string> names_;
  std::unordered_map<std::string, Vertex> index_;
};

// Edge-list text: one "u v" pair per line, '#' starts a comment.
Graph load_graph(std::string_view text);
Graph load_graph_file(const std::string& path);
std::string export_graph_json(const Graph& g);
std::string format_edge_list(const Graph& g);

// Components of G[within], ordered by smallest member.
std::vector<VertexSet> components(const Graph& g, const VertexSet& within);
bool is_connected(const Graph& g, const VertexSet& within);

// BFS from all sources at once, neighbors scanned in index order.
std::optional<std::vector<Vertex>> shortest_path(const Graph& g, const VertexSet& sources,
                                                 const VertexSet& targets, const VertexSet& within);
std::vector<int> bfs_distances(const Graph& g, Vertex s);
std::size_t diameter(const Graph& g);

bool is_clique(const Graph& g, const VertexSet& s);
std::size_t clique_number(const Graph& g);

enum class GenKind { GnpConnected, Tree, CliqueChain };

struct GenParams {
  std::size_t n = 0;
  double p = 0.0;
  std::size_t k = 0;
  std::size_t q = 0;
  std::size_t max_retries = 10000;
};

Graph generate(GenKind kind, const GenParams& params, std::uint64_t seed);

std::string format_set(const Graph& g, const VertexSet& s);

}  // namespace monohs
