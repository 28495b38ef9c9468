#include <random>

#include "monohs/errors.hpp"
#include "monohs/graph.hpp"

namespace monohs {

namespace {

Graph gnp_connected(const GenParams& prm, std::mt19937_64& rng) {
  if (prm.n < 1) throw BadInput("gnp needs n >= 1");
  if (!(prm.p > 0.0 && prm.p <= 1.0)) throw BadInput("gnp needs 0 < p <= 1");
  std::bernoulli_distribution coin(prm.p);
  for (std::size_t attempt = 0; attempt < prm.max_retries; ++attempt) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < prm.n; ++u)
      for (Vertex v = u + 1; v < prm.n; ++v)
        if (coin(rng)) edges.push_back({u, v});
    try {
      return Graph(prm.n, edges);
    } catch (const ValidationError&) {
    }
  }
  throw GenerationFailed("no connected sample after " + std::to_string(prm.max_retries) +
                         " attempts");
}

Graph random_tree(const GenParams& prm, std::mt19937_64& rng) {
  if (prm.n < 1) throw BadInput("tree needs n >= 1");
  std::vector<Edge> edges;
  for (Vertex v = 1; v < prm.n; ++v) {
    std::uniform_int_distribution<Vertex> pick(0, v - 1);
    edges.push_back({pick(rng), v});
  }
  return Graph(prm.n, edges);
}

Graph clique_chain(const GenParams& prm) {
  if (prm.k < 1 || prm.q < 1) throw BadInput("clique-chain needs k, q >= 1");
  std::size_t n = prm.k * (prm.q - 1) + 1;
  std::vector<Edge> edges;
  for (std::size_t c = 0; c < prm.k; ++c) {
    auto base = static_cast<Vertex>(c * (prm.q - 1));
    for (Vertex i = 0; i < prm.q; ++i)
      for (Vertex j = i + 1; j < prm.q; ++j) edges.push_back({base + i, base + j});
  }
  return Graph(n, edges);
}

}  // namespace

Graph generate(GenKind kind, const GenParams& params, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  switch (kind) {
    case GenKind::GnpConnected:
      return gnp_connected(params, rng);
    case GenKind::Tree:
      return random_tree(params, rng);
    case GenKind::CliqueChain:
      return clique_chain(params);
  }
  throw BadInput("unknown generator");
}

}  // namespace monohs
