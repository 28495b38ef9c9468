#include <doctest.h>

#include <json.hpp>

#include "monohs/errors.hpp"
#include "support.hpp"

using namespace testsupport;

TEST_CASE("load_graph builds graphs in first-appearance order") {
  auto g = load_graph("a b\nb c");
  CHECK(g.n() == 3);
  CHECK(g.m() == 2);
  CHECK(g.name(0) == "a");
  CHECK(g.name(2) == "c");
  auto h = load_graph("# comment\n\nx y # trailing\n  y z\n");
  CHECK(h.n() == 3);
  CHECK(h.adjacent(h.vertex("x"), h.vertex("y")));
}

TEST_CASE("load_graph rejects bad input") {
  CHECK_THROWS_AS(load_graph("a b\nc d"), ValidationError);
  CHECK_THROWS_AS(load_graph("a a"), ValidationError);
  CHECK_THROWS_AS(load_graph("a b\nb a"), ValidationError);
  CHECK_THROWS_AS(load_graph("a b c"), ParseError);
  CHECK_THROWS_AS(load_graph("a\n"), ParseError);
  CHECK_THROWS_AS(load_graph(""), ParseError);
  try {
    load_graph("a b\nq\n");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
}

TEST_CASE("components in smallest-member order") {
  auto c4 = named("C4");
  CHECK(components(c4, S(c4, {"b", "d"})) == std::vector<VertexSet>{S(c4, {"b"}), S(c4, {"d"})});
  auto p4 = named("P4");
  CHECK(components(p4, S(p4, {"a", "c", "d"})) == std::vector<VertexSet>{S(p4, {"a"}), S(p4, {"c", "d"})});
  auto k4 = named("K4");
  CHECK(components(k4, S(k4, {"1", "2", "3"})) == std::vector<VertexSet>{S(k4, {"1", "2", "3"})});
  CHECK(components(k4, k4.empty_set()).empty());
}

TEST_CASE("shortest_path") {
  auto p4 = named("P4");
  auto path = shortest_path(p4, S(p4, {"a"}), S(p4, {"d"}), p4.all());
  REQUIRE(path);
  CHECK(*path == std::vector<Vertex>{0, 1, 2, 3});
  CHECK_FALSE(shortest_path(p4, S(p4, {"a"}), S(p4, {"d"}), S(p4, {"a", "b", "d"})));
  auto c4 = named("C4");
  auto p2 = shortest_path(c4, S(c4, {"a"}), S(c4, {"c"}), c4.all());
  REQUIRE(p2);
  CHECK(*p2 == std::vector<Vertex>{c4.vertex("a"), c4.vertex("b"), c4.vertex("c")});
  CHECK_THROWS_AS(shortest_path(c4, c4.empty_set(), S(c4, {"c"}), c4.all()), EmptyTerminal);
}

TEST_CASE("shortest paths are BFS-short, simple and adjacent") {
  for (const auto& g : property_corpus(10, 10)) {
    for (Vertex u = 0; u < g.n(); ++u) {
      auto dist = bfs_distances(g, u);
      for (Vertex v = 0; v < g.n(); ++v) {
        if (u == v) continue;
        auto p = shortest_path(g, VertexSet::single(g.n(), u), VertexSet::single(g.n(), v), g.all());
        REQUIRE(p);
        CHECK(static_cast<int>(p->size()) == dist[v] + 1);
        CHECK(VertexSet::from(g.n(), p->begin(), p->end()).count() == p->size());
        for (std::size_t i = 0; i + 1 < p->size(); ++i) CHECK(g.adjacent((*p)[i], (*p)[i + 1]));
      }
    }
  }
}

TEST_CASE("is_clique and clique_number") {
  auto k4 = named("K4");
  CHECK(is_clique(k4, S(k4, {"1", "2", "3"})));
  auto c4 = named("C4");
  CHECK_FALSE(is_clique(c4, S(c4, {"a", "c"})));
  auto p4 = named("P4");
  CHECK(is_clique(p4, p4.empty_set()));
  CHECK(clique_number(k4) == 4);
  CHECK(clique_number(named("C5")) == 2);
  CHECK(clique_number(p4) == 2);
}

TEST_CASE("clique predicates agree with edge counting") {
  std::mt19937_64 rng(3);
  for (const auto& g : property_corpus(10, 10)) {
    std::size_t deg = 0;
    for (Vertex v = 0; v < g.n(); ++v) deg += g.neighbors(v).count();
    CHECK(deg == 2 * g.m());
    CHECK(components(g, g.all()).size() == 1);
    std::size_t best = 0;
    for (int t = 0; t < 50; ++t) {
      auto s = random_subset(g.n(), rng);
      std::size_t inside = 0;
      for (const auto& e : g.edges()) inside += s.contains(e.u) && s.contains(e.v);
      std::size_t k = s.count();
      CHECK(is_clique(g, s) == (inside == k * (k - 1) / 2));
    }
    if (g.n() <= 10) {
      for (std::uint64_t mask = 0; mask < (1u << g.n()); ++mask) {
        VertexSet s(g.n());
        for (Vertex v = 0; v < g.n(); ++v)
          if (mask >> v & 1) s.insert(v);
        if (is_clique(g, s)) best = std::max(best, s.count());
      }
      CHECK(clique_number(g) == best);
    }
  }
}

TEST_CASE("generators") {
  auto t = generate(GenKind::Tree, {.n = 5}, 1);
  CHECK(t.n() == 5);
  CHECK(t.m() == 4);
  auto cc = generate(GenKind::CliqueChain, {.k = 2, .q = 3}, 0);
  CHECK(cc.n() == 5);
  CHECK(cc.m() == 6);
  CHECK(clique_number(cc) == 3);
  auto g = generate(GenKind::GnpConnected, {.n = 8, .p = 0.4}, 7);
  CHECK(g.n() == 8);
  CHECK(is_connected(g, g.all()));
  auto g2 = generate(GenKind::GnpConnected, {.n = 8, .p = 0.4}, 7);
  CHECK(g.edges() == g2.edges());
  CHECK_THROWS_AS(generate(GenKind::GnpConnected, {.n = 30, .p = 0.001, .max_retries = 5}, 1),
                  GenerationFailed);
}

TEST_CASE("isomorphism classes of connected graphs") {
  // OEIS A001349.
  std::size_t expected[] = {0, 1, 1, 2, 6, 21, 112};
  for (std::size_t n = 1; n <= 6; ++n) CHECK(all_connected_graphs(n).size() == expected[n]);
}

TEST_CASE("json export and edge-list round trip") {
  auto p4 = named("P4");
  auto j = nlohmann::json::parse(export_graph_json(p4));
  CHECK(j["n"] == 4);
  CHECK(j["edges"].size() == 3);
  CHECK(j["names"][3] == "d");
  auto again = load_graph(format_edge_list(p4));
  CHECK(again.edges() == p4.edges());
  CHECK(again.names() == p4.names());
}

TEST_CASE("vertex sets") {
  VertexSet s(130, {0, 64, 129});
  CHECK(s.count() == 3);
  CHECK(s.members() == std::vector<Vertex>{0, 64, 129});
  CHECK(s.complement().count() == 127);
  CHECK(VertexSet::full(130).count() == 130);
  CHECK((s - VertexSet(130, {64})).count() == 2);
  CHECK(VertexSet(5, {0, 2}).lex_less(VertexSet(5, {0, 3})));
  CHECK(VertexSet(5, {0}).lex_less(VertexSet(5, {0, 3})));
  CHECK_FALSE(VertexSet(5, {1}).lex_less(VertexSet(5, {0, 3})));
  CHECK(VertexSet(5).lex_less(VertexSet(5, {4})));
}
