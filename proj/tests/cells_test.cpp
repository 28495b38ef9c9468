#include <doctest.h>

#include <map>
#include <set>

#include "monohs/cells.hpp"
#include "monohs/errors.hpp"
#include "support.hpp"

using namespace testsupport;
namespace orc = monohs::oracle;

namespace {

ClosedPair edge_pair(const Graph& g, Vertex a, Vertex b) {
  auto r = shadow_closure(g, VertexSet::single(g.n(), a), VertexSet::single(g.n(), b));
  REQUIRE(r.disjoint());
  return ClosedPair::trusted(g, r.a, r.b);
}

std::vector<VertexSet> hm_ab(const std::vector<VertexSet>& fam, const Graph& g, Vertex a, Vertex b) {
  return separating(fam, VertexSet::single(g.n(), a), VertexSet::single(g.n(), b));
}

}  // namespace

TEST_CASE("eliminate_trivial") {
  auto k3 = named("K3");
  auto p3 = edge_pair(k3, k3.vertex("a"), k3.vertex("b"));
  auto r3 = eliminate_trivial(k3, p3);
  REQUIRE(r3);
  CHECK(r3->A() == p3.A());
  CHECK(r3->B() == p3.B());

  auto k4 = named("K4");
  auto p4 = edge_pair(k4, k4.vertex("1"), k4.vertex("2"));
  auto r4 = eliminate_trivial(k4, p4);
  REQUIRE(r4);
  CHECK(r4->R() == S(k4, {"3", "4"}));

  auto c5 = named("C5");
  auto r = shadow_closure(c5, S(c5, {"v1"}), S(c5, {"v2"}));
  if (r.disjoint()) {
    CHECK_FALSE(eliminate_trivial(c5, ClosedPair::trusted(c5, r.a, r.b)));
  }
}

TEST_CASE("reduced pairs have only free variables and keep the same halfspaces") {
  for (const auto& g : property_corpus(20, 10)) {
    auto fam = orc::halfspaces(g);
    for (const auto& e : g.edges()) {
      auto r = shadow_closure(g, VertexSet::single(g.n(), e.u), VertexSet::single(g.n(), e.v));
      auto expect = hm_ab(fam, g, e.u, e.v);
      if (!r.disjoint()) {
        CHECK(expect.empty());
        continue;
      }
      auto pair = ClosedPair::trusted(g, r.a, r.b);
      auto red = eliminate_trivial(g, pair);
      CHECK(red.has_value() == !expect.empty());
      if (!red) continue;
      CHECK(pair.A().subset_of(red->A()));
      CHECK(pair.B().subset_of(red->B()));
      CHECK(separating(fam, red->A(), red->B()) == expect);
      auto phi = build_phi(g, *red);
      for (std::uint32_t v = 0; v < phi.inst.var_count(); ++v)
        CHECK(forced_value(phi.inst, v) == Forced::Free);
    }
  }
}

TEST_CASE("compute_cells") {
  auto k4 = named("K4");
  auto c4cells = compute_cells(k4, edge_pair(k4, k4.vertex("1"), k4.vertex("2")));
  REQUIRE(c4cells.size() == 2);
  CHECK(c4cells[0].first == S(k4, {"3"}));
  CHECK(c4cells[0].second.empty());
  CHECK(c4cells[1].first == S(k4, {"4"}));

  auto k3 = named("K3");
  auto c3 = compute_cells(k3, edge_pair(k3, k3.vertex("a"), k3.vertex("b")));
  REQUIRE(c3.size() == 1);
  CHECK(c3[0].first == S(k3, {"c"}));
  CHECK(c3[0].second.empty());

  auto p4 = named("P4");
  CHECK(compute_cells(p4, edge_pair(p4, p4.vertex("b"), p4.vertex("c"))).empty());
}

TEST_CASE("build_arcs examples") {
  auto k4 = named("K4");
  auto pk4 = edge_pair(k4, k4.vertex("1"), k4.vertex("2"));
  CHECK_FALSE(build_arcs(k4, pk4, compute_cells(k4, pk4)).has_arcs());
  auto k3 = named("K3");
  auto pk3 = edge_pair(k3, k3.vertex("a"), k3.vertex("b"));
  CHECK_FALSE(build_arcs(k3, pk3, compute_cells(k3, pk3)).has_arcs());

  auto cc = generate(GenKind::CliqueChain, {.k = 2, .q = 3}, 0);
  auto r = shadow_closure(cc, VertexSet::single(cc.n(), 0), VertexSet::single(cc.n(), 1));
  REQUIRE(r.disjoint());
  auto red = eliminate_trivial(cc, ClosedPair::trusted(cc, r.a, r.b));
  REQUIRE(red);
  auto ag = build_arcs(cc, *red, compute_cells(cc, *red));
  for (std::size_t c = 0; c < ag.cells.size(); ++c) CHECK_FALSE(ag.below[c][c]);
}

TEST_CASE("cells, arcs and order on reduced pairs") {
  for (const auto& g : property_corpus(30, 10)) {
    std::size_t omega = clique_number(g);
    for (const auto& e : g.edges()) {
      auto r = shadow_closure(g, VertexSet::single(g.n(), e.u), VertexSet::single(g.n(), e.v));
      if (!r.disjoint()) continue;
      auto red = eliminate_trivial(g, ClosedPair::trusted(g, r.a, r.b));
      if (!red) continue;
      auto pairs = compute_cells(g, *red);
      VertexSet covered(g.n());
      std::size_t nonempty = 0;
      for (const auto& p : pairs) {
        CHECK(p.first.any());
        CHECK_FALSE(p.first.intersects(p.second));
        CHECK_FALSE(covered.intersects(p.first | p.second));
        covered |= p.first | p.second;
        CHECK(p.first.intersects(red->boundary_R()));
        if (p.second.any()) CHECK(p.second.intersects(red->boundary_R()));
        CHECK(p.first.first() < (p.second.any() ? p.second.first() : g.n()));
        nonempty += 1 + p.second.any();
      }
      CHECK(covered == red->R());
      CHECK(nonempty <= 2 * omega);

      auto ag = build_arcs(g, *red, pairs);
      const std::size_t k = ag.cells.size();
      std::vector<int> cell_of(g.n(), -1);
      for (std::size_t c = 0; c < k; ++c)
        for (Vertex v : ag.cells[c]) cell_of[v] = static_cast<int>(c);

      // Post-elimination shortcut against the general arc test.
      auto lifted_a = ag.arcs_a, lifted_b = ag.arcs_a;
      for (auto& row : lifted_a) std::fill(row.begin(), row.end(), false);
      for (auto& row : lifted_b) std::fill(row.begin(), row.end(), false);
      for (Vertex x : red->boundary_R())
        for (Vertex y : red->boundary_R()) {
          bool via_a = implies_via(g, *red, red->A(), x, y);
          bool via_b = implies_via(g, *red, red->B(), x, y);
          if (via_a || via_b) CHECK(g.adjacent(x, y));
          if (cell_of[x] == cell_of[y]) continue;
          auto cx = static_cast<std::size_t>(cell_of[x]), cy = static_cast<std::size_t>(cell_of[y]);
          if (via_a) lifted_a[cx][cy] = true;
          if (via_b) lifted_b[cx][cy] = true;
        }
      CHECK(lifted_a == ag.arcs_a);
      CHECK(lifted_b == ag.arcs_b);

      // Reachability is a strict partial order.
      for (std::size_t c = 0; c < k; ++c) {
        CHECK_FALSE(ag.below[c][c]);
        for (std::size_t d = 0; d < k; ++d) {
          if (ag.star[c][d]) CHECK(ag.below[c][d]);
          if (ag.below[c][d]) CHECK_FALSE(ag.below[d][c]);
          for (std::size_t f = 0; f < k; ++f)
            if (ag.below[c][d] && ag.below[d][f]) CHECK(ag.below[c][f]);
        }
      }
    }
  }
}

TEST_CASE("decompose examples") {
  auto k4 = named("K4");
  auto d4 = decompose(k4, k4.vertex("1"), k4.vertex("2"));
  REQUIRE(d4);
  CHECK(d4->a_star == S(k4, {"1"}));
  CHECK(d4->b_star == S(k4, {"2"}));
  CHECK(d4->tag == CaseTag::Antichain);
  CHECK(d4->blocks == std::vector<std::vector<std::size_t>>{{0, 1}});
  CHECK(d4->pairs.size() == 2);
  CHECK(d_ab(*d4) == 2);

  auto c4 = named("C4");
  auto dc4 = decompose(c4, c4.vertex("a"), c4.vertex("b"));
  REQUIRE(dc4);
  CHECK(dc4->a_star == S(c4, {"a", "d"}));
  CHECK(dc4->b_star == S(c4, {"b", "c"}));
  CHECK(dc4->pairs.empty());
  CHECK(dc4->blocks.size() == 1);
  CHECK(dc4->blocks[0].empty());
  CHECK(d_ab(*dc4) == 0);

  auto c5 = named("C5");
  CHECK_FALSE(decompose(c5, c5.vertex("v1"), c5.vertex("v2")));

  auto k3 = named("K3");
  auto d3 = decompose(k3, k3.vertex("a"), k3.vertex("b"));
  REQUIRE(d3);
  CHECK(d_ab(*d3) == 1);

  auto p4 = named("P4");
  CHECK_THROWS_AS(decompose(p4, p4.vertex("a"), p4.vertex("c")), BadInput);
  CHECK(to_string(CaseTag::SingleTwin) == "single-twin");
}

TEST_CASE("reconstruct") {
  auto k4 = named("K4");
  auto d4 = *decompose(k4, k4.vertex("1"), k4.vertex("2"));
  std::size_t pair3 = d4.pairs[0].first == S(k4, {"3"}) ? 0 : 1;
  std::size_t chosen[] = {pair3};
  CHECK(reconstruct(d4, 0, chosen) == S(k4, {"1", "3"}));
  CHECK(reconstruct(d4, 0, {}) == S(k4, {"1"}));
  CHECK_THROWS_AS(reconstruct(d4, 1, {}), IndexOutOfRange);
  std::size_t stranger[] = {7};
  CHECK_THROWS_AS(reconstruct(d4, 0, stranger), IndexOutOfRange);

  auto c4 = named("C4");
  auto dc4 = *decompose(c4, c4.vertex("a"), c4.vertex("b"));
  CHECK(reconstruct(dc4, 0, {}) == S(c4, {"a", "d"}));
}

TEST_CASE("enumerate_edge examples") {
  auto k4 = named("K4");
  CHECK(enumerate_edge(*decompose(k4, k4.vertex("1"), k4.vertex("2"))) ==
        sets(k4, {{"1"}, {"1", "3"}, {"1", "4"}, {"1", "3", "4"}}));
  auto c4 = named("C4");
  CHECK(enumerate_edge(*decompose(c4, c4.vertex("a"), c4.vertex("b"))) == sets(c4, {{"a", "d"}}));
  auto k3 = named("K3");
  CHECK(enumerate_edge(*decompose(k3, k3.vertex("a"), k3.vertex("b"))) == sets(k3, {{"a"}, {"a", "c"}}));
}

TEST_CASE("decompositions reproduce Hm(ab) and its VC dimension") {
  std::map<CaseTag, int> seen;
  for (const auto& g : property_corpus(40, 10)) {
    auto fam = orc::halfspaces(g);
    HullCache cache(g);
    for (const auto& e : g.edges()) {
      std::optional<std::size_t> dims[2];
      for (int flip = 0; flip < 2; ++flip) {
        Vertex a = flip ? e.v : e.u, b = flip ? e.u : e.v;
        auto dec = decompose(g, a, b, &cache);
        auto expect = hm_ab(fam, g, a, b);
        CHECK(dec.has_value() == !expect.empty());
        if (!dec) continue;
        ++seen[dec->tag];
        CHECK(enumerate_edge(*dec) == expect);
        dims[flip] = d_ab(*dec);
        CHECK(*dims[flip] == orc::vc_dimension(expect, g.all()));

        // Blocks partition the pair indices.
        std::vector<int> hits(dec->pairs.size(), 0);
        for (const auto& blk : dec->blocks)
          for (auto i : blk) ++hits[i];
        for (int h : hits) CHECK(h == 1);
        CHECK_FALSE(dec->blocks.empty());
        VertexSet all = dec->a_star | dec->b_star;
        for (const auto& p : dec->pairs) all |= p.first | p.second;
        CHECK(all == g.all());

        std::size_t twins = 0;
        for (const auto& p : dec->pairs) twins += p.second.any();
        if (dec->tag == CaseTag::Quasiorder) CHECK(twins == 0);
        if (dec->tag == CaseTag::SingleTwin) {
          CHECK(twins == 1);
          CHECK(dec->blocks.size() == 2);
        }
        if (dec->tag == CaseTag::Antichain) CHECK(dec->blocks.size() == 1);
      }
      if (dims[0] || dims[1]) {
        REQUIRE(dims[0]);
        REQUIRE(dims[1]);
        CHECK(*dims[0] == *dims[1]);
      }
    }
  }
  CHECK(seen[CaseTag::Antichain] > 0);
  CHECK(seen[CaseTag::Quasiorder] > 0);
}

TEST_CASE("enumerate_halfspaces examples") {
  auto p4 = named("P4");
  CHECK(enumerate_halfspaces(p4) == orc::halfspaces(p4));
  CHECK(enumerate_halfspaces(p4).size() == 8);
  auto c4 = named("C4");
  CHECK(enumerate_halfspaces(c4).size() == 6);
  auto c5 = named("C5");
  CHECK(enumerate_halfspaces(c5) == sets(c5, {{}, {"v1", "v2", "v3", "v4", "v5"}}));
}

TEST_CASE("enumeration, sandwich and counting bounds") {
  for (const auto& g : property_corpus(40, 10)) {
    auto fam = orc::halfspaces(g);
    auto mine = enumerate_halfspaces(g);
    CHECK(mine == fam);
    auto d = orc::vc_dimension(fam, g.all());
    auto hat = vc_hat(g);
    CHECK(hat <= d);
    CHECK(d <= hat + 4);
    CHECK(mine.size() <= g.m() * (std::size_t{1} << d) + 2);
  }
  auto k4 = named("K4");
  CHECK(vc_hat(k4) == 2);
  CHECK(orc::vc_dimension(orc::halfspaces(k4), k4.all()) == 4);
  CHECK(vc_hat(named("C4")) == 0);
}

TEST_CASE("clique chains enumerate exactly") {
  for (std::size_t k = 2; k <= 5; ++k)
    for (std::size_t q = 2; q <= 4; ++q) {
      if (k * (q - 1) + 1 > 12) continue;
      auto g = generate(GenKind::CliqueChain, {.k = k, .q = q}, 0);
      CHECK(enumerate_halfspaces(g) == orc::halfspaces(g));
    }
}

TEST_CASE("single-twin layout yields 2^q + 1 halfspaces") {
  // Hand-built: q = 2 plain cells {2},{3} and one twin pair ({4},{5}).
  CellDecomposition dec;
  dec.edge = {0, 1};
  dec.a_star = VertexSet(6, {0});
  dec.b_star = VertexSet(6, {1});
  dec.pairs = {{VertexSet(6, {2}), VertexSet(6)},
               {VertexSet(6, {3}), VertexSet(6)},
               {VertexSet(6, {4}), VertexSet(6, {5})}};
  dec.tag = CaseTag::SingleTwin;

  dec.blocks = {{0, 1}, {2}};
  auto above = enumerate_edge(dec);
  CHECK(above.size() == 5);
  CHECK(std::binary_search(above.begin(), above.end(), VertexSet(6, {0, 2, 3, 4}), VertexSetLex{}));
  CHECK(std::binary_search(above.begin(), above.end(), VertexSet(6, {0, 5}), VertexSetLex{}));

  dec.blocks = {{2}, {0, 1}};
  auto below = enumerate_edge(dec);
  CHECK(below.size() == 5);
  CHECK(std::binary_search(below.begin(), below.end(), VertexSet(6, {0, 4}), VertexSetLex{}));
  CHECK(std::binary_search(below.begin(), below.end(), VertexSet(6, {0, 4, 2, 3}), VertexSetLex{}));
  CHECK(std::binary_search(below.begin(), below.end(), VertexSet(6, {0, 5}), VertexSetLex{}));
}

TEST_CASE("representative") {
  Graph g = named("K4");
  CHECK(representative({S(g, {"3", "4"}), g.empty_set()}) == g.vertex("3"));
  CHECK(representative({g.empty_set(), S(g, {"2"})}) == g.vertex("2"));
}
