#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace polytri;
using polytri::oracle::as_set;
using polytri::oracle::bridges_by_definition;

namespace {

using Triple = std::tuple<Node, Node, Node>;

std::set<Triple> triples(const BridgeTable& t) { return as_set(t.bridges()); }

bool crosses(const Polygon& poly, const Bridge& a, const Bridge& b) {
  auto inside = [&](Node x, Node u, Node v) { return x != u && x != v && poly.gap(u, x) < poly.gap(u, v); };
  if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v) return false;
  return inside(b.u, a.u, a.v) != inside(b.v, a.u, a.v);
}

}  // namespace

TEST(FindBridges, Examples) {
  Polygon pent({1, 5, 3, 7, 2});
  std::set<Triple> expect{{0, 2, 1}, {0, 4, 2}, {2, 4, 3}};
  EXPECT_EQ(triples(find_bridges_walk(pent)), expect);
  EXPECT_EQ(triples(find_bridges_linear(pent)), expect);

  EXPECT_EQ(triples(find_bridges_walk(Polygon({1, 2, 3}))), (std::set<Triple>{{1, 0, 2}}));

  Polygon star({1, 2, 4, 6, 5, 3});
  std::set<Triple> star_bridges = triples(find_bridges_walk(star));
  std::set<std::pair<Node, Node>> pairs;
  for (auto [u, v, s] : star_bridges) pairs.insert({u, v});
  EXPECT_EQ(pairs, (std::set<std::pair<Node, Node>>{{1, 0}, {1, 5}, {2, 5}, {2, 4}}));
  EXPECT_EQ(find_bridges_linear(star), find_bridges_walk(star));
  EXPECT_EQ(find_bridges_linear(Polygon({3, 1, 2})), find_bridges_walk(Polygon({3, 1, 2})));
}

TEST(FindBridges, SLookup) {
  BridgeTable t = find_bridges_walk(Polygon({1, 5, 3, 7, 2}));
  EXPECT_EQ(t.S(0, 2), 1u);
  EXPECT_EQ(t.S(0, 4), 2u);
  EXPECT_EQ(t.S(2, 4), 3u);
  EXPECT_FALSE(t.is_bridge(2, 0));
  EXPECT_THROW(t.S(1, 3), std::exception);
}

TEST(FindBridges, MatchDefinitionOnRandomPolygons) {
  for (std::uint64_t seed = 0; seed < 400; ++seed) {
    std::size_t n = 3 + seed % 58;
    WeightRange range = seed % 2 ? WeightRange{1, 8} : WeightRange{1, 1'000'000};
    Polygon poly = gen_random(n, seed, range);
    BridgeTable walk = find_bridges_walk(poly);
    BridgeTable linear = find_bridges_linear(poly);
    auto oracle = as_set(bridges_by_definition(poly));
    EXPECT_EQ(triples(walk), oracle) << "seed " << seed;
    EXPECT_EQ(walk, linear) << "seed " << seed;
    EXPECT_LE(walk.size(), n - 1);
    EXPECT_EQ(walk.size(), n - 2);
  }
}

TEST(FindBridges, StructuralProperties) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Polygon poly = gen_random(3 + seed % 40, 500 + seed, {1, 20});
    BridgeTable table = find_bridges_linear(poly);
    const auto& bridges = table.bridges();
    const Node v1 = poly.nth_lightest(0), v2 = poly.nth_lightest(1);
    for (std::size_t i = 0; i < bridges.size(); ++i) {
      for (std::size_t j = i + 1; j < bridges.size(); ++j) {
        EXPECT_FALSE(crosses(poly, bridges[i], bridges[j]));
        std::set<Node> a{bridges[i].u, bridges[i].v}, b{bridges[j].u, bridges[j].v};
        if (a == b) {
          EXPECT_EQ(a, (std::set<Node>{v1, v2}));
        }
      }
    }
  }
}

TEST(Cones, Examples) {
  Polygon star({1, 2, 4, 6, 5, 3});
  BridgeTable st = find_bridges_walk(star);
  EXPECT_EQ(enumerate_cones(star, st).size(), 10u);
  EXPECT_EQ(count_cones(star, st), 10u);

  Polygon quad({1, 2, 5, 3});
  auto cones = enumerate_cones(quad, find_bridges_walk(quad));
  std::set<std::tuple<Node, Node, Node>> got;
  for (const Cone& c : cones) got.insert({c.u, c.v, c.apex});
  EXPECT_EQ(got, (std::set<std::tuple<Node, Node, Node>>{{1, 3, kNoNode}, {1, 3, 0}, {1, 0, kNoNode}}));

  Polygon tri({1, 2, 3});
  auto one = enumerate_cones(tri, find_bridges_walk(tri));
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0], (Cone{1, 0, kNoNode}));
}

TEST(Cones, StaircaseCount) {
  for (std::size_t h : {2u, 3u, 5u, 10u, 40u}) {
    Polygon poly = gen_staircase(h);
    BridgeTable t = find_bridges_linear(poly);
    EXPECT_EQ(t.size(), 2 * h - 2);
    EXPECT_EQ(enumerate_cones(poly, t).size(), (2 * h - 2) * (2 * h - 1) / 2);
  }
}

TEST(Cones, ApexIsLighterThanEveryConeNode) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Polygon poly = gen_random(3 + seed % 30, seed, {1, 10});
    BridgeTable t = find_bridges_walk(poly);
    std::set<std::uint64_t> keys;
    for (const Cone& c : enumerate_cones(poly, t)) {
      EXPECT_TRUE(keys.insert(cone_key(c)).second);
      if (!c.has_apex()) continue;
      for (Node x : cone_nodes(poly, c)) {
        if (x != c.apex) {
          EXPECT_TRUE(poly.lighter(c.apex, x));
        }
      }
    }
  }
}

TEST(ConeNodes, Examples) {
  Polygon quad({1, 2, 5, 3});
  EXPECT_EQ(cone_nodes(quad, Cone{1, 3, kNoNode}), (std::vector<Node>{1, 2, 3}));
  EXPECT_EQ(cone_nodes(quad, Cone{1, 3, 0}), (std::vector<Node>{0, 1, 2, 3}));
  Polygon star({1, 2, 4, 6, 5, 3});
  EXPECT_EQ(cone_nodes(star, Cone{2, 4, kNoNode}), (std::vector<Node>{2, 3, 4}));
  EXPECT_THROW(cone_nodes(quad, Cone{1, 3, 2}), InvalidInput);
}
