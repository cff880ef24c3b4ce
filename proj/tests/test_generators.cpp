#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace polytri;

TEST(GenRandom, Deterministic) {
  EXPECT_EQ(gen_random(5, 7), gen_random(5, 7));
  EXPECT_EQ(gen_random(1000, 42, {1, 10}), gen_random(1000, 42, {1, 10}));
  EXPECT_EQ(gen_random(3, 99).size(), 3u);
}

TEST(GenRandom, RespectsRange) {
  Polygon poly = gen_random(5000, 3, {10, 20});
  std::set<Weight> seen(poly.weights().begin(), poly.weights().end());
  EXPECT_EQ(*seen.begin(), 10u);
  EXPECT_EQ(*seen.rbegin(), 20u);
  EXPECT_EQ(seen.size(), 11u);
}

TEST(GenRandom, Distinct) {
  Polygon poly = gen_random(100, 5, {1, 100}, true);
  std::set<Weight> seen(poly.weights().begin(), poly.weights().end());
  EXPECT_EQ(seen.size(), 100u);
  EXPECT_THROW(gen_random(10, 5, {1, 9}, true), InvalidInput);
}

// Fixed seed, fixed output: the mapping onto the range is part of the contract.
TEST(GenRandom, PinnedOutput) {
  std::mt19937_64 rng(2024);
  std::vector<Weight> expect;
  for (int i = 0; i < 6; ++i) expect.push_back(1 + rng() % 1'000'000);
  EXPECT_EQ(gen_random(6, 2024).weights(), expect);
}

TEST(GenStaircase, Examples) {
  EXPECT_EQ(gen_staircase(2).weights(), (std::vector<Weight>{1, 2, 4, 3}));
  EXPECT_EQ(gen_staircase(3).weights(), (std::vector<Weight>{1, 2, 4, 6, 5, 3}));
  EXPECT_EQ(gen_staircase(4).weights(), (std::vector<Weight>{1, 2, 4, 6, 8, 7, 5, 3}));
  EXPECT_THROW(gen_staircase(1), InvalidInput);
}

TEST(GenStaircase, BridgeForms) {
  for (std::size_t h = 2; h <= 30; ++h) {
    Polygon poly = gen_staircase(h);
    // Node of rank r has weight r + 1.
    auto node_of = [&](std::size_t label) { return poly.nth_lightest(label - 1); };
    std::set<std::pair<Node, Node>> expect;
    for (std::size_t k = 1; k <= h - 1; ++k) {
      expect.insert({node_of(2 * k), node_of(2 * k - 1)});
      expect.insert({node_of(2 * k), node_of(2 * k + 1)});
    }
    std::set<std::pair<Node, Node>> got;
    BridgeTable table = find_bridges_linear(poly);
    for (const Bridge& b : table.bridges()) {
      got.insert({b.u, b.v});
      got.insert({b.v, b.u});
    }
    for (auto [a, b] : expect) EXPECT_TRUE(got.count({a, b})) << h;
    EXPECT_EQ(table.size(), 2 * h - 2);
  }
}

TEST(GenHeuristicWorst, Examples) {
  EXPECT_EQ(gen_heuristic_worst(5, 4, 1).weights(), (std::vector<Weight>{1, 1, 4, 4, 1}));
  EXPECT_EQ(gen_heuristic_worst(6, 2, 1).weights(), (std::vector<Weight>{1, 1, 1, 2, 2, 1}));
  EXPECT_EQ(gen_heuristic_worst(4, 1, 1).weights(), (std::vector<Weight>{1, 1, 1, 1}));
  EXPECT_THROW(gen_heuristic_worst(3, 2, 1), InvalidInput);
  EXPECT_THROW(gen_heuristic_worst(5, 0, 1), InvalidInput);
}

TEST(GenHeuristicWorst, PerturbedKeepsLabelOrder) {
  for (std::size_t n = 4; n <= 20; ++n) {
    Polygon poly = gen_heuristic_worst(n, 3, 2, true);
    std::set<Weight> seen(poly.weights().begin(), poly.weights().end());
    EXPECT_EQ(seen.size(), n);
    // Clockwise from node 0 the ranks read 0, 1, 3, 5, ... then ..., 4, 2.
    std::vector<Node> ranks;
    for (Node i = 0; i < n; ++i) ranks.push_back(poly.order(i));
    std::vector<Node> expect{0};
    for (Node r = 1; r < n; r += 2) expect.push_back(r);
    for (Node r = (n % 2 == 0) ? n - 2 : n - 1; r >= 2; r -= 2) expect.push_back(r);
    EXPECT_EQ(ranks, expect) << n;
    auto add = TriangleWeightFn::additive();
    Polygon plain = gen_heuristic_worst(n, 3, 2);
    Triangulation perturbed_opt = solve_bst(poly, add).triangulation;
    EXPECT_EQ(triangulation_weight(plain, perturbed_opt, add), solve_bst(plain, add).weight) << n;
  }
}

TEST(GenRandomChain, Shape) {
  EXPECT_EQ(gen_random_chain(3, 1).dims(), gen_random_chain(3, 1).dims());
  EXPECT_EQ(gen_random_chain(1, 9).dims().size(), 2u);
  EXPECT_EQ(gen_random_chain(12, 4).matrix_count(), 12u);
  ChainDims chain = gen_random_chain(200, 4);
  for (Weight d : chain.dims()) {
    EXPECT_GE(d, 1u);
    EXPECT_LE(d, 100u);
  }
}
