#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace polytri;

namespace {

const std::vector<TriangleWeightFn>& all_fns() {
  static const std::vector<TriangleWeightFn> fns{TriangleWeightFn::multiplicative(), TriangleWeightFn::additive(),
                                                 product_plus_sum()};
  return fns;
}

}  // namespace

TEST(SolveYao, Examples) {
  SolveResult quad = solve_yao(Polygon({1, 2, 5, 3}), TriangleWeightFn::multiplicative());
  EXPECT_EQ(quad.weight, 25);
  EXPECT_EQ(quad.stats.visited_cones, 3u);
  EXPECT_EQ(solve_yao(Polygon({1, 2, 4, 6, 5, 3}), TriangleWeightFn::additive()).stats.visited_cones, 10u);
  SolveResult tri = solve_yao(Polygon({2, 3, 4}), TriangleWeightFn::multiplicative());
  EXPECT_EQ(tri.weight, 24);
  EXPECT_LE(tri.stats.visited_cones, 1u);
}

TEST(SolveYao, MatchesOtherSolvers) {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    std::size_t n = 3 + seed % 198;
    Polygon poly = gen_random(n, 40 + seed, seed % 3 == 0 ? WeightRange{1, 5} : WeightRange{1, 1000});
    for (const auto& f : all_fns()) {
      SolveResult yao = solve_yao(poly, f);
      SolveResult bst = solve_bst(poly, f);
      EXPECT_EQ(yao.weight, solve_dp_cubic(poly, f).weight) << "seed " << seed;
      EXPECT_EQ(yao.weight, bst.weight);
      ASSERT_TRUE(validate_triangulation(poly, yao.triangulation.edges).ok());
      EXPECT_EQ(triangulation_weight(poly, yao.triangulation, f), yao.weight);
      EXPECT_EQ(yao.stats.visited_cones, enumerate_cones(poly, find_bridges_walk(poly)).size());
      EXPECT_EQ(yao.stats.visited_cones, yao.stats.total_cones);
      EXPECT_LE(bst.stats.visited_cones, yao.stats.visited_cones);
    }
  }
}

TEST(SolveYao, StaircaseVisitsEveryCone) {
  for (std::size_t h : {2u, 3u, 10u, 100u}) {
    SolveResult r = solve_yao(gen_staircase(h), TriangleWeightFn::additive());
    EXPECT_EQ(r.stats.total_cones, (2 * h - 2) * (2 * h - 1) / 2);
  }
}

// Reading a cone that has not been computed yet throws, so a full solve proves the order sound.
TEST(ConeTable, UnevaluatedReadThrows) {
  Polygon poly({1, 2, 5, 3});
  BridgeTable t = find_bridges_linear(poly);
  detail::ConeTable table(poly, t);
  EXPECT_EQ(table.size(), 3u);
  EXPECT_THROW(table.value(Cone{1, 3, 0}), std::logic_error);
  EXPECT_THROW(table.slot(Cone{0, 2, kNoNode}), std::logic_error);
}

TEST(SolveYao, RejectsNonMonotone) {
  auto bad = TriangleWeightFn::custom("min", [](Weight a, Weight b, Weight c) { return Cost(std::min({a, b, c})); });
  EXPECT_THROW(solve_yao(Polygon({1, 2, 3, 4}), bad), NonMonotoneError);
}
