#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace polytri;

TEST(Heuristic, WorstFamilyFan) {
  for (bool perturb : {false, true}) {
    Polygon poly = gen_heuristic_worst(5, 4, 1, perturb);
    HeuristicResult r = heuristic_triangulate(poly);
    Node v1 = poly.nth_lightest(0);
    for (const Edge& e : r.triangulation.edges) EXPECT_TRUE(e.a == v1 || e.b == v1);
    if (!perturb) {
      EXPECT_EQ(r.report.heuristic_weight, 21);
    }
  }
}

TEST(Heuristic, Triangle) {
  HeuristicResult r = heuristic_triangulate(Polygon({2, 3, 4}));
  EXPECT_TRUE(r.triangulation.edges.empty());
  EXPECT_EQ(r.report.heuristic_weight, 9);
}

TEST(Heuristic, QuadrilateralsAreOptimal) {
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    Polygon poly = gen_random(4, seed, seed % 2 ? WeightRange{1, 5} : WeightRange{});
    HeuristicReport rep = error_ratio(poly);
    EXPECT_EQ(rep.heuristic_weight, *rep.optimal_weight) << "seed " << seed;
    EXPECT_EQ(rep.error_ratio->num, 0);
  }
}

TEST(ErrorRatio, WorstFamilyExamples) {
  HeuristicReport four = error_ratio(gen_heuristic_worst(5, 4, 1));
  EXPECT_EQ(four.heuristic_weight, 21);
  EXPECT_EQ(*four.optimal_weight, 18);
  EXPECT_EQ(four.error_ratio->str(), "1/6");
  EXPECT_EQ(error_ratio(gen_heuristic_worst(5, 100, 1)).error_ratio->str(), "11/34");
}

TEST(ErrorRatio, WorstFamilyClosedForm) {
  for (Weight t : {1u, 2u, 3u, 4u, 7u, 10u, 100u, 1000u}) {
    HeuristicReport rep = error_ratio(gen_heuristic_worst(5, t, 1));
    EXPECT_EQ(rep.heuristic_weight, Cost(2 * t + 1 + 2 * (t + 2)));
    EXPECT_EQ(*rep.optimal_weight, Cost(2 * t + 1 + (t + 2) + 3));
    EXPECT_EQ(*rep.error_ratio, Fraction::make(t - 1, 3 * (t + 2)));
  }
}

TEST(ErrorRatio, IncreasesTowardOneThird) {
  Fraction prev = Fraction::make(0, 1);
  for (Weight t : {10u, 100u, 1000u, 10000u}) {
    Fraction e = *error_ratio(gen_heuristic_worst(5, t, 1)).error_ratio;
    EXPECT_LT(prev, e);
    EXPECT_LT(e, Fraction::make(1, 3));
    prev = e;
  }
}

TEST(Heuristic, ValidAndWithinBoundOnRandomInstances) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    std::size_t n = 3 + seed % 198;
    Polygon poly = gen_random(n, seed, seed % 2 ? WeightRange{1, 10} : WeightRange{});
    HeuristicResult h = heuristic_triangulate(poly);
    ASSERT_TRUE(validate_triangulation(poly, h.triangulation.edges).ok()) << "seed " << seed;
    EXPECT_EQ(triangulation_weight(poly, h.triangulation, TriangleWeightFn::additive()), h.report.heuristic_weight);
    HeuristicReport rep = error_ratio(poly);
    EXPECT_LT(*rep.error_ratio, Fraction::make(1, 3)) << "seed " << seed;
  }
}

TEST(Heuristic, LargerWorstFamilyWithinBound) {
  for (std::size_t n = 4; n <= 40; ++n) {
    for (Weight t : {1u, 2u, 50u}) {
      HeuristicReport rep = error_ratio(gen_heuristic_worst(n, t, 3));
      EXPECT_LT(*rep.error_ratio, Fraction::make(1, 3));
    }
  }
}

TEST(Heuristic, OnlyAdditive) {
  Polygon poly({1, 2, 3, 4});
  EXPECT_THROW(heuristic_triangulate(poly, TriangleWeightFn::multiplicative()), InvalidInput);
  EXPECT_NO_THROW(heuristic_triangulate(poly, TriangleWeightFn::additive()));
}
