#pragma once

/**
 * Linear-time stack heuristic for the additive triangle weight.
 *
 * Sweeps clockwise from the lightest node V1 with a stack seeded by the
 * first three nodes. For each incoming node v, while the stack holds at
 * least three nodes and w(below-top) + w(v) < w(V1) + w(top), the top is
 * cut off by joining v to the node below it. Leftover stack nodes are
 * fanned to V1. Each node is pushed and popped at most once.
 *
 * The error against the exact optimum is below 1/3.
 */

#include <optional>
#include <vector>

#include "polytri/bst_solver.hpp"
#include "polytri/core.hpp"

namespace polytri {

struct HeuristicReport {
  Cost heuristic_weight = 0;
  std::optional<Cost> optimal_weight;
  std::optional<Fraction> error_ratio;  // (C - C_opt) / C_opt
};

struct HeuristicResult {
  Triangulation triangulation;
  HeuristicReport report;
};

inline HeuristicResult heuristic_triangulate(const Polygon& poly) {
  const std::size_t n = poly.size();
  const Node v1 = poly.nth_lightest(0);
  const Weight w1 = poly.weight(v1);
  auto node_at = [&](std::size_t step) { return static_cast<Node>((v1 + step) % n); };

  std::vector<Edge> joins;
  joins.reserve(n - 3);
  std::vector<Node> stack{node_at(0), node_at(1), node_at(2)};
  for (std::size_t step = 3; step < n; ++step) {
    const Node v = node_at(step);
    while (stack.size() >= 3) {
      const Node top = stack.back();
      const Node below = stack[stack.size() - 2];
      // Weights are below 2^64, so both sums fit in 128 bits.
      if (!(Cost{poly.weight(below)} + poly.weight(v) < Cost{w1} + poly.weight(top))) break;
      joins.emplace_back(v, below);
      stack.pop_back();
    }
    stack.push_back(v);
  }
  while (stack.size() >= 4) {
    stack.pop_back();
    joins.emplace_back(v1, stack.back());
  }

  HeuristicResult out;
  std::sort(joins.begin(), joins.end());
  out.triangulation.edges = std::move(joins);
  out.triangulation.weight = triangulation_weight(poly, out.triangulation, TriangleWeightFn::additive());
  out.report.heuristic_weight = out.triangulation.weight;
  return out;
}

/// The heuristic is defined for additive weighting only.
inline HeuristicResult heuristic_triangulate(const Polygon& poly, const TriangleWeightFn& f) {
  if (f.kind() != WeightKind::additive) {
    throw InvalidInput("the stack heuristic supports additive weighting only, got '" + f.name() + "'");
  }
  return heuristic_triangulate(poly);
}

/// Heuristic weight, exact additive optimum and the exact relative error.
inline HeuristicReport error_ratio(const Polygon& poly) {
  HeuristicReport report = heuristic_triangulate(poly).report;
  Cost optimum = solve_bst(poly, TriangleWeightFn::additive()).weight;
  report.optimal_weight = optimum;
  report.error_ratio = Fraction::make(report.heuristic_weight - optimum, optimum);
  return report;
}

}  // namespace polytri
