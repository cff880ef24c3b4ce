#pragma once

// Test-only oracles. Each recomputes a quantity straight from its
// definition, independently of the library code path it checks.

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <vector>

#include "polytri/polytri.hpp"

namespace polytri::oracle {

/// Bridges by definition: every ordered pair with a nonempty clockwise gap whose
/// inner nodes are all heavier than both endpoints. O(n^3).
inline std::vector<Bridge> bridges_by_definition(const Polygon& poly) {
  std::vector<Bridge> out;
  const Node n = static_cast<Node>(poly.size());
  for (Node u = 0; u < n; ++u) {
    for (Node v = 0; v < n; ++v) {
      if (u == v || (u + 1) % n == v) continue;
      bool ok = true;
      Node lightest = kNoNode;
      for (Node x = (u + 1) % n; x != v; x = (x + 1) % n) {
        if (poly.lighter(x, u) || poly.lighter(x, v)) {
          ok = false;
          break;
        }
        if (lightest == kNoNode || poly.lighter(x, lightest)) lightest = x;
      }
      if (ok) out.push_back({u, v, lightest});
    }
  }
  return out;
}

inline std::set<std::tuple<Node, Node, Node>> as_set(const std::vector<Bridge>& bridges) {
  std::set<std::tuple<Node, Node, Node>> out;
  for (const Bridge& b : bridges) out.insert({b.u, b.v, b.s});
  return out;
}

/// Every parenthesization cost of matrices i+1..j, by explicit tree enumeration.
inline std::vector<Cost> all_parenthesization_costs(const std::vector<Weight>& p, std::size_t i, std::size_t j) {
  if (j - i == 1) return {0};
  std::vector<Cost> out;
  for (std::size_t m = i + 1; m < j; ++m) {
    auto left = all_parenthesization_costs(p, i, m);
    auto right = all_parenthesization_costs(p, m, j);
    Cost join = static_cast<Cost>(p[i]) * p[m] * p[j];
    for (Cost l : left) {
      for (Cost r : right) out.push_back(l + r + join);
    }
  }
  return out;
}

inline Cost min_chain_cost_bruteforce(const ChainDims& chain) {
  auto costs = all_parenthesization_costs(chain.dims(), 0, chain.dims().size() - 1);
  return *std::min_element(costs.begin(), costs.end());
}

/// Optimal triangulation weight of an arbitrary sub-polygon given by node list.
inline Cost subpolygon_optimum(const Polygon& poly, const std::vector<Node>& nodes, const TriangleWeightFn& f) {
  std::vector<Weight> weights;
  for (Node x : nodes) weights.push_back(poly.weight(x));
  if (weights.size() == 3) return f(weights[0], weights[1], weights[2]);
  return solve_dp_cubic(Polygon(weights), f).weight;
}

inline bool has_edge(const std::vector<Edge>& edges, Node a, Node b) {
  return std::binary_search(edges.begin(), edges.end(), Edge(a, b));
}

/// Connected in the triangulation: a polygon side or an internal edge.
inline bool connected(const Polygon& poly, const std::vector<Edge>& edges, Node a, Node b) {
  return poly.adjacent(a, b) || has_edge(edges, a, b);
}

inline Cost catalan(std::size_t k) {
  Cost c = 1;
  for (std::size_t i = 0; i < k; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return c;
}

}  // namespace polytri::oracle
