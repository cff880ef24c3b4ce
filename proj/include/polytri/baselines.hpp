#pragma once

// Ground-truth solvers: the textbook cubic interval DP and exhaustive
// enumeration of all Catalan(n-2) triangulations.

#include <functional>
#include <vector>

#include "polytri/core.hpp"

namespace polytri {

struct ExactSolution {
  Cost weight = 0;
  Triangulation triangulation;
};

/**
 * Classic O(n^3) interval DP. The closing side (0, n-1) is the anchor:
 * cost(i,j) = min over i<m<j of cost(i,m) + cost(m,j) + f(i,m,j), with
 * cost(i,i+1) = 0. Ties go to the smallest split node.
 */
inline ExactSolution solve_dp_cubic(const Polygon& poly, const TriangleWeightFn& f) {
  const std::size_t n = poly.size();
  std::vector<Cost> cost(n * n, 0);
  std::vector<Node> split(n * n, kNoNode);
  auto at = [n](std::size_t i, std::size_t j) { return i * n + j; };
  for (std::size_t len = 2; len < n; ++len) {
    for (std::size_t i = 0; i + len < n; ++i) {
      std::size_t j = i + len;
      Weight wi = poly.weights()[i], wj = poly.weights()[j];
      Cost best = -1;
      Node best_m = kNoNode;
      for (std::size_t m = i + 1; m < j; ++m) {
        Cost c = checked::add(checked::add(cost[at(i, m)], cost[at(m, j)]), f(wi, poly.weights()[m], wj));
        if (best < 0 || c < best) {
          best = c;
          best_m = static_cast<Node>(m);
        }
      }
      cost[at(i, j)] = best;
      split[at(i, j)] = best_m;
    }
  }

  ExactSolution out;
  out.weight = cost[at(0, n - 1)];
  std::vector<Triangle> triangles;
  triangles.reserve(n - 2);
  std::vector<std::pair<Node, Node>> pending{{0, static_cast<Node>(n - 1)}};
  while (!pending.empty()) {
    auto [i, j] = pending.back();
    pending.pop_back();
    if (j - i < 2) continue;
    Node m = split[at(i, j)];
    triangles.push_back({i, m, j});
    pending.push_back({i, m});
    pending.push_back({m, j});
  }
  out.triangulation = triangulation_from_triangles(n, triangles, out.weight);
  return out;
}

inline constexpr std::size_t kMaxEnumerationNodes = 14;

namespace detail {

// Depth-first enumeration over pending intervals; the visitor sees the
// chord list and the triangle list of each complete triangulation.
class TriangulationEnumerator {
 public:
  using Visitor = std::function<void(const std::vector<Edge>&, const std::vector<Triangle>&)>;

  TriangulationEnumerator(std::size_t n, Visitor visit) : n_(n), visit_(std::move(visit)) {}

  void run() {
    pending_.push_back({0, static_cast<Node>(n_ - 1)});
    step();
  }

 private:
  void step() {
    if (pending_.empty()) {
      visit_(edges_, triangles_);
      return;
    }
    auto [i, j] = pending_.back();
    pending_.pop_back();
    if (j - i < 2) {
      step();
    } else {
      for (Node m = i + 1; m < j; ++m) {
        std::size_t edge_mark = edges_.size();
        if (m - i >= 2) edges_.emplace_back(i, m);
        if (j - m >= 2) edges_.emplace_back(m, j);
        triangles_.push_back({i, m, j});
        pending_.push_back({i, m});
        pending_.push_back({m, j});
        step();
        pending_.pop_back();
        pending_.pop_back();
        triangles_.pop_back();
        edges_.resize(edge_mark);
      }
    }
    pending_.push_back({i, j});
  }

  std::size_t n_;
  Visitor visit_;
  std::vector<std::pair<Node, Node>> pending_;
  std::vector<Edge> edges_;
  std::vector<Triangle> triangles_;
};

inline void check_enumeration_size(std::size_t n) {
  if (n < 3 || n > kMaxEnumerationNodes) {
    throw InvalidInput("triangulation enumeration supports 3 <= n <= " + std::to_string(kMaxEnumerationNodes) +
                       ", got " + std::to_string(n));
  }
}

}  // namespace detail

/// Calls `visit` once per triangulation of the convex n-gon (Catalan(n-2) calls).
inline void enumerate_triangulations(std::size_t n, const std::function<void(const std::vector<Edge>&)>& visit) {
  detail::check_enumeration_size(n);
  detail::TriangulationEnumerator(n, [&](const std::vector<Edge>& edges, const std::vector<Triangle>&) {
    std::vector<Edge> sorted = edges;
    std::sort(sorted.begin(), sorted.end());
    visit(sorted);
  }).run();
}

struct BruteForceSolution {
  Cost weight = 0;
  std::vector<std::vector<Edge>> optima;  // every optimal edge set, each sorted
};

inline BruteForceSolution solve_bruteforce(const Polygon& poly, const TriangleWeightFn& f) {
  detail::check_enumeration_size(poly.size());
  BruteForceSolution out;
  out.weight = -1;
  detail::TriangulationEnumerator(poly.size(), [&](const std::vector<Edge>& edges,
                                                   const std::vector<Triangle>& triangles) {
    Cost total = 0;
    for (const Triangle& t : triangles) total = checked::add(total, f.triangle(poly, t[0], t[1], t[2]));
    if (out.weight >= 0 && total > out.weight) return;
    if (out.weight < 0 || total < out.weight) {
      out.weight = total;
      out.optima.clear();
    }
    std::vector<Edge> sorted = edges;
    std::sort(sorted.begin(), sorted.end());
    out.optima.push_back(std::move(sorted));
  }).run();
  std::sort(out.optima.begin(), out.optima.end());
  return out;
}

}  // namespace polytri
