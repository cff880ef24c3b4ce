#pragma once

/**
 * Node-weighted convex polygons, triangle-weight functions and
 * triangulations.
 *
 * A polygon is purely combinatorial: n nodes indexed 0..n-1 in clockwise
 * order, node i adjacent to (i+1) mod n. Rank comparisons everywhere use
 * the total order (weight, node index), so equal weights behave like an
 * infinitesimal perturbation that never changes the optimal weight.
 */

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <istream>
#include <numeric>
#include <optional>
#include <ostream>
#include <random>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "polytri/arith.hpp"

namespace polytri {

using Node = std::uint32_t;
inline constexpr Node kNoNode = ~Node{0};

class InvalidInput : public std::invalid_argument {
 public:
  explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

class ParseError : public InvalidInput {
 public:
  explicit ParseError(const std::string& what) : InvalidInput(what) {}
};

class InvalidTriangulation : public InvalidInput {
 public:
  explicit InvalidTriangulation(const std::string& what) : InvalidInput(what) {}
};

class NonMonotoneError : public InvalidInput {
 public:
  explicit NonMonotoneError(const std::string& what) : InvalidInput(what) {}
};

// ---------------------------------------------------------------------------
// Polygon

class Polygon {
 public:
  explicit Polygon(std::vector<Weight> weights) : weights_(std::move(weights)) {
    if (weights_.size() < 3) throw InvalidInput("polygon needs at least 3 nodes");
    if (weights_.size() >= (std::size_t{1} << 21)) throw InvalidInput("polygon has too many nodes (limit 2^21 - 1)");
    for (std::size_t i = 0; i < weights_.size(); ++i) {
      if (weights_[i] == 0) throw InvalidInput("node " + std::to_string(i) + " has non-positive weight");
    }
    rank_.resize(weights_.size());
    std::iota(rank_.begin(), rank_.end(), Node{0});
    std::sort(rank_.begin(), rank_.end(), [this](Node a, Node b) {
      return std::pair(weights_[a], a) < std::pair(weights_[b], b);
    });
    order_.resize(weights_.size());
    for (std::size_t r = 0; r < rank_.size(); ++r) order_[rank_[r]] = static_cast<Node>(r);
  }

  std::size_t size() const { return weights_.size(); }
  const std::vector<Weight>& weights() const { return weights_; }
  Weight weight(Node i) const { return weights_[i]; }

  /// rank()[r] is the node of the r-th smallest weight (0-based: rank()[0] is v1).
  const std::vector<Node>& rank() const { return rank_; }
  /// Inverse of rank(): position of node i in the weight order.
  Node order(Node i) const { return order_[i]; }
  Node nth_lightest(std::size_t r) const { return rank_[r]; }

  bool lighter(Node a, Node b) const { return order_[a] < order_[b]; }

  Node next(Node i) const { return i + 1 == size() ? 0 : i + 1; }
  Node prev(Node i) const { return i == 0 ? static_cast<Node>(size() - 1) : i - 1; }
  bool adjacent(Node a, Node b) const { return next(a) == b || next(b) == a; }

  /// Number of nodes strictly between a and b walking clockwise from a.
  std::size_t gap(Node a, Node b) const {
    return (b + size() - a - 1) % size();
  }

  friend bool operator==(const Polygon& a, const Polygon& b) { return a.weights_ == b.weights_; }

 private:
  std::vector<Weight> weights_;
  std::vector<Node> rank_;
  std::vector<Node> order_;
};

/// Rank permutation of the polygon under (weight, index).
inline std::vector<Node> weight_rank(const Polygon& poly) { return poly.rank(); }

// ---------------------------------------------------------------------------
// Triangle-weight functions

enum class WeightKind { multiplicative, additive, custom };

class TriangleWeightFn {
 public:
  using Evaluator = std::function<Cost(Weight, Weight, Weight)>;

  static TriangleWeightFn multiplicative() { return TriangleWeightFn(WeightKind::multiplicative, "mult", {}); }
  static TriangleWeightFn additive() { return TriangleWeightFn(WeightKind::additive, "add", {}); }
  static TriangleWeightFn custom(std::string name, Evaluator eval) {
    if (!eval) throw InvalidInput("custom weight function needs an evaluator");
    return TriangleWeightFn(WeightKind::custom, std::move(name), std::move(eval));
  }

  WeightKind kind() const { return kind_; }
  const std::string& name() const { return name_; }

  Cost operator()(Weight a, Weight b, Weight c) const {
    switch (kind_) {
      case WeightKind::multiplicative:
        return checked::mul(checked::mul(static_cast<Cost>(a), static_cast<Cost>(b)), static_cast<Cost>(c));
      case WeightKind::additive:
        return static_cast<Cost>(a) + static_cast<Cost>(b) + static_cast<Cost>(c);
      case WeightKind::custom:
        break;
    }
    Cost value = eval_(a, b, c);
    if (value < 0) throw InvalidInput("custom weight function '" + name_ + "' returned a negative value");
    return value;
  }

  /// Weight of the triangle on polygon nodes a, b, c.
  Cost triangle(const Polygon& poly, Node a, Node b, Node c) const {
    return (*this)(poly.weight(a), poly.weight(b), poly.weight(c));
  }

 private:
  TriangleWeightFn(WeightKind kind, std::string name, Evaluator eval)
      : kind_(kind), name_(std::move(name)), eval_(std::move(eval)) {}

  WeightKind kind_;
  std::string name_;
  Evaluator eval_;
};

/// f(x,y,z) = xyz + x + y + z, the stock monotone custom function.
inline TriangleWeightFn product_plus_sum() {
  return TriangleWeightFn::custom("product+sum", [](Weight a, Weight b, Weight c) {
    Cost product = checked::mul(checked::mul(static_cast<Cost>(a), static_cast<Cost>(b)), static_cast<Cost>(c));
    return checked::add(product, static_cast<Cost>(a) + static_cast<Cost>(b) + static_cast<Cost>(c));
  });
}

/**
 * Randomized spot-check of monotonicity and symmetry.
 *
 * Draws `samples` triples from [1, max_weight] and, for each, a dominated
 * triple with exactly one coordinate strictly increased. Returns a
 * description of the first counterexample, or nullopt.
 */
inline std::optional<std::string> find_monotonicity_violation(const TriangleWeightFn& f, Weight max_weight,
                                                              int samples = 1000, std::uint64_t seed = 0x5eed) {
  if (max_weight < 1) max_weight = 1;
  std::mt19937_64 rng(seed);
  auto draw = [&](Weight hi) { return Weight{1} + rng() % hi; };
  auto describe = [](const char* what, Weight x, Weight y, Weight z) {
    std::ostringstream os;
    os << what << " at (" << x << "," << y << "," << z << ")";
    return os.str();
  };
  for (int i = 0; i < samples; ++i) {
    Weight x = draw(max_weight), y = draw(max_weight), z = draw(max_weight);
    Cost base = f(x, y, z);
    if (f(y, z, x) != base || f(z, y, x) != base || f(y, x, z) != base) return describe("asymmetric", x, y, z);
    std::array<Weight, 3> bumped{x, y, z};
    bumped[i % 3] += draw(max_weight);
    if (!(f(bumped[0], bumped[1], bumped[2]) > base)) return describe("not strictly increasing", x, y, z);
  }
  return std::nullopt;
}

/// Throws NonMonotoneError when a custom f fails the spot-check over the polygon's weight range.
inline void require_monotone(const TriangleWeightFn& f, const Polygon& poly) {
  if (f.kind() != WeightKind::custom) return;
  Weight hi = *std::max_element(poly.weights().begin(), poly.weights().end());
  if (auto bad = find_monotonicity_violation(f, hi)) {
    throw NonMonotoneError("weight function '" + f.name() + "' is not monotone: " + *bad);
  }
}

// ---------------------------------------------------------------------------
// Triangulations

struct Edge {
  Node a = 0;
  Node b = 0;

  Edge() = default;
  Edge(Node x, Node y) : a(std::min(x, y)), b(std::max(x, y)) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

using Triangle = std::array<Node, 3>;

inline Triangle make_triangle(Node x, Node y, Node z) {
  Triangle t{x, y, z};
  std::sort(t.begin(), t.end());
  return t;
}

struct Triangulation {
  std::vector<Edge> edges;  // sorted, internal edges only
  Cost weight = 0;
};

enum class Violation { none, out_of_range, self_loop, count, side, duplicate, crossing };

inline const char* to_string(Violation v) {
  switch (v) {
    case Violation::none: return "none";
    case Violation::out_of_range: return "out_of_range";
    case Violation::self_loop: return "self_loop";
    case Violation::count: return "count";
    case Violation::side: return "side";
    case Violation::duplicate: return "duplicate";
    case Violation::crossing: return "crossing";
  }
  return "unknown";
}

struct ValidationReport {
  Violation kind = Violation::none;
  std::string detail;

  bool ok() const { return kind == Violation::none; }
  explicit operator bool() const { return ok(); }
};

inline bool is_side(std::size_t n, Edge e) { return e.b == e.a + 1 || (e.a == 0 && e.b + 1 == n); }

/**
 * Checks that `edges` triangulate the convex n-gon. Violations are reported
 * in priority order: range/self-loop, count, side, duplicate, crossing.
 *
 * Chords (a,b) and (c,d) cross iff exactly one of c,d lies strictly inside
 * the interval (a,b). Non-crossing is verified in O(m log m) with a nesting
 * stack over chords sorted by (a asc, b desc).
 */
inline ValidationReport validate_triangulation(std::size_t n, std::span<const Edge> edges) {
  auto fail = [](Violation v, std::string d) { return ValidationReport{v, std::move(d)}; };
  auto show = [](Edge e) { return "(" + std::to_string(e.a) + "," + std::to_string(e.b) + ")"; };
  for (Edge e : edges) {
    if (e.b >= n) return fail(Violation::out_of_range, "edge " + show(e) + " out of range");
    if (e.a == e.b) return fail(Violation::self_loop, "edge " + show(e) + " is a loop");
  }
  if (edges.size() + 3 != n) {
    return fail(Violation::count, "expected " + std::to_string(n - 3) + " internal edges, got " +
                                      std::to_string(edges.size()));
  }
  for (Edge e : edges) {
    if (is_side(n, e)) return fail(Violation::side, "edge " + show(e) + " duplicates a polygon side");
  }
  std::vector<Edge> sorted(edges.begin(), edges.end());
  std::sort(sorted.begin(), sorted.end(), [](Edge x, Edge y) { return x.a != y.a ? x.a < y.a : x.b > y.b; });
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (sorted[i] == sorted[i - 1]) return fail(Violation::duplicate, "edge " + show(sorted[i]) + " repeated");
  }
  std::vector<Edge> open;
  for (Edge e : sorted) {
    while (!open.empty() && open.back().b <= e.a) open.pop_back();
    if (!open.empty() && e.b > open.back().b) {
      return fail(Violation::crossing, "edges " + show(open.back()) + " and " + show(e) + " cross");
    }
    open.push_back(e);
  }
  return {};
}

inline ValidationReport validate_triangulation(const Polygon& poly, std::span<const Edge> edges) {
  return validate_triangulation(poly.size(), edges);
}

namespace detail {

// Sorted adjacency over sides plus chords.
inline std::vector<std::vector<Node>> adjacency(std::size_t n, std::span<const Edge> edges) {
  std::vector<std::vector<Node>> adj(n);
  for (Node i = 0; i < n; ++i) {
    Node j = static_cast<Node>((i + 1) % n);
    adj[i].push_back(j);
    adj[j].push_back(i);
  }
  for (Edge e : edges) {
    adj[e.a].push_back(e.b);
    adj[e.b].push_back(e.a);
  }
  for (auto& list : adj) std::sort(list.begin(), list.end());
  return adj;
}

// Apex of the triangle lying on the a..b side of edge (a,b), a + 1 < b.
inline Node apex_inside(const std::vector<std::vector<Node>>& adj, Node a, Node b) {
  const auto& list = adj[a];
  auto it = std::lower_bound(list.begin(), list.end(), b);
  return *std::prev(it);
}

}  // namespace detail

/// The n-2 triangles induced by the polygon sides plus the internal edges.
inline std::vector<Triangle> list_triangles(std::size_t n, std::span<const Edge> edges) {
  if (auto report = validate_triangulation(n, edges); !report) throw InvalidTriangulation(report.detail);
  auto adj = detail::adjacency(n, edges);
  std::vector<Triangle> triangles;
  triangles.reserve(n - 2);
  auto emit = [&](Edge e) {
    if (e.b - e.a < 2) return;
    Node m = detail::apex_inside(adj, e.a, e.b);
    triangles.push_back({e.a, m, e.b});
  };
  emit(Edge(0, static_cast<Node>(n - 1)));
  for (Edge e : edges) emit(e);
  std::sort(triangles.begin(), triangles.end());
  return triangles;
}

inline std::vector<Triangle> list_triangles(const Polygon& poly, const Triangulation& tri) {
  return list_triangles(poly.size(), tri.edges);
}

inline Cost triangulation_weight(const Polygon& poly, std::span<const Edge> edges, const TriangleWeightFn& f) {
  Cost total = 0;
  for (const Triangle& t : list_triangles(poly.size(), edges)) {
    total = checked::add(total, f.triangle(poly, t[0], t[1], t[2]));
  }
  return total;
}

inline Cost triangulation_weight(const Polygon& poly, const Triangulation& tri, const TriangleWeightFn& f) {
  return triangulation_weight(poly, tri.edges, f);
}

/// Collects the internal edges of a set of n-2 triangles into a Triangulation.
inline Triangulation triangulation_from_triangles(std::size_t n, std::span<const Triangle> triangles, Cost weight) {
  Triangulation tri;
  tri.weight = weight;
  tri.edges.reserve(2 * triangles.size());
  for (const Triangle& t : triangles) {
    for (auto [x, y] : {std::pair{t[0], t[1]}, std::pair{t[1], t[2]}, std::pair{t[0], t[2]}}) {
      Edge e(x, y);
      if (!is_side(n, e)) tri.edges.push_back(e);
    }
  }
  std::sort(tri.edges.begin(), tri.edges.end());
  tri.edges.erase(std::unique(tri.edges.begin(), tri.edges.end()), tri.edges.end());
  return tri;
}

// ---------------------------------------------------------------------------
// Polygon text format: "n" then n clockwise weights.

inline Polygon read_polygon(std::istream& in) {
  long long n = 0;
  if (!(in >> n)) throw ParseError("polygon: missing node count");
  if (n < 3) throw ParseError("polygon: node count must be at least 3, got " + std::to_string(n));
  std::vector<Weight> weights;
  weights.reserve(static_cast<std::size_t>(n));
  for (long long i = 0; i < n; ++i) {
    std::string token;
    if (!(in >> token)) throw ParseError("polygon: expected " + std::to_string(n) + " weights, got " + std::to_string(i));
    if (token.front() == '-' || token == "0" || token.find_first_not_of("0123456789") != std::string::npos) {
      throw ParseError("polygon: weight '" + token + "' is not a positive integer");
    }
    try {
      weights.push_back(std::stoull(token));
    } catch (const std::exception&) {
      throw ParseError("polygon: weight '" + token + "' out of range");
    }
    if (weights.back() == 0) throw ParseError("polygon: weight '" + token + "' is not a positive integer");
  }
  std::string extra;
  if (in >> extra) throw ParseError("polygon: trailing data '" + extra + "'");
  return Polygon(std::move(weights));
}

inline void write_polygon(std::ostream& out, const Polygon& poly) {
  out << poly.size() << '\n';
  for (std::size_t i = 0; i < poly.size(); ++i) out << (i ? " " : "") << poly.weight(static_cast<Node>(i));
  out << '\n';
}

}  // namespace polytri
