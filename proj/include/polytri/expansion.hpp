#pragma once

/**
 * Search-tree expansion rules shared by the memoized and bottom-up solvers.
 *
 * Every subproblem below the root is a triangle or a cone. A cone with
 * apex z has z lightest and its bridge endpoints second and third, so it
 * always branches two ways: keep triangle {u, v, z}, or cut from z to the
 * fourth-lightest node S(u, v). An apexless cone whose lighter endpoint is
 * not adjacent to S(u, v) has a forced cut; otherwise it coincides with the
 * apexed cone (x, v, u) (mirrored (u, x, v)), where x = S(u, v).
 */

#include <array>
#include <cassert>
#include <optional>
#include <stdexcept>
#include <vector>

#include "polytri/bridges.hpp"
#include "polytri/core.hpp"

namespace polytri {

/// Fixed-capacity inline vector for branch payloads.
template <class T, std::size_t N>
class SmallVec {
 public:
  SmallVec() = default;
  SmallVec(std::initializer_list<T> init) {
    for (const T& x : init) push_back(x);
  }
  void push_back(const T& x) {
    assert(size_ < N);
    items_[size_++] = x;
  }
  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }
  const T& operator[](std::size_t i) const { return items_[i]; }
  const T* begin() const { return items_.data(); }
  const T* end() const { return items_.data() + size_; }

  friend bool operator==(const SmallVec& a, const SmallVec& b) {
    return a.size_ == b.size_ && std::equal(a.begin(), a.end(), b.begin());
  }

 private:
  std::array<T, N> items_{};
  std::size_t size_ = 0;
};

struct Branch {
  SmallVec<Edge, 2> edges;          // internal edges added by this branch
  SmallVec<Cone, 3> cones;          // child subproblems
  std::optional<Triangle> triangle; // solved triangle, if any

  friend bool operator==(const Branch&, const Branch&) = default;
};

using Branches = SmallVec<Branch, 2>;

enum class RootCase { triangle, a, b, c };

struct RootExpansion {
  RootCase kind = RootCase::triangle;
  Branches branches;
};

/// True when (u, v) is adjacent on the polygon, i.e. the cone has no inner arc node.
inline bool is_side_cone(const Polygon& poly, const Cone& c) { return poly.next(c.u) == c.v; }

/**
 * Base cones need no search: (u,v,-) over a side is empty, (u,v,-) over a
 * single inner node m is the triangle {u,m,v}, and (u,v,z) over a side is
 * the triangle {u,v,z}.
 */
inline bool is_base_cone(const Polygon& poly, const Cone& c) {
  if (is_side_cone(poly, c)) return true;
  return !c.has_apex() && poly.gap(c.u, c.v) == 1;
}

inline std::optional<Triangle> base_cone_triangle(const Polygon& poly, const Cone& c) {
  if (is_side_cone(poly, c)) {
    if (!c.has_apex()) return std::nullopt;
    return make_triangle(c.u, c.v, c.apex);
  }
  if (!c.has_apex() && poly.gap(c.u, c.v) == 1) return make_triangle(c.u, poly.next(c.u), c.v);
  throw InvalidInput("cone is not a base case");
}

inline Cost cone_value_base(const Polygon& poly, const Cone& c, const TriangleWeightFn& f) {
  auto t = base_cone_triangle(poly, c);
  return t ? f.triangle(poly, (*t)[0], (*t)[1], (*t)[2]) : Cost{0};
}

/// Root branches by the adjacency of v1 to v2 and v3 (n >= 4).
inline RootExpansion expand_root(const Polygon& poly) {
  RootExpansion out;
  if (poly.size() == 3) return out;
  const Node v1 = poly.nth_lightest(0), v2 = poly.nth_lightest(1), v3 = poly.nth_lightest(2),
             v4 = poly.nth_lightest(3);
  const bool adj2 = poly.adjacent(v1, v2), adj3 = poly.adjacent(v1, v3);
  if (adj2 && adj3) {
    out.kind = RootCase::a;
    Branch keep, cut;
    keep.edges.push_back(Edge(v2, v3));
    keep.triangle = make_triangle(v1, v2, v3);
    cut.edges.push_back(Edge(v1, v4));
    if (poly.next(v1) == v2) {
      keep.cones.push_back({v2, v3, kNoNode});
      cut.cones = {Cone{v2, v4, v1}, Cone{v4, v3, v1}};
    } else {
      keep.cones.push_back({v3, v2, kNoNode});
      cut.cones = {Cone{v3, v4, v1}, Cone{v4, v2, v1}};
    }
    out.branches = {keep, cut};
  } else if (adj2 || adj3) {
    out.kind = RootCase::b;
    const Node x = adj2 ? v2 : v3, y = adj2 ? v3 : v2;
    Branch only;
    only.edges.push_back(Edge(v1, y));
    if (poly.next(v1) == x) {
      only.cones = {Cone{x, y, v1}, Cone{y, v1, kNoNode}};
    } else {
      only.cones = {Cone{v1, y, kNoNode}, Cone{y, x, v1}};
    }
    out.branches = {only};
  } else {
    out.kind = RootCase::c;
    // Order v2, v3 as they are met walking clockwise from v1.
    Node first = v2, second = v3;
    if (poly.gap(v1, v3) < poly.gap(v1, v2)) std::swap(first, second);
    Branch only;
    only.edges = {Edge(v1, first), Edge(v1, second)};
    only.cones = {Cone{v1, first, kNoNode}, Cone{second, v1, kNoNode}, Cone{first, second, v1}};
    out.branches = {only};
  }
  return out;
}

namespace detail {

inline Branches expand_apexed(const Cone& c, const BridgeTable& table) {
  const Node s = table.S(c.u, c.v);
  Branch keep, cut;
  keep.edges.push_back(Edge(c.u, c.v));
  keep.triangle = make_triangle(c.u, c.v, c.apex);
  keep.cones.push_back({c.u, c.v, kNoNode});
  cut.edges.push_back(Edge(c.apex, s));
  cut.cones = {Cone{c.u, s, c.apex}, Cone{s, c.v, c.apex}};
  return {keep, cut};
}

struct ApexlessShape {
  bool forced;    // lighter endpoint not adjacent to S(u,v)
  bool u_lighter;
  Node x;         // arc neighbour of the lighter endpoint
  Node s;         // S(u,v), third lightest in the cone
};

inline ApexlessShape apexless_shape(const Polygon& poly, const Cone& c, const BridgeTable& table) {
  ApexlessShape shape{};
  shape.u_lighter = poly.lighter(c.u, c.v);
  shape.x = shape.u_lighter ? poly.next(c.u) : poly.prev(c.v);
  shape.s = table.S(c.u, c.v);
  shape.forced = shape.x != shape.s;
  return shape;
}

inline Branch forced_cut(const Cone& c, const ApexlessShape& shape) {
  Branch only;
  if (shape.u_lighter) {
    only.edges.push_back(Edge(c.u, shape.s));
    only.cones = {Cone{c.u, shape.s, kNoNode}, Cone{shape.s, c.v, c.u}};
  } else {
    only.edges.push_back(Edge(c.v, shape.s));
    only.cones = {Cone{shape.s, c.v, kNoNode}, Cone{c.u, shape.s, c.v}};
  }
  return only;
}

/// The apexed cone covering the same region as an unforced apexless cone.
inline Cone equivalent_apexed(const Cone& c, const ApexlessShape& shape) {
  return shape.u_lighter ? Cone{shape.x, c.v, c.u} : Cone{c.u, shape.x, c.v};
}

/**
 * Branches as the solvers use them. Identical to expand_cone except that an
 * unforced apexless cone yields a single branch whose only child is its
 * equivalent apexed cone, so that cone is memoized under its own key.
 */
inline Branches search_branches(const Polygon& poly, const Cone& c, const BridgeTable& table) {
  if (c.has_apex()) return expand_apexed(c, table);
  ApexlessShape shape = apexless_shape(poly, c, table);
  if (shape.forced) return {forced_cut(c, shape)};
  Branch alias;
  alias.cones.push_back(equivalent_apexed(c, shape));
  return {alias};
}

}  // namespace detail

/// Branches of a non-base cone; throws for base or malformed cones.
inline Branches expand_cone(const Polygon& poly, const Cone& c, const BridgeTable& table) {
  if (!table.is_bridge(c.u, c.v)) throw InvalidInput("cone is not defined by a bridge");
  if (is_base_cone(poly, c)) throw InvalidInput("base cone has no expansion");
  if (c.has_apex()) {
    if (!poly.lighter(c.apex, c.u) || !poly.lighter(c.apex, c.v)) throw InvalidInput("cone apex is not its lightest node");
    return detail::expand_apexed(c, table);
  }
  detail::ApexlessShape shape = detail::apexless_shape(poly, c, table);
  if (shape.forced) return {detail::forced_cut(c, shape)};
  return detail::expand_apexed(detail::equivalent_apexed(c, shape), table);
}

/// The cone equal to the whole polygon when v1 and v2 are adjacent; solvers start there.
inline std::optional<Cone> root_cone(const Polygon& poly) {
  const Node v1 = poly.nth_lightest(0), v2 = poly.nth_lightest(1);
  if (poly.next(v1) == v2) return Cone{v2, v1, kNoNode};
  if (poly.next(v2) == v1) return Cone{v1, v2, kNoNode};
  return std::nullopt;
}

namespace detail {

/**
 * Walks recorded branch choices from the root and collects the optimal
 * triangles. `choice_of(cone)` returns the winning branch index of a
 * memoized cone.
 */
template <class ChoiceOf>
std::vector<Triangle> collect_triangles(const Polygon& poly, const BridgeTable& table, ChoiceOf&& choice_of) {
  std::vector<Triangle> triangles;
  triangles.reserve(poly.size() - 2);
  std::vector<Cone> pending;
  auto take_branch = [&](const Branch& b) {
    if (b.triangle) triangles.push_back(*b.triangle);
    for (const Cone& child : b.cones) pending.push_back(child);
  };
  if (poly.size() == 3) {
    triangles.push_back({0, 1, 2});
    return triangles;
  }
  if (auto rc = root_cone(poly)) {
    pending.push_back(*rc);
  } else {
    RootExpansion root = expand_root(poly);
    take_branch(root.branches[choice_of(std::nullopt)]);
  }
  while (!pending.empty()) {
    Cone c = pending.back();
    pending.pop_back();
    if (is_base_cone(poly, c)) {
      if (auto t = base_cone_triangle(poly, c)) triangles.push_back(*t);
      continue;
    }
    Branches branches = search_branches(poly, c, table);
    take_branch(branches[choice_of(std::optional<Cone>(c))]);
  }
  if (triangles.size() + 2 != poly.size()) throw std::logic_error("reconstruction produced a wrong triangle count");
  return triangles;
}

}  // namespace detail

}  // namespace polytri
