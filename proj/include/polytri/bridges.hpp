#pragma once

/**
 * Bridges and cones.
 *
 * A bridge is an ordered pair (u, v) with at least one node strictly
 * between u and v clockwise, every one of them heavier than both u and v.
 * Every polygon has exactly n - 2 bridges: each node other than the two
 * lightest is the lightest strictly-between node S(u, v) of exactly one.
 *
 * A cone (u, v, apex) is the arc sub-polygon u..v of a bridge, optionally
 * closed by an apex node lighter than every node of the arc.
 */

#include <algorithm>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "polytri/core.hpp"

namespace polytri {

struct Bridge {
  Node u = 0;
  Node v = 0;
  Node s = kNoNode;  // lightest node strictly between u and v

  friend bool operator==(const Bridge&, const Bridge&) = default;
};

class BridgeTable {
 public:
  BridgeTable() = default;

  /// Takes bridges in any order and sorts them by (u, clockwise distance to v).
  BridgeTable(const Polygon& poly, std::vector<Bridge> bridges) : bridges_(std::move(bridges)) {
    std::sort(bridges_.begin(), bridges_.end(), [&poly](const Bridge& a, const Bridge& b) {
      return a.u != b.u ? a.u < b.u : poly.gap(a.u, a.v) < poly.gap(b.u, b.v);
    });
    index_.reserve(bridges_.size() * 2);
    for (std::size_t i = 0; i < bridges_.size(); ++i) {
      index_.emplace(key(bridges_[i].u, bridges_[i].v), static_cast<std::uint32_t>(i));
    }
  }

  const std::vector<Bridge>& bridges() const { return bridges_; }
  std::size_t size() const { return bridges_.size(); }

  std::optional<std::size_t> find(Node u, Node v) const {
    auto it = index_.find(key(u, v));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  bool is_bridge(Node u, Node v) const { return index_.count(key(u, v)) != 0; }

  /// Lightest node strictly between u and v; throws if (u, v) is not a bridge.
  Node S(Node u, Node v) const {
    auto it = index_.find(key(u, v));
    if (it == index_.end()) {
      throw InvalidInput("(" + std::to_string(u) + "," + std::to_string(v) + ") is not a bridge");
    }
    return bridges_[it->second].s;
  }

  friend bool operator==(const BridgeTable& a, const BridgeTable& b) { return a.bridges_ == b.bridges_; }

 private:
  static std::uint64_t key(Node u, Node v) { return (std::uint64_t{u} << 32) | v; }

  std::vector<Bridge> bridges_;
  std::unordered_map<std::uint64_t, std::uint32_t> index_;
};

/**
 * Quadratic finder: from every node u walk clockwise tracking the lightest
 * node s(u) seen so far (the first node only seeds it). A node lighter than
 * s(u) closes a bridge (u, v) with S = s(u). The walk ends after a node
 * lighter than u, or on returning to u.
 */
inline BridgeTable find_bridges_walk(const Polygon& poly) {
  std::vector<Bridge> found;
  const std::size_t n = poly.size();
  for (Node u = 0; u < n; ++u) {
    Node s = poly.next(u);
    if (poly.lighter(s, u)) continue;
    for (Node v = poly.next(s); v != u; v = poly.next(v)) {
      if (poly.lighter(v, s)) {
        found.push_back({u, v, s});
        s = v;
      }
      if (poly.lighter(v, u)) break;
    }
  }
  return BridgeTable(poly, std::move(found));
}

/**
 * Linear finder: one monotone-stack pass over the clockwise sequence
 * starting and ending at the lightest node g. The stack holds nodes in
 * increasing weight; when v pops t, the node left below t together with v
 * encloses exactly the nodes above it, whose minimum is t.
 */
inline BridgeTable find_bridges_linear(const Polygon& poly) {
  const std::size_t n = poly.size();
  const Node g = poly.nth_lightest(0);
  std::vector<Bridge> found;
  found.reserve(n);
  std::vector<Node> stack;
  stack.reserve(n);
  for (std::size_t step = 0; step <= n; ++step) {
    Node v = static_cast<Node>((g + step) % n);
    while (!stack.empty() && poly.lighter(v, stack.back())) {
      Node t = stack.back();
      stack.pop_back();
      // The final g pops the second-lightest node off g itself; (g, g) is no bridge.
      if (!stack.empty() && stack.back() != v) found.push_back({stack.back(), v, t});
    }
    if (step < n) stack.push_back(v);
  }
  return BridgeTable(poly, std::move(found));
}

// ---------------------------------------------------------------------------
// Cones

struct Cone {
  Node u = 0;
  Node v = 0;
  Node apex = kNoNode;

  bool has_apex() const { return apex != kNoNode; }
  friend bool operator==(const Cone&, const Cone&) = default;
};

/// Packs (u, v, apex + 1) into 21-bit fields; apex + 1 == 0 encodes "no apex".
inline std::uint64_t cone_key(const Cone& c) {
  return (std::uint64_t{c.u} << 42) | (std::uint64_t{c.v} << 21) | std::uint64_t{c.apex + 1u};
}

/// Number of cones: one apexless cone per bridge plus one per node lighter than both endpoints.
inline std::size_t count_cones(const Polygon& poly, const BridgeTable& table) {
  std::size_t total = 0;
  for (const Bridge& b : table.bridges()) total += 1 + std::min(poly.order(b.u), poly.order(b.v));
  return total;
}

inline std::vector<Cone> enumerate_cones(const Polygon& poly, const BridgeTable& table) {
  std::vector<Cone> cones;
  cones.reserve(count_cones(poly, table));
  for (const Bridge& b : table.bridges()) {
    cones.push_back({b.u, b.v, kNoNode});
    Node below = std::min(poly.order(b.u), poly.order(b.v));
    for (Node r = 0; r < below; ++r) cones.push_back({b.u, b.v, poly.nth_lightest(r)});
  }
  return cones;
}

/// Nodes of the cone polygon in order apex?, u, ..., v. Validates the cone.
inline std::vector<Node> cone_nodes(const Polygon& poly, const Cone& c) {
  const std::size_t n = poly.size();
  if (c.u >= n || c.v >= n || c.u == c.v) throw InvalidInput("cone endpoints out of range");
  std::vector<Node> nodes;
  if (c.has_apex()) nodes.push_back(c.apex);
  for (Node x = c.u; x != c.v; x = poly.next(x)) {
    if (x != c.u && (poly.lighter(x, c.u) || poly.lighter(x, c.v))) {
      throw InvalidInput("cone arc is not a bridge: inner node " + std::to_string(x) + " is too light");
    }
    if (x == c.apex) throw InvalidInput("cone apex lies on its own arc");
    nodes.push_back(x);
  }
  nodes.push_back(c.v);
  if (c.has_apex()) {
    if (c.apex >= n || c.apex == c.v) throw InvalidInput("cone apex invalid");
    if (!poly.lighter(c.apex, c.u) || !poly.lighter(c.apex, c.v)) {
      throw InvalidInput("cone apex must be lighter than both bridge endpoints");
    }
  }
  if (nodes.size() < 3) throw InvalidInput("cone must have at least 3 nodes");
  return nodes;
}

}  // namespace polytri
