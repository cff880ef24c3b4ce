#pragma once

/**
 * Bottom-up dynamic program over every cone of the polygon.
 *
 * Cones are evaluated bridge by bridge in order of increasing arc length,
 * the apexless cone of a bridge before its apexed ones. Every child of a
 * cone has a shorter arc or is the apexless cone of the same bridge, so
 * this is a linear extension of area inclusion.
 *
 * Table layout: bridge i owns a contiguous block starting at offset[i];
 * slot 0 is the apexless cone and slot 1 + rank(z) the cone with apex z
 * (only nodes lighter than both endpoints qualify). Every slot is a cone,
 * so the table has exactly total-cones cells and needs no sparse init.
 */

#include <algorithm>
#include <chrono>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include "polytri/bst_solver.hpp"

namespace polytri {

namespace detail {

class ConeTable {
 public:
  ConeTable(const Polygon& poly, const BridgeTable& bridges) : poly_(poly), bridges_(bridges) {
    offset_.resize(bridges.size() + 1, 0);
    for (std::size_t i = 0; i < bridges.size(); ++i) {
      const Bridge& b = bridges.bridges()[i];
      offset_[i + 1] = offset_[i] + 1 + std::min(poly.order(b.u), poly.order(b.v));
    }
    values_.assign(offset_.back(), kUnsolved);
    choices_.assign(offset_.back(), 0);
  }

  std::size_t size() const { return values_.size(); }

  std::size_t slot(std::size_t bridge, const Cone& c) const {
    std::size_t k = c.has_apex() ? 1 + poly_.order(c.apex) : 0;
    if (offset_[bridge] + k >= offset_[bridge + 1]) throw std::logic_error("cone apex not lighter than its bridge");
    return offset_[bridge] + k;
  }

  std::size_t slot(const Cone& c) const {
    auto b = bridges_.find(c.u, c.v);
    if (!b) throw std::logic_error("cone lookup on a non-bridge");
    return slot(*b, c);
  }

  Cost value(const Cone& c) const { return value_at(slot(c)); }
  Cost value_at(std::size_t at) const {
    if (values_[at] == kUnsolved) throw std::logic_error("cone read before it was evaluated");
    return values_[at];
  }
  std::uint8_t choice(const Cone& c) const { return choices_[slot(c)]; }

  void store(std::size_t at, Cost value, std::uint8_t choice) {
    values_[at] = value;
    choices_[at] = choice;
  }

 private:
  const Polygon& poly_;
  const BridgeTable& bridges_;
  std::vector<std::size_t> offset_;
  std::vector<Cost> values_;
  std::vector<std::uint8_t> choices_;
};

}  // namespace detail

inline SolveResult solve_yao(const Polygon& poly, const TriangleWeightFn& f) {
  require_monotone(f, poly);
  auto start = std::chrono::steady_clock::now();
  BridgeTable bridges = find_bridges_linear(poly);
  detail::ConeTable table(poly, bridges);

  auto value = [&](const Cone& c) -> Cost {
    if (is_side_cone(poly, c)) return cone_value_base(poly, c, f);
    return table.value(c);
  };

  std::vector<std::size_t> order(bridges.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const Bridge& x = bridges.bridges()[a];
    const Bridge& y = bridges.bridges()[b];
    return poly.gap(x.u, x.v) < poly.gap(y.u, y.v);
  });

  SolveResult out;
  for (std::size_t bi : order) {
    const Bridge& b = bridges.bridges()[bi];
    const Node below = std::min(poly.order(b.u), poly.order(b.v));

    Cone apexless{b.u, b.v, kNoNode};
    ++out.stats.visited_cones;
    if (is_base_cone(poly, apexless)) {
      table.store(table.slot(bi, apexless), cone_value_base(poly, apexless, f), 0);
    } else {
      auto [best, pick] = detail::best_branch(poly, f, detail::search_branches(poly, apexless, bridges), value);
      table.store(table.slot(bi, apexless), best, pick);
    }
    const Cost keep_rest = table.value(apexless);

    // Apexed cones of one bridge share their children's bridges: (u, s) and (s, v).
    const Node s = b.s;
    const std::optional<std::size_t> left = poly.next(b.u) == s ? std::nullopt : bridges.find(b.u, s);
    const std::optional<std::size_t> right = poly.next(s) == b.v ? std::nullopt : bridges.find(s, b.v);
    for (Node k = 0; k < below; ++k) {
      const Node z = poly.nth_lightest(k);
      ++out.stats.visited_cones;
      Cost keep = checked::add(f.triangle(poly, b.u, b.v, z), keep_rest);
      Cost cut_left = left ? table.value_at(table.slot(*left, Cone{b.u, s, z})) : f.triangle(poly, b.u, s, z);
      Cost cut_right = right ? table.value_at(table.slot(*right, Cone{s, b.v, z})) : f.triangle(poly, s, b.v, z);
      Cost cut = checked::add(cut_left, cut_right);
      if (cut < keep) {
        table.store(table.slot(bi, Cone{b.u, b.v, z}), cut, 1);
      } else {
        table.store(table.slot(bi, Cone{b.u, b.v, z}), keep, 0);
      }
    }
  }

  if (poly.size() == 3) {
    out.weight = f.triangle(poly, 0, 1, 2);
  } else if (auto rc = root_cone(poly)) {
    out.weight = value(*rc);
  } else {
    RootExpansion root = expand_root(poly);
    out.weight = detail::branch_value(poly, f, root.branches[0], value);
  }
  auto triangles = detail::collect_triangles(poly, bridges, [&](std::optional<Cone> c) -> std::uint8_t {
    return c ? table.choice(*c) : std::uint8_t{0};
  });
  out.triangulation = triangulation_from_triangles(poly.size(), triangles, out.weight);
  out.stats.total_cones = table.size();
  out.stats.memo_entries = table.size();
  out.stats.backend = "table";
  out.stats.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start);
  return out;
}

}  // namespace polytri
