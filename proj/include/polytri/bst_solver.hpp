#pragma once

/**
 * Branching search-tree solver with depth-first memoization.
 *
 * Subproblems are cones keyed by (u, v, apex). Each distinct cone is
 * expanded at most once; a repeated cone is answered from the memo store.
 * Traversal uses an explicit stack because cone chains can be linear in n.
 */

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

#include "polytri/bridges.hpp"
#include "polytri/core.hpp"
#include "polytri/expansion.hpp"
#include "polytri/memo.hpp"

namespace polytri {

struct SolveStats {
  std::size_t visited_cones = 0;  // memo misses, i.e. cones expanded or evaluated
  std::size_t memo_hits = 0;
  std::size_t total_cones = 0;
  std::size_t memo_entries = 0;
  std::chrono::nanoseconds elapsed{0};
  std::string backend;
};

struct SolveResult {
  Cost weight = 0;
  Triangulation triangulation;
  SolveStats stats;
};

struct BstOptions {
  MemoBackend backend = MemoBackend::hash;
  std::size_t dense_cap = kDefaultDenseCap;
};

namespace detail {

inline Cost branch_value(const Polygon& poly, const TriangleWeightFn& f, const Branch& b, auto&& cone_value) {
  Cost total = 0;
  if (b.triangle) total = f.triangle(poly, (*b.triangle)[0], (*b.triangle)[1], (*b.triangle)[2]);
  for (const Cone& c : b.cones) total = checked::add(total, cone_value(c));
  return total;
}

// Index of the cheapest branch; the first wins ties.
inline std::pair<Cost, std::uint8_t> best_branch(const Polygon& poly, const TriangleWeightFn& f,
                                                 const Branches& branches, auto&& cone_value) {
  Cost best = -1;
  std::uint8_t pick = 0;
  for (std::size_t i = 0; i < branches.size(); ++i) {
    Cost v = branch_value(poly, f, branches[i], cone_value);
    if (best < 0 || v < best) {
      best = v;
      pick = static_cast<std::uint8_t>(i);
    }
  }
  return {best, pick};
}

template <class Memo>
class BstSearch {
 public:
  BstSearch(const Polygon& poly, const TriangleWeightFn& f, const BridgeTable& table, Memo& memo)
      : poly_(poly), f_(f), table_(table), memo_(memo) {}

  Cost value(const Cone& c) const {
    if (is_side_cone(poly_, c)) return cone_value_base(poly_, c, f_);
    return memo_.value(c);
  }

  /// Solves `root` and every cone it depends on.
  void solve(const Cone& root) {
    if (is_side_cone(poly_, root)) return;
    stack_.push_back({root, {}, false});
    while (!stack_.empty()) {
      Frame& top = stack_.back();
      if (top.expanded) {
        Frame done = top;
        stack_.pop_back();
        auto [best, pick] = best_branch(poly_, f_, done.branches, [this](const Cone& c) { return value(c); });
        memo_.store(done.cone, best, pick);
        continue;
      }
      if (memo_.solved(top.cone)) {
        ++stats.memo_hits;
        stack_.pop_back();
        continue;
      }
      ++stats.visited_cones;
      if (is_base_cone(poly_, top.cone)) {
        Cone c = top.cone;
        stack_.pop_back();
        memo_.store(c, cone_value_base(poly_, c, f_), 0);
        continue;
      }
      top.branches = search_branches(poly_, top.cone, table_);
      top.expanded = true;
      Branches branches = top.branches;  // `top` dangles once we push
      for (const Branch& b : branches) {
        for (const Cone& child : b.cones) {
          if (is_side_cone(poly_, child)) continue;
          if (memo_.solved(child)) {
            ++stats.memo_hits;
          } else {
            stack_.push_back({child, {}, false});
          }
        }
      }
    }
  }

  SolveStats stats;

 private:
  struct Frame {
    Cone cone;
    Branches branches;
    bool expanded;
  };

  const Polygon& poly_;
  const TriangleWeightFn& f_;
  const BridgeTable& table_;
  Memo& memo_;
  std::vector<Frame> stack_;
};

template <class Memo>
SolveResult run_bst(const Polygon& poly, const TriangleWeightFn& f, const BridgeTable& table, Memo& memo) {
  SolveResult out;
  BstSearch<Memo> search(poly, f, table, memo);
  auto choice_of = [&](std::optional<Cone> c) -> std::uint8_t {
    return c ? memo.choice(*c) : std::uint8_t{0};
  };

  if (poly.size() == 3) {
    out.weight = f.triangle(poly, 0, 1, 2);
  } else if (auto rc = root_cone(poly)) {
    search.solve(*rc);
    out.weight = search.value(*rc);
  } else {
    RootExpansion root = expand_root(poly);
    for (const Cone& c : root.branches[0].cones) search.solve(c);
    out.weight = branch_value(poly, f, root.branches[0], [&](const Cone& c) { return search.value(c); });
  }
  auto triangles = collect_triangles(poly, table, choice_of);
  out.triangulation = triangulation_from_triangles(poly.size(), triangles, out.weight);
  out.stats = search.stats;
  out.stats.memo_entries = memo.entries();
  out.stats.backend = to_string(Memo::backend());
  return out;
}

}  // namespace detail

inline SolveResult solve_bst(const Polygon& poly, const TriangleWeightFn& f, const BstOptions& options) {
  require_monotone(f, poly);
  auto start = std::chrono::steady_clock::now();
  SolveResult out;
  if (options.backend == MemoBackend::dense) {
    // The quadratic walk mirrors the per-bridge initialization of D.
    if (poly.size() > options.dense_cap) {
      throw InvalidInput("dense memo refused: n = " + std::to_string(poly.size()) + " exceeds cap " +
                         std::to_string(options.dense_cap));
    }
    BridgeTable table = find_bridges_walk(poly);
    DenseMemo memo(poly, table, options.dense_cap);
    out = detail::run_bst(poly, f, table, memo);
    out.stats.total_cones = count_cones(poly, table);
  } else {
    BridgeTable table = find_bridges_linear(poly);
    HashMemo memo(poly, table);
    out = detail::run_bst(poly, f, table, memo);
    out.stats.total_cones = count_cones(poly, table);
  }
  out.stats.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start);
  return out;
}

inline SolveResult solve_bst(const Polygon& poly, const TriangleWeightFn& f,
                             MemoBackend backend = MemoBackend::hash) {
  return solve_bst(poly, f, BstOptions{backend, kDefaultDenseCap});
}

}  // namespace polytri
