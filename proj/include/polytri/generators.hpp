#pragma once

/**
 * Instance generators.
 *
 * Randomness is std::mt19937_64 seeded with the caller's seed, mapped onto
 * a range by rejection sampling (draw, reject the biased tail, take the
 * remainder). Both steps are fully specified, so the same (n, seed, range)
 * yields the same instance on every platform.
 */

#include <cstdint>
#include <limits>
#include <random>
#include <unordered_set>
#include <vector>

#include "polytri/core.hpp"
#include "polytri/matrix_chain.hpp"

namespace polytri {

struct WeightRange {
  Weight lo = 1;
  Weight hi = 1'000'000;
};

inline Weight uniform_in(std::mt19937_64& rng, Weight lo, Weight hi) {
  if (lo > hi) throw InvalidInput("empty weight range");
  const std::uint64_t span = hi - lo;
  if (span == std::numeric_limits<std::uint64_t>::max()) return rng();
  const std::uint64_t range = span + 1;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % range;
  std::uint64_t draw;
  do {
    draw = rng();
  } while (draw >= limit);
  return lo + draw % range;
}

/// SplitMix64 finalizer; derives independent per-trial seeds.
inline std::uint64_t mix_seed(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline Polygon gen_random(std::size_t n, std::uint64_t seed, WeightRange range = {}, bool distinct = false) {
  if (n < 3) throw InvalidInput("random polygon needs n >= 3");
  if (range.lo == 0) throw InvalidInput("weights must be positive");
  if (distinct && range.hi - range.lo + 1 < n && range.hi - range.lo + 1 != 0) {
    throw InvalidInput("weight range too small for distinct weights");
  }
  std::mt19937_64 rng(seed);
  std::vector<Weight> weights;
  weights.reserve(n);
  std::unordered_set<Weight> seen;
  while (weights.size() < n) {
    Weight w = uniform_in(rng, range.lo, range.hi);
    if (distinct && !seen.insert(w).second) continue;
    weights.push_back(w);
  }
  return Polygon(std::move(weights));
}

/// Staircase polygon with 2*half_n nodes: clockwise weights 1, 2, 4, ..., 2h, 2h-1, ..., 5, 3.
inline Polygon gen_staircase(std::size_t half_n) {
  if (half_n < 2) throw InvalidInput("staircase needs half_n >= 2");
  std::vector<Weight> weights{1};
  for (Weight w = 2; w <= 2 * half_n; w += 2) weights.push_back(w);
  for (Weight w = 2 * half_n - 1; w >= 3; w -= 2) weights.push_back(w);
  return Polygon(std::move(weights));
}

/**
 * Worst case of the stack heuristic: n-2 nodes of weight x and two of t*x,
 * arranged as labels v1, v2, v4, v6, ... (evens up) then ..., v5, v3 (odds
 * down), the two heavy labels being v(n-1) and v(n). With `perturb`, every
 * weight is scaled by 4n^2 and the label index added. Weights become
 * distinct and keep their label order, and since label offsets move an
 * additive triangulation weight by less than 3n^2, every additive optimum of
 * the perturbed polygon is also optimal for the unperturbed one.
 */
inline Polygon gen_heuristic_worst(std::size_t n, Weight t, Weight x, bool perturb = false) {
  if (n < 4) throw InvalidInput("heuristic worst case needs n >= 4");
  if (t < 1 || x < 1) throw InvalidInput("heuristic worst case needs t >= 1 and x >= 1");
  std::vector<std::size_t> labels{1};
  for (std::size_t k = 2; k <= n; k += 2) labels.push_back(k);
  for (std::size_t k = (n % 2 == 0) ? n - 1 : n; k >= 3; k -= 2) labels.push_back(k);
  std::vector<Weight> weights;
  weights.reserve(n);
  for (std::size_t label : labels) {
    Cost w = label + 2 > n ? checked::mul(t, x) : Cost{x};
    if (perturb) w = checked::add(checked::mul(w, 4 * static_cast<Cost>(n) * static_cast<Cost>(n)), static_cast<Cost>(label));
    if (w > static_cast<Cost>(std::numeric_limits<Weight>::max())) throw OverflowError("weight exceeds 64 bits");
    weights.push_back(static_cast<Weight>(w));
  }
  return Polygon(std::move(weights));
}

inline ChainDims gen_random_chain(std::size_t matrices, std::uint64_t seed, WeightRange range = {1, 100}) {
  if (matrices < 1) throw InvalidInput("chain needs at least one matrix");
  if (range.lo == 0) throw InvalidInput("dims must be positive");
  std::mt19937_64 rng(seed);
  std::vector<Weight> dims(matrices + 1);
  for (Weight& d : dims) d = uniform_in(rng, range.lo, range.hi);
  return ChainDims(std::move(dims));
}

}  // namespace polytri
