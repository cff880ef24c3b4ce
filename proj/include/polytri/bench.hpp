#pragma once

/**
 * Benchmark harness.
 *
 * One record per (size, trial, algorithm). Instance seeds are derived from
 * (seed, n, trial), so every column except elapsed_ns is reproducible.
 *
 * CSV columns: n,trial,algo,weight_fn,memo,visited_cones,total_cones,elapsed_ns,optimal_weight
 * A run that hits a size cap writes empty numeric columns and the reason
 * in optimal_weight, e.g. "skipped:cap".
 */

#include <cmath>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "polytri/baselines.hpp"
#include "polytri/bst_solver.hpp"
#include "polytri/generators.hpp"
#include "polytri/heuristic.hpp"
#include "polytri/yao_solver.hpp"

namespace polytri {

inline constexpr const char* kBenchCsvHeader =
    "n,trial,algo,weight_fn,memo,visited_cones,total_cones,elapsed_ns,optimal_weight";

struct BenchRecord {
  std::size_t n = 0;
  std::size_t trial = 0;
  std::string algorithm;
  std::string weight_fn;
  std::string memo;  // "-" when the algorithm has no memo backend
  std::optional<std::size_t> visited_cones;
  std::optional<std::size_t> total_cones;
  std::optional<long long> elapsed_ns;
  std::optional<Cost> optimal_weight;
  std::string skipped;  // non-empty when the run was refused

  bool ok() const { return skipped.empty(); }
  friend bool operator==(const BenchRecord&, const BenchRecord&) = default;
};

enum class InstanceKind { random, staircase };

struct BenchConfig {
  std::vector<std::size_t> sizes;
  std::size_t trials = 1;
  std::uint64_t seed = 1;
  std::vector<std::string> algorithms{"bst", "yao"};
  InstanceKind kind = InstanceKind::random;
  WeightRange range{};
  MemoBackend memo = MemoBackend::hash;
  std::size_t dp3_cap = 1500;
  std::size_t yao_cap = 20000;
  std::size_t dense_cap = kDefaultDenseCap;
};

inline Polygon bench_instance(const BenchConfig& config, std::size_t n, std::size_t trial) {
  if (config.kind == InstanceKind::staircase) {
    if (n % 2 != 0 || n < 4) throw InvalidInput("staircase sizes must be even and at least 4");
    return gen_staircase(n / 2);
  }
  std::uint64_t seed = mix_seed(config.seed ^ mix_seed((std::uint64_t{n} << 20) ^ trial));
  return gen_random(n, seed, config.range);
}

/**
 * Runs every configured algorithm on every (size, trial) instance and hands
 * each record to `sink` in (size, trial, algorithm) order.
 */
template <class Sink>
void run_bench(const BenchConfig& config, const TriangleWeightFn& f, Sink&& sink) {
  for (std::size_t n : config.sizes) {
    if (n < 3) throw InvalidInput("benchmark sizes must be at least 3");
    for (std::size_t trial = 0; trial < config.trials; ++trial) {
      Polygon poly = bench_instance(config, n, trial);
      for (const std::string& algo : config.algorithms) {
        BenchRecord rec;
        rec.n = n;
        rec.trial = trial;
        rec.algorithm = algo;
        rec.weight_fn = f.name();
        rec.memo = algo == "bst" ? to_string(config.memo) : "-";
        auto finish = [&](Cost weight, const SolveStats* stats, long long elapsed) {
          rec.optimal_weight = weight;
          rec.elapsed_ns = elapsed;
          if (stats) {
            rec.visited_cones = stats->visited_cones;
            rec.total_cones = stats->total_cones;
          }
        };
        try {
          if (algo == "bst") {
            if (config.memo == MemoBackend::dense && n > config.dense_cap) {
              rec.skipped = "skipped:cap";
            } else {
              SolveResult r = solve_bst(poly, f, BstOptions{config.memo, config.dense_cap});
              finish(r.weight, &r.stats, r.stats.elapsed.count());
            }
          } else if (algo == "yao") {
            if (n > config.yao_cap) {
              rec.skipped = "skipped:cap";
            } else {
              SolveResult r = solve_yao(poly, f);
              finish(r.weight, &r.stats, r.stats.elapsed.count());
            }
          } else if (algo == "dp3") {
            if (n > config.dp3_cap) {
              rec.skipped = "skipped:cap";
            } else {
              auto start = std::chrono::steady_clock::now();
              ExactSolution r = solve_dp_cubic(poly, f);
              auto ns = std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start);
              finish(r.weight, nullptr, ns.count());
            }
          } else if (algo == "heuristic") {
            auto start = std::chrono::steady_clock::now();
            HeuristicResult r = heuristic_triangulate(poly, f);
            auto ns = std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start);
            finish(r.report.heuristic_weight, nullptr, ns.count());
          } else {
            throw InvalidInput("unknown algorithm '" + algo + "'");
          }
        } catch (const OverflowError&) {
          rec.skipped = "skipped:overflow";
        }
        sink(rec);
      }
    }
  }
}

inline std::vector<BenchRecord> run_bench(const BenchConfig& config, const TriangleWeightFn& f) {
  std::vector<BenchRecord> out;
  run_bench(config, f, [&](const BenchRecord& r) { out.push_back(r); });
  return out;
}

// ---------------------------------------------------------------------------
// CSV

inline std::string to_csv_row(const BenchRecord& r) {
  std::ostringstream os;
  auto opt = [&os](const auto& v) {
    if (v) os << *v;
  };
  os << r.n << ',' << r.trial << ',' << r.algorithm << ',' << r.weight_fn << ',' << r.memo << ',';
  opt(r.visited_cones);
  os << ',';
  opt(r.total_cones);
  os << ',';
  opt(r.elapsed_ns);
  os << ',';
  if (!r.ok()) {
    os << r.skipped;
  } else if (r.optimal_weight) {
    os << to_string(*r.optimal_weight);
  }
  return os.str();
}

inline void write_csv(std::ostream& out, const std::vector<BenchRecord>& records) {
  out << kBenchCsvHeader << '\n';
  for (const auto& r : records) out << to_csv_row(r) << '\n';
}

inline BenchRecord parse_csv_row(const std::string& line) {
  std::vector<std::string> cells;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) cells.push_back(cell);
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  if (cells.size() != 9) throw ParseError("bench csv: expected 9 columns, got " + std::to_string(cells.size()));
  auto num = [](const std::string& s) -> std::optional<long long> {
    if (s.empty()) return std::nullopt;
    return static_cast<long long>(parse_cost(s));
  };
  BenchRecord r;
  try {
    r.n = static_cast<std::size_t>(*num(cells[0]));
    r.trial = static_cast<std::size_t>(*num(cells[1]));
    r.algorithm = cells[2];
    r.weight_fn = cells[3];
    r.memo = cells[4];
    if (auto v = num(cells[5])) r.visited_cones = static_cast<std::size_t>(*v);
    if (auto v = num(cells[6])) r.total_cones = static_cast<std::size_t>(*v);
    r.elapsed_ns = num(cells[7]);
    if (cells[8].rfind("skipped:", 0) == 0) {
      r.skipped = cells[8];
    } else if (!cells[8].empty()) {
      r.optimal_weight = parse_cost(cells[8]);
    }
  } catch (const std::exception& e) {
    throw ParseError(std::string("bench csv: ") + e.what());
  }
  return r;
}

inline std::vector<BenchRecord> read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kBenchCsvHeader) throw ParseError("bench csv: missing header");
  std::vector<BenchRecord> out;
  while (std::getline(in, line)) {
    if (!line.empty()) out.push_back(parse_csv_row(line));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Growth summary

struct GrowthRow {
  std::string algorithm;
  std::size_t n = 0;
  std::size_t samples = 0;
  double mean_visited = 0;
  double mean_total = 0;
  double visited_over_total = 0;
  double over_n_log_n = 0;  // mean_visited / (n log2 n)
  double over_n_squared = 0;
};

/// Per (algorithm, n) means of visited cones and their normalized ratios.
inline std::vector<GrowthRow> growth_summary(const std::vector<BenchRecord>& records) {
  std::map<std::pair<std::string, std::size_t>, GrowthRow> rows;
  std::map<std::size_t, bool> sizes;
  for (const auto& r : records) {
    if (!r.ok() || !r.visited_cones || !r.total_cones) continue;
    GrowthRow& row = rows[{r.algorithm, r.n}];
    row.algorithm = r.algorithm;
    row.n = r.n;
    ++row.samples;
    row.mean_visited += static_cast<double>(*r.visited_cones);
    row.mean_total += static_cast<double>(*r.total_cones);
    sizes[r.n] = true;
  }
  if (sizes.size() < 2) throw InvalidInput("growth summary needs at least two sizes");
  if (sizes.rbegin()->first < 10 * sizes.begin()->first) {
    throw InvalidInput("growth summary sizes must span at least one decade");
  }
  std::vector<GrowthRow> out;
  for (auto& [key, row] : rows) {
    row.mean_visited /= static_cast<double>(row.samples);
    row.mean_total /= static_cast<double>(row.samples);
    double n = static_cast<double>(row.n);
    row.visited_over_total = row.mean_visited / row.mean_total;
    row.over_n_log_n = row.mean_visited / (n * std::log2(n));
    row.over_n_squared = row.mean_visited / (n * n);
    out.push_back(row);
  }
  return out;
}

}  // namespace polytri
