// polytri command line: solve, bench, gen, bridges.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "polytri/polytri.hpp"

using namespace polytri;

namespace {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::unique_ptr<std::istream> open_input(const std::string& path) {
  if (path == "-") return std::make_unique<std::istream>(std::cin.rdbuf());
  auto in = std::make_unique<std::ifstream>(path);
  if (!*in) throw IoError("cannot open '" + path + "'");
  return in;
}

std::unique_ptr<std::ostream> open_output(const std::string& path) {
  if (path == "-") return std::make_unique<std::ostream>(std::cout.rdbuf());
  auto out = std::make_unique<std::ofstream>(path);
  if (!*out) throw IoError("cannot write '" + path + "'");
  return out;
}

TriangleWeightFn weight_fn(const std::string& name) {
  if (name == "mult") return TriangleWeightFn::multiplicative();
  if (name == "add") return TriangleWeightFn::additive();
  return product_plus_sum();
}

MemoBackend memo_backend(const std::string& name) { return name == "dense" ? MemoBackend::dense : MemoBackend::hash; }

std::string edge_list(const std::vector<Edge>& edges) {
  std::string out;
  for (const Edge& e : edges) {
    if (!out.empty()) out += ' ';
    out += std::to_string(e.a) + "-" + std::to_string(e.b);
  }
  return out;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

// ---------------------------------------------------------------------------

struct SolveArgs {
  std::string input;
  std::string mode = "polygon";
  std::string algo = "bst";
  std::string weight = "mult";
  std::string memo = "hash";
  bool emit_edges = false;
  bool exact = false;
};

void print_stats(const SolveArgs& a, const SolveStats& s) {
  std::cout << "algo=" << a.algo << "\nweight_fn=" << a.weight << "\nmemo=" << (a.algo == "bst" ? s.backend : "-")
            << "\nvisited_cones=" << s.visited_cones << "\ntotal_cones=" << s.total_cones
            << "\nmemo_hits=" << s.memo_hits << "\nelapsed_ns=" << s.elapsed.count() << '\n';
}

int run_solve(const SolveArgs& a) {
  auto in = open_input(a.input);
  std::optional<ChainDims> chain;
  std::optional<Polygon> poly;
  if (a.mode == "chain") {
    if (a.weight != "mult") throw InvalidInput("chain mode uses the multiplicative weight");
    if (a.algo == "heuristic") throw InvalidInput("heuristic requires --weight add");
    chain = read_chain(*in);
    poly = chain_to_polygon(*chain);
    if (!poly) {
      std::cout << "optimal=0\nparenthesization=A1\n";
      return 0;
    }
  } else {
    poly = read_polygon(*in);
  }
  const TriangleWeightFn f = weight_fn(a.weight);

  if (a.algo == "heuristic") {
    HeuristicResult h = heuristic_triangulate(*poly, f);
    std::cout << "C=" << to_string(h.report.heuristic_weight) << '\n';
    if (a.exact) {
      HeuristicReport rep = error_ratio(*poly);
      std::cout << "C_opt=" << to_string(*rep.optimal_weight) << "\nE=" << rep.error_ratio->str() << '\n';
    }
    if (a.emit_edges) std::cout << "edges=" << edge_list(h.triangulation.edges) << '\n';
    return 0;
  }

  Cost weight = 0;
  Triangulation tri;
  SolveStats stats;
  if (a.algo == "dp3") {
    auto start = std::chrono::steady_clock::now();
    ExactSolution s = solve_dp_cubic(*poly, f);
    stats.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start);
    weight = s.weight;
    tri = s.triangulation;
  } else {
    SolveResult r = a.algo == "yao" ? solve_yao(*poly, f) : solve_bst(*poly, f, memo_backend(a.memo));
    weight = r.weight;
    tri = r.triangulation;
    stats = r.stats;
  }
  std::cout << "optimal=" << to_string(weight) << '\n';
  if (a.emit_edges) std::cout << "edges=" << edge_list(tri.edges) << '\n';
  if (chain) std::cout << "parenthesization=" << triangulation_to_parenthesization(*chain, tri) << '\n';
  print_stats(a, stats);
  return 0;
}

// ---------------------------------------------------------------------------

struct BenchArgs {
  std::string sizes = "100,1000";
  std::size_t trials = 1;
  std::uint64_t seed = 1;
  std::string algos = "bst,yao";
  std::string kind = "random";
  std::string csv = "-";
  std::string memo = "hash";
  std::string weight = "mult";
  Weight lo = 1;
  Weight hi = 1'000'000;
  bool summary = false;
};

int run_bench_cmd(const BenchArgs& a) {
  BenchConfig config;
  for (const std::string& s : split_list(a.sizes)) {
    try {
      config.sizes.push_back(std::stoul(s));
    } catch (const std::exception&) {
      throw InvalidInput("bad size '" + s + "'");
    }
  }
  if (config.sizes.empty()) throw InvalidInput("no sizes given");
  config.trials = a.trials;
  config.seed = a.seed;
  config.algorithms = split_list(a.algos);
  config.kind = a.kind == "staircase" ? InstanceKind::staircase : InstanceKind::random;
  config.memo = memo_backend(a.memo);
  config.range = {a.lo, a.hi};

  auto out = open_output(a.csv);
  *out << kBenchCsvHeader << '\n';
  std::vector<BenchRecord> records;
  run_bench(config, weight_fn(a.weight), [&](const BenchRecord& r) {
    *out << to_csv_row(r) << '\n' << std::flush;
    records.push_back(r);
  });
  if (a.summary) {
    std::ostream& sink = a.csv == "-" ? std::cerr : std::cout;
    for (const GrowthRow& g : growth_summary(records)) {
      sink << "summary algo=" << g.algorithm << " n=" << g.n << " samples=" << g.samples
           << " mean_visited=" << g.mean_visited << " visited_over_total=" << g.visited_over_total
           << " over_n_log_n=" << g.over_n_log_n << " over_n_squared=" << g.over_n_squared << '\n';
    }
  }
  return 0;
}

// ---------------------------------------------------------------------------

struct GenArgs {
  std::string kind = "random";
  std::size_t n = 10;
  Weight t = 2;
  Weight x = 1;
  std::uint64_t seed = 1;
  Weight lo = 1;
  Weight hi = 1'000'000;
  bool distinct = false;
  bool perturb = false;
  bool hi_given = false;
  std::string output = "-";
};

int run_gen(const GenArgs& a) {
  auto out = open_output(a.output);
  if (a.kind == "chain") {
    write_chain(*out, gen_random_chain(a.n, a.seed, {a.lo, a.hi_given ? a.hi : Weight{100}}));
    return 0;
  }
  Polygon poly = [&] {
    if (a.kind == "staircase") {
      if (a.n % 2 != 0) throw InvalidInput("staircase needs an even node count");
      return gen_staircase(a.n / 2);
    }
    if (a.kind == "heuristic-worst") return gen_heuristic_worst(a.n, a.t, a.x, a.perturb);
    return gen_random(a.n, a.seed, {a.lo, a.hi}, a.distinct);
  }();
  write_polygon(*out, poly);
  return 0;
}

// ---------------------------------------------------------------------------

int run_bridges(const std::string& input, const std::string& finder) {
  auto in = open_input(input);
  Polygon poly = read_polygon(*in);
  BridgeTable table = finder == "linear" ? find_bridges_linear(poly) : find_bridges_walk(poly);
  for (const Bridge& b : table.bridges()) std::cout << b.u << ' ' << b.v << ' ' << b.s << '\n';
  return 0;
}

int fail(const char* kind, const std::string& message) {
  std::cerr << "error=" << kind << " message=\"" << message << "\"\n";
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimum-weight triangulation of node-weighted convex polygons"};
  app.require_subcommand(1);

  SolveArgs solve;
  auto* s = app.add_subcommand("solve", "Solve one polygon or matrix chain");
  s->add_option("--input", solve.input, "Input file ('-' for stdin)")->required();
  s->add_option("--mode", solve.mode)->check(CLI::IsMember({"polygon", "chain"}));
  s->add_option("--algo", solve.algo)->check(CLI::IsMember({"dp3", "yao", "bst", "heuristic"}));
  s->add_option("--weight", solve.weight)->check(CLI::IsMember({"mult", "add", "custom"}));
  s->add_option("--memo", solve.memo)->check(CLI::IsMember({"dense", "hash"}));
  s->add_flag("--emit-edges", solve.emit_edges, "Print the internal edges");
  s->add_flag("--exact", solve.exact, "With the heuristic, also print the optimum and the error ratio");

  BenchArgs bench;
  auto* b = app.add_subcommand("bench", "Run the benchmark harness and emit CSV");
  b->add_option("--sizes", bench.sizes, "Comma-separated node counts");
  b->add_option("--trials", bench.trials);
  b->add_option("--seed", bench.seed);
  b->add_option("--algos", bench.algos, "Comma-separated subset of bst,yao,dp3,heuristic");
  b->add_option("--kind", bench.kind)->check(CLI::IsMember({"random", "staircase"}));
  b->add_option("--csv", bench.csv, "Output path ('-' for stdout)");
  b->add_option("--memo", bench.memo)->check(CLI::IsMember({"dense", "hash"}));
  b->add_option("--weight", bench.weight)->check(CLI::IsMember({"mult", "add", "custom"}));
  b->add_option("--lo", bench.lo);
  b->add_option("--hi", bench.hi);
  b->add_flag("--summary", bench.summary, "Print per-size growth ratios");

  GenArgs gen;
  auto* g = app.add_subcommand("gen", "Generate an instance");
  g->add_option("--kind", gen.kind)->check(CLI::IsMember({"random", "staircase", "heuristic-worst", "chain"}));
  g->add_option("--n", gen.n, "Node count (matrix count for --kind chain)");
  g->add_option("--t", gen.t);
  g->add_option("--x", gen.x);
  g->add_option("--seed", gen.seed);
  g->add_option("--lo", gen.lo);
  auto* gen_hi = g->add_option("--hi", gen.hi, "Upper weight bound (default 1000000, 100 for chains)");
  g->add_flag("--distinct", gen.distinct);
  g->add_flag("--perturb", gen.perturb);
  g->add_option("--output", gen.output);

  std::string bridges_input, finder = "walk";
  auto* br = app.add_subcommand("bridges", "Print bridges as 'u v S' lines");
  br->add_option("--input", bridges_input)->required();
  br->add_option("--finder", finder)->check(CLI::IsMember({"walk", "linear"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return fail("usage", e.what());
  }

  gen.hi_given = gen_hi->count() > 0;
  try {
    if (*s) return run_solve(solve);
    if (*b) return run_bench_cmd(bench);
    if (*g) return run_gen(gen);
    return run_bridges(bridges_input, finder);
  } catch (const IoError& e) {
    return fail("io", e.what());
  } catch (const ParseError& e) {
    return fail("parse", e.what());
  } catch (const NonMonotoneError& e) {
    return fail("non_monotone", e.what());
  } catch (const InvalidTriangulation& e) {
    return fail("invalid_triangulation", e.what());
  } catch (const InvalidInput& e) {
    return fail("invalid_input", e.what());
  } catch (const OverflowError& e) {
    return fail("overflow", e.what());
  } catch (const std::exception& e) {
    return fail("internal", e.what());
  }
}
