// vrtree: generate graphs, build clique complexes, and benchmark the
// expansion algorithms.
//
//   vrtree gen    --n 100 --p 0.1 --seed 7 --out g.el
//   vrtree build  --input g.el --dim 3 --algo new [--dump out.txt] [--stats-out s.csv]
//   vrtree build  --points cloud.csv --epsilon 0.5 --dim 2
//   vrtree bench  --seed 0 [--p 0.1,0.2] [--dims 2,3] [--trials 100] [--out-format md]
//   vrtree verify --trials 200 --max-n 20

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#if __has_include(<CLI11.hpp>)
#include <CLI11.hpp>
#else
#include <CLI/CLI.hpp>
#endif
#include "vrtree/vrtree.hpp"

namespace {

using namespace vrtree;

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out)
    throw std::runtime_error(path + ": cannot open for writing");
  return out;
}

void write_text(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  auto out = open_output(path);
  out << text;
  if (!out)
    throw std::runtime_error(path + ": write failed");
}

template <class T>
std::string join(const std::vector<T>& xs, const char* sep = ",") {
  std::ostringstream os;
  for (std::size_t i = 0; i < xs.size(); ++i)
    os << (i ? sep : "") << xs[i];
  return os.str();
}

struct GenArgs {
  std::size_t n = 100;
  double p = 0.1;
  std::uint64_t seed = 0;
  std::string out = "-";
};

int run_gen(const GenArgs& a) {
  write_text(a.out, write_edge_list(erdos_renyi(a.n, a.p, a.seed)));
  return 0;
}

struct BuildArgs {
  std::string input;
  std::string points;
  double epsilon = -1.0;
  std::size_t dim = 2;
  std::string algo = "new";
  std::size_t workers = 1;
  std::optional<std::size_t> node_budget;
  std::string dump;
  std::string stats_out;
};

int run_build(const BuildArgs& a) {
  Graph g;
  if (!a.input.empty()) {
    g = read_edge_list_file(a.input);
  } else {
    if (a.epsilon < 0.0)
      throw CLI::ValidationError("--points requires --epsilon >= 0");
    g = from_point_cloud(read_point_cloud_file(a.points), a.epsilon);
  }

  const Algorithm algo = parse_algorithm(a.algo);
  const std::size_t workers = resolve_worker_count(a.workers);
  const BuildOptions opts{a.node_budget, false};
  const MaxDim d(a.dim);

  const auto start = std::chrono::steady_clock::now();
  BuildResult r;
  if (workers > 1 && (algo == Algorithm::new_vr || algo == Algorithm::incremental)) {
    auto pr = algo == Algorithm::new_vr ? parallel_new_vr(g, d, workers, opts)
                                        : parallel_incremental_vr(g, d, workers, opts);
    r = {std::move(pr.tree), std::move(pr.counters)};
  } else {
    r = construct(algo, g, d, opts);
  }
  const auto stop = std::chrono::steady_clock::now();
  const double us = std::chrono::duration<double, std::micro>(stop - start).count();

  std::cout << "vertices: " << g.vertex_count() << '\n'
            << "edges: " << g.edge_count() << '\n'
            << "algorithm: " << algorithm_name(algo) << '\n'
            << "max_dim: " << a.dim << '\n'
            << "f_vector: " << join(r.tree.f_vector()) << '\n'
            << "simplices: " << r.tree.size() << '\n'
            << "edge_probes: " << r.counters.edge_probes << '\n'
            << "merge_comparisons: " << r.counters.merge_comparisons << '\n'
            << "nodes_created: " << r.counters.nodes_created << '\n'
            << "time_us: " << us << '\n';

  if (!a.dump.empty())
    write_text(a.dump, r.tree.dump());
  if (!a.stats_out.empty()) {
    TrialRecord rec{0, 0.0, a.dim, algo, us, r.counters.edge_probes, r.counters.merge_comparisons,
                    r.counters.nodes_created, false};
    write_text(a.stats_out, stats_csv_header() + stats_csv_row(rec));
  }
  return 0;
}

struct BenchArgs {
  ExperimentConfig cfg;
  std::vector<std::string> algos{"new", "incremental"};
  std::string format = "md";
  std::string out = "-";
  std::string stats_out;
};

int run_bench(BenchArgs a) {
  a.cfg.algorithms.clear();
  for (const auto& s : a.algos) {
    const Algorithm alg = parse_algorithm(s);
    if (alg == Algorithm::brute_force)
      throw CLI::ValidationError("bench supports new, incremental and inductive");
    a.cfg.algorithms.push_back(alg);
  }
  a.cfg.workers = resolve_worker_count(a.cfg.workers);

  std::optional<std::ofstream> stats;
  if (!a.stats_out.empty()) {
    stats = open_output(a.stats_out);
    *stats << stats_csv_header();
  }
  const auto results = run_experiment(a.cfg, [&](const TrialRecord& r) {
    if (stats)
      *stats << stats_csv_row(r);
  });
  write_text(a.out, emit_table(results, a.format == "csv" ? OutputFormat::csv : OutputFormat::markdown));
  return 0;
}

struct VerifyArgs {
  std::size_t trials = 200;
  std::size_t max_n = 20;
  std::size_t max_dim = 5;
  std::uint64_t seed = 0;
  std::size_t workers = 2;
};

int run_verify(const VerifyArgs& a) {
  const auto rep = run_equivalence_suite(a.trials, a.max_n, a.seed, a.max_dim, resolve_worker_count(a.workers));
  for (const auto& f : rep.failures)
    std::cerr << "MISMATCH " << f << '\n';
  std::cout << rep.instances << " instances, " << rep.failures.size() << " mismatches\n";
  return rep.ok() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Clique-complex construction and benchmarking"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Write a seeded Erdos-Renyi edge list");
  gen_cmd->add_option("--n", gen.n, "Vertex count")->default_val(100);
  gen_cmd->add_option("--p", gen.p, "Edge probability")->required()->check(CLI::Range(0.0, 1.0));
  gen_cmd->add_option("--seed", gen.seed, "64-bit seed")->required();
  gen_cmd->add_option("--out", gen.out, "Output path ('-' for stdout)")->default_val("-");

  BuildArgs build;
  auto* build_cmd = app.add_subcommand("build", "Build the clique complex of one graph");
  auto* in_opt = build_cmd->add_option("--input", build.input, "Edge-list file")->check(CLI::ExistingFile);
  auto* pts_opt = build_cmd->add_option("--points", build.points, "Point-cloud CSV")->check(CLI::ExistingFile);
  in_opt->excludes(pts_opt);
  build_cmd->add_option("--epsilon", build.epsilon, "Distance threshold for --points");
  build_cmd->add_option("--dim", build.dim, "Maximum simplex dimension")->default_val(2);
  build_cmd->add_option("--algo", build.algo, "new | incremental | inductive | brute")
      ->default_val("new")
      ->check(CLI::IsMember({"new", "incremental", "inductive", "brute"}));
  build_cmd->add_option("--workers", build.workers, "Worker threads (0 = all CPUs)")->default_val(1);
  build_cmd->add_option("--node-budget", build.node_budget, "Abort beyond this many simplices");
  build_cmd->add_option("--dump", build.dump, "Write the canonical simplex dump here ('-' for stdout)");
  build_cmd->add_option("--stats-out", build.stats_out, "Write a counter CSV here");

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Run the Erdos-Renyi timing grid");
  bench_cmd->add_option("--n", bench.cfg.n, "Vertex count")->default_val(100);
  bench_cmd->add_option("--p", bench.cfg.p_list, "Edge probabilities")->delimiter(',')->default_str("0.1,...,0.6");
  bench_cmd->add_option("--dims", bench.cfg.dim_list, "Maximum dimensions")->delimiter(',')->default_str("2,...,6");
  bench_cmd->add_option("--trials", bench.cfg.trials, "Graphs per cell")->default_val(100)->check(CLI::PositiveNumber);
  bench_cmd->add_option("--seed", bench.cfg.seed, "Base seed; trial t uses seed + t")->required();
  bench_cmd->add_option("--algos", bench.algos, "Algorithms")->delimiter(',')->default_str("new,incremental");
  bench_cmd->add_option("--workers", bench.cfg.workers, "Worker threads per construction (0 = all CPUs)")->default_val(1);
  bench_cmd->add_option("--node-budget", bench.cfg.node_budget, "Per-construction node cap");
  bench_cmd->add_option("--out-format", bench.format, "csv | md")->default_val("md")->check(CLI::IsMember({"csv", "md"}));
  bench_cmd->add_option("--out", bench.out, "Table output ('-' for stdout)")->default_val("-");
  bench_cmd->add_option("--stats-out", bench.stats_out, "Per-trial counter CSV");
  bench_cmd->add_flag("!--no-warmup", bench.cfg.warmup, "Skip the untimed warm-up trial per cell");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Cross-check all constructions on small random graphs");
  verify_cmd->add_option("--trials", verify.trials, "Random instances")->default_val(200);
  verify_cmd->add_option("--max-n", verify.max_n, "Largest vertex count (>= 5)")->default_val(20);
  verify_cmd->add_option("--max-dim", verify.max_dim, "Largest dimension cap")->default_val(5);
  verify_cmd->add_option("--seed", verify.seed, "Base seed")->default_val(0);
  verify_cmd->add_option("--workers", verify.workers, "Threads for the parallel variants")->default_val(2);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen_cmd)
      return run_gen(gen);
    if (*build_cmd) {
      if (build.input.empty() && build.points.empty())
        throw CLI::RequiredError("--input or --points");
      return run_build(build);
    }
    if (*bench_cmd)
      return run_bench(bench);
    if (*verify_cmd)
      return run_verify(verify);
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
