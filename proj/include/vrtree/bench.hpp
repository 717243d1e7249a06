#ifndef VRTREE_BENCH_HPP
#define VRTREE_BENCH_HPP

#include <chrono>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iomanip>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "vrtree/construction.hpp"
#include "vrtree/graph.hpp"
#include "vrtree/parallel.hpp"

namespace vrtree {

enum class OutputFormat { csv, markdown };

struct ExperimentConfig {
  std::size_t n = 100;
  std::vector<double> p_list{0.1, 0.2, 0.3, 0.4, 0.5, 0.6};
  std::vector<std::size_t> dim_list{2, 3, 4, 5, 6};
  std::size_t trials = 100;
  std::uint64_t seed = 0;
  std::vector<Algorithm> algorithms{Algorithm::new_vr, Algorithm::incremental};
  std::size_t workers = 1;
  std::optional<std::size_t> node_budget;
  bool warmup = true;

  void validate() const {
    if (trials == 0)
      throw validation_error("trials must be at least 1");
    if (workers == 0)
      throw validation_error("workers must be resolved to at least 1");
    if (algorithms.empty())
      throw validation_error("no algorithms selected");
    for (double p : p_list)
      if (!(p >= 0.0 && p <= 1.0))
        throw validation_error("edge probability " + std::to_string(p) + " outside [0,1]");
  }
};

/// One timed construction.
struct TrialRecord {
  std::size_t trial = 0;
  double p = 0.0;
  std::size_t dim = 0;
  Algorithm algorithm = Algorithm::new_vr;
  double time_us = 0.0;
  std::uint64_t edge_probes = 0;
  std::uint64_t merge_comparisons = 0;
  std::uint64_t nodes_created = 0;
  bool aborted = false;
};

struct CellResult {
  double p = 0.0;
  std::size_t dim = 0;
  Algorithm algorithm = Algorithm::new_vr;
  std::size_t trials = 0;
  std::size_t failures = 0;
  double mean_time_us = 0.0;
  double stddev_time_us = 0.0;
  double mean_edge_probes = 0.0;
  double mean_merge_comparisons = 0.0;
  std::vector<double> mean_f_vector;

  bool exhausted() const noexcept { return failures == trials; }
};

/// Trial t of every cell uses graph G(n, p, seed + t), whatever the algorithm.
inline std::uint64_t trial_seed(const ExperimentConfig& cfg, std::size_t trial) {
  return cfg.seed + trial;
}

namespace detail {

inline BuildResult run_one(Algorithm a, const Graph& g, MaxDim d, std::size_t workers, const BuildOptions& opts) {
  if (workers > 1 && a == Algorithm::new_vr) {
    auto r = parallel_new_vr(g, d, workers, opts);
    return {std::move(r.tree), std::move(r.counters)};
  }
  if (workers > 1 && a == Algorithm::incremental) {
    auto r = parallel_incremental_vr(g, d, workers, opts);
    return {std::move(r.tree), std::move(r.counters)};
  }
  return construct(a, g, d, opts);
}

} // namespace detail

/**
 * Runs the (p, dim) grid. Trials run one after another; only the
 * construction call is inside the timed region. Trial 0 of each cell also
 * cross-checks that all algorithms produced the same simplex set and throws
 * std::runtime_error if not. Node-budget aborts count as failures.
 * `on_trial`, when set, sees every timed trial.
 */
inline std::vector<CellResult> run_experiment(const ExperimentConfig& cfg,
                                              const std::function<void(const TrialRecord&)>& on_trial = {}) {
  cfg.validate();
  using clock = std::chrono::steady_clock;
  const BuildOptions opts{cfg.node_budget, false};

  std::vector<CellResult> results;
  for (double p : cfg.p_list) {
    for (std::size_t dim : cfg.dim_list) {
      const MaxDim d(dim);
      std::vector<CellResult> cells(cfg.algorithms.size());
      std::vector<std::vector<double>> times(cfg.algorithms.size());
      std::vector<std::vector<double>> fsum(cfg.algorithms.size());

      if (cfg.warmup) {
        const Graph g = erdos_renyi(cfg.n, p, trial_seed(cfg, 0));
        for (Algorithm a : cfg.algorithms) {
          try {
            detail::run_one(a, g, d, cfg.workers, opts);
          } catch (const resource_error&) {
          }
        }
      }

      for (std::size_t t = 0; t < cfg.trials; ++t) {
        const Graph g = erdos_renyi(cfg.n, p, trial_seed(cfg, t));
        std::optional<std::string> reference;
        for (std::size_t ai = 0; ai < cfg.algorithms.size(); ++ai) {
          const Algorithm a = cfg.algorithms[ai];
          TrialRecord rec{t, p, dim, a};
          std::optional<BuildResult> built;
          const auto start = clock::now();
          try {
            built = detail::run_one(a, g, d, cfg.workers, opts);
          } catch (const resource_error&) {
            rec.aborted = true;
          }
          const auto stop = clock::now();

          CellResult& cell = cells[ai];
          ++cell.trials;
          if (rec.aborted) {
            ++cell.failures;
          } else {
            rec.time_us = std::chrono::duration<double, std::micro>(stop - start).count();
            rec.edge_probes = built->counters.edge_probes;
            rec.merge_comparisons = built->counters.merge_comparisons;
            rec.nodes_created = built->counters.nodes_created;
            times[ai].push_back(rec.time_us);
            cell.mean_edge_probes += static_cast<double>(rec.edge_probes);
            cell.mean_merge_comparisons += static_cast<double>(rec.merge_comparisons);
            const auto f = built->tree.f_vector();
            if (fsum[ai].size() < f.size())
              fsum[ai].resize(f.size(), 0.0);
            for (std::size_t k = 0; k < f.size(); ++k)
              fsum[ai][k] += static_cast<double>(f[k]);

            if (t == 0) {
              std::string dump = built->tree.dump();
              if (!reference)
                reference = std::move(dump);
              else if (*reference != dump)
                throw std::runtime_error("algorithms disagree on the complex for p=" + std::to_string(p) +
                                         ", dim=" + std::to_string(dim) + ", trial 0 (" +
                                         std::string(algorithm_name(a)) + ")");
            }
          }
          if (on_trial)
            on_trial(rec);
        }
      }

      for (std::size_t ai = 0; ai < cfg.algorithms.size(); ++ai) {
        CellResult& cell = cells[ai];
        cell.p = p;
        cell.dim = dim;
        cell.algorithm = cfg.algorithms[ai];
        const auto ok = static_cast<double>(times[ai].size());
        if (ok > 0) {
          double sum = 0.0;
          for (double x : times[ai])
            sum += x;
          cell.mean_time_us = sum / ok;
          double var = 0.0;
          for (double x : times[ai])
            var += (x - cell.mean_time_us) * (x - cell.mean_time_us);
          cell.stddev_time_us = ok > 1 ? std::sqrt(var / (ok - 1)) : 0.0;
          cell.mean_edge_probes /= ok;
          cell.mean_merge_comparisons /= ok;
          for (double& x : fsum[ai])
            x /= ok;
          cell.mean_f_vector = std::move(fsum[ai]);
        }
        results.push_back(std::move(cell));
      }
    }
  }
  return results;
}

inline constexpr std::string_view no_data = "No Data Available";

/// 1234567.891 -> "1,234,567.89"
inline std::string with_thousands(double x) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(2) << x;
  std::string s = os.str();
  const bool neg = !s.empty() && s[0] == '-';
  const std::size_t int_begin = neg ? 1 : 0;
  std::size_t dot = s.find('.');
  if (dot == std::string::npos)
    dot = s.size();
  for (std::ptrdiff_t i = static_cast<std::ptrdiff_t>(dot) - 3; i > static_cast<std::ptrdiff_t>(int_begin); i -= 3)
    s.insert(static_cast<std::size_t>(i), ",");
  return s;
}

/**
 * Markdown: one table per algorithm, rows p, columns dim, cells the mean
 * time in microseconds. CSV: one row per cell with every statistic; the
 * mean f-vector is ';'-joined within its field.
 */
inline std::string emit_table(const std::vector<CellResult>& results, OutputFormat format) {
  std::ostringstream os;
  if (format == OutputFormat::csv) {
    os << "algorithm,p,dim,trials,failures,mean_time_us,stddev_time_us,mean_edge_probes,mean_merge_comparisons,mean_f_vector\n";
    os << std::setprecision(10);
    for (const auto& c : results) {
      os << algorithm_name(c.algorithm) << ',' << c.p << ',' << c.dim << ',' << c.trials << ',' << c.failures << ',';
      if (c.exhausted()) {
        os << no_data << ",,,,\n";
        continue;
      }
      os << c.mean_time_us << ',' << c.stddev_time_us << ',' << c.mean_edge_probes << ','
         << c.mean_merge_comparisons << ',';
      for (std::size_t k = 0; k < c.mean_f_vector.size(); ++k)
        os << (k ? ";" : "") << c.mean_f_vector[k];
      os << '\n';
    }
    return os.str();
  }

  // Preserve first-seen order of algorithms, p values and dims.
  std::vector<Algorithm> algos;
  std::vector<double> ps;
  std::vector<std::size_t> dims;
  std::map<std::tuple<int, double, std::size_t>, const CellResult*> index;
  auto add_unique = [](auto& v, auto x) {
    for (const auto& y : v)
      if (y == x)
        return;
    v.push_back(x);
  };
  for (const auto& c : results) {
    add_unique(algos, c.algorithm);
    add_unique(ps, c.p);
    add_unique(dims, c.dim);
    index[{static_cast<int>(c.algorithm), c.p, c.dim}] = &c;
  }

  for (std::size_t ai = 0; ai < algos.size(); ++ai) {
    if (ai)
      os << '\n';
    os << "Mean run times (microseconds), " << algorithm_name(algos[ai]) << "\n\n";
    os << "| p \\ dim |";
    for (auto d : dims)
      os << ' ' << d << " |";
    os << "\n|---|";
    for (std::size_t i = 0; i < dims.size(); ++i)
      os << "---:|";
    os << '\n';
    for (double p : ps) {
      os << "| " << p << " |";
      for (auto d : dims) {
        auto it = index.find({static_cast<int>(algos[ai]), p, d});
        if (it == index.end())
          os << "  |";
        else if (it->second->exhausted())
          os << ' ' << no_data << " |";
        else
          os << ' ' << with_thousands(it->second->mean_time_us) << " |";
      }
      os << '\n';
    }
  }
  return os.str();
}

inline std::string stats_csv_header() {
  return "trial,algorithm,dim,time_us,edge_probes,merge_comparisons,nodes_created,p\n";
}

inline std::string stats_csv_row(const TrialRecord& r) {
  std::ostringstream os;
  os << std::setprecision(10) << r.trial << ',' << algorithm_name(r.algorithm) << ',' << r.dim << ',';
  if (r.aborted)
    os << no_data << ",,,";
  else
    os << r.time_us << ',' << r.edge_probes << ',' << r.merge_comparisons << ',' << r.nodes_created;
  os << ',' << r.p << '\n';
  return os.str();
}

} // namespace vrtree

#endif
