#ifndef VRTREE_VERIFY_HPP
#define VRTREE_VERIFY_HPP

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "vrtree/construction.hpp"
#include "vrtree/graph.hpp"
#include "vrtree/parallel.hpp"

namespace vrtree {

struct EquivalenceInstance {
  std::size_t n;
  double p;
  std::size_t dim;
  std::uint64_t graph_seed;
};

/// Instance i of the equivalence sweep: n in [5, max_n], p from
/// {0.1, 0.3, 0.5, 0.8}, dim in [1, max_dim], all drawn from seed + i.
inline EquivalenceInstance equivalence_instance(std::uint64_t seed, std::size_t i, std::size_t max_n,
                                                std::size_t max_dim) {
  static constexpr std::array<double, 4> ps{0.1, 0.3, 0.5, 0.8};
  SplitMix64 rng(seed + i);
  const std::size_t lo = 5;
  const std::size_t hi = std::max(max_n, lo);
  EquivalenceInstance inst{};
  inst.n = lo + rng.next() % (hi - lo + 1);
  inst.p = ps[rng.next() % ps.size()];
  inst.dim = 1 + rng.next() % std::max<std::size_t>(max_dim, 1);
  inst.graph_seed = rng.next();
  return inst;
}

struct EquivalenceReport {
  std::size_t instances = 0;
  std::vector<std::string> failures;
  bool ok() const noexcept { return failures.empty(); }
};

/**
 * Builds every instance with all four constructions (and both parallel
 * variants with `workers` threads) and compares canonical dumps. Also runs
 * the table-lookup and merge kernels side by side, and checks that New-VR
 * created exactly one node per simplex.
 */
inline EquivalenceReport run_equivalence_suite(std::size_t trials, std::size_t max_n, std::uint64_t seed,
                                               std::size_t max_dim = 5, std::size_t workers = 2) {
  EquivalenceReport rep;
  for (std::size_t i = 0; i < trials; ++i) {
    const auto inst = equivalence_instance(seed, i, max_n, max_dim);
    const Graph g = erdos_renyi(inst.n, inst.p, inst.graph_seed);
    const MaxDim d(inst.dim);
    const std::string where = "instance " + std::to_string(i) + " (n=" + std::to_string(inst.n) +
                              ", p=" + std::to_string(inst.p) + ", d=" + std::to_string(inst.dim) + ")";
    ++rep.instances;
    try {
      const auto oracle = brute_force_vr(g, d).tree.dump();
      const BuildOptions checked{std::nullopt, true};
      const auto nv = new_vr(g, d, checked);
      const std::pair<const char*, std::string> others[] = {
          {"new", nv.tree.dump()},
          {"incremental", incremental_vr(g, d, checked).tree.dump()},
          {"inductive", inductive_vr(g, d).tree.dump()},
          {"parallel new", parallel_new_vr(g, d, workers).tree.dump()},
          {"parallel incremental", parallel_incremental_vr(g, d, workers).tree.dump()},
      };
      for (const auto& [name, dump] : others)
        if (dump != oracle)
          rep.failures.push_back(where + ": " + name + " differs from brute force");
      if (nv.counters.nodes_created != nv.tree.size())
        rep.failures.push_back(where + ": new created " + std::to_string(nv.counters.nodes_created) +
                               " nodes for " + std::to_string(nv.tree.size()) + " simplices");
    } catch (const std::exception& e) {
      rep.failures.push_back(where + ": " + e.what());
    }
  }
  return rep;
}

} // namespace vrtree

#endif
