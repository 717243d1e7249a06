#ifndef VRTREE_PARALLEL_HPP
#define VRTREE_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <numeric>
#include <optional>
#include <thread>
#include <vector>

#include "vrtree/construction.hpp"

namespace vrtree {

/// Which worker built which level-0 subtree in a parallel run.
struct WorkerPlan {
  std::size_t worker_count = 1;
  std::vector<std::size_t> assignment; // indexed by root vertex
};

struct ParallelBuildResult {
  SimplexTree tree;
  ComparisonCounters counters;
  WorkerPlan plan;
};

/// 0 means one worker per hardware thread.
inline std::size_t resolve_worker_count(std::size_t requested) {
  if (requested != 0)
    return requested;
  return std::max<std::size_t>(1, std::thread::hardware_concurrency());
}

namespace detail {

template <ChildKernel Kernel>
void build_fragment(const Graph& g, MaxDim d, VertexId root, const BuildOptions& opts, SimplexTree& tree,
                    ComparisonCounters& counters) {
  CofaceExpander<Kernel> ex(g, d, opts.verify_kernels, tree, counters);
  ex.add_root(root);
  ex.flush();
}

/**
 * Builds each level-0 subtree as its own fragment tree. Workers pull roots
 * from a shared cursor over the vertices sorted by decreasing upper degree,
 * so the heavy low-index roots start first and stragglers even out. Each
 * fragment owns its counters. After all workers join, fragments are grafted
 * in vertex order, which makes the result independent of scheduling.
 */
inline ParallelBuildResult parallel_expand(const Graph& g, MaxDim d, std::size_t workers, ChildKernel kernel,
                                           const BuildOptions& opts) {
  if (workers == 0)
    throw validation_error("worker count must be at least 1");
  const std::size_t n = g.vertex_count();

  std::vector<VertexId> order(n);
  std::iota(order.begin(), order.end(), VertexId{0});
  std::stable_sort(order.begin(), order.end(), [&](VertexId a, VertexId b) {
    return g.upper_neighbors_unchecked(a).size() > g.upper_neighbors_unchecked(b).size();
  });

  struct Fragment {
    SimplexTree tree;
    ComparisonCounters counters;
  };
  std::vector<std::optional<Fragment>> fragments(n);
  WorkerPlan plan{workers, std::vector<std::size_t>(n, 0)};

  std::atomic<std::size_t> cursor{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;

  auto work = [&](std::size_t worker) {
    try {
      while (!failed.load(std::memory_order_relaxed)) {
        const std::size_t idx = cursor.fetch_add(1, std::memory_order_relaxed);
        if (idx >= n)
          break;
        const VertexId u = order[idx];
        Fragment f{SimplexTree(opts.node_budget), {}};
        if (kernel == ChildKernel::table_lookup)
          build_fragment<ChildKernel::table_lookup>(g, d, u, opts, f.tree, f.counters);
        else
          build_fragment<ChildKernel::merge_intersect>(g, d, u, opts, f.tree, f.counters);
        fragments[u] = std::move(f);
        plan.assignment[u] = worker;
      }
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (!error)
        error = std::current_exception();
      failed = true;
    }
  };

  {
    std::vector<std::jthread> pool;
    const std::size_t spawned = std::min(workers, std::max<std::size_t>(n, 1)) - 1;
    pool.reserve(spawned);
    for (std::size_t w = 1; w <= spawned; ++w)
      pool.emplace_back(work, w);
    work(0);
  }
  if (error)
    std::rethrow_exception(error);

  ParallelBuildResult r{SimplexTree(opts.node_budget), {}, std::move(plan)};
  for (auto& f : fragments) {
    r.tree.graft(std::move(f->tree));
    r.counters += f->counters;
  }
  return r;
}

} // namespace detail

inline ParallelBuildResult parallel_new_vr(const Graph& g, MaxDim d, std::size_t workers,
                                           const BuildOptions& opts = {}) {
  return detail::parallel_expand(g, d, workers, ChildKernel::table_lookup, opts);
}

inline ParallelBuildResult parallel_incremental_vr(const Graph& g, MaxDim d, std::size_t workers,
                                                   const BuildOptions& opts = {}) {
  return detail::parallel_expand(g, d, workers, ChildKernel::merge_intersect, opts);
}

} // namespace vrtree

#endif
