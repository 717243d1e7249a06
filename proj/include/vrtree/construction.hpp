#ifndef VRTREE_CONSTRUCTION_HPP
#define VRTREE_CONSTRUCTION_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "vrtree/counters.hpp"
#include "vrtree/error.hpp"
#include "vrtree/graph.hpp"
#include "vrtree/kernels.hpp"
#include "vrtree/simplex.hpp"
#include "vrtree/simplex_tree.hpp"

namespace vrtree {

/// Dimension cap for an expansion: no simplex of dimension > d is built.
struct MaxDim {
  std::size_t d = 0;
  constexpr explicit MaxDim(std::size_t dim) noexcept : d(dim) {}
};

struct BuildOptions {
  /// Abort with resource_error once the tree would exceed this many nodes.
  std::optional<std::size_t> node_budget;
  /// Run both child-set kernels at every step and throw structural_error if
  /// they disagree. Counters still reflect only the selected kernel.
  bool verify_kernels = false;
};

struct BuildResult {
  SimplexTree tree;
  ComparisonCounters counters;
};

enum class Algorithm { new_vr, incremental, inductive, brute_force };

inline std::string_view algorithm_name(Algorithm a) {
  switch (a) {
  case Algorithm::new_vr:
    return "new";
  case Algorithm::incremental:
    return "incremental";
  case Algorithm::inductive:
    return "inductive";
  case Algorithm::brute_force:
    return "brute";
  }
  return "?";
}

inline Algorithm parse_algorithm(std::string_view s) {
  for (Algorithm a : {Algorithm::new_vr, Algorithm::incremental, Algorithm::inductive, Algorithm::brute_force})
    if (algorithm_name(a) == s)
      return a;
  throw validation_error("unknown algorithm '" + std::string(s) + "' (expected new, incremental, inductive or brute)");
}

enum class ChildKernel { table_lookup, merge_intersect };

namespace detail {

/**
 * Depth-first coface expansion shared by New-VR and Incremental-VR. The two
 * differ only in how the children M of sigma = tau + {v} are computed. One
 * scratch buffer per tree level holds the candidate list of the level being
 * expanded, so the recursion allocates nothing once the buffers are warm.
 * Recursion depth is bounded by min(d, clique number).
 */
template <ChildKernel Kernel>
class CofaceExpander {
public:
  CofaceExpander(const Graph& g, MaxDim d, bool verify, SimplexTree& tree, ComparisonCounters& counters)
      : g_(g), d_(d.d), verify_(verify), tree_(tree), counters_(counters),
        buffers_(std::min(d.d, g.vertex_count()) + 2), calls_(buffers_.size(), 0), ops_(buffers_.size(), 0) {}

  CofaceExpander(const CofaceExpander&) = delete;
  CofaceExpander& operator=(const CofaceExpander&) = delete;

  /// Adds every coface of tau (tau at tree depth tau_dim) reachable through
  /// `candidates`, up to dimension d.
  void expand(NodeHandle tau, std::size_t tau_dim, std::span<const VertexId> candidates) {
    if (tau_dim >= d_)
      return;
    const std::size_t layer = tau_dim + 1;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      const NodeHandle sigma = tree_.insert_child(tau, candidates[i]);
      ++nodes_;
      if (layer >= d_)
        continue;
      std::vector<VertexId>& next = buffers_[layer];
      next.clear();
      children_of(candidates, i, layer, next);
      expand(sigma, layer, next);
    }
  }

  void add_root(VertexId u) {
    const NodeHandle h = tree_.add_vertex(u);
    ++nodes_;
    expand(h, 0, g_.upper_neighbors_unchecked(u));
  }

  /// Children of sigma = tau + {candidates[i]}. Table lookup probes only
  /// the candidates after position i; the merge intersects the whole
  /// candidate list with the upper neighbours of the new vertex.
  void children_of(std::span<const VertexId> candidates, std::size_t i, std::size_t layer,
                   std::vector<VertexId>& out) {
    const VertexId v = candidates[i];
    if constexpr (Kernel == ChildKernel::table_lookup)
      ops_[layer] += table_lookup_into(g_, candidates.subspan(i + 1), v, out);
    else
      ops_[layer] += merge_intersect_into(candidates, g_.upper_neighbors_unchecked(v), out);
    ++calls_[layer];
    if (verify_)
      cross_check(candidates, i, layer, out);
  }

  /// Moves the tallies gathered so far into the counters.
  void flush() {
    for (std::size_t k = 0; k < calls_.size(); ++k) {
      if (calls_[k] == 0)
        continue;
      if constexpr (Kernel == ChildKernel::table_lookup) {
        counters_.edge_probes += ops_[k];
        counters_.add_lookups(k, calls_[k], ops_[k]);
      } else {
        counters_.merge_comparisons += ops_[k];
        counters_.add_intersections(k, calls_[k], ops_[k]);
      }
    }
    counters_.nodes_created += nodes_;
    std::fill(calls_.begin(), calls_.end(), 0);
    std::fill(ops_.begin(), ops_.end(), 0);
    nodes_ = 0;
  }

private:
  void cross_check(std::span<const VertexId> candidates, std::size_t i, std::size_t layer,
                   const std::vector<VertexId>& out) {
    const VertexId v = candidates[i];
    check_.clear();
    if constexpr (Kernel == ChildKernel::table_lookup)
      simplified_merge_intersect_into(candidates, g_.upper_neighbors_unchecked(v), check_);
    else
      simplified_table_lookup_into(g_, candidates.subspan(i + 1), v, check_);
    if (check_ != out)
      throw structural_error("child-set kernels disagree below vertex " + std::to_string(v) + " at layer " +
                             std::to_string(layer));
  }

  const Graph& g_;
  std::size_t d_;
  bool verify_;
  SimplexTree& tree_;
  ComparisonCounters& counters_;
  std::vector<std::vector<VertexId>> buffers_;
  std::vector<std::uint64_t> calls_;
  std::vector<std::uint64_t> ops_;
  std::uint64_t nodes_ = 0;
  std::vector<VertexId> check_;
};

template <ChildKernel Kernel>
BuildResult expand_all(const Graph& g, MaxDim d, const BuildOptions& opts) {
  BuildResult r{SimplexTree(opts.node_budget), {}};
  r.tree.reserve(g.vertex_count() + (d.d > 0 ? g.edge_count() : 0));
  CofaceExpander<Kernel> ex(g, d, opts.verify_kernels, r.tree, r.counters);
  for (VertexId u = 0; u < g.vertex_count(); ++u)
    ex.add_root(u);
  ex.flush();
  return r;
}

} // namespace detail

/// Expands tau's subtree from its future children `candidates`, computing
/// each grandchild list by table lookup. tau must already be in the tree.
inline void new_add_cofaces(const Graph& g, MaxDim d, NodeHandle tau, std::span<const VertexId> candidates,
                            SimplexTree& tree, ComparisonCounters& counters) {
  detail::check_increasing(candidates, "candidates");
  detail::CofaceExpander<ChildKernel::table_lookup> ex(g, d, false, tree, counters);
  ex.expand(tau, tree.is_root(tau) ? 0 : static_cast<std::size_t>(tree.depth(tau)), candidates);
  ex.flush();
}

/// As new_add_cofaces, with grandchild lists computed by merge intersection
/// against upper neighbours.
inline void add_cofaces(const Graph& g, MaxDim d, NodeHandle tau, std::span<const VertexId> candidates,
                        SimplexTree& tree, ComparisonCounters& counters) {
  detail::check_increasing(candidates, "candidates");
  detail::CofaceExpander<ChildKernel::merge_intersect> ex(g, d, false, tree, counters);
  ex.expand(tau, tree.is_root(tau) ? 0 : static_cast<std::size_t>(tree.depth(tau)), candidates);
  ex.flush();
}

/// Clique complex up to dimension d, children found by table lookup.
inline BuildResult new_vr(const Graph& g, MaxDim d, const BuildOptions& opts = {}) {
  return detail::expand_all<ChildKernel::table_lookup>(g, d, opts);
}

/// Clique complex up to dimension d, children found by sorted intersection.
inline BuildResult incremental_vr(const Graph& g, MaxDim d, const BuildOptions& opts = {}) {
  return detail::expand_all<ChildKernel::merge_intersect>(g, d, opts);
}

/**
 * Level-by-level expansion: starting from the 1-skeleton, each k-simplex
 * gets as children the full intersection of its vertices' upper neighbours.
 * Comparisons of the repeated intersections land in merge_comparisons.
 */
inline BuildResult inductive_vr(const Graph& g, MaxDim d, const BuildOptions& opts = {}) {
  BuildResult r{SimplexTree(opts.node_budget), {}};
  for (VertexId u = 0; u < g.vertex_count(); ++u) {
    const NodeHandle h = r.tree.add_vertex(u);
    ++r.counters.nodes_created;
    if (d.d == 0)
      continue;
    for (VertexId v : g.upper_neighbors_unchecked(u)) {
      r.tree.insert_child(h, v);
      ++r.counters.nodes_created;
    }
  }

  std::vector<VertexId> common;
  std::vector<VertexId> scratch;
  for (std::size_t k = 1; k < d.d; ++k) {
    const auto level = r.tree.nodes_at_level(k);
    if (level.empty())
      break;
    for (NodeHandle h : level) {
      const Simplex tau = r.tree.simplex_of(h);
      auto first = g.upper_neighbors_unchecked(tau[0]);
      common.assign(first.begin(), first.end());
      std::uint64_t cmps = 0;
      for (std::size_t i = 1; i < tau.size() && !common.empty(); ++i) {
        scratch.clear();
        cmps += merge_intersect_into(common, g.upper_neighbors_unchecked(tau[i]), scratch);
        common.swap(scratch);
      }
      r.counters.merge_comparisons += cmps;
      r.counters.add_intersections(k, 1, cmps);
      for (VertexId w : common) {
        r.tree.insert_child(h, w);
        ++r.counters.nodes_created;
      }
    }
  }
  return r;
}

/// Direct transcription of the clique-complex definition: every vertex
/// subset of size <= d+1 whose pairs are all edges. Exponential; meant as a
/// test oracle for n up to about 25 at d <= 4.
inline BuildResult brute_force_vr(const Graph& g, MaxDim d, const BuildOptions& opts = {}) {
  BuildResult r{SimplexTree(opts.node_budget), {}};
  const std::size_t n = g.vertex_count();
  const std::size_t max_size = std::min(d.d + 1, n);
  std::vector<VertexId> comb;
  for (std::size_t size = 1; size <= max_size; ++size) {
    comb.resize(size);
    for (std::size_t i = 0; i < size; ++i)
      comb[i] = static_cast<VertexId>(i);
    while (true) {
      bool clique = true;
      for (std::size_t i = 0; i < size && clique; ++i)
        for (std::size_t j = i + 1; j < size && clique; ++j)
          clique = g.has_edge_unchecked(comb[i], comb[j]);
      if (clique) {
        r.tree.insert(Simplex(comb));
        ++r.counters.nodes_created;
      }
      // Next combination in lexicographic order.
      std::size_t i = size;
      while (i > 0 && comb[i - 1] == n - size + i - 1)
        --i;
      if (i == 0)
        break;
      ++comb[i - 1];
      for (std::size_t j = i; j < size; ++j)
        comb[j] = comb[j - 1] + 1;
    }
  }
  return r;
}

inline BuildResult construct(Algorithm a, const Graph& g, MaxDim d, const BuildOptions& opts = {}) {
  switch (a) {
  case Algorithm::new_vr:
    return new_vr(g, d, opts);
  case Algorithm::incremental:
    return incremental_vr(g, d, opts);
  case Algorithm::inductive:
    return inductive_vr(g, d, opts);
  case Algorithm::brute_force:
    return brute_force_vr(g, d, opts);
  }
  throw std::logic_error("unreachable");
}

} // namespace vrtree

#endif
