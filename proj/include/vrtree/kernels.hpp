#ifndef VRTREE_KERNELS_HPP
#define VRTREE_KERNELS_HPP

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "vrtree/error.hpp"
#include "vrtree/graph.hpp"

// The two ways of computing the children M of a new node sigma = tau + {v},
// given the sorted list N of sigma's siblings:
//
//   table lookup:   M = { w in N : w > v, {v,w} in E }   via O(1) probes
//   intersection:   M = N intersect upper_neighbors(v)   via a sorted merge
//
// Both return identical lists. The *_into variants append to a caller buffer
// and return the raw operation count; the expansion loops use those.

namespace vrtree {

namespace detail {

inline void check_increasing(std::span<const VertexId> xs, const char* what) {
  for (std::size_t i = 1; i < xs.size(); ++i)
    if (xs[i - 1] >= xs[i])
      throw validation_error(std::string(what) + " must be strictly increasing");
}

} // namespace detail

/// Probes {v,w} for each w in `later` (the siblings after v) up to
/// min(back(later), largest_neighbor(v)). Returns the probe count.
inline std::uint64_t table_lookup_into(const Graph& g, std::span<const VertexId> later, VertexId v,
                                       std::vector<VertexId>& out) {
  if (later.empty())
    return 0;
  // An isolated v has no L(v); bound 0 admits no w > v.
  const VertexId bound = std::min(later.back(), g.largest_neighbor_or(v, 0));
  std::uint64_t probes = 0;
  for (VertexId w : later) {
    if (w > bound)
      break;
    ++probes;
    if (g.has_edge_unchecked(v, w))
      out.push_back(w);
  }
  return probes;
}

/// Probes {v,w} for every w in `later`, no early stop.
inline std::uint64_t simplified_table_lookup_into(const Graph& g, std::span<const VertexId> later,
                                                  VertexId v, std::vector<VertexId>& out) {
  for (VertexId w : later)
    if (g.has_edge_unchecked(v, w))
      out.push_back(w);
  return later.size();
}

/**
 * Sorted intersection with two range guards, each placed in the branch
 * where it can fire:
 *   - while a < b (about to advance a): stop once b is past back(l1),
 *   - while a > b (about to advance b): stop once a is past back(l2).
 * Every loop iteration compares one element pair and counts once.
 */
inline std::uint64_t merge_intersect_into(std::span<const VertexId> l1, std::span<const VertexId> l2,
                                          std::vector<VertexId>& out) {
  if (l1.empty() || l2.empty())
    return 0;
  const VertexId end1 = l1.back();
  const VertexId end2 = l2.back();
  std::size_t i = 0;
  std::size_t j = 0;
  std::uint64_t comparisons = 0;
  while (i < l1.size() && j < l2.size()) {
    const VertexId a = l1[i];
    const VertexId b = l2[j];
    ++comparisons;
    if (a == b) {
      out.push_back(a);
      ++i;
      ++j;
    } else if (a < b) {
      if (b > end1)
        break;
      ++i;
    } else {
      if (a > end2)
        break;
      ++j;
    }
  }
  return comparisons;
}

/// Three-branch merge without range guards.
inline std::uint64_t simplified_merge_intersect_into(std::span<const VertexId> l1,
                                                     std::span<const VertexId> l2,
                                                     std::vector<VertexId>& out) {
  std::size_t i = 0;
  std::size_t j = 0;
  std::uint64_t comparisons = 0;
  while (i < l1.size() && j < l2.size()) {
    ++comparisons;
    if (l1[i] == l2[j]) {
      out.push_back(l1[i]);
      ++i;
      ++j;
    } else if (l1[i] < l2[j]) {
      ++i;
    } else {
      ++j;
    }
  }
  return comparisons;
}

// Checked, allocating front ends. `counter` receives the operation count.

/// `siblings` must contain v; only the siblings after v are candidates.
inline std::vector<VertexId> table_lookup(const Graph& g, std::span<const VertexId> siblings, VertexId v,
                                          std::uint64_t& probes) {
  detail::check_increasing(siblings, "siblings");
  g.has_edge(v, v); // range check
  auto it = std::lower_bound(siblings.begin(), siblings.end(), v);
  if (it == siblings.end() || *it != v)
    throw structural_error("table_lookup: vertex " + std::to_string(v) + " is not among the siblings");
  std::vector<VertexId> out;
  probes += table_lookup_into(g, {it + 1, siblings.end()}, v, out);
  return out;
}

/// Candidates need not contain v; every candidate above v is probed.
inline std::vector<VertexId> simplified_table_lookup(const Graph& g, std::span<const VertexId> candidates,
                                                     VertexId v, std::uint64_t& probes) {
  detail::check_increasing(candidates, "candidates");
  g.has_edge(v, v);
  auto it = std::upper_bound(candidates.begin(), candidates.end(), v);
  std::vector<VertexId> out;
  probes += simplified_table_lookup_into(g, {it, candidates.end()}, v, out);
  return out;
}

inline std::vector<VertexId> merge_intersect(std::span<const VertexId> l1, std::span<const VertexId> l2,
                                             std::uint64_t& comparisons) {
#ifndef NDEBUG
  detail::check_increasing(l1, "l1");
  detail::check_increasing(l2, "l2");
#endif
  std::vector<VertexId> out;
  comparisons += merge_intersect_into(l1, l2, out);
  return out;
}

inline std::vector<VertexId> simplified_merge_intersect(std::span<const VertexId> l1,
                                                        std::span<const VertexId> l2,
                                                        std::uint64_t& comparisons) {
#ifndef NDEBUG
  detail::check_increasing(l1, "l1");
  detail::check_increasing(l2, "l2");
#endif
  std::vector<VertexId> out;
  comparisons += simplified_merge_intersect_into(l1, l2, out);
  return out;
}

} // namespace vrtree

#endif
