#ifndef VRTREE_GRAPH_HPP
#define VRTREE_GRAPH_HPP

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "vrtree/error.hpp"

namespace vrtree {

/// Vertices are the dense integers 0..n-1; their integer order is the
/// total order every construction relies on.
using VertexId = std::uint32_t;

using Edge = std::pair<VertexId, VertexId>;

/**
 * Immutable undirected simple graph.
 *
 * Keeps two views of the same edge set: a dense bit table for O(1) probes
 * and per-vertex sorted adjacency for merge-style intersection. Both are
 * built once and never modified, so a Graph can be shared freely between
 * threads.
 */
class Graph {
public:
  Graph() = default;

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edge_count_; }

  /// Range-checked adjacency probe.
  bool has_edge(VertexId u, VertexId v) const {
    check_vertex(u);
    check_vertex(v);
    return has_edge_unchecked(u, v);
  }

  bool has_edge_unchecked(VertexId u, VertexId v) const noexcept {
    const std::size_t bit = static_cast<std::size_t>(u) * row_words_ * 64 + v;
    return (bits_[bit >> 6] >> (bit & 63)) & 1u;
  }

  /// All neighbours of u, increasing.
  std::span<const VertexId> neighbors(VertexId u) const {
    check_vertex(u);
    return {adjacency_.data() + offsets_[u], adjacency_.data() + offsets_[u + 1]};
  }

  /// Neighbours of u with a larger label, increasing.
  std::span<const VertexId> upper_neighbors(VertexId u) const {
    check_vertex(u);
    return upper_neighbors_unchecked(u);
  }

  std::span<const VertexId> upper_neighbors_unchecked(VertexId u) const noexcept {
    return {adjacency_.data() + upper_offsets_[u], adjacency_.data() + offsets_[u + 1]};
  }

  /// The table L: last element of neighbors(u), empty when u is isolated.
  std::optional<VertexId> largest_neighbor(VertexId u) const {
    check_vertex(u);
    if (offsets_[u] == offsets_[u + 1])
      return std::nullopt;
    return adjacency_[offsets_[u + 1] - 1];
  }

  /// Largest neighbour of u, or `fallback` when u is isolated.
  VertexId largest_neighbor_or(VertexId u, VertexId fallback) const noexcept {
    return offsets_[u] == offsets_[u + 1] ? fallback : adjacency_[offsets_[u + 1] - 1];
  }

  std::size_t degree(VertexId u) const {
    check_vertex(u);
    return offsets_[u + 1] - offsets_[u];
  }

  /// Edges with u < v in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (VertexId u = 0; u < n_; ++u)
      for (VertexId v : upper_neighbors_unchecked(u))
        out.emplace_back(u, v);
    return out;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.bits_ == b.bits_;
  }

  friend Graph build_graph(std::size_t n, std::span<const Edge> edges);

private:
  void check_vertex(VertexId u) const {
    if (u >= n_)
      throw validation_error("vertex " + std::to_string(u) + " out of range for graph with " +
                             std::to_string(n_) + " vertices");
  }

  void set_bit(VertexId u, VertexId v) {
    const std::size_t bit = static_cast<std::size_t>(u) * row_words_ * 64 + v;
    bits_[bit >> 6] |= std::uint64_t{1} << (bit & 63);
  }

  std::size_t n_ = 0;
  std::size_t row_words_ = 0;
  std::size_t edge_count_ = 0;
  std::vector<std::uint64_t> bits_;
  std::vector<VertexId> adjacency_;
  std::vector<std::size_t> offsets_{0};
  std::vector<std::size_t> upper_offsets_;
};

/// Builds a graph on n vertices. Duplicate and reversed pairs collapse to one
/// undirected edge; self-loops and out-of-range endpoints are rejected.
inline Graph build_graph(std::size_t n, std::span<const Edge> edges) {
  if (n > std::size_t{1} << 20)
    throw validation_error("vertex count " + std::to_string(n) + " exceeds the dense edge table limit");

  Graph g;
  g.n_ = n;
  g.row_words_ = (n + 63) / 64;
  g.bits_.assign(n * g.row_words_, 0);

  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n)
      throw validation_error("edge (" + std::to_string(u) + "," + std::to_string(v) +
                             "): vertex out of range for graph with " + std::to_string(n) +
                             " vertices");
    if (u == v)
      throw validation_error("edge (" + std::to_string(u) + "," + std::to_string(v) +
                             "): self-loop");
    g.set_bit(u, v);
    g.set_bit(v, u);
  }

  // Sorted adjacency falls out of a row scan of the bit table.
  g.offsets_.assign(n + 1, 0);
  g.upper_offsets_.assign(n, 0);
  for (VertexId u = 0; u < n; ++u) {
    const std::uint64_t* row = g.bits_.data() + u * g.row_words_;
    g.upper_offsets_[u] = g.adjacency_.size();
    for (std::size_t w = 0; w < g.row_words_; ++w) {
      std::uint64_t word = row[w];
      while (word) {
        const auto v = static_cast<VertexId>(w * 64 + std::countr_zero(word));
        g.adjacency_.push_back(v);
        if (v <= u)
          g.upper_offsets_[u] = g.adjacency_.size();
        word &= word - 1;
      }
    }
    g.offsets_[u + 1] = g.adjacency_.size();
  }
  g.edge_count_ = g.adjacency_.size() / 2;
  return g;
}

inline Graph build_graph(std::size_t n, std::initializer_list<Edge> edges) {
  return build_graph(n, std::span<const Edge>(edges.begin(), edges.size()));
}

inline Graph build_graph(std::size_t n, const std::vector<Edge>& edges) {
  return build_graph(n, std::span<const Edge>(edges));
}

/**
 * SplitMix64 (Steele, Lea & Flood 2014). The generator behind every seeded
 * random graph in this library. Its output sequence for a given seed is part
 * of the file-format contract and must not change.
 */
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint64_t next() noexcept {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0,1) from the top 53 bits.
  double next_unit() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
  std::uint64_t state_;
};

/// G(n,p). Pairs (u,v), u<v, are visited in lexicographic order with one
/// SplitMix64 draw each; the pair is an edge iff the draw is below p.
inline Graph erdos_renyi(std::size_t n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0))
    throw validation_error("edge probability " + std::to_string(p) + " outside [0,1]");
  SplitMix64 rng(seed);
  std::vector<Edge> edges;
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v)
      if (rng.next_unit() < p)
        edges.emplace_back(u, v);
  return build_graph(n, edges);
}

} // namespace vrtree

#endif
