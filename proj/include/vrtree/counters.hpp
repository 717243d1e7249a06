#ifndef VRTREE_COUNTERS_HPP
#define VRTREE_COUNTERS_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

namespace vrtree {

/// Per-run operation tallies. Layer k is the tree depth of the node whose
/// children a kernel call is computing (1 for an edge, 2 for a triangle, ...).
struct ComparisonCounters {
  std::uint64_t edge_probes = 0;
  std::uint64_t merge_comparisons = 0;
  std::uint64_t nodes_created = 0;

  std::vector<std::uint64_t> lookup_calls_by_layer;
  std::vector<std::uint64_t> probes_by_layer;
  std::vector<std::uint64_t> intersect_calls_by_layer;
  std::vector<std::uint64_t> comparisons_by_layer;

  void add_lookups(std::size_t layer, std::uint64_t calls, std::uint64_t probes) {
    bump(lookup_calls_by_layer, layer, calls);
    bump(probes_by_layer, layer, probes);
  }

  void add_intersections(std::size_t layer, std::uint64_t calls, std::uint64_t comparisons) {
    bump(intersect_calls_by_layer, layer, calls);
    bump(comparisons_by_layer, layer, comparisons);
  }

  /// Mean kernel operations per call at a layer; 0 when no calls happened.
  static double per_call(const std::vector<std::uint64_t>& ops, const std::vector<std::uint64_t>& calls,
                         std::size_t layer) {
    if (layer >= calls.size() || calls[layer] == 0)
      return 0.0;
    return static_cast<double>(ops[layer]) / static_cast<double>(calls[layer]);
  }

  double probes_per_lookup(std::size_t layer) const { return per_call(probes_by_layer, lookup_calls_by_layer, layer); }
  double comparisons_per_intersection(std::size_t layer) const {
    return per_call(comparisons_by_layer, intersect_calls_by_layer, layer);
  }

  ComparisonCounters& operator+=(const ComparisonCounters& o) {
    edge_probes += o.edge_probes;
    merge_comparisons += o.merge_comparisons;
    nodes_created += o.nodes_created;
    add(lookup_calls_by_layer, o.lookup_calls_by_layer);
    add(probes_by_layer, o.probes_by_layer);
    add(intersect_calls_by_layer, o.intersect_calls_by_layer);
    add(comparisons_by_layer, o.comparisons_by_layer);
    return *this;
  }

  friend bool operator==(const ComparisonCounters&, const ComparisonCounters&) = default;

private:
  static void bump(std::vector<std::uint64_t>& v, std::size_t i, std::uint64_t by) {
    if (v.size() <= i)
      v.resize(i + 1, 0);
    v[i] += by;
  }
  static void add(std::vector<std::uint64_t>& into, const std::vector<std::uint64_t>& from) {
    if (into.size() < from.size())
      into.resize(from.size(), 0);
    for (std::size_t i = 0; i < from.size(); ++i)
      into[i] += from[i];
  }
};

} // namespace vrtree

#endif
