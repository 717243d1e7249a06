#ifndef VRTREE_COMBINATORICS_HPP
#define VRTREE_COMBINATORICS_HPP

#include <algorithm>
#include <compare>
#include <utility>
#include <vector>

#include "vrtree/error.hpp"
#include "vrtree/simplex.hpp"

// Order-theoretic facts that make the table-lookup expansion correct:
//
//  * If s0 != s1 are facets of s, exactly one 2-subset of s lies in neither,
//    namely {s \ s0, s \ s1}. So two k-simplices sharing a (k-1)-face span a
//    (k+1)-simplex iff that one pair is an edge.
//  * Ordering equal-dimension simplices lexicographically, and pairs of them
//    lexicographically on (smaller, larger), each (k+1)-simplex tau has a
//    unique minimal generating pair: tau minus its largest vertex, and tau
//    minus its second-largest. Their intersection is tau minus its two
//    largest vertices, the smallest (k-1)-face of tau.
//
// The expansion exploits the second fact by only ever pairing siblings in the
// simplex tree, which share exactly that minimal (k-1)-face as parent.

namespace vrtree {

/// Unordered vertex pair, stored with low < high.
struct VertexPair {
  VertexId low;
  VertexId high;
  friend bool operator==(const VertexPair&, const VertexPair&) = default;
};

inline VertexPair make_vertex_pair(VertexId a, VertexId b) {
  return a < b ? VertexPair{a, b} : VertexPair{b, a};
}

namespace detail {

inline bool is_subset(const Simplex& sub, const Simplex& super) {
  return std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

// The single vertex of `s` missing from its facet `f`.
inline VertexId missing_vertex(const Simplex& s, const Simplex& f) {
  for (std::size_t i = 0; i < f.size(); ++i)
    if (s[i] != f[i])
      return s[i];
  return s.back();
}

} // namespace detail

/// For distinct facets s0, s1 of s, the only 2-subset of s contained in
/// neither: {s \ s0, s \ s1}.
inline VertexPair missing_pair(const Simplex& s, const Simplex& s0, const Simplex& s1) {
  if (s0.size() + 1 != s.size() || s1.size() + 1 != s.size())
    throw validation_error("missing_pair: s0 and s1 must have exactly one vertex fewer than s");
  if (s0 == s1)
    throw validation_error("missing_pair: s0 and s1 must differ");
  if (!detail::is_subset(s0, s) || !detail::is_subset(s1, s))
    throw validation_error("missing_pair: s0 and s1 must be faces of s");
  return make_vertex_pair(detail::missing_vertex(s, s0), detail::missing_vertex(s, s1));
}

/// Lexicographic order on simplices of one dimension.
inline std::strong_ordering compare_simplices(const Simplex& a, const Simplex& b) {
  if (a.size() != b.size())
    throw validation_error("compare_simplices: dimensions differ (" + std::to_string(a.dimension()) +
                           " vs " + std::to_string(b.dimension()) + ")");
  return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
}

/// Two distinct simplices of equal dimension, stored smaller first.
class SimplexPair {
public:
  SimplexPair(Simplex first, Simplex second) : first_(std::move(first)), second_(std::move(second)) {
    if (compare_simplices(first_, second_) != std::strong_ordering::less)
      throw validation_error("SimplexPair requires first < second");
  }

  /// Orders the two simplices before pairing them.
  static SimplexPair ordered(Simplex a, Simplex b) {
    if (compare_simplices(a, b) == std::strong_ordering::greater)
      std::swap(a, b);
    return SimplexPair(std::move(a), std::move(b));
  }

  const Simplex& first() const noexcept { return first_; }
  const Simplex& second() const noexcept { return second_; }

  friend bool operator==(const SimplexPair&, const SimplexPair&) = default;

private:
  Simplex first_;
  Simplex second_;
};

/// Lexicographic on (first, second).
inline std::strong_ordering compare_pairs(const SimplexPair& p, const SimplexPair& q) {
  if (p.first().size() != q.first().size())
    throw validation_error("compare_pairs: dimensions differ");
  if (auto c = compare_simplices(p.first(), q.first()); c != 0)
    return c;
  return compare_simplices(p.second(), q.second());
}

struct MinimalPairDecomposition {
  Simplex sigma0; // smallest facet: tau minus its largest vertex
  Simplex sigma1; // second smallest: tau minus its second-largest vertex
  Simplex rho;    // sigma0 intersect sigma1
  VertexId v0;    // tau \ sigma1 (second-largest vertex)
  VertexId v1;    // tau \ sigma0 (largest vertex)
};

/// Closed form for the minimal generating pair of tau (|tau| >= 3).
inline MinimalPairDecomposition minimal_pair(const Simplex& tau) {
  if (tau.size() < 3)
    throw validation_error("minimal_pair needs a simplex of dimension >= 2");
  const std::size_t last = tau.size() - 1;
  Simplex sigma0 = tau.without_index(last);
  Simplex sigma1 = tau.without_index(last - 1);
  Simplex rho = sigma0.without_index(last - 1);
  return {std::move(sigma0), std::move(sigma1), std::move(rho), tau[last - 1], tau[last]};
}

} // namespace vrtree

#endif
