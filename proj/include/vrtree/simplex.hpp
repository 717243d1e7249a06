#ifndef VRTREE_SIMPLEX_HPP
#define VRTREE_SIMPLEX_HPP

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "vrtree/error.hpp"
#include "vrtree/graph.hpp"

namespace vrtree {

/// Nonempty, strictly increasing vertex sequence. Dimension is size - 1.
class Simplex {
public:
  Simplex(std::initializer_list<VertexId> vs) : vertices_(vs) { validate(); }
  explicit Simplex(std::vector<VertexId> vs) : vertices_(std::move(vs)) { validate(); }
  explicit Simplex(std::span<const VertexId> vs) : vertices_(vs.begin(), vs.end()) { validate(); }

  std::size_t size() const noexcept { return vertices_.size(); }
  std::size_t dimension() const noexcept { return vertices_.size() - 1; }

  std::span<const VertexId> vertices() const noexcept { return vertices_; }
  VertexId operator[](std::size_t i) const { return vertices_[i]; }
  VertexId front() const noexcept { return vertices_.front(); }
  VertexId back() const noexcept { return vertices_.back(); }
  auto begin() const noexcept { return vertices_.begin(); }
  auto end() const noexcept { return vertices_.end(); }

  bool contains(VertexId v) const noexcept {
    for (VertexId w : vertices_)
      if (w == v)
        return true;
    return false;
  }

  /// Face obtained by deleting the vertex at position i. Requires size() >= 2.
  Simplex without_index(std::size_t i) const {
    if (vertices_.size() < 2 || i >= vertices_.size())
      throw validation_error("cannot drop vertex " + std::to_string(i) + " from a " +
                             std::to_string(vertices_.size()) + "-vertex simplex");
    std::vector<VertexId> out;
    out.reserve(vertices_.size() - 1);
    for (std::size_t j = 0; j < vertices_.size(); ++j)
      if (j != i)
        out.push_back(vertices_[j]);
    return Simplex(std::move(out), trusted{});
  }

  /// Canonical order: dimension first, then lexicographic.
  friend std::strong_ordering operator<=>(const Simplex& a, const Simplex& b) {
    if (auto c = a.size() <=> b.size(); c != 0)
      return c;
    return a.vertices_ <=> b.vertices_;
  }
  friend bool operator==(const Simplex&, const Simplex&) = default;

  friend std::ostream& operator<<(std::ostream& os, const Simplex& s) {
    os << '{';
    for (std::size_t i = 0; i < s.size(); ++i)
      os << (i ? "," : "") << s[i];
    return os << '}';
  }

private:
  struct trusted {};
  Simplex(std::vector<VertexId> vs, trusted) : vertices_(std::move(vs)) {}

  void validate() const {
    if (vertices_.empty())
      throw validation_error("simplex must have at least one vertex");
    for (std::size_t i = 1; i < vertices_.size(); ++i)
      if (vertices_[i - 1] >= vertices_[i])
        throw validation_error("simplex vertices must be strictly increasing");
  }

  std::vector<VertexId> vertices_;
};

} // namespace vrtree

#endif
