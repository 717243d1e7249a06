#ifndef VRTREE_POINT_CLOUD_HPP
#define VRTREE_POINT_CLOUD_HPP

#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "vrtree/error.hpp"
#include "vrtree/graph.hpp"

namespace vrtree {

/// Points sharing one coordinate dimension (>= 1). Stored row-major.
class PointCloud {
public:
  PointCloud() = default;

  explicit PointCloud(const std::vector<std::vector<double>>& points) {
    if (points.empty())
      return;
    dim_ = points.front().size();
    if (dim_ == 0)
      throw validation_error("point 0 has no coordinates");
    coords_.reserve(points.size() * dim_);
    for (std::size_t i = 0; i < points.size(); ++i) {
      if (points[i].size() != dim_)
        throw validation_error("point " + std::to_string(i) + " has dimension " +
                               std::to_string(points[i].size()) + ", expected " +
                               std::to_string(dim_));
      coords_.insert(coords_.end(), points[i].begin(), points[i].end());
    }
  }

  std::size_t size() const noexcept { return dim_ == 0 ? 0 : coords_.size() / dim_; }
  std::size_t dimension() const noexcept { return dim_; }

  std::span<const double> operator[](std::size_t i) const {
    return {coords_.data() + i * dim_, dim_};
  }

private:
  std::size_t dim_ = 0;
  std::vector<double> coords_;
};

/// Neighbourhood graph: vertex i is point i, edge (i,j) iff the Euclidean
/// distance between the points is at most epsilon.
inline Graph from_point_cloud(const PointCloud& pc, double epsilon) {
  if (!(epsilon >= 0.0))
    throw validation_error("epsilon must be non-negative");
  const double eps2 = epsilon * epsilon;
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < pc.size(); ++i) {
    for (std::size_t j = i + 1; j < pc.size(); ++j) {
      double d2 = 0.0;
      auto a = pc[i];
      auto b = pc[j];
      for (std::size_t c = 0; c < pc.dimension(); ++c)
        d2 += (a[c] - b[c]) * (a[c] - b[c]);
      if (d2 <= eps2)
        edges.emplace_back(static_cast<VertexId>(i), static_cast<VertexId>(j));
    }
  }
  return build_graph(pc.size(), edges);
}

} // namespace vrtree

#endif
