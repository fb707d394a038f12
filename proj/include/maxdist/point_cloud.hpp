#pragma once

// n points in R^d, row-major, with cached Euclidean norms.

#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace maxdist {

struct PointCloud {
  int dim = 0;
  std::vector<double> coords;  // row-major, size n*dim
  std::vector<double> norms;   // size n

  std::size_t size() const { return norms.size(); }

  std::span<const double> point(std::size_t i) const {
    return {coords.data() + i * static_cast<std::size_t>(dim), static_cast<std::size_t>(dim)};
  }

  /// Squared distance between points i and j.
  double dist2(std::size_t i, std::size_t j) const {
    const double* p = coords.data() + i * static_cast<std::size_t>(dim);
    const double* q = coords.data() + j * static_cast<std::size_t>(dim);
    double s = 0.0;
    for (int k = 0; k < dim; ++k) {
      const double diff = p[k] - q[k];
      s += diff * diff;
    }
    return s;
  }

  void recompute_norms() {
    const std::size_t n = coords.size() / static_cast<std::size_t>(dim);
    norms.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      double s = 0.0;
      for (const double v : point(i)) s += v * v;
      norms[i] = std::sqrt(s);
    }
  }
};

/// Build a cloud from row-major coordinates; populates the norm cache.
inline PointCloud make_point_cloud(int dim, std::vector<double> coords) {
  if (dim < 1) throw std::invalid_argument("make_point_cloud: dimension must be >= 1");
  if (coords.empty() || coords.size() % static_cast<std::size_t>(dim) != 0) {
    throw std::invalid_argument("make_point_cloud: coordinate count not a multiple of dim");
  }
  PointCloud cloud;
  cloud.dim = dim;
  cloud.coords = std::move(coords);
  cloud.recompute_norms();
  return cloud;
}

}  // namespace maxdist
