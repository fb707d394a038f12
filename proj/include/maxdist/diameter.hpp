#pragma once

// Exact maximum interpoint distance, maximum norm, and threshold-exceedance
// pair counts.
//
// diameter_pruned sorts by norm descending and skips pairs whose norm sum
// cannot beat the incumbent; distances come from |x - y| <= |x| + |y|. The
// naive quadratic scan stays as the permanent correctness oracle. Ties are
// broken toward the lexicographically smallest original (i, j), so both
// algorithms report the identical pair; the prune conditions are strict
// inequalities so exactly-tied pairs are never skipped.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "maxdist/point_cloud.hpp"

namespace maxdist {

struct DiameterResult {
  double value = 0.0;
  std::size_t i = 0;  // i < j, original indices
  std::size_t j = 0;
  long long comparisons = 0;  // distance evaluations performed
};

namespace detail {

inline bool pair_less(std::size_t i1, std::size_t j1, std::size_t i2, std::size_t j2) {
  return i1 < i2 || (i1 == i2 && j1 < j2);
}

inline std::vector<std::size_t> indices_by_norm_desc(const PointCloud& points) {
  std::vector<std::size_t> order(points.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return points.norms[a] > points.norms[b];
  });
  return order;
}

}  // namespace detail

/// Exact diameter over all n(n-1)/2 pairs.
inline DiameterResult diameter_naive(const PointCloud& points) {
  const std::size_t n = points.size();
  if (n < 2) throw std::invalid_argument("diameter_naive: need at least 2 points");
  DiameterResult best{-1.0, 0, 1, 0};
  double best_d2 = -1.0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double d2 = points.dist2(i, j);
      ++best.comparisons;
      if (d2 > best_d2) {
        best_d2 = d2;
        best.i = i;
        best.j = j;
      }
    }
  }
  best.value = std::sqrt(best_d2);
  return best;
}

/// Exact diameter with norm-sum pruning; identical value and tie-broken pair
/// as diameter_naive.
inline DiameterResult diameter_pruned(const PointCloud& points) {
  const std::size_t n = points.size();
  if (n < 2) throw std::invalid_argument("diameter_pruned: need at least 2 points");
  const std::vector<std::size_t> order = detail::indices_by_norm_desc(points);

  DiameterResult best{-1.0, 0, 0, 0};
  double best_d2 = -1.0;
  double best_dist = -1.0;
  bool have = false;
  for (std::size_t a = 0; a + 1 < n; ++a) {
    const std::size_t i = order[a];
    if (have && 2.0 * points.norms[i] < best_dist) break;
    for (std::size_t b = a + 1; b < n; ++b) {
      const std::size_t j = order[b];
      if (have && points.norms[i] + points.norms[j] < best_dist) break;
      const double d2 = points.dist2(i, j);
      ++best.comparisons;
      const std::size_t lo = std::min(i, j);
      const std::size_t hi = std::max(i, j);
      if (d2 > best_d2 ||
          (d2 == best_d2 && detail::pair_less(lo, hi, best.i, best.j))) {
        if (d2 > best_d2) {
          best_d2 = d2;
          best_dist = std::sqrt(d2);
          have = true;
        }
        best.i = lo;
        best.j = hi;
      }
    }
  }
  best.value = std::sqrt(best_d2);
  return best;
}

/// Largest cached norm and its smallest attaining index.
inline std::pair<double, std::size_t> max_norm(const PointCloud& points) {
  if (points.size() == 0) throw std::invalid_argument("max_norm: empty cloud");
  std::size_t arg = 0;
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (points.norms[i] > points.norms[arg]) arg = i;
  }
  return {points.norms[arg], arg};
}

struct PairCounts {
  long long w_n = 0;        // pairs with |X_i - X_j| > threshold
  long long w_prime_n = 0;  // additionally |X_i|, |X_j| <= cap
  double threshold = 0.0;
  double cap = 0.0;
  long long comparisons = 0;
};

/// Count threshold-exceeding pairs, optionally capped by norm. Pairs whose
/// norm sum is <= threshold cannot exceed it and are pruned.
inline PairCounts count_pairs(const PointCloud& points, double threshold,
                              std::optional<double> cap = std::nullopt) {
  const std::size_t n = points.size();
  if (n < 2) throw std::invalid_argument("count_pairs: need at least 2 points");
  PairCounts counts;
  counts.threshold = threshold;
  counts.cap = cap.value_or(std::numeric_limits<double>::infinity());
  const double cap_value = counts.cap;
  const double t2 = threshold >= 0.0 ? threshold * threshold : -1.0;
  const std::vector<std::size_t> order = detail::indices_by_norm_desc(points);
  for (std::size_t a = 0; a + 1 < n; ++a) {
    const std::size_t i = order[a];
    if (2.0 * points.norms[i] <= threshold) break;
    const bool i_capped = points.norms[i] <= cap_value;
    for (std::size_t b = a + 1; b < n; ++b) {
      const std::size_t j = order[b];
      if (points.norms[i] + points.norms[j] <= threshold) break;
      const double d2 = points.dist2(i, j);
      ++counts.comparisons;
      if (threshold < 0.0 || d2 > t2) {
        ++counts.w_n;
        if (i_capped && points.norms[j] <= cap_value) ++counts.w_prime_n;
      }
    }
  }
  return counts;
}

/// Angle in [0, pi] between points i and j (as vectors from the origin).
inline double pair_angle(const PointCloud& points, std::size_t i, std::size_t j) {
  if (!(points.norms[i] > 0.0) || !(points.norms[j] > 0.0)) {
    throw std::domain_error("pair_angle: angle undefined for a zero vector");
  }
  const auto p = points.point(i);
  const auto q = points.point(j);
  double dot = 0.0;
  for (int k = 0; k < points.dim; ++k) dot += p[k] * q[k];
  const double c = std::clamp(dot / (points.norms[i] * points.norms[j]), -1.0, 1.0);
  return std::acos(c);
}

}  // namespace maxdist
