#pragma once

// Spherically symmetric model families with exact radial tails and exact
// samplers. Each law factors into an independent radius and a direction
// uniform on the unit sphere, so tail probabilities and samples can be
// cross-checked against closed forms.

#include <cmath>
#include <random>
#include <stdexcept>
#include <string>
#include <variant>

#include "maxdist/point_cloud.hpp"
#include "maxdist/rng.hpp"
#include "maxdist/special.hpp"

namespace maxdist {

/// Density c * |x|^alpha * exp(-beta * |x|^gamma) on all of R^d, with c fixed
/// by normalization. Radial tail is a regularized upper incomplete gamma.
struct GammaTail {
  double alpha = 0.0;      // radial power, alpha + d > 0
  double beta = 1.0;       // rate, > 0
  double gamma_exp = 1.0;  // power in the exponent, > 0
  int dim = 1;

  double shape() const { return (alpha + dim) / gamma_exp; }

  /// Normalizing constant of the density.
  double density_constant() const {
    return gamma_exp * std::pow(beta, shape()) *
           std::exp(log_gamma(0.5 * dim) - log_gamma(shape())) /
           (2.0 * std::pow(M_PI, 0.5 * dim));
  }
};

/// Kotz-type law: density proportional to |x|^{2(b-1)} exp(-kappa |x|^2).
struct Kotz {
  double kappa = 1.0;  // rate, > 0
  double b = 1.0;      // shape, d/2 + b - 1 > 0
  int dim = 2;

  GammaTail resolved() const { return GammaTail{2.0 * (b - 1.0), kappa, 2.0, dim}; }
};

enum class BoundedKind { pure_weibull_radius, uniform_ball, uniform_sphere };

/// Law supported in the closed unit ball with radial survival
/// P(|X| > x) ~ c_w (1-x)^{alpha_w} as x -> 1.
struct BoundedTail {
  double alpha_w = 0.0;
  double c_w = 1.0;
  BoundedKind kind = BoundedKind::uniform_ball;
  int dim = 2;
};

/// Exact Pareto radius: P(|X| > x) = c_f x^{-alpha_f} for x >= c_f^{1/alpha_f}.
struct PowerLaw {
  double alpha_f = 1.0;  // tail index, > 0
  double c_f = 1.0;      // scale, > 0
  int dim = 2;

  double min_radius() const { return std::pow(c_f, 1.0 / alpha_f); }
};

using SphericalModel = std::variant<GammaTail, Kotz, BoundedTail, PowerLaw>;

inline void validate(const GammaTail& m) {
  if (m.dim < 1) throw std::invalid_argument("GammaTail: dimension must be >= 1");
  if (!(m.beta > 0.0)) throw std::invalid_argument("GammaTail: beta must be positive");
  if (!(m.gamma_exp > 0.0)) throw std::invalid_argument("GammaTail: gamma must be positive");
  if (!(m.alpha + m.dim > 0.0)) throw std::invalid_argument("GammaTail: need alpha + d > 0");
}

inline void validate(const Kotz& m) {
  if (m.dim < 1) throw std::invalid_argument("Kotz: dimension must be >= 1");
  if (!(m.kappa > 0.0)) throw std::invalid_argument("Kotz: kappa must be positive");
  if (!(0.5 * m.dim + m.b - 1.0 > 0.0)) throw std::invalid_argument("Kotz: need d/2 + b - 1 > 0");
}

inline void validate(const BoundedTail& m) {
  if (m.dim < 1) throw std::invalid_argument("BoundedTail: dimension must be >= 1");
  if (!(m.alpha_w >= 0.0)) throw std::invalid_argument("BoundedTail: alpha_w must be >= 0");
  if (!(m.c_w > 0.0)) throw std::invalid_argument("BoundedTail: c_w must be positive");
  switch (m.kind) {
    case BoundedKind::pure_weibull_radius:
      if (m.c_w != 1.0) throw std::invalid_argument("BoundedTail: pure-weibull-radius has c_w = 1");
      break;
    case BoundedKind::uniform_ball:
      if (m.alpha_w != 1.0 || m.c_w != static_cast<double>(m.dim)) {
        throw std::invalid_argument("BoundedTail: uniform-ball has alpha_w = 1, c_w = d");
      }
      break;
    case BoundedKind::uniform_sphere:
      if (m.alpha_w != 0.0 || m.c_w != 1.0) {
        throw std::invalid_argument("BoundedTail: uniform-sphere has alpha_w = 0, c_w = 1");
      }
      break;
  }
}

inline void validate(const PowerLaw& m) {
  if (m.dim < 1) throw std::invalid_argument("PowerLaw: dimension must be >= 1");
  if (!(m.alpha_f > 0.0)) throw std::invalid_argument("PowerLaw: alpha_f must be positive");
  if (!(m.c_f > 0.0)) throw std::invalid_argument("PowerLaw: c_f must be positive");
}

inline void validate(const SphericalModel& model) {
  std::visit([](const auto& m) { validate(m); }, model);
}

inline int dimension(const SphericalModel& model) {
  return std::visit([](const auto& m) { return m.dim; }, model);
}

/// Exact P(|X| > x) for x >= 0.
inline double tail_probability(const GammaTail& m, double x) {
  if (!(x >= 0.0)) throw std::domain_error("tail_probability: x must be nonnegative");
  return gamma_q(m.shape(), m.beta * std::pow(x, m.gamma_exp));
}

inline double tail_probability(const BoundedTail& m, double x) {
  if (!(x >= 0.0)) throw std::domain_error("tail_probability: x must be nonnegative");
  if (x >= 1.0) return 0.0;
  switch (m.kind) {
    case BoundedKind::pure_weibull_radius:
      return std::pow(1.0 - x, m.alpha_w);
    case BoundedKind::uniform_ball:
      return 1.0 - std::pow(x, m.dim);
    case BoundedKind::uniform_sphere:
      return 1.0;
  }
  return 0.0;
}

inline double tail_probability(const PowerLaw& m, double x) {
  if (!(x >= 0.0)) throw std::domain_error("tail_probability: x must be nonnegative");
  if (x <= m.min_radius()) return 1.0;
  return m.c_f * std::pow(x, -m.alpha_f);
}

inline double tail_probability(const Kotz& m, double x) { return tail_probability(m.resolved(), x); }

inline double tail_probability(const SphericalModel& model, double x) {
  return std::visit([x](const auto& m) { return tail_probability(m, x); }, model);
}

/// Uniform direction on S^{d-1}: normalized standard Gaussian vector, with a
/// redraw on the measure-zero all-zeros event.
inline void sample_direction_into(int d, RngStream& rng, double* out) {
  if (d < 1) throw std::invalid_argument("sample_direction: dimension must be >= 1");
  std::normal_distribution<double> normal(0.0, 1.0);
  if (d == 1) {
    double g;
    do { g = normal(rng); } while (g == 0.0);
    out[0] = g < 0.0 ? -1.0 : 1.0;
    return;
  }
  double norm2 = 0.0;
  do {
    norm2 = 0.0;
    for (int k = 0; k < d; ++k) {
      const double g = normal(rng);
      out[k] = g;
      norm2 += g * g;
    }
  } while (norm2 == 0.0);
  const double inv = 1.0 / std::sqrt(norm2);
  for (int k = 0; k < d; ++k) out[k] *= inv;
}

inline std::vector<double> sample_direction(int d, RngStream& rng) {
  std::vector<double> dir(static_cast<std::size_t>(d));
  sample_direction_into(d, rng, dir.data());
  return dir;
}

/// Exact radius draw. GammaTail: R = (G/beta)^{1/gamma} with G ~ Gamma(shape, 1);
/// bounded and power-law variants use their exact inverse CDFs.
inline double sample_radius(const GammaTail& m, RngStream& rng) {
  std::gamma_distribution<double> gamma_draw(m.shape(), 1.0);
  return std::pow(gamma_draw(rng) / m.beta, 1.0 / m.gamma_exp);
}

inline double sample_radius(const BoundedTail& m, RngStream& rng) {
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  switch (m.kind) {
    case BoundedKind::pure_weibull_radius: {
      if (m.alpha_w == 0.0) return 1.0;
      double u;
      do { u = uni(rng); } while (u == 0.0);
      return 1.0 - std::pow(u, 1.0 / m.alpha_w);
    }
    case BoundedKind::uniform_ball:
      return std::pow(uni(rng), 1.0 / m.dim);
    case BoundedKind::uniform_sphere:
      return 1.0;
  }
  return 1.0;
}

inline double sample_radius(const PowerLaw& m, RngStream& rng) {
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  double u;
  do { u = uni(rng); } while (u == 0.0);
  return m.min_radius() * std::pow(u, -1.0 / m.alpha_f);
}

inline double sample_radius(const Kotz& m, RngStream& rng) { return sample_radius(m.resolved(), rng); }

inline double sample_radius(const SphericalModel& model, RngStream& rng) {
  return std::visit([&rng](const auto& m) { return sample_radius(m, rng); }, model);
}

/// n independent radius-times-direction draws; norm cache populated.
inline PointCloud sample_points(const SphericalModel& model, std::size_t n, RngStream& rng) {
  if (n == 0) throw std::invalid_argument("sample_points: empty sample requested");
  validate(model);
  const int d = dimension(model);
  PointCloud cloud;
  cloud.dim = d;
  cloud.coords.resize(n * static_cast<std::size_t>(d));
  cloud.norms.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double radius = sample_radius(model, rng);
    double* row = cloud.coords.data() + i * static_cast<std::size_t>(d);
    sample_direction_into(d, rng, row);
    for (int k = 0; k < d; ++k) row[k] *= radius;
  }
  cloud.recompute_norms();
  return cloud;
}

inline std::string family_name(const SphericalModel& model) {
  struct Visitor {
    std::string operator()(const GammaTail&) const { return "gamma_tail"; }
    std::string operator()(const Kotz&) const { return "kotz"; }
    std::string operator()(const BoundedTail&) const { return "bounded"; }
    std::string operator()(const PowerLaw&) const { return "power_law"; }
  };
  return std::visit(Visitor{}, model);
}

}  // namespace maxdist
