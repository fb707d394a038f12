#pragma once

// Centering/scaling sequences and closed-form constants that standardize the
// maximum interpoint distance and the maximum norm.
//
// The construction has two routes. The general route solves g(a_n) = log n
// and takes b_n = 1/g'(a_n); the closed-form route specializes to densities
// c |x|^alpha exp(-beta |x|^gamma) where a_n and b_n have explicit formulas.
// Both feed an affine normalization (Stat_n - center)/scale => limit law.

#include <cmath>
#include <stdexcept>
#include <string>

#include "maxdist/limit_laws.hpp"
#include "maxdist/numerics.hpp"
#include "maxdist/radial_models.hpp"
#include "maxdist/special.hpp"

namespace maxdist {

/// Guard violation: the requested n is too small for the asymptotic
/// construction (log log terms undefined or r_n <= 1).
struct GuardError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Statistic { interpoint_max, norm_max };

/// The claim (Stat_n - center)/scale converges to `law`.
struct AffineNormalization {
  double center = 0.0;
  double scale = 1.0;
  LimitLaw law;
  Statistic statistic = Statistic::interpoint_max;
  long long n = 0;
};

struct ExtremeConstants {
  double c_d = 0.0;         // (d-1) 2^{d-4} Gamma(d/2) / sqrt(pi)
  double c_tilde_d = 0.0;   // (d-1) 2^{d-2} pi^{d-1/2} / Gamma(d/2)
  double c_prime_d = 0.0;   // 2^{d-2} Gamma(d/2) / (sqrt(pi) Gamma((d+1)/2))
  double c_dblprime_d = 0.0;  // Gamma((d+1)/2) c'_d
  double omega_d = 0.0;     // 2 pi^{d/2} / Gamma(d/2)
  double c_star = 0.0;      // 2^{d-3} Gamma(a+1)^2 Gamma(d/2) / (sqrt(pi) Gamma((d+1+4a)/2))
};

/// Closed-form constants for dimension d >= 2; c_star uses alpha_w.
inline ExtremeConstants constants(int d, double alpha_w = 0.0) {
  if (d < 2) throw std::domain_error("constants: requires d >= 2 (d = 1 has dedicated operations)");
  if (!(alpha_w >= 0.0)) throw std::domain_error("constants: alpha_w must be >= 0");
  const double half_d = 0.5 * d;
  const double lg_half_d = log_gamma(half_d);
  const double sqrt_pi = std::sqrt(M_PI);
  ExtremeConstants k;
  k.c_d = (d - 1) * std::pow(2.0, d - 4) * std::exp(lg_half_d) / sqrt_pi;
  k.c_tilde_d = (d - 1) * std::pow(2.0, d - 2) * std::pow(M_PI, d - 0.5) / std::exp(lg_half_d);
  k.c_prime_d = std::pow(2.0, d - 2) * std::exp(lg_half_d - log_gamma(0.5 * (d + 1))) / sqrt_pi;
  k.c_dblprime_d = std::exp(log_gamma(0.5 * (d + 1))) * k.c_prime_d;
  k.omega_d = sphere_surface_area(d);
  k.c_star = std::pow(2.0, d - 3) *
             std::exp(2.0 * log_gamma(alpha_w + 1.0) + lg_half_d -
                      log_gamma(0.5 * (d + 1 + 4.0 * alpha_w))) /
             sqrt_pi;
  return k;
}

struct AnBn {
  double a_n = 0.0;
  double b_n = 0.0;
};

/// Gumbel normalization of the interpoint max from (a_n, b_n):
/// center = 2 a_n - b_n [ (d-1)/2 log(a/b) - log log(a/b) - log c_d ],
/// scale = b_n.
inline AffineNormalization gumbel_interpoint_from_anbn(double a_n, double b_n, int d,
                                                       long long n = 0) {
  if (!(b_n > 0.0) || !(a_n > b_n)) {
    throw std::domain_error("gumbel_interpoint_from_anbn: need 0 < b_n < a_n");
  }
  const double ratio = a_n / b_n;
  if (!(std::log(ratio) > 1.0)) {
    throw GuardError("gumbel_interpoint_from_anbn: a_n/b_n <= e, log log ratio degenerate");
  }
  const double log_ratio = std::log(ratio);
  const double bracket =
      0.5 * (d - 1) * log_ratio - std::log(log_ratio) - std::log(constants(d).c_d);
  return AffineNormalization{2.0 * a_n - b_n * bracket, b_n, Gumbel{},
                             Statistic::interpoint_max, n};
}

/// Gumbel normalization of the maximum norm: (M_n - a_n)/b_n => Gumbel.
inline AffineNormalization gumbel_norm_max_from_anbn(double a_n, double b_n, long long n = 0) {
  if (!(b_n > 0.0)) throw std::domain_error("gumbel_norm_max_from_anbn: scale must be positive");
  return AffineNormalization{a_n, b_n, Gumbel{}, Statistic::norm_max, n};
}

/// Closed-form (a_n, b_n) for a GammaTail model:
/// b_n = beta^{-1/g} g^{-1} (log n)^{1/g - 1},
/// a_n = beta^{-1/g} (log n)^{1/g} + b_n [ ((alpha+d-g)/g) log log n
///       - ((alpha+d)/g) log beta - log g + log(c omega_d) ].
inline AnBn gammatail_anbn(const GammaTail& model, long long n) {
  validate(model);
  if (n < 3) throw GuardError("gammatail_anbn: n < 3, log log n undefined");
  const double g = model.gamma_exp;
  const double log_n = std::log(static_cast<double>(n));
  const double b_n = std::pow(model.beta, -1.0 / g) / g * std::pow(log_n, 1.0 / g - 1.0);
  const double c = model.density_constant();
  const double bracket = (model.alpha + model.dim - g) / g * std::log(log_n) -
                         (model.alpha + model.dim) / g * std::log(model.beta) - std::log(g) +
                         std::log(c * sphere_surface_area(model.dim));
  const double a_n = std::pow(model.beta, -1.0 / g) * std::pow(log_n, 1.0 / g) + b_n * bracket;
  return AnBn{a_n, b_n};
}

/// Closed-form Gumbel normalization of the interpoint max for a GammaTail
/// model in dimension d >= 2: scale = 1 / (beta^{1/g} g log^{1-1/g} n),
/// center = scale [ 2 g log n + (2(alpha+d)/g - (d+3)/2) log log n
///          + log log log n + log(ct beta^{-2(alpha+d)/g} g^{-(d+3)/2} c^2) ].
inline AffineNormalization gammatail_interpoint_normalization(const GammaTail& model,
                                                              long long n) {
  validate(model);
  if (model.dim < 2) {
    throw std::domain_error(
        "gammatail_interpoint_normalization: d = 1 uses d1_interpoint_normalization");
  }
  if (n < 16) {
    throw GuardError("gammatail_interpoint_normalization: n < 16, log log log n guard");
  }
  const double g = model.gamma_exp;
  const double d = model.dim;
  const double log_n = std::log(static_cast<double>(n));
  const double scale = 1.0 / (std::pow(model.beta, 1.0 / g) * g * std::pow(log_n, 1.0 - 1.0 / g));
  const double c = model.density_constant();
  const double c_tilde = constants(model.dim).c_tilde_d;
  const double bracket =
      2.0 * g * log_n + (2.0 * (model.alpha + d) / g - 0.5 * (d + 3.0)) * std::log(log_n) +
      std::log(std::log(log_n)) +
      std::log(c_tilde * std::pow(model.beta, -2.0 * (model.alpha + d) / g) *
               std::pow(g, -0.5 * (d + 3.0)) * c * c);
  return AffineNormalization{scale * bracket, scale, Gumbel{}, Statistic::interpoint_max, n};
}

/// d = 1 Gumbel-sum normalization:
/// center = scale [ 2 g log n + (2(alpha+1)/g - 2) log log n
///          + log(beta^{-2(alpha+1)/g} g^{-2} c^2) ]; no log log log n term.
inline AffineNormalization d1_interpoint_normalization(const GammaTail& model, long long n) {
  validate(model);
  if (model.dim != 1) throw std::domain_error("d1_interpoint_normalization: model must have d = 1");
  if (n < 16) throw GuardError("d1_interpoint_normalization: n < 16, log log n guard");
  const double g = model.gamma_exp;
  const double log_n = std::log(static_cast<double>(n));
  const double scale = 1.0 / (std::pow(model.beta, 1.0 / g) * g * std::pow(log_n, 1.0 - 1.0 / g));
  const double c = model.density_constant();
  const double bracket =
      2.0 * g * log_n + (2.0 * (model.alpha + 1.0) / g - 2.0) * std::log(log_n) +
      std::log(std::pow(model.beta, -2.0 * (model.alpha + 1.0) / g) * std::pow(g, -2.0) * c * c);
  return AffineNormalization{scale * bracket, scale, GumbelSum{}, Statistic::interpoint_max, n};
}

/// General route: a_n solves g(a_n) = log n by bisection on [lo, hi];
/// b_n = 1/g'(a_n).
template <class G, class GPrime>
AnBn general_anbn(G&& g, GPrime&& g_prime, long long n, double lo, double hi) {
  if (!(hi > lo)) throw std::invalid_argument("general_anbn: empty bracket");
  const double target = std::log(static_cast<double>(n));
  if (!(g(lo) < target && target < g(hi))) {
    throw std::invalid_argument("general_anbn: bracket does not straddle log n");
  }
  const double a_n =
      bisect([&](double x) { return g(x) - target; }, lo, hi, 1e-12 * std::fabs(hi));
  const double deriv = g_prime(a_n);
  if (!(deriv > 0.0)) throw std::domain_error("general_anbn: g'(a_n) must be positive");
  return AnBn{a_n, 1.0 / deriv};
}

/// Weibull mapping for the interpoint max of a bounded law with survival
/// ~ c_w (1-x)^{alpha_w}:  with p = 4/(d-1+4 alpha_w),
///   P(n^p (2 - Mtilde) > x) -> exp(-c_star c_w^2 x^{(d-1+4 alpha_w)/2}),
/// equivalently (c_star c_w^2)^{2/(d-1+4a)} n^p (Mtilde - 2) => NegWeibull((d-1+4a)/2).
struct WeibullInterpointMapping {
  double p = 0.0;              // exponent of n
  double shape = 0.0;          // NegWeibull shape (d-1+4 alpha_w)/2
  double survival_const = 0.0; // c_star * c_w^2
  double scale_const = 0.0;    // (c_star * c_w^2)^{2/(d-1+4 alpha_w)}
  long long n = 0;

  /// Standardized statistic S_n with S_n => NegWeibull(shape).
  double standardize(double interpoint_max) const {
    return scale_const * std::pow(static_cast<double>(n), p) * (interpoint_max - 2.0);
  }

  /// Raw survival-form statistic n^p (2 - Mtilde).
  double survival_stat(double interpoint_max) const {
    return std::pow(static_cast<double>(n), p) * (2.0 - interpoint_max);
  }

  NegWeibull law() const { return NegWeibull{shape}; }
};

inline WeibullInterpointMapping weibull_interpoint_normalization(double alpha_w, double c_w,
                                                                 int d, long long n) {
  if (d < 2) throw std::domain_error("weibull_interpoint_normalization: requires d >= 2");
  if (!(alpha_w >= 0.0) || !(c_w > 0.0)) {
    throw std::domain_error("weibull_interpoint_normalization: need alpha_w >= 0, c_w > 0");
  }
  WeibullInterpointMapping m;
  const double q = d - 1.0 + 4.0 * alpha_w;
  m.p = 4.0 / q;
  m.shape = 0.5 * q;
  m.survival_const = constants(d, alpha_w).c_star * c_w * c_w;
  m.scale_const = std::pow(m.survival_const, 2.0 / q);
  m.n = n;
  return m;
}

/// Weibull mapping for the maximum norm: c_w^{1/a} n^{1/a} (M_n - 1) =>
/// NegWeibull(alpha_w). Degenerate (refused) when alpha_w = 0, where
/// P(M_n = 1) -> 1.
struct WeibullNormMaxMapping {
  double p = 0.0;           // exponent of n, 1/alpha_w
  double shape = 0.0;       // NegWeibull shape alpha_w
  double scale_const = 0.0; // c_w^{1/alpha_w}
  long long n = 0;

  double standardize(double norm_max) const {
    return scale_const * std::pow(static_cast<double>(n), p) * (norm_max - 1.0);
  }
};

inline WeibullNormMaxMapping weibull_norm_max_normalization(double alpha_w, double c_w,
                                                            long long n) {
  if (!(alpha_w > 0.0)) {
    throw std::domain_error(
        "weibull_norm_max_normalization: alpha_w = 0 gives a degenerate norm-max limit");
  }
  if (!(c_w > 0.0)) throw std::domain_error("weibull_norm_max_normalization: c_w must be positive");
  return WeibullNormMaxMapping{1.0 / alpha_w, alpha_w, std::pow(c_w, 1.0 / alpha_w), n};
}

/// Frechet scaling: gamma_n = (c_f n)^{1/alpha_f}.
inline double frechet_gamma_n(double c_f, double alpha_f, long long n) {
  if (!(c_f > 0.0) || !(alpha_f > 0.0)) {
    throw std::domain_error("frechet_gamma_n: need c_f > 0, alpha_f > 0");
  }
  if (n < 1) throw std::domain_error("frechet_gamma_n: n must be >= 1");
  return std::pow(c_f * static_cast<double>(n), 1.0 / alpha_f);
}

/// Pair-count threshold machinery:
/// r_n = (d-1)/2 log(a/b) - log log(a/b) - log c_d - lambda,  s_n = log(r_n)/2,
/// threshold = 2 a_n - r_n b_n,  cap = a_n + s_n b_n.
struct PairThreshold {
  double r_n = 0.0;
  double s_n = 0.0;
  double threshold = 0.0;
  double cap = 0.0;
};

inline PairThreshold rn_sn_threshold(double a_n, double b_n, int d, double lambda) {
  if (!(b_n > 0.0) || !(a_n > b_n)) throw std::domain_error("rn_sn_threshold: need 0 < b_n < a_n");
  const double log_ratio = std::log(a_n / b_n);
  if (!(log_ratio > 1.0)) throw GuardError("rn_sn_threshold: a_n/b_n <= e");
  const double r_n =
      0.5 * (d - 1) * log_ratio - std::log(log_ratio) - std::log(constants(d).c_d) - lambda;
  if (!(r_n > 1.0)) {
    throw GuardError("rn_sn_threshold: r_n <= 1, sample size too small for this lambda");
  }
  const double s_n = 0.5 * std::log(r_n);
  return PairThreshold{r_n, s_n, 2.0 * a_n - r_n * b_n, a_n + s_n * b_n};
}

/// Half-width (d-1)/2 log(a_n/b_n) of the tail-expansion validity window;
/// reported for transparency only.
inline double tau_n(double a_n, double b_n, int d) {
  return 0.5 * (d - 1) * std::log(a_n / b_n);
}

}  // namespace maxdist
