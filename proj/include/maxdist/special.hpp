#pragma once

// Regularized incomplete gamma and beta functions, double precision.
// Series + continued-fraction evaluation; positive parameters only, which is
// all the radial models and angle integrals need.

#include <cmath>
#include <stdexcept>

namespace maxdist {

// lgamma_r avoids the signgam global, so concurrent tail evaluations stay
// race-free on glibc.
inline double log_gamma(double x) {
#ifdef __GLIBC__
  int sign = 0;
  return ::lgamma_r(x, &sign);
#else
  return std::lgamma(x);
#endif
}

namespace detail {

// Lower regularized gamma by power series; use for x < a+1.
inline double gamma_p_series(double a, double x) {
  double term = 1.0 / a;
  double sum = term;
  for (int k = 1; k < 10000; ++k) {
    term *= x / (a + k);
    sum += term;
    if (std::fabs(term) < std::fabs(sum) * 1e-16) break;
  }
  return sum * std::exp(-x + a * std::log(x) - log_gamma(a));
}

// Upper regularized gamma by modified-Lentz continued fraction; use for x >= a+1.
inline double gamma_q_cf(double a, double x) {
  constexpr double tiny = 1e-300;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int k = 1; k < 10000; ++k) {
    const double an = -static_cast<double>(k) * (k - a);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::fabs(delta - 1.0) < 1e-16) break;
  }
  return h * std::exp(-x + a * std::log(x) - log_gamma(a));
}

// Continued fraction for the incomplete beta (modified Lentz).
inline double beta_cf(double a, double b, double x) {
  constexpr double tiny = 1e-300;
  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::fabs(d) < tiny) d = tiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m < 10000; ++m) {
    const int m2 = 2 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < tiny) d = tiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < tiny) d = tiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::fabs(delta - 1.0) < 1e-16) break;
  }
  return h;
}

}  // namespace detail

/// Regularized upper incomplete gamma Q(a,x) = Gamma(a,x)/Gamma(a); a > 0, x >= 0.
inline double gamma_q(double a, double x) {
  if (!(a > 0.0)) throw std::domain_error("gamma_q: shape must be positive");
  if (!(x >= 0.0)) throw std::domain_error("gamma_q: x must be nonnegative");
  if (x == 0.0) return 1.0;
  if (x < a + 1.0) return 1.0 - detail::gamma_p_series(a, x);
  return detail::gamma_q_cf(a, x);
}

/// Regularized lower incomplete gamma P(a,x) = 1 - Q(a,x).
inline double gamma_p(double a, double x) {
  if (!(a > 0.0)) throw std::domain_error("gamma_p: shape must be positive");
  if (!(x >= 0.0)) throw std::domain_error("gamma_p: x must be nonnegative");
  if (x == 0.0) return 0.0;
  if (x < a + 1.0) return detail::gamma_p_series(a, x);
  return 1.0 - detail::gamma_q_cf(a, x);
}

/// Regularized incomplete beta I_x(a,b); a,b > 0, x in [0,1].
inline double beta_i(double a, double b, double x) {
  if (!(a > 0.0) || !(b > 0.0)) throw std::domain_error("beta_i: parameters must be positive");
  if (!(x >= 0.0) || !(x <= 1.0)) throw std::domain_error("beta_i: x must be in [0,1]");
  if (x == 0.0) return 0.0;
  if (x == 1.0) return 1.0;
  const double log_beta = log_gamma(a) + log_gamma(b) - log_gamma(a + b);
  const double front = std::exp(a * std::log(x) + b * std::log1p(-x) - log_beta);
  if (x < (a + 1.0) / (a + b + 2.0)) {
    return front * detail::beta_cf(a, b, x) / a;
  }
  return 1.0 - front * detail::beta_cf(b, a, 1.0 - x) / b;
}

/// Surface area of the unit sphere S^{d-1} in R^d.
inline double sphere_surface_area(int d) {
  if (d < 1) throw std::domain_error("sphere_surface_area: dimension must be >= 1");
  return 2.0 * std::pow(M_PI, 0.5 * d) / std::exp(log_gamma(0.5 * d));
}

}  // namespace maxdist
