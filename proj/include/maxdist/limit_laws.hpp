#pragma once

// Extreme-value limit distributions and goodness-of-fit distances.
//
// NegWeibull here is the negative (reversed) Weibull supported on (-infty, 0],
// CDF exp(-|x|^alpha) -- not the conventional positive Weibull. GumbelSum is
// the law of the sum of two independent standard Gumbel variables; its CDF has
// no elementary form and is evaluated by adaptive quadrature of the
// convolution integral.

#include <algorithm>
#include <cmath>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "maxdist/numerics.hpp"
#include "maxdist/rng.hpp"

namespace maxdist {

struct Gumbel {};
struct NegWeibull {
  double alpha = 1.0;  // shape, > 0
};
struct Frechet {
  double alpha = 1.0;  // shape, > 0
};
struct GumbelSum {};

using LimitLaw = std::variant<Gumbel, NegWeibull, Frechet, GumbelSum>;

inline void validate(const LimitLaw& law) {
  if (const auto* w = std::get_if<NegWeibull>(&law)) {
    if (!(w->alpha > 0.0)) throw std::invalid_argument("NegWeibull: alpha must be positive");
  } else if (const auto* f = std::get_if<Frechet>(&law)) {
    if (!(f->alpha > 0.0)) throw std::invalid_argument("Frechet: alpha must be positive");
  }
}

inline double cdf(const Gumbel&, double x) { return std::exp(-std::exp(-x)); }

inline double cdf(const NegWeibull& law, double x) {
  if (x > 0.0) return 1.0;
  return std::exp(-std::pow(-x, law.alpha));
}

inline double cdf(const Frechet& law, double x) {
  if (x <= 0.0) return 0.0;
  return std::exp(-std::pow(x, -law.alpha));
}

// Convolution CDF: integral of exp(-e^{-(x-y)}) * e^{-y} exp(-e^{-y}) dy.
// The [-40, 40] window bounds the discarded tails below 1e-12.
inline double cdf(const GumbelSum&, double x) {
  const auto integrand = [x](double y) {
    return std::exp(-std::exp(-(x - y)) - y - std::exp(-y));
  };
  const double value = integrate(integrand, -40.0, 40.0, 1e-11);
  return std::clamp(value, 0.0, 1.0);
}

inline double cdf(const LimitLaw& law, double x) {
  return std::visit([x](const auto& l) { return cdf(l, x); }, law);
}

inline double quantile(const Gumbel&, double p) { return -std::log(-std::log(p)); }

inline double quantile(const NegWeibull& law, double p) {
  return -std::pow(-std::log(p), 1.0 / law.alpha);
}

inline double quantile(const Frechet& law, double p) {
  return std::pow(-std::log(p), -1.0 / law.alpha);
}

inline double quantile(const GumbelSum& law, double p) {
  // cdf is strictly increasing; [-30, 80] covers p in (1e-300, 1-1e-30).
  return bisect([&](double x) { return cdf(law, x) - p; }, -30.0, 80.0, 1e-9);
}

inline double quantile(const LimitLaw& law, double p) {
  if (!(p > 0.0) || !(p < 1.0)) throw std::domain_error("quantile: p must lie in (0,1)");
  return std::visit([p](const auto& l) { return quantile(l, p); }, law);
}

inline double sample(const LimitLaw& law, RngStream& rng) {
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  const auto draw_gumbel = [&]() {
    double u;
    do { u = uni(rng); } while (u == 0.0);
    return -std::log(-std::log(u));
  };
  if (std::holds_alternative<GumbelSum>(law)) {
    return draw_gumbel() + draw_gumbel();
  }
  double u;
  do { u = uni(rng); } while (u == 0.0);
  return quantile(law, u);
}

/// Two-sided one-sample Kolmogorov-Smirnov distance of a sorted sample
/// against a reference CDF: max_i max(i/n - F(x_i), F(x_i) - (i-1)/n).
template <class Cdf>
double ks_statistic_sorted(std::span<const double> sorted_sample, Cdf&& reference_cdf) {
  const std::size_t n = sorted_sample.size();
  if (n == 0) throw std::invalid_argument("ks_statistic: empty sample");
  double ks = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double f = reference_cdf(sorted_sample[i]);
    ks = std::max(ks, static_cast<double>(i + 1) / n - f);
    ks = std::max(ks, f - static_cast<double>(i) / n);
  }
  return ks;
}

inline double ks_statistic(std::span<const double> sorted_sample, const LimitLaw& law) {
  if (!std::is_sorted(sorted_sample.begin(), sorted_sample.end())) {
    throw std::invalid_argument("ks_statistic: sample must be sorted");
  }
  return ks_statistic_sorted(sorted_sample, [&law](double x) { return cdf(law, x); });
}

/// Rigorous upper bound on the one-sample KS distance that evaluates the
/// reference CDF only at cells+1 grid points. Both curves are monotone, so
/// the sup gap inside cell (g_k, g_{k+1}] is at most the corner gap; the
/// bound exceeds the exact KS by at most one cell's CDF increment plus one
/// cell's empirical increment. Intended for expensive CDFs (the Gumbel-sum
/// quadrature) against large samples.
template <class Cdf>
double ks_upper_bound_sorted(std::span<const double> sorted_sample, Cdf&& reference_cdf,
                             int cells) {
  const std::size_t n = sorted_sample.size();
  if (n == 0) throw std::invalid_argument("ks_upper_bound_sorted: empty sample");
  if (cells < 1) throw std::invalid_argument("ks_upper_bound_sorted: need at least one cell");
  const double lo = sorted_sample.front();
  const double hi = sorted_sample.back();
  const double pad = 1e-9 * (1.0 + std::fabs(lo) + std::fabs(hi));
  const double g0 = lo - pad;
  const double width = (hi - g0) / cells;
  double bound = 0.0;
  double f_prev = reference_cdf(g0);
  bound = std::max(bound, f_prev);  // region left of the sample
  std::size_t count_prev = 0;
  std::size_t idx = 0;
  for (int k = 1; k <= cells; ++k) {
    const double g = k == cells ? hi : g0 + k * width;
    while (idx < n && sorted_sample[idx] <= g) ++idx;
    const double f = reference_cdf(g);
    bound = std::max(bound, static_cast<double>(idx) / n - f_prev);
    bound = std::max(bound, f - static_cast<double>(count_prev) / n);
    f_prev = f;
    count_prev = idx;
  }
  bound = std::max(bound, 1.0 - f_prev);  // region right of the sample
  return bound;
}

/// Two-sample KS distance between two sorted samples: both empirical CDFs are
/// evaluated at every merged support value, ties advanced together.
inline double ks_two_sample(std::span<const double> a, std::span<const double> b) {
  if (a.empty() || b.empty()) throw std::invalid_argument("ks_two_sample: empty sample");
  double ks = 0.0;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    const double v = std::min(a[i], b[j]);
    while (i < a.size() && a[i] <= v) ++i;
    while (j < b.size() && b[j] <= v) ++j;
    ks = std::max(ks, std::fabs(static_cast<double>(i) / a.size() -
                                static_cast<double>(j) / b.size()));
  }
  return ks;
}

/// Total variation distance between two probability mass functions on counts
/// (half the l1 gap; shorter vector is zero-padded).
inline double tv_distance(std::span<const double> pmf_a, std::span<const double> pmf_b) {
  const std::size_t m = std::max(pmf_a.size(), pmf_b.size());
  double l1 = 0.0;
  for (std::size_t k = 0; k < m; ++k) {
    const double pa = k < pmf_a.size() ? pmf_a[k] : 0.0;
    const double pb = k < pmf_b.size() ? pmf_b[k] : 0.0;
    l1 += std::fabs(pa - pb);
  }
  return 0.5 * l1;
}

inline double poisson_pmf(long long k, double mean) {
  if (k < 0) return 0.0;
  double log_p = -mean + k * std::log(mean);
  for (long long j = 2; j <= k; ++j) log_p -= std::log(static_cast<double>(j));
  return std::exp(log_p);
}

inline std::string law_name(const LimitLaw& law) {
  struct Visitor {
    std::string operator()(const Gumbel&) const { return "gumbel"; }
    std::string operator()(const NegWeibull&) const { return "neg_weibull"; }
    std::string operator()(const Frechet&) const { return "frechet"; }
    std::string operator()(const GumbelSum&) const { return "gumbel_sum"; }
  };
  return std::visit(Visitor{}, law);
}

}  // namespace maxdist
