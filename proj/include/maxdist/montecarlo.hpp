#pragma once

// Experiment runners tying samplers, diameters, normalizations and limit laws
// together. Replications are independent work items with substreams keyed by
// (seed, experiment, n-index, replication), so reports are bit-identical for
// any thread count.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "maxdist/diameter.hpp"
#include "maxdist/limit_laws.hpp"
#include "maxdist/normalization.hpp"
#include "maxdist/parallel.hpp"
#include "maxdist/radial_models.hpp"
#include "maxdist/rng.hpp"

namespace maxdist {

namespace detail {
// Stream salts per experiment family.
constexpr std::uint64_t kGumbelSalt = 0x01;
constexpr std::uint64_t kPoissonSalt = 0x02;
constexpr std::uint64_t kWeibullSalt = 0x03;
constexpr std::uint64_t kFrechetSalt = 0x04;
constexpr std::uint64_t kZDrawSalt = 0x05;
constexpr std::uint64_t kAngleSalt = 0x06;
constexpr std::uint64_t kSpherePairSalt = 0x07;

constexpr std::size_t kMinSamplesForKs = 50;  // below this the KS field stays absent

inline std::optional<double> ks_if_enough(std::vector<double>& sample, const LimitLaw& law) {
  if (sample.size() < kMinSamplesForKs) return std::nullopt;
  std::sort(sample.begin(), sample.end());
  return ks_statistic(sample, law);
}
}  // namespace detail

enum class StatisticSelector { interpoint_max, norm_max, both };

struct ExperimentConfig {
  SphericalModel model;
  std::vector<long long> n_values;
  long long replications = 1;
  std::uint64_t seed = 0;
  double lambda = 0.0;     // Poisson pair-count level
  double epsilon = 1e-2;   // Frechet truncation radius
  long long z_draws = 0;   // Frechet limit draws; 0 means `replications`
  StatisticSelector statistic = StatisticSelector::both;
  int threads = 0;         // 0 means all cores
};

inline void validate(const ExperimentConfig& cfg) {
  validate(cfg.model);
  if (cfg.replications < 1) throw std::invalid_argument("ExperimentConfig: replications >= 1");
  if (cfg.n_values.empty()) throw std::invalid_argument("ExperimentConfig: n_values empty");
  for (const long long n : cfg.n_values) {
    if (n < 1) throw std::invalid_argument("ExperimentConfig: n values must be >= 1");
  }
  if (!(cfg.epsilon > 0.0 && cfg.epsilon <= 0.1)) {
    throw std::invalid_argument("ExperimentConfig: epsilon must lie in (0, 0.1]");
  }
}

/// Per-n results; sections not produced by a given experiment stay empty.
struct RunReport {
  long long n = 0;
  long long replications = 0;

  // normalization in effect
  double a_n = 0.0, b_n = 0.0;
  double center = 0.0, scale = 0.0;

  std::vector<double> interpoint_std;  // standardized interpoint-max samples
  std::vector<double> norm_std;        // standardized norm-max samples (raw M_n for weibull runs)
  std::vector<double> gap_ratio;       // (2 M_n - Mtilde_n) / (b_n log(a_n/b_n))
  std::optional<double> ks_interpoint;
  std::optional<double> ks_norm_max;
  std::optional<double> gap_ratio_median;

  // Poisson pair-count section
  double r_n = 0.0, s_n = 0.0, threshold = 0.0, cap = 0.0;
  std::vector<double> w_pmf;  // empirical pmf of W_n
  double p_w0 = 0.0;
  double tv_poisson = 0.0;
  double mean_wprime = 0.0;
  double freq_mismatch = 0.0;  // frequency of W_n != W'_n

  // Weibull section
  std::vector<double> survival_stat;  // n^p (2 - Mtilde_n)

  // Frechet section
  std::vector<double> z_samples;
  std::optional<double> ks_two_sample_z;
  double frac_offtop_pair = 0.0;  // diameter pair is not the two largest norms

  long long comparisons = 0;  // distance evaluations across replications
};

struct ExperimentReport {
  std::string kind;
  std::vector<RunReport> runs;
};

inline GammaTail require_gammatail(const SphericalModel& model, const char* who) {
  if (const auto* kotz = std::get_if<Kotz>(&model)) return kotz->resolved();
  if (const auto* gt = std::get_if<GammaTail>(&model)) return *gt;
  throw std::invalid_argument(std::string(who) + ": requires a gamma_tail or kotz model");
}

/// Gumbel-case experiment: standardized Mtilde and M samples, KS distances
/// and the ratio (2 M_n - Mtilde_n)/(b_n log(a_n/b_n)) whose target is
/// (d-1)/2. GammaTail (or Kotz) models, any dimension; d = 1 standardizes
/// against the Gumbel-sum law with center 2 a_n - 2 log(2) b_n.
inline ExperimentReport run_gumbel_experiment(const ExperimentConfig& cfg) {
  validate(cfg);
  const GammaTail model = require_gammatail(cfg.model, "run_gumbel_experiment");
  ExperimentReport report{"gumbel", {}};
  const std::size_t reps = static_cast<std::size_t>(cfg.replications);
  for (std::size_t ni = 0; ni < cfg.n_values.size(); ++ni) {
    const long long n = cfg.n_values[ni];
    const AnBn ab = gammatail_anbn(model, n);
    RunReport run;
    run.n = n;
    run.replications = cfg.replications;
    run.a_n = ab.a_n;
    run.b_n = ab.b_n;
    LimitLaw interpoint_law;
    if (model.dim >= 2) {
      const AffineNormalization norm = gumbel_interpoint_from_anbn(ab.a_n, ab.b_n, model.dim, n);
      run.center = norm.center;
      run.scale = norm.scale;
      interpoint_law = Gumbel{};
    } else {
      run.center = 2.0 * ab.a_n - 2.0 * std::log(2.0) * ab.b_n;
      run.scale = ab.b_n;
      interpoint_law = GumbelSum{};
    }
    const bool want_interpoint = cfg.statistic != StatisticSelector::norm_max;
    const bool want_norm = cfg.statistic != StatisticSelector::interpoint_max;
    if (want_interpoint) run.interpoint_std.resize(reps);
    if (want_norm) run.norm_std.resize(reps);
    if (want_interpoint && want_norm) run.gap_ratio.resize(reps);
    std::vector<long long> comparisons(reps, 0);
    const double log_ratio = std::log(ab.a_n / ab.b_n);
    parallel_for(reps, cfg.threads, [&](std::size_t rep) {
      RngStream rng = make_stream(cfg.seed, detail::kGumbelSalt, ni, rep);
      const PointCloud cloud = sample_points(model, static_cast<std::size_t>(n), rng);
      double mtilde = 0.0;
      if (want_interpoint) {
        const DiameterResult diam = diameter_pruned(cloud);
        mtilde = diam.value;
        run.interpoint_std[rep] = (mtilde - run.center) / run.scale;
        comparisons[rep] = diam.comparisons;
      }
      if (want_norm) {
        const double m_norm = max_norm(cloud).first;
        run.norm_std[rep] = (m_norm - ab.a_n) / ab.b_n;
        if (want_interpoint) {
          run.gap_ratio[rep] = (2.0 * m_norm - mtilde) / (ab.b_n * log_ratio);
        }
      }
    });
    for (const long long c : comparisons) run.comparisons += c;
    if (!run.gap_ratio.empty()) run.gap_ratio_median = median_of(run.gap_ratio);
    {
      std::vector<double> s = run.interpoint_std;
      if (want_interpoint) run.ks_interpoint = detail::ks_if_enough(s, interpoint_law);
      s = run.norm_std;
      if (want_norm) run.ks_norm_max = detail::ks_if_enough(s, LimitLaw{Gumbel{}});
    }
    report.runs.push_back(std::move(run));
  }
  return report;
}

/// Pair-count experiment: W_n and W'_n at the threshold/cap from
/// rn_sn_threshold, empirical pmf of W_n, total-variation distance to
/// Poisson(e^{-lambda}), mean of W'_n and the W_n != W'_n frequency.
inline ExperimentReport run_poisson_count_experiment(const ExperimentConfig& cfg) {
  validate(cfg);
  const GammaTail model = require_gammatail(cfg.model, "run_poisson_count_experiment");
  if (model.dim < 2) {
    throw std::domain_error("run_poisson_count_experiment: requires d >= 2");
  }
  ExperimentReport report{"poisson_count", {}};
  const std::size_t reps = static_cast<std::size_t>(cfg.replications);
  const double poisson_mean = std::exp(-cfg.lambda);
  for (std::size_t ni = 0; ni < cfg.n_values.size(); ++ni) {
    const long long n = cfg.n_values[ni];
    const AnBn ab = gammatail_anbn(model, n);
    const PairThreshold pt = rn_sn_threshold(ab.a_n, ab.b_n, model.dim, cfg.lambda);
    RunReport run;
    run.n = n;
    run.replications = cfg.replications;
    run.a_n = ab.a_n;
    run.b_n = ab.b_n;
    run.r_n = pt.r_n;
    run.s_n = pt.s_n;
    run.threshold = pt.threshold;
    run.cap = pt.cap;
    std::vector<long long> w(reps, 0), wp(reps, 0), comparisons(reps, 0);
    parallel_for(reps, cfg.threads, [&](std::size_t rep) {
      RngStream rng = make_stream(cfg.seed, detail::kPoissonSalt, ni, rep);
      const PointCloud cloud = sample_points(model, static_cast<std::size_t>(n), rng);
      const PairCounts counts = count_pairs(cloud, pt.threshold, pt.cap);
      w[rep] = counts.w_n;
      wp[rep] = counts.w_prime_n;
      comparisons[rep] = counts.comparisons;
    });
    long long w_max = 0;
    for (const long long v : w) w_max = std::max(w_max, v);
    run.w_pmf.assign(static_cast<std::size_t>(w_max) + 1, 0.0);
    double sum_wp = 0.0;
    long long mismatches = 0;
    for (std::size_t rep = 0; rep < reps; ++rep) {
      run.w_pmf[static_cast<std::size_t>(w[rep])] += 1.0 / static_cast<double>(reps);
      sum_wp += static_cast<double>(wp[rep]);
      if (w[rep] != wp[rep]) ++mismatches;
      run.comparisons += comparisons[rep];
    }
    run.p_w0 = run.w_pmf[0];
    run.mean_wprime = sum_wp / static_cast<double>(reps);
    run.freq_mismatch = static_cast<double>(mismatches) / static_cast<double>(reps);
    std::vector<double> poisson(run.w_pmf.size());
    for (std::size_t k = 0; k < poisson.size(); ++k) {
      poisson[k] = poisson_pmf(static_cast<long long>(k), poisson_mean);
    }
    run.tv_poisson = tv_distance(run.w_pmf, poisson);
    // tv_distance pads the shorter vector; account for the Poisson tail mass
    // beyond the largest observed count.
    double covered = 0.0;
    for (const double p : poisson) covered += p;
    run.tv_poisson += 0.5 * (1.0 - covered);
    report.runs.push_back(std::move(run));
  }
  return report;
}

/// Weibull-case experiment for bounded laws: standardized S_n samples vs
/// NegWeibull((d-1+4 alpha_w)/2), plus the raw survival statistic
/// n^p (2 - Mtilde_n).
inline ExperimentReport run_weibull_experiment(const ExperimentConfig& cfg) {
  validate(cfg);
  const BoundedTail* bounded = std::get_if<BoundedTail>(&cfg.model);
  if (bounded == nullptr) {
    throw std::invalid_argument("run_weibull_experiment: requires a bounded model");
  }
  const BoundedTail model = *bounded;
  if (model.dim < 2) throw std::domain_error("run_weibull_experiment: requires d >= 2");
  ExperimentReport report{"weibull", {}};
  const std::size_t reps = static_cast<std::size_t>(cfg.replications);
  for (std::size_t ni = 0; ni < cfg.n_values.size(); ++ni) {
    const long long n = cfg.n_values[ni];
    const WeibullInterpointMapping mapping =
        weibull_interpoint_normalization(model.alpha_w, model.c_w, model.dim, n);
    RunReport run;
    run.n = n;
    run.replications = cfg.replications;
    run.center = 2.0;
    run.scale = 1.0 / (mapping.scale_const * std::pow(static_cast<double>(n), mapping.p));
    run.interpoint_std.resize(reps);
    run.survival_stat.resize(reps);
    run.norm_std.resize(reps);
    std::vector<long long> comparisons(reps, 0);
    parallel_for(reps, cfg.threads, [&](std::size_t rep) {
      RngStream rng = make_stream(cfg.seed, detail::kWeibullSalt, ni, rep);
      const PointCloud cloud = sample_points(cfg.model, static_cast<std::size_t>(n), rng);
      const DiameterResult diam = diameter_pruned(cloud);
      run.interpoint_std[rep] = mapping.standardize(diam.value);
      run.survival_stat[rep] = mapping.survival_stat(diam.value);
      run.norm_std[rep] = max_norm(cloud).first;
      comparisons[rep] = diam.comparisons;
    });
    for (const long long c : comparisons) run.comparisons += c;
    std::vector<double> s = run.interpoint_std;
    run.ks_interpoint = detail::ks_if_enough(s, LimitLaw{mapping.law()});
    report.runs.push_back(std::move(run));
  }
  return report;
}

/// One draw of the Frechet-case limit Z_alpha: the diameter of a Poisson
/// process with intensity alpha omega_d^{-1} |x|^{-alpha-d}, truncated at
/// radius epsilon, with the origin appended (truncation error <= epsilon).
///
/// Radii arrive in decreasing order as u_k^{-1/alpha} for the unit-rate
/// arrival times u_k, so the count above epsilon is Poisson(epsilon^{-alpha})
/// and the radii are Pareto on [epsilon, inf). Generation stops early once
/// r_k <= best - r_1: from then on no point can enter a pair longer than the
/// incumbent (pair distances are at most r_k + r_1), which leaves the returned
/// value exactly equal to the full truncated construction.
inline double simulate_poisson_limit(double alpha_f, int d, double epsilon, RngStream& rng) {
  if (!(alpha_f > 0.0)) throw std::domain_error("simulate_poisson_limit: alpha must be positive");
  if (d < 1) throw std::domain_error("simulate_poisson_limit: dimension must be >= 1");
  if (!(epsilon > 0.0 && epsilon <= 0.1)) {
    throw std::domain_error("simulate_poisson_limit: epsilon must lie in (0, 0.1]");
  }
  std::exponential_distribution<double> exponential(1.0);
  std::vector<double> coords;
  std::vector<double> direction(static_cast<std::size_t>(d));
  double u = 0.0;
  double first_radius = 0.0;
  double best = 0.0;
  std::size_t count = 0;
  for (;;) {
    u += exponential(rng);
    const double radius = std::pow(u, -1.0 / alpha_f);
    if (radius <= epsilon) break;                      // truncation floor
    if (count > 0 && radius <= best - first_radius) break;  // cannot affect the diameter
    sample_direction_into(d, rng, direction.data());
    for (int k = 0; k < d; ++k) direction[k] *= radius;
    for (std::size_t p = 0; p < count; ++p) {
      double d2 = 0.0;
      for (int k = 0; k < d; ++k) {
        const double diff = direction[k] - coords[p * static_cast<std::size_t>(d) + k];
        d2 += diff * diff;
      }
      best = std::max(best, std::sqrt(d2));
    }
    best = std::max(best, radius);  // pair with the origin
    coords.insert(coords.end(), direction.begin(), direction.end());
    if (count == 0) first_radius = radius;
    ++count;
  }
  return best;
}

/// Frechet-case experiment: scaled diameters gamma_n^{-1} Mtilde_n against
/// independently simulated Z_alpha draws (two-sample KS), and scaled maximum
/// norms against Frechet(alpha_f) (one-sample KS).
inline ExperimentReport run_frechet_experiment(const ExperimentConfig& cfg) {
  validate(cfg);
  const PowerLaw* power = std::get_if<PowerLaw>(&cfg.model);
  if (power == nullptr) {
    throw std::invalid_argument("run_frechet_experiment: requires a power_law model");
  }
  const PowerLaw model = *power;
  ExperimentReport report{"frechet", {}};
  const std::size_t reps = static_cast<std::size_t>(cfg.replications);
  const std::size_t z_draws =
      static_cast<std::size_t>(cfg.z_draws > 0 ? cfg.z_draws : cfg.replications);
  for (std::size_t ni = 0; ni < cfg.n_values.size(); ++ni) {
    const long long n = cfg.n_values[ni];
    const double gamma_n = frechet_gamma_n(model.c_f, model.alpha_f, n);
    RunReport run;
    run.n = n;
    run.replications = cfg.replications;
    run.scale = gamma_n;
    run.interpoint_std.resize(reps);
    run.norm_std.resize(reps);
    run.z_samples.resize(z_draws);
    std::vector<long long> comparisons(reps, 0);
    std::vector<char> offtop(reps, 0);
    parallel_for(reps, cfg.threads, [&](std::size_t rep) {
      RngStream rng = make_stream(cfg.seed, detail::kFrechetSalt, ni, rep);
      const PointCloud cloud = sample_points(cfg.model, static_cast<std::size_t>(n), rng);
      const DiameterResult diam = diameter_pruned(cloud);
      run.interpoint_std[rep] = diam.value / gamma_n;
      run.norm_std[rep] = max_norm(cloud).first / gamma_n;
      comparisons[rep] = diam.comparisons;
      // is the attaining pair exactly the two largest norms?
      std::size_t top1 = 0, top2 = 1;
      if (cloud.norms[top2] > cloud.norms[top1]) std::swap(top1, top2);
      for (std::size_t i = 2; i < cloud.size(); ++i) {
        if (cloud.norms[i] > cloud.norms[top1]) {
          top2 = top1;
          top1 = i;
        } else if (cloud.norms[i] > cloud.norms[top2]) {
          top2 = i;
        }
      }
      const std::size_t lo = std::min(top1, top2);
      const std::size_t hi = std::max(top1, top2);
      offtop[rep] = (diam.i != lo || diam.j != hi) ? 1 : 0;
    });
    parallel_for(z_draws, cfg.threads, [&](std::size_t k) {
      RngStream rng = make_stream(cfg.seed, detail::kZDrawSalt, ni, k);
      run.z_samples[k] = simulate_poisson_limit(model.alpha_f, model.dim, cfg.epsilon, rng);
    });
    for (const long long c : comparisons) run.comparisons += c;
    long long off = 0;
    for (const char f : offtop) off += f;
    run.frac_offtop_pair = static_cast<double>(off) / static_cast<double>(reps);
    if (reps >= detail::kMinSamplesForKs && z_draws >= detail::kMinSamplesForKs) {
      std::vector<double> a = run.interpoint_std;
      std::vector<double> b = run.z_samples;
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      run.ks_two_sample_z = ks_two_sample(a, b);
    }
    {
      std::vector<double> s = run.norm_std;
      run.ks_norm_max = detail::ks_if_enough(s, LimitLaw{Frechet{model.alpha_f}});
    }
    report.runs.push_back(std::move(run));
  }
  return report;
}

/// Empirical P(1 + cos Theta < eps) for independent uniform directions,
/// alongside the asymptotic constant and the exact beta-integral value.
struct AngleTailRow {
  double eps = 0.0;
  double empirical = 0.0;
  double formula = 0.0;  // 2^{(d-3)/2} Gamma(d/2) / (sqrt(pi) Gamma((d+1)/2)) eps^{(d-1)/2}
  double exact = 0.0;    // I_{eps/2}((d-1)/2, (d-1)/2)
};

inline double angle_tail_constant(int d) {
  return std::pow(2.0, 0.5 * (d - 3)) *
         std::exp(log_gamma(0.5 * d) - log_gamma(0.5 * (d + 1))) / std::sqrt(M_PI);
}

inline std::vector<AngleTailRow> angle_tail_experiment(int d, const std::vector<double>& eps_list,
                                                       long long reps, std::uint64_t seed,
                                                       int threads = 0) {
  if (d < 2) throw std::domain_error("angle_tail_experiment: requires d >= 2");
  for (const double eps : eps_list) {
    if (!(eps > 0.0 && eps < 1.0)) {
      throw std::domain_error("angle_tail_experiment: eps must lie in (0,1)");
    }
  }
  // fixed shard count keeps the result independent of the thread count
  constexpr int blocks = 64;
  std::vector<std::vector<long long>> hits(static_cast<std::size_t>(blocks),
                                           std::vector<long long>(eps_list.size(), 0));
  const long long per_block = (reps + blocks - 1) / blocks;
  parallel_for(static_cast<std::size_t>(blocks), threads, [&](std::size_t blk) {
    RngStream rng = make_stream(seed, detail::kAngleSalt, blk);
    std::vector<double> y(static_cast<std::size_t>(d));
    std::vector<double> z(static_cast<std::size_t>(d));
    const long long lo = static_cast<long long>(blk) * per_block;
    const long long hi = std::min(reps, lo + per_block);
    for (long long r = lo; r < hi; ++r) {
      sample_direction_into(d, rng, y.data());
      sample_direction_into(d, rng, z.data());
      double dot = 0.0;
      for (int k = 0; k < d; ++k) dot += y[k] * z[k];
      for (std::size_t e = 0; e < eps_list.size(); ++e) {
        if (1.0 + dot < eps_list[e]) ++hits[blk][e];
      }
    }
  });
  std::vector<AngleTailRow> table;
  for (std::size_t e = 0; e < eps_list.size(); ++e) {
    long long total = 0;
    for (int blk = 0; blk < blocks; ++blk) total += hits[static_cast<std::size_t>(blk)][e];
    AngleTailRow row;
    row.eps = eps_list[e];
    row.empirical = static_cast<double>(total) / static_cast<double>(reps);
    row.formula = angle_tail_constant(d) * std::pow(eps_list[e], 0.5 * (d - 1));
    row.exact = beta_i(0.5 * (d - 1), 0.5 * (d - 1), 0.5 * eps_list[e]);
    table.push_back(row);
  }
  return table;
}

/// Sphere-pair exceedance: Y uniform on the sphere of radius a + t b, Z fixed
/// at (a + u b) e_1; empirical P(|Y - Z| > 2a - r b) with the asymptotic
/// formula c'_d (b/a)^{(d-1)/2} (r+t+u)_+^{(d-1)/2} and the exact
/// cosine-threshold integral.
struct SpherePairResult {
  double empirical = 0.0;
  double formula = 0.0;
  double exact = 0.0;
};

inline SpherePairResult sphere_pair_experiment(double a, double b, double r, double t, double u,
                                               int d, long long reps, std::uint64_t seed,
                                               int threads = 0) {
  if (d < 2) throw std::domain_error("sphere_pair_experiment: requires d >= 2");
  if (!(a > 0.0 && b > 0.0 && r > 0.0)) {
    throw std::domain_error("sphere_pair_experiment: a, b, r must be positive");
  }
  // b must be small on the scale of a for the asymptotic regime.
  if (!((1.0 + r + std::fabs(t) + std::fabs(u)) * b <= a / 20.0)) {
    throw std::invalid_argument("sphere_pair_experiment: (1+r+|t|+|u|) b exceeds a/20");
  }
  const double radius_y = a + t * b;
  const double radius_z = a + u * b;
  const double cutoff = 2.0 * a - r * b;
  const double cutoff2 = cutoff * cutoff;
  // |Y-Z| > cutoff  <=>  cos Theta < y0
  const double y0 =
      (radius_y * radius_y + radius_z * radius_z - cutoff2) / (2.0 * radius_y * radius_z);

  constexpr int blocks = 64;  // fixed shard count, thread-count independent
  std::vector<long long> hits(static_cast<std::size_t>(blocks), 0);
  const long long per_block = (reps + blocks - 1) / blocks;
  parallel_for(static_cast<std::size_t>(blocks), threads, [&](std::size_t blk) {
    RngStream rng = make_stream(seed, detail::kSpherePairSalt, blk);
    std::vector<double> y(static_cast<std::size_t>(d));
    const long long lo = static_cast<long long>(blk) * per_block;
    const long long hi = std::min(reps, lo + per_block);
    for (long long rep = lo; rep < hi; ++rep) {
      sample_direction_into(d, rng, y.data());
      // Z = radius_z * e_1, so cos Theta is just the first coordinate.
      if (y[0] < y0) ++hits[blk];
    }
  });
  long long total = 0;
  for (const long long h : hits) total += h;

  SpherePairResult result;
  result.empirical = static_cast<double>(total) / static_cast<double>(reps);
  const double plus = std::max(r + t + u, 0.0);
  result.formula = constants(d).c_prime_d * std::pow(b / a, 0.5 * (d - 1)) *
                   std::pow(plus, 0.5 * (d - 1));
  if (y0 <= -1.0) {
    result.exact = 0.0;
  } else if (y0 >= 1.0) {
    result.exact = 1.0;
  } else {
    result.exact = beta_i(0.5 * (d - 1), 0.5 * (d - 1), 0.5 * (1.0 + y0));
  }
  return result;
}

}  // namespace maxdist
