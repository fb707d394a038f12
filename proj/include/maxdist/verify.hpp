#pragma once

// Named verification suites behind `maxdist verify` and the acceptance
// runner. Every threshold is pinned here at its contract value; the budget
// only controls sample sizes for exploratory runs, and defaults to the full
// contract budgets.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "maxdist/diameter.hpp"
#include "maxdist/json_io.hpp"
#include "maxdist/limit_laws.hpp"
#include "maxdist/montecarlo.hpp"
#include "maxdist/normalization.hpp"
#include "maxdist/radial_models.hpp"

namespace maxdist {

struct Check {
  std::string name;
  double measured = 0.0;
  std::string op;  // "<=", ">=", "in" (threshold..threshold_hi), "==" (within tol)
  double threshold = 0.0;
  double threshold_hi = 0.0;
  bool pass = false;
};

struct Scorecard {
  std::string suite;
  std::vector<Check> checks;

  bool pass() const {
    for (const auto& c : checks) {
      if (!c.pass) return false;
    }
    return true;
  }

  void check_le(const std::string& name, double measured, double bound) {
    checks.push_back({name, measured, "<=", bound, 0.0, measured <= bound});
  }
  void check_ge(const std::string& name, double measured, double bound) {
    checks.push_back({name, measured, ">=", bound, 0.0, measured >= bound});
  }
  void check_in(const std::string& name, double measured, double lo, double hi) {
    checks.push_back({name, measured, "in", lo, hi, measured >= lo && measured <= hi});
  }
  void check_true(const std::string& name, bool value) {
    checks.push_back({name, value ? 1.0 : 0.0, ">=", 1.0, 0.0, value});
  }
};

inline Json scorecard_to_json(const Scorecard& card) {
  Json j;
  j["suite"] = card.suite;
  j["pass"] = card.pass();
  j["checks"] = Json::array();
  for (const auto& c : card.checks) {
    Json row;
    row["name"] = c.name;
    row["measured"] = c.measured;
    row["op"] = c.op;
    row["threshold"] = c.threshold;
    if (c.op == "in") row["threshold_hi"] = c.threshold_hi;
    row["pass"] = c.pass;
    j["checks"].push_back(row);
  }
  return j;
}

/// Budget knobs for exploratory runs; defaults are the contract budgets.
struct VerifyBudget {
  std::uint64_t seed = 0;
  int threads = 0;
  double scale = 1.0;  // multiplies replication counts, floored at small minima
};

namespace detail {

inline long long scaled(long long full, double scale, long long floor_at) {
  const long long v = static_cast<long long>(full * scale);
  return std::max(v, floor_at);
}

inline SphericalModel verify_model_for(int family, int d, RngStream& rng) {
  std::uniform_real_distribution<double> uni(0.5, 2.5);
  switch (family) {
    case 0:
      return GammaTail{uni(rng) - 1.0, uni(rng), uni(rng), d};
    case 1:
      return Kotz{uni(rng), uni(rng), d};
    case 2:
      return BoundedTail{uni(rng), 1.0, BoundedKind::pure_weibull_radius, d};
    case 3:
      return BoundedTail{1.0, static_cast<double>(d), BoundedKind::uniform_ball, d};
    default:
      return PowerLaw{uni(rng) + 1.0, uni(rng), d};
  }
}

}  // namespace detail

/// Criterion 1: closed-form constant identities and frozen values.
inline Scorecard verify_constants(const VerifyBudget& = {}) {
  Scorecard card{"constants", {}};
  double worst_tilde = 0.0, worst_quarter = 0.0, worst_gamma = 0.0;
  for (int d = 2; d <= 10; ++d) {
    const ExtremeConstants k = constants(d);
    worst_tilde = std::max(worst_tilde, std::fabs(k.c_tilde_d - k.c_d * k.omega_d * k.omega_d) /
                                            k.c_tilde_d);
    worst_quarter =
        std::max(worst_quarter, std::fabs(k.c_d - 0.25 * (d - 1) * k.c_dblprime_d) / k.c_d);
    worst_gamma = std::max(worst_gamma,
                           std::fabs(k.c_dblprime_d - std::exp(log_gamma(0.5 * (d + 1))) *
                                                          k.c_prime_d) /
                               k.c_dblprime_d);
  }
  card.check_le("c_tilde = c_d omega^2 (rel, d=2..10)", worst_tilde, 1e-12);
  card.check_le("c_d = (d-1) c''_d / 4 (rel, d=2..10)", worst_quarter, 1e-12);
  card.check_le("c''_d = Gamma((d+1)/2) c'_d (rel, d=2..10)", worst_gamma, 1e-12);
  card.check_le("|c_2 - 0.1410474|", std::fabs(constants(2).c_d - 0.14104739588693907), 1e-10);
  card.check_le("|c_tilde_2 - pi^{3/2}|",
                std::fabs(constants(2).c_tilde_d - 5.5683279968317078), 1e-10);
  card.check_le("|c*(0,2) - 1/pi|", std::fabs(constants(2, 0.0).c_star - 0.31830988618379067),
                1e-10);
  return card;
}

/// Criterion 2: pruned-vs-naive diameter equivalence on randomized instances.
inline Scorecard verify_oracle(const VerifyBudget& budget = {}) {
  Scorecard card{"oracle", {}};
  const long long instances = detail::scaled(1000, budget.scale, 50);
  const int dims[] = {1, 2, 3, 5};
  RngStream meta = make_stream(budget.seed, 0xd1a);
  std::uniform_int_distribution<int> n_dist(2, 500);
  long long mismatches = 0;
  for (long long i = 0; i < instances; ++i) {
    const int d = dims[i % 4];
    const SphericalModel model = detail::verify_model_for(static_cast<int>(i % 5), d, meta);
    const std::size_t n = static_cast<std::size_t>(n_dist(meta));
    RngStream rng = make_stream(budget.seed, 0xd1b, i);
    const PointCloud cloud = sample_points(model, n, rng);
    const DiameterResult naive = diameter_naive(cloud);
    const DiameterResult pruned = diameter_pruned(cloud);
    if (naive.value != pruned.value || naive.i != pruned.i || naive.j != pruned.j) ++mismatches;
  }
  card.check_le("pruned != naive (value or tie-broken pair), count",
                static_cast<double>(mismatches), 0.0);
  return card;
}

/// Criterion 3: the closed-form diameter normalization equals the published
/// normal-case and Kotz-case displays.
inline Scorecard verify_closed_forms(const VerifyBudget& = {}) {
  Scorecard card{"closed_forms", {}};
  double worst_normal = 0.0;
  for (const int d : {2, 3, 5}) {
    const GammaTail normal{0.0, 0.5, 2.0, d};
    for (const double n : {1e3, 1e6, 1e9}) {
      const AffineNormalization norm =
          gammatail_interpoint_normalization(normal, static_cast<long long>(n));
      const double L = std::log(n);
      const double bracket =
          4.0 * L + 0.5 * (d - 3.0) * std::log(L) + std::log(std::log(L)) +
          std::log((d - 1) * std::pow(2.0, 0.5 * (d - 7.0)) /
                   (std::sqrt(M_PI) * std::exp(log_gamma(0.5 * d))));
      worst_normal = std::max(worst_normal, std::fabs(norm.center / norm.scale - bracket));
      worst_normal =
          std::max(worst_normal, std::fabs(1.0 / norm.scale - std::sqrt(2.0 * L)));
    }
  }
  card.check_le("closed form vs published normal display (abs)", worst_normal, 1e-10);
  double worst_kotz = 0.0;
  struct KotzParams {
    double kappa, b;
    int d;
  };
  for (const KotzParams p : {KotzParams{1.0, 2.0, 2}, KotzParams{2.5, 1.25, 3},
                             KotzParams{0.5, 3.0, 5}}) {
    for (const double n : {1e3, 1e6, 1e9}) {
      const AffineNormalization norm = gammatail_interpoint_normalization(
          Kotz{p.kappa, p.b, p.d}.resolved(), static_cast<long long>(n));
      const double L = std::log(n);
      const double bracket =
          4.0 * L + 0.5 * (4.0 * p.b + p.d - 7.0) * std::log(L) + std::log(std::log(L)) +
          std::log((p.d - 1) * std::pow(2.0, 0.5 * (p.d - 7.0)) *
                   std::exp(log_gamma(0.5 * p.d) - 2.0 * log_gamma(0.5 * p.d + p.b - 1.0)) /
                   std::sqrt(M_PI));
      worst_kotz = std::max(worst_kotz, std::fabs(norm.center / norm.scale - bracket));
      worst_kotz = std::max(worst_kotz,
                            std::fabs(1.0 / norm.scale - std::sqrt(4.0 * p.kappa * L)));
    }
  }
  card.check_le("closed form vs published kotz display (abs)", worst_kotz, 1e-10);
  return card;
}

/// Criterion 4: angle-tail asymptotics for uniform directions.
inline Scorecard verify_angle_tail(const VerifyBudget& budget = {}) {
  Scorecard card{"angle_tail", {}};
  {  // d = 3: exact eps/2 identity at 1e6 reps
    const long long reps = detail::scaled(1000000, budget.scale, 20000);
    const auto table = angle_tail_experiment(3, {0.2, 0.05, 0.01}, reps, budget.seed, budget.threads);
    double worst = 0.0;
    for (const auto& row : table) {
      const double expected = 0.5 * row.eps;
      const double sigma = std::sqrt(expected * (1.0 - expected) / reps);
      worst = std::max(worst, std::fabs(row.empirical - expected) / sigma);
    }
    card.check_le("d=3 |empirical - eps/2| in binomial sigmas", worst, 4.0);
  }
  for (const int d : {2, 4}) {
    // reps scaled so the relative noise at each eps stays ~0.5%
    const std::vector<double> eps_list{0.1, 0.03, 0.01};
    std::vector<double> ratios, sigmas_rel;
    for (const double eps : eps_list) {
      const double p = angle_tail_constant(d) * std::pow(eps, 0.5 * (d - 1));
      const long long reps =
          detail::scaled(static_cast<long long>(40000.0 / p), budget.scale, 50000);
      const auto table = angle_tail_experiment(d, {eps}, reps, budget.seed + d, budget.threads);
      const double sigma = std::sqrt(table[0].exact * (1.0 - table[0].exact) / reps);
      if (eps == 0.01) {
        card.check_le("d=" + std::to_string(d) + " |empirical - formula| sigmas at eps=0.01",
                      std::fabs(table[0].empirical - table[0].formula) / sigma, 4.0);
      }
      ratios.push_back(table[0].empirical / table[0].formula);
      sigmas_rel.push_back(sigma / table[0].formula);
    }
    // |ratio - 1| nonincreasing within noise as eps shrinks
    bool trend = true;
    for (std::size_t k = 1; k < ratios.size(); ++k) {
      if (std::fabs(ratios[k] - 1.0) >
          std::fabs(ratios[k - 1] - 1.0) + 2.0 * (sigmas_rel[k] + sigmas_rel[k - 1])) {
        trend = false;
      }
    }
    card.check_true("d=" + std::to_string(d) + " ratio trend toward 1 within noise", trend);
  }
  return card;
}

/// Criterion 5: sphere-pair exceedance probability.
inline Scorecard verify_sphere_pair(const VerifyBudget& budget = {}) {
  Scorecard card{"sphere_pair", {}};
  const long long reps = detail::scaled(1000000, budget.scale, 20000);
  const SpherePairResult r =
      sphere_pair_experiment(100.0, 0.5, 2.0, 0.0, 0.0, 2, reps, budget.seed, budget.threads);
  const double sigma = std::sqrt(r.exact * (1.0 - r.exact) / reps);
  card.check_le("|empirical - exact| in binomial sigmas", std::fabs(r.empirical - r.exact) / sigma,
                4.0);
  card.check_le("|exact - asymptotic| / exact", std::fabs(r.exact - r.formula) / r.exact, 0.10);
  return card;
}

/// Criterion 6: Poisson pair-count limit for the normal model, d=2.
inline Scorecard verify_poisson(const VerifyBudget& budget = {}) {
  Scorecard card{"poisson", {}};
  ExperimentConfig cfg;
  cfg.model = GammaTail{0.0, 0.5, 2.0, 2};
  cfg.n_values = {100000};
  cfg.replications = detail::scaled(2000, budget.scale, 100);
  cfg.seed = budget.seed;
  cfg.lambda = 0.0;
  cfg.threads = budget.threads;
  const ExperimentReport report = run_poisson_count_experiment(cfg);
  const RunReport& run = report.runs.front();
  const double e1 = std::exp(-1.0);
  card.check_in("P(W=0) vs e^{-1} +- 0.06", run.p_w0, e1 - 0.06, e1 + 0.06);
  card.check_in("mean W'", run.mean_wprime, 0.7, 1.4);
  card.check_le("freq(W != W')", run.freq_mismatch, 0.05);
  return card;
}

/// Criteria 7 and 8: Gumbel convergence trend and the norm-diameter gap
/// ratio, normal d=2.
inline Scorecard verify_gumbel(const VerifyBudget& budget = {}) {
  Scorecard card{"gumbel", {}};
  ExperimentConfig cfg;
  cfg.model = GammaTail{0.0, 0.5, 2.0, 2};
  cfg.n_values = {1000, 10000, 100000};
  cfg.replications = detail::scaled(1000, budget.scale, 200);
  cfg.seed = budget.seed;
  cfg.threads = budget.threads;
  const ExperimentReport report = run_gumbel_experiment(cfg);

  card.check_le("KS(std interpoint max vs Gumbel) at n=1e5",
                report.runs.back().ks_interpoint.value_or(2.0), 0.12);

  // median of >= 10 block KS estimates per n, strictly decreasing in n
  std::vector<double> medians;
  for (const auto& run : report.runs) {
    const std::size_t blocks = 10;
    const std::size_t block_size = run.interpoint_std.size() / blocks;
    std::vector<double> block_ks;
    for (std::size_t b = 0; b < blocks; ++b) {
      std::vector<double> block(run.interpoint_std.begin() + b * block_size,
                                run.interpoint_std.begin() + (b + 1) * block_size);
      std::sort(block.begin(), block.end());
      block_ks.push_back(ks_statistic(block, LimitLaw{Gumbel{}}));
    }
    medians.push_back(median_of(block_ks));
  }
  card.check_true("median block-KS strictly decreasing over n in {1e3,1e4,1e5}",
                  medians[0] > medians[1] && medians[1] > medians[2]);
  card.check_in("median gap ratio at n=1e5 (target 0.5)",
                report.runs.back().gap_ratio_median.value_or(-1.0), 0.35, 0.65);
  return card;
}

/// Criterion 9: Weibull-case limits for bounded laws, d=2.
inline Scorecard verify_weibull(const VerifyBudget& budget = {}) {
  Scorecard card{"weibull", {}};
  ExperimentConfig cfg;
  cfg.model = BoundedTail{0.0, 1.0, BoundedKind::uniform_sphere, 2};
  cfg.n_values = {2000};
  cfg.replications = detail::scaled(2000, budget.scale, 200);
  cfg.seed = budget.seed;
  cfg.threads = budget.threads;
  const ExperimentReport sphere = run_weibull_experiment(cfg);
  card.check_le("uniform-sphere KS vs NegWeibull(1/2)",
                sphere.runs.front().ks_interpoint.value_or(2.0), 0.05);

  ExperimentConfig ball_cfg = cfg;
  ball_cfg.model = BoundedTail{1.0, 2.0, BoundedKind::uniform_ball, 2};
  const ExperimentReport ball = run_weibull_experiment(ball_cfg);
  long long hits = 0;
  for (const double s : ball.runs.front().survival_stat) {
    if (s > 1.0) ++hits;
  }
  const double empirical = static_cast<double>(hits) / ball.runs.front().survival_stat.size();
  const double target = std::exp(-0.33953054526271005);
  card.check_in("uniform-ball P(n^{4/5}(2 - Mtilde) > 1)", empirical, target - 0.04,
                target + 0.04);
  return card;
}

/// Criterion 10: Frechet case against the simulated Poisson-process limit.
inline Scorecard verify_frechet(const VerifyBudget& budget = {}) {
  Scorecard card{"frechet", {}};
  ExperimentConfig cfg;
  cfg.model = PowerLaw{3.0, 1.0, 2};
  cfg.n_values = {10000};
  cfg.replications = detail::scaled(5000, budget.scale, 200);
  cfg.z_draws = cfg.replications;
  cfg.epsilon = 1e-2;
  cfg.seed = budget.seed;
  cfg.threads = budget.threads;
  const ExperimentReport report = run_frechet_experiment(cfg);
  const RunReport& run = report.runs.front();
  card.check_le("two-sample KS(scaled Mtilde, Z_alpha)", run.ks_two_sample_z.value_or(2.0), 0.05);
  card.check_le("one-sample KS(scaled M vs Frechet(3))", run.ks_norm_max.value_or(2.0), 0.03);
  card.check_ge("P(diameter pair is not the two largest norms)", run.frac_offtop_pair, 0.05);

  // truncation stability of the Z_alpha simulator
  const std::size_t z_draws = static_cast<std::size_t>(detail::scaled(10000, budget.scale, 500));
  std::vector<double> za(z_draws), zb(z_draws);
  parallel_for(z_draws, budget.threads, [&](std::size_t k) {
    RngStream rng = make_stream(budget.seed, 0x2a, k);
    za[k] = simulate_poisson_limit(3.0, 2, 1e-2, rng);
  });
  parallel_for(z_draws, budget.threads, [&](std::size_t k) {
    RngStream rng = make_stream(budget.seed, 0x2b, k);
    zb[k] = simulate_poisson_limit(3.0, 2, 1e-3, rng);
  });
  std::sort(za.begin(), za.end());
  std::sort(zb.begin(), zb.end());
  card.check_le("Z_alpha KS(eps=1e-2 vs 1e-3)", ks_two_sample(za, zb), 0.03);
  return card;
}

/// Criterion 11: d=1 Gumbel-sum limit and the quadrature-vs-simulation check.
inline Scorecard verify_d1(const VerifyBudget& budget = {}) {
  Scorecard card{"d1", {}};
  ExperimentConfig cfg;
  cfg.model = GammaTail{0.0, 1.0, 1.0, 1};  // double exponential
  cfg.n_values = {100000};
  cfg.replications = detail::scaled(2000, budget.scale, 200);
  cfg.seed = budget.seed;
  cfg.threads = budget.threads;
  const ExperimentReport report = run_gumbel_experiment(cfg);
  card.check_le("KS(std interpoint max vs GumbelSum) at n=1e5",
                report.runs.front().ks_interpoint.value_or(2.0), 0.10);

  const std::size_t draws = static_cast<std::size_t>(detail::scaled(10000000, budget.scale, 200000));
  std::vector<double> sums(draws);
  parallel_for(draws, budget.threads, [&](std::size_t k) {
    RngStream rng = make_stream(budget.seed, 0x6c, k);
    sums[k] = sample(LimitLaw{GumbelSum{}}, rng);
  });
  std::sort(sums.begin(), sums.end());
  const double ks_bound =
      ks_upper_bound_sorted(sums, [](double x) { return cdf(GumbelSum{}, x); }, 80000);
  card.check_le("GumbelSum quadrature vs MC convolution KS (upper bound)", ks_bound, 0.001);
  return card;
}

/// Criterion 12: byte-identical scorecards across thread counts.
inline Scorecard verify_determinism(const VerifyBudget& budget = {}) {
  Scorecard card{"determinism", {}};
  VerifyBudget small = budget;
  small.scale = std::min(budget.scale, 0.05);
  small.threads = 1;
  const std::string one = scorecard_to_json(verify_angle_tail(small)).dump();
  const std::string one_frechet = scorecard_to_json(verify_frechet(small)).dump();
  small.threads = budget.threads > 0 ? budget.threads : resolve_threads(0);
  if (small.threads == 1) small.threads = 4;
  const std::string many = scorecard_to_json(verify_angle_tail(small)).dump();
  const std::string many_frechet = scorecard_to_json(verify_frechet(small)).dump();
  card.check_true("angle_tail scorecard bytes identical for threads=1 vs k", one == many);
  card.check_true("frechet scorecard bytes identical for threads=1 vs k",
                  one_frechet == many_frechet);
  return card;
}

inline std::vector<std::string> verify_suite_names() {
  return {"constants", "oracle",  "closed_forms", "angle_tail", "sphere_pair", "poisson",
          "gumbel",    "weibull", "frechet",      "d1",         "determinism"};
}

inline Scorecard run_verify_suite(const std::string& name, const VerifyBudget& budget = {}) {
  if (name == "constants") return verify_constants(budget);
  if (name == "oracle") return verify_oracle(budget);
  if (name == "closed_forms") return verify_closed_forms(budget);
  if (name == "angle_tail") return verify_angle_tail(budget);
  if (name == "sphere_pair") return verify_sphere_pair(budget);
  if (name == "poisson") return verify_poisson(budget);
  if (name == "gumbel") return verify_gumbel(budget);
  if (name == "weibull") return verify_weibull(budget);
  if (name == "frechet") return verify_frechet(budget);
  if (name == "d1") return verify_d1(budget);
  if (name == "determinism") return verify_determinism(budget);
  throw ConfigError("unknown verify suite: " + name);
}

}  // namespace maxdist
