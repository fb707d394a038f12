#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <vector>

#include "maxdist/montecarlo.hpp"

using namespace maxdist;

TEST_CASE("config validation") {
  ExperimentConfig cfg;
  cfg.model = GammaTail{0.0, 0.5, 2.0, 2};
  cfg.n_values = {100};
  cfg.replications = 0;
  CHECK_THROWS_AS(validate(cfg), std::invalid_argument);
  cfg.replications = 1;
  cfg.epsilon = 0.5;
  CHECK_THROWS_AS(validate(cfg), std::invalid_argument);
  cfg.epsilon = 0.01;
  CHECK_NOTHROW(validate(cfg));
  cfg.n_values.clear();
  CHECK_THROWS_AS(validate(cfg), std::invalid_argument);
}

TEST_CASE("gumbel experiment basics") {
  ExperimentConfig cfg;
  cfg.model = GammaTail{0.0, 0.5, 2.0, 2};
  cfg.n_values = {2000};
  cfg.replications = 200;
  cfg.seed = 21;
  cfg.threads = 2;
  const ExperimentReport report = run_gumbel_experiment(cfg);
  REQUIRE(report.runs.size() == 1);
  const RunReport& run = report.runs[0];
  CHECK(run.interpoint_std.size() == 200);
  CHECK(run.norm_std.size() == 200);
  CHECK(run.gap_ratio.size() == 200);
  REQUIRE(run.ks_interpoint.has_value());
  REQUIRE(run.ks_norm_max.has_value());
  CHECK(*run.ks_interpoint >= 0.0);
  CHECK(*run.ks_interpoint <= 1.0);
  CHECK(*run.ks_norm_max <= 0.35);  // loose: the norm statistic converges fast
  CHECK(run.comparisons > 0);

  SECTION("single replication yields no KS") {
    ExperimentConfig one = cfg;
    one.replications = 1;
    const ExperimentReport tiny = run_gumbel_experiment(one);
    CHECK(tiny.runs[0].interpoint_std.size() == 1);
    CHECK_FALSE(tiny.runs[0].ks_interpoint.has_value());
    CHECK_FALSE(tiny.runs[0].ks_norm_max.has_value());
  }

  SECTION("selector restricts the computed statistics") {
    ExperimentConfig sel = cfg;
    sel.replications = 10;
    sel.statistic = StatisticSelector::norm_max;
    const ExperimentReport norm_only = run_gumbel_experiment(sel);
    CHECK(norm_only.runs[0].interpoint_std.empty());
    CHECK(norm_only.runs[0].norm_std.size() == 10);
    sel.statistic = StatisticSelector::interpoint_max;
    const ExperimentReport inter_only = run_gumbel_experiment(sel);
    CHECK(inter_only.runs[0].norm_std.empty());
    CHECK(inter_only.runs[0].interpoint_std.size() == 10);
  }

  SECTION("wrong model family rejected") {
    ExperimentConfig bad = cfg;
    bad.model = PowerLaw{3.0, 1.0, 2};
    CHECK_THROWS_AS(run_gumbel_experiment(bad), std::invalid_argument);
  }
}

TEST_CASE("determinism across thread counts") {
  ExperimentConfig cfg;
  cfg.model = GammaTail{0.0, 0.5, 2.0, 2};
  cfg.n_values = {500, 1500};
  cfg.replications = 60;
  cfg.seed = 22;

  cfg.threads = 1;
  const ExperimentReport serial = run_gumbel_experiment(cfg);
  cfg.threads = 4;
  const ExperimentReport parallel = run_gumbel_experiment(cfg);
  REQUIRE(serial.runs.size() == parallel.runs.size());
  for (std::size_t r = 0; r < serial.runs.size(); ++r) {
    CHECK(serial.runs[r].interpoint_std == parallel.runs[r].interpoint_std);
    CHECK(serial.runs[r].norm_std == parallel.runs[r].norm_std);
    CHECK(serial.runs[r].gap_ratio == parallel.runs[r].gap_ratio);
    CHECK(serial.runs[r].comparisons == parallel.runs[r].comparisons);
  }

  // sharded experiments too
  const auto table1 = angle_tail_experiment(2, {0.05}, 100000, 23, 1);
  const auto table4 = angle_tail_experiment(2, {0.05}, 100000, 23, 4);
  CHECK(table1[0].empirical == table4[0].empirical);
  const auto sp1 = sphere_pair_experiment(100.0, 0.5, 2.0, 0.5, -0.5, 2, 100000, 24, 1);
  const auto sp4 = sphere_pair_experiment(100.0, 0.5, 2.0, 0.5, -0.5, 2, 100000, 24, 4);
  CHECK(sp1.empirical == sp4.empirical);
}

TEST_CASE("scaling invariance of the standardized interpoint statistic") {
  // scaling data by s and sending beta -> beta s^{-gamma} leaves the
  // standardized sample unchanged (the family is exactly scale-equivariant)
  const double s = 3.7;
  const GammaTail base{1.0, 2.0, 1.5, 2};
  const GammaTail scaled{1.0, 2.0 * std::pow(s, -1.5), 1.5, 2};
  const long long n = 500;
  const AnBn ab_base = gammatail_anbn(base, n);
  const AnBn ab_scaled = gammatail_anbn(scaled, n);
  CHECK(ab_scaled.a_n == Catch::Approx(s * ab_base.a_n).epsilon(1e-12));
  CHECK(ab_scaled.b_n == Catch::Approx(s * ab_base.b_n).epsilon(1e-12));
  const AffineNormalization norm_base = gammatail_interpoint_normalization(base, n);
  const AffineNormalization norm_scaled = gammatail_interpoint_normalization(scaled, n);
  CHECK(norm_scaled.center == Catch::Approx(s * norm_base.center).epsilon(1e-12));
  CHECK(norm_scaled.scale == Catch::Approx(s * norm_base.scale).epsilon(1e-12));

  RngStream rng = make_stream(25, 0);
  const PointCloud cloud = sample_points(SphericalModel{base}, n, rng);
  PointCloud stretched = cloud;
  for (auto& v : stretched.coords) v *= s;
  stretched.recompute_norms();
  const double std_base =
      (diameter_pruned(cloud).value - norm_base.center) / norm_base.scale;
  const double std_scaled =
      (diameter_pruned(stretched).value - norm_scaled.center) / norm_scaled.scale;
  CHECK(std_scaled == Catch::Approx(std_base).margin(1e-9));
}

TEST_CASE("poisson count experiment") {
  ExperimentConfig cfg;
  cfg.model = GammaTail{0.0, 0.5, 2.0, 2};
  cfg.n_values = {20000};
  cfg.replications = 400;
  cfg.seed = 26;
  cfg.lambda = 0.0;
  cfg.threads = 2;
  const ExperimentReport report = run_poisson_count_experiment(cfg);
  const RunReport& run = report.runs[0];
  double pmf_total = 0.0;
  for (const double p : run.w_pmf) pmf_total += p;
  CHECK(pmf_total == Catch::Approx(1.0).margin(1e-12));
  CHECK(run.p_w0 == Catch::Approx(run.w_pmf[0]));
  CHECK(run.tv_poisson >= 0.0);
  CHECK(run.tv_poisson <= 1.0);
  CHECK(run.freq_mismatch >= 0.0);
  CHECK(run.mean_wprime > 0.0);
  // W' <= W so the truncated mean cannot exceed the raw mean
  double mean_w = 0.0;
  for (std::size_t k = 0; k < run.w_pmf.size(); ++k) mean_w += k * run.w_pmf[k];
  CHECK(run.mean_wprime <= mean_w + 1e-12);
  CHECK(run.threshold == Catch::Approx(2.0 * run.a_n - run.r_n * run.b_n).margin(1e-12));
  CHECK(run.cap == Catch::Approx(run.a_n + run.s_n * run.b_n).margin(1e-12));
}

TEST_CASE("weibull experiment on the sphere") {
  ExperimentConfig cfg;
  cfg.model = BoundedTail{0.0, 1.0, BoundedKind::uniform_sphere, 2};
  cfg.n_values = {500};
  cfg.replications = 300;
  cfg.seed = 27;
  cfg.threads = 2;
  const ExperimentReport report = run_weibull_experiment(cfg);
  const RunReport& run = report.runs[0];
  REQUIRE(run.ks_interpoint.has_value());
  CHECK(*run.ks_interpoint <= 0.10);  // fast polynomial rate even at n=500
  // M_n = 1 exactly on the sphere
  for (const double m : run.norm_std) CHECK(m == Catch::Approx(1.0).margin(1e-12));
  // survival stat is n^4 (2 - Mtilde) >= 0
  for (const double s : run.survival_stat) CHECK(s >= 0.0);
}

TEST_CASE("poisson-process limit simulator") {
  SECTION("draws dominate the largest radius and are finite") {
    RngStream rng = make_stream(28, 0);
    for (int i = 0; i < 200; ++i) {
      const double z = simulate_poisson_limit(3.0, 2, 0.05, rng);
      CHECK(z >= 0.0);
      CHECK(std::isfinite(z));
    }
  }
  SECTION("epsilon domain enforced") {
    RngStream rng = make_stream(28, 1);
    CHECK_THROWS_AS(simulate_poisson_limit(3.0, 2, 0.2, rng), std::domain_error);
    CHECK_THROWS_AS(simulate_poisson_limit(3.0, 2, 0.0, rng), std::domain_error);
    CHECK_THROWS_AS(simulate_poisson_limit(-1.0, 2, 0.05, rng), std::domain_error);
  }
  SECTION("truncation stability across epsilon") {
    std::vector<double> za(3000), zb(3000);
    parallel_for(za.size(), 2, [&](std::size_t k) {
      RngStream rng = make_stream(29, 1, k);
      za[k] = simulate_poisson_limit(3.0, 2, 1e-2, rng);
    });
    parallel_for(zb.size(), 2, [&](std::size_t k) {
      RngStream rng = make_stream(29, 2, k);
      zb[k] = simulate_poisson_limit(3.0, 2, 5e-2, rng);
    });
    std::sort(za.begin(), za.end());
    std::sort(zb.begin(), zb.end());
    CHECK(ks_two_sample(za, zb) < 0.05);
  }
  SECTION("empty-process event returns 0") {
    // alpha = 0.1, eps = 0.1: the truncated process has Poisson(10^{0.1})
    // many points, so P(no point) = e^{-1.2589...} ~ 0.284 and the draw is 0.
    RngStream rng = make_stream(34, 0);
    const double p_empty = std::exp(-std::pow(0.1, -0.1));
    const int reps = 20000;
    int zeros = 0;
    for (int i = 0; i < reps; ++i) {
      const double z = simulate_poisson_limit(0.1, 2, 0.1, rng);
      REQUIRE(z >= 0.0);
      if (z == 0.0) ++zeros;
    }
    const double freq = static_cast<double>(zeros) / reps;
    CHECK(std::fabs(freq - p_empty) < 4.0 * std::sqrt(p_empty * (1.0 - p_empty) / reps));
  }

  SECTION("mean count above the truncation radius is epsilon^{-alpha}") {
    // with alpha = 2, eps = 0.1: expect 100 points on average; the largest
    // radius distribution checks the arrival construction: P(R1 <= r) =
    // exp(-r^{-alpha}) (Frechet), test at the median
    RngStream rng = make_stream(30, 0);
    const double alpha = 2.0;
    long long below = 0;
    const int reps = 4000;
    const double frechet_median = std::pow(std::log(2.0), -1.0 / alpha);
    for (int i = 0; i < reps; ++i) {
      std::exponential_distribution<double> exponential(1.0);
      const double r1 = std::pow(exponential(rng), -1.0 / alpha);
      if (r1 <= frechet_median) ++below;
    }
    CHECK(std::fabs(static_cast<double>(below) / reps - 0.5) < 4.0 * 0.5 / std::sqrt(reps));
  }
}

TEST_CASE("frechet experiment") {
  ExperimentConfig cfg;
  cfg.model = PowerLaw{3.0, 1.0, 2};
  cfg.n_values = {2000};
  cfg.replications = 400;
  cfg.z_draws = 400;
  cfg.epsilon = 1e-2;
  cfg.seed = 31;
  cfg.threads = 2;
  const ExperimentReport report = run_frechet_experiment(cfg);
  const RunReport& run = report.runs[0];
  REQUIRE(run.ks_two_sample_z.has_value());
  CHECK(*run.ks_two_sample_z <= 0.15);
  REQUIRE(run.ks_norm_max.has_value());
  CHECK(*run.ks_norm_max <= 0.10);
  CHECK(run.frac_offtop_pair >= 0.05);
  CHECK(run.z_samples.size() == 400);
  // Z_alpha >= largest radius always: scaled diameters concentrate >= 1-ish,
  // all draws strictly positive
  for (const double z : run.z_samples) CHECK(z > 0.0);
}

TEST_CASE("angle tail experiment edge cases") {
  CHECK_THROWS_AS(angle_tail_experiment(1, {0.1}, 10, 0), std::domain_error);
  CHECK_THROWS_AS(angle_tail_experiment(2, {1.5}, 10, 0), std::domain_error);
  const auto table = angle_tail_experiment(3, {0.5}, 50000, 32, 2);
  CHECK(table[0].exact == Catch::Approx(0.25).margin(1e-12));
  CHECK(std::fabs(table[0].empirical - 0.25) < 4.0 * std::sqrt(0.25 * 0.75 / 50000));
}

TEST_CASE("sphere pair experiment edge cases") {
  // zero probability when r + t + u <= 0
  const SpherePairResult zero =
      sphere_pair_experiment(100.0, 0.5, 1.0, -0.5, -0.5, 2, 2000, 33, 2);
  CHECK(zero.empirical == 0.0);
  CHECK(zero.formula == 0.0);
  CHECK(zero.exact == 0.0);
  // scale guard
  CHECK_THROWS_AS(sphere_pair_experiment(1.0, 0.5, 2.0, 0.0, 0.0, 2, 10, 0),
                  std::invalid_argument);
  CHECK_THROWS_AS(sphere_pair_experiment(100.0, 0.5, 2.0, 0.0, 0.0, 1, 10, 0),
                  std::domain_error);
}
