#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "maxdist/limit_laws.hpp"
#include "maxdist/rng.hpp"

using namespace maxdist;

TEST_CASE("cdf closed forms") {
  CHECK(cdf(LimitLaw{Gumbel{}}, 0.0) == Catch::Approx(std::exp(-1.0)).epsilon(1e-14));
  CHECK(cdf(LimitLaw{NegWeibull{1.0}}, -1.0) == Catch::Approx(std::exp(-1.0)).epsilon(1e-14));
  CHECK(cdf(LimitLaw{NegWeibull{1.0}}, 0.5) == 1.0);
  CHECK(cdf(LimitLaw{Frechet{2.0}}, -1.0) == 0.0);
  CHECK(cdf(LimitLaw{Frechet{2.0}}, 1.0) == Catch::Approx(std::exp(-1.0)).epsilon(1e-14));
}

TEST_CASE("gumbel-sum cdf quadrature matches the high-precision convolution") {
  // Reference: 40-digit evaluation of 2 sqrt(z) K_1(2 sqrt(z)), z = e^{-x},
  // which equals the convolution integral.
  struct Ref {
    double x, cdf;
  };
  const Ref refs[] = {
      {-2.0, 0.013558664334273478}, {-1.0, 0.092993810421721567},
      {0.0, 0.27973176363304485},   {0.5, 0.39794250109403535},
      {1.0, 0.51653603895520456},   {2.0, 0.71871694558873622},
      {5.0, 0.96720658781910901},
  };
  for (const auto& ref : refs) {
    CHECK(cdf(LimitLaw{GumbelSum{}}, ref.x) == Catch::Approx(ref.cdf).margin(1e-10));
  }
}

TEST_CASE("quantiles invert the cdf") {
  CHECK(quantile(LimitLaw{Gumbel{}}, std::exp(-1.0)) == Catch::Approx(0.0).margin(1e-12));
  CHECK(quantile(LimitLaw{Frechet{2.0}}, std::exp(-1.0)) == Catch::Approx(1.0).epsilon(1e-12));
  CHECK(quantile(LimitLaw{Frechet{3.0}}, 0.5) ==
        Catch::Approx(std::pow(std::log(2.0), -1.0 / 3.0)).epsilon(1e-12));
  CHECK(quantile(LimitLaw{GumbelSum{}}, 0.5) ==
        Catch::Approx(0.92859764023031991).margin(1e-8));

  const LimitLaw laws[] = {LimitLaw{Gumbel{}}, LimitLaw{NegWeibull{0.5}},
                           LimitLaw{NegWeibull{2.5}}, LimitLaw{Frechet{1.0}},
                           LimitLaw{Frechet{3.0}}, LimitLaw{GumbelSum{}}};
  for (const auto& law : laws) {
    for (double p = 0.05; p < 1.0; p += 0.1) {
      CHECK(cdf(law, quantile(law, p)) == Catch::Approx(p).margin(1e-8));
    }
  }
  CHECK_THROWS_AS(quantile(LimitLaw{Gumbel{}}, 0.0), std::domain_error);
  CHECK_THROWS_AS(quantile(LimitLaw{Gumbel{}}, 1.0), std::domain_error);
}

TEST_CASE("cdf is monotone nondecreasing") {
  const LimitLaw laws[] = {LimitLaw{Gumbel{}}, LimitLaw{NegWeibull{0.7}},
                           LimitLaw{Frechet{2.0}}, LimitLaw{GumbelSum{}}};
  for (const auto& law : laws) {
    double prev = 0.0;
    for (double x = -6.0; x <= 12.0; x += 0.25) {
      const double f = cdf(law, x);
      CHECK(f >= prev - 1e-12);
      CHECK(f >= 0.0);
      CHECK(f <= 1.0);
      prev = f;
    }
  }
}

TEST_CASE("ks statistic") {
  SECTION("plug-in of exact quantiles is tiny") {
    const std::size_t n = 1000;
    std::vector<double> sample(n);
    for (std::size_t i = 0; i < n; ++i) {
      sample[i] = quantile(LimitLaw{Gumbel{}}, (i + 0.5) / n);
    }
    CHECK(ks_statistic(sample, LimitLaw{Gumbel{}}) <= 0.0005 + 1e-12);
  }
  SECTION("constant sample against gumbel") {
    const std::vector<double> zeros(100, 0.0);
    CHECK(ks_statistic(zeros, LimitLaw{Gumbel{}}) ==
          Catch::Approx(1.0 - std::exp(-1.0)).epsilon(1e-12));
  }
  SECTION("distribution-free law at the 1% critical value") {
    const std::size_t n = 100000;
    const double critical = 1.63 / std::sqrt(static_cast<double>(n));
    int below = 0;
    std::vector<double> sample(n);
    for (int rep = 0; rep < 100; ++rep) {
      RngStream rng = make_stream(71, rep);
      for (auto& v : sample) v = maxdist::sample(LimitLaw{Gumbel{}}, rng);
      std::sort(sample.begin(), sample.end());
      if (ks_statistic(sample, LimitLaw{Gumbel{}}) < critical) ++below;
    }
    CHECK(below >= 95);
  }
  SECTION("empty sample rejected") {
    const std::vector<double> empty;
    CHECK_THROWS_AS(ks_statistic(empty, LimitLaw{Gumbel{}}), std::invalid_argument);
  }
  SECTION("unsorted sample rejected") {
    const std::vector<double> unsorted{1.0, 0.0};
    CHECK_THROWS_AS(ks_statistic(unsorted, LimitLaw{Gumbel{}}), std::invalid_argument);
  }
}

TEST_CASE("sampling means") {
  SECTION("gumbel mean is euler-mascheroni") {
    RngStream rng = make_stream(81, 0);
    const long long reps = 1000000;
    double sum = 0.0;
    for (long long i = 0; i < reps; ++i) sum += sample(LimitLaw{Gumbel{}}, rng);
    CHECK(std::fabs(sum / reps - 0.57721566490153286) < 0.005);
  }
  SECTION("gumbel-sum mean is twice euler-mascheroni") {
    RngStream rng = make_stream(82, 0);
    const long long reps = 1000000;
    double sum = 0.0;
    for (long long i = 0; i < reps; ++i) sum += sample(LimitLaw{GumbelSum{}}, rng);
    CHECK(std::fabs(sum / reps - 2.0 * 0.57721566490153286) < 0.007);
  }
}

TEST_CASE("gumbel-sum cdf agrees with a monte carlo convolution") {
  // lighter version of the acceptance check: 1e6 summed pairs
  const std::size_t reps = 1000000;
  std::vector<double> sums(reps);
  RngStream rng = make_stream(83, 0);
  for (auto& v : sums) v = sample(LimitLaw{GumbelSum{}}, rng);
  std::sort(sums.begin(), sums.end());
  const double ks_bound = ks_upper_bound_sorted(
      sums, [](double x) { return cdf(GumbelSum{}, x); }, 20000);
  CHECK(ks_bound < 0.0035);  // ~2.6 sigma of the n = 1e6 KS noise floor
}

TEST_CASE("grid KS bound brackets the exact statistic") {
  RngStream rng = make_stream(84, 0);
  std::vector<double> sample_values(2000);
  for (auto& v : sample_values) v = sample(LimitLaw{Gumbel{}}, rng);
  std::sort(sample_values.begin(), sample_values.end());
  const double exact = ks_statistic(sample_values, LimitLaw{Gumbel{}});
  const auto gumbel_cdf = [](double x) { return cdf(Gumbel{}, x); };
  const double bound = ks_upper_bound_sorted(sample_values, gumbel_cdf, 50000);
  CHECK(bound >= exact - 1e-12);
  CHECK(bound <= exact + 0.001);
}

TEST_CASE("two-sample ks") {
  const std::vector<double> a{1.0, 2.0, 3.0, 4.0};
  CHECK(ks_two_sample(a, a) == 0.0);
  const std::vector<double> b{10.0, 11.0};
  CHECK(ks_two_sample(a, b) == 1.0);
  const std::vector<double> c{2.5};
  CHECK(ks_two_sample(a, c) == 0.5);
}

TEST_CASE("total variation and poisson pmf") {
  const std::vector<double> pmf_a{0.5, 0.5};
  const std::vector<double> pmf_b{1.0};
  CHECK(tv_distance(pmf_a, pmf_b) == Catch::Approx(0.5));
  CHECK(tv_distance(pmf_a, pmf_a) == 0.0);
  CHECK(poisson_pmf(0, 1.0) == Catch::Approx(std::exp(-1.0)).epsilon(1e-14));
  CHECK(poisson_pmf(3, 2.0) == Catch::Approx(8.0 / 6.0 * std::exp(-2.0)).epsilon(1e-12));
  double total = 0.0;
  for (int k = 0; k < 60; ++k) total += poisson_pmf(k, 5.0);
  CHECK(total == Catch::Approx(1.0).margin(1e-12));
}

TEST_CASE("law validation") {
  CHECK_THROWS_AS(validate(LimitLaw{NegWeibull{-1.0}}), std::invalid_argument);
  CHECK_THROWS_AS(validate(LimitLaw{Frechet{0.0}}), std::invalid_argument);
  CHECK_NOTHROW(validate(LimitLaw{Gumbel{}}));
}
