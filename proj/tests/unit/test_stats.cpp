#include <doctest.h>

#include <cmath>

#include "immig/stats.hpp"
#include "oracles.hpp"

using namespace immig;

TEST_CASE("moment estimator fixtures") {
  const double x[] = {0.0, 2.0};
  const auto m1 = empirical_moment(x, 1);
  CHECK(m1.estimate == 1.0);
  CHECK(m1.std_error == doctest::Approx(1.0));
  const auto m2 = empirical_moment(x, 2);
  CHECK(m2.estimate == 2.0);
  CHECK(m2.std_error == doctest::Approx(2.0));
  const double one[] = {1.0};
  CHECK_THROWS_AS(empirical_moment(one, 1), std::invalid_argument);
}

TEST_CASE("ks fixtures") {
  const double a[] = {0, 0, 0}, b[] = {1, 1, 1};
  const double c[] = {1, 2}, d[] = {1.5, 2.5};
  CHECK(ks_statistic(a, b) == 1.0);
  CHECK(ks_statistic(c, d) == 0.5);
  CHECK(ks_statistic(c, c) == 0.0);
  const std::vector<double> empty;
  CHECK_THROWS_AS(ks_statistic(empty, c), std::invalid_argument);
}

TEST_CASE("ks agrees with brute force and is symmetric") {
  CounterRng rng(SeedSpec{51, 0});
  for (int trial = 0; trial < 200; ++trial) {
    const auto na = 1 + static_cast<std::size_t>(rng.uniform_open() * 40);
    const auto nb = 1 + static_cast<std::size_t>(rng.uniform_open() * 40);
    std::vector<double> a(na), b(nb);
    // coarse rounding forces ties within and across samples
    for (auto& x : a) x = std::floor(rng.uniform_open() * 8.0);
    for (auto& x : b) x = std::floor(rng.uniform_open() * 8.0 + 1.0);
    const double d = ks_statistic(a, b);
    CHECK(d == ks_statistic(b, a));
    CHECK(d == doctest::Approx(oracle::ks_brute_force(a, b)).epsilon(1e-14));
  }
}

TEST_CASE("results do not depend on the thread count") {
  const ResponseSpec spec{QueueIndicator{ParetoRho{-0.3}, Dependence::independent}, 0.6};
  const auto grid = default_u_grid();
  const auto s1 = simulate_replicates(spec, 1e3, grid, 64, 52, 1);
  const auto s3 = simulate_replicates(spec, 1e3, grid, 64, 52, 3);
  for (std::size_t i = 0; i < s1.size(); ++i) {
    CHECK(s1[i].y_scaled == s3[i].y_scaled);
    CHECK(s1[i].replicate.replicate_index == i);
  }

  RunOptions o1;
  o1.grid = {1e-3, 500};
  RunOptions o4 = o1;
  o4.threads = 4;
  const double u[] = {0.5, 1.0};
  CHECK(fiiss_replicates(0.6, -0.3, u, 40, 53, o1) == fiiss_replicates(0.6, -0.3, u, 40, 53, o4));

  const auto r1 = fiiss_moment_check(0.6, -0.3, 2, 1.0, 40, 53, o1);
  const auto r4 = fiiss_moment_check(0.6, -0.3, 2, 1.0, 40, 53, o4);
  for (std::size_t l = 0; l < r1.size(); ++l) {
    CHECK(r1[l].empirical == r4[l].empirical);
    CHECK(r1[l].std_error == r4[l].std_error);
  }
}

TEST_CASE("report helpers") {
  MomentReport r;
  r.empirical = 1.04;
  r.theoretical = 1.0;
  r.std_error = 0.001;
  CHECK(r.within(3.0, 0.05));
  CHECK_FALSE(r.within(3.0, 0.03));
  r.std_error = 0.02;
  CHECK(r.within(3.0, 0.0));

  ConvergenceReport c;
  c.distances = {0.3, 0.2, 0.2};
  CHECK_FALSE(c.strictly_decreasing());
  CHECK(c.weakly_decreasing_after_first());
  c.distances = {0.1, 0.3, 0.2};
  CHECK_FALSE(c.strictly_decreasing());
  CHECK(c.weakly_decreasing_after_first());
}

TEST_CASE("single-point t grid gives a single distance") {
  RunOptions options;
  options.grid = {1e-3, 500};
  const double t[] = {100.0};
  const auto r = flt_marginal_check(ResponseSpec{Deterministic{}, 0.5}, t, 1.0, 100, 54, options);
  CHECK(r.t_grid.size() == 1);
  CHECK(r.distances.size() == 1);
  CHECK(r.u_probe == 1.0);
}

TEST_CASE("pure shot noise approaches the limit marginal") {
  RunOptions options;
  const std::vector<double> t_grid = {1e2, 1e3, 1e4};
  const auto r = flt_marginal_check(ResponseSpec{Deterministic{}, 0.5}, t_grid, 1.0, 10000, 55, options);
  CAPTURE(r.distances[0]);
  CAPTURE(r.distances[1]);
  CAPTURE(r.distances[2]);
  CHECK(r.strictly_decreasing());
}

TEST_CASE("seeded trend runs stay within the flakiness budget") {
  RunOptions options;
  options.grid = {1e-3, 1000};
  const std::vector<double> t_grid = {1e1, 1e2, 1e3};
  const ResponseSpec spec{Amplitude{LogNormalAmp{0.0, 0.5}, 0.5, 1.0}, 0.5};
  const int runs = 10;
  int weakly = 0;
  for (int s = 0; s < runs; ++s) {
    const auto r = flt_marginal_check(spec, t_grid, 1.0, 2000, 900 + s, options);
    weakly += r.weakly_decreasing_after_first();
  }
  CHECK(weakly >= 9);
}

TEST_CASE("scaled shot-noise moments") {
  RunOptions options;
  const double t[] = {1e4};
  const auto reports = shot_noise_moment_check(0.5, 0.0, 2, t, 10000, 56, options);
  REQUIRE(reports.size() == 2);
  CHECK(reports[0].theoretical == doctest::Approx(2.0 / oracle::kPi));
  CHECK(reports[1].theoretical == doctest::Approx(2.0 / oracle::kPi));
  CHECK(std::abs(reports[0].gap()) <= 0.05 * reports[0].theoretical);
  CHECK(std::abs(reports[1].gap()) <= 0.07 * reports[1].theoretical);
  CHECK(reports[0].t_scale == 1e4);
}
