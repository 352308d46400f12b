#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "immig/errors.hpp"
#include "immig/limitproc.hpp"
#include "immig/stats.hpp"
#include "oracles.hpp"

using namespace immig;

TEST_CASE("closed-form moments against independent references") {
  SUBCASE("rho = 0 reduces to Mittag-Leffler moments") {
    for (double alpha : {0.2, 0.5, 0.8})
      for (int l = 1; l <= 4; ++l)
        for (double u : {0.5, 1.0, 3.0}) {
          const double expected = oracle::mittag_leffler_moment(alpha, l) * std::pow(u, l * alpha);
          CHECK(fiiss_moment_closed_form(alpha, 0.0, l, u) ==
                doctest::Approx(expected).epsilon(1e-12));
        }
    CHECK(fiiss_moment_closed_form(0.5, 0.0, 1, 1.0) ==
          doctest::Approx(2.0 / oracle::kPi).epsilon(1e-12));
  }
  SUBCASE("first moment by quadrature of the renewal density") {
    for (double alpha : {0.3, 0.6, 0.8})
      for (double rho : {-0.25, 0.0, 0.5, 1.5}) {
        if (!(rho > -alpha)) continue;
        CAPTURE(alpha);
        CAPTURE(rho);
        CHECK(fiiss_moment_closed_form(alpha, rho, 1, 1.0) ==
              doctest::Approx(oracle::fiiss_mean_quadrature(alpha, rho)).epsilon(1e-8));
      }
  }
  SUBCASE("second moment by double quadrature") {
    for (auto [alpha, rho] : {std::pair{0.5, 0.5}, std::pair{0.6, -0.3}, std::pair{0.7, 0.2}}) {
      CAPTURE(alpha);
      CAPTURE(rho);
      CHECK(fiiss_moment_closed_form(alpha, rho, 2, 1.0) ==
            doctest::Approx(oracle::fiiss_second_moment_quadrature(alpha, rho)).epsilon(1e-6));
    }
  }
  SUBCASE("alpha + rho = 1 example") {
    CHECK(fiiss_moment_closed_form(0.5, 0.5, 1, 1.0) == doctest::Approx(0.5).epsilon(1e-12));
  }
}

TEST_CASE("parameter validation") {
  try {
    fiiss_moment_closed_form(0.5, -0.5, 1, 1.0);
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(e.field() == "rho");
    CHECK(std::string(e.what()).find("locally unbounded") != std::string::npos);
  }
  CHECK_THROWS_AS(fiiss_moment_closed_form(1.0, 0.0, 1, 1.0), ConfigError);
  CHECK_THROWS_AS(validate_fiiss_params(0.0, 0.2), ConfigError);
}

TEST_CASE("inverse of a two-point path") {
  auto path = std::make_shared<const StablePath>(0.5, 1.0, std::vector{0.0, 5.0});
  const InversePath inv(path, 4.0, 8);
  for (double v : inv.values()) CHECK(v == 1.0);
  CHECK(inv.at(0.0) == 1.0);
  CHECK(inv.at(3.3) == 1.0);
  // only the atom at y = 0 contributes
  CHECK(fiiss(inv, 0.0, 4.0) == 1.0);
  CHECK(fiiss(inv, 0.5, 4.0) == doctest::Approx(2.0));
  CHECK(fiiss(inv, -0.25, 1.0) == doctest::Approx(1.0));
  CHECK_THROWS_AS(InversePath(path, 5.0, 8), std::out_of_range);
  CHECK_THROWS_AS(fiiss(inv, -0.5, 1.0), std::domain_error);
  CHECK_THROWS_AS(fiiss(inv, 0.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(fiiss(inv, 0.0, 4.5), std::invalid_argument);
}

TEST_CASE("stable path validation") {
  CHECK_THROWS_AS(StablePath(0.5, 1.0, {1.0, 2.0}), std::invalid_argument);
  CHECK_THROWS_AS(StablePath(0.5, 1.0, {0.0, 2.0, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(StablePath(0.5, 0.0, {0.0, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(StablePath(1.5, 1.0, {0.0, 1.0}), std::invalid_argument);
}

TEST_CASE("simulated inverse paths") {
  for (std::uint64_t r = 0; r < 20; ++r) {
    const double step = 1e-3;
    auto path =
        std::make_shared<const StablePath>(simulate_subordinator(0.6, 2.0, step, SeedSpec{41, r}));
    const auto& w = path->values();
    REQUIRE(w.back() > 2.0);
    CHECK(std::is_sorted(w.begin(), w.end()));

    const InversePath inv(path, 2.0, 500);
    const auto values = inv.values();
    CHECK(values.front() == step);
    CHECK(std::is_sorted(values.begin(), values.end()));
    for (std::size_t j = 0; j <= inv.cells(); j += 37) {
      // brute force inf{t_i : W(t_i) > y}
      std::size_t i = 0;
      while (w[i] <= inv.y(j)) ++i;
      CHECK(inv.indices()[j] == i);
    }

    // rho = 0 telescopes to the inverse itself, on and off the grid
    for (double u : {0.0137, 0.5, 1.2345, 2.0}) CHECK(fiiss(inv, 0.0, u) == inv.at(u));

    // rho >= 0 makes J nondecreasing in u
    double prev = 0.0;
    for (int k = 1; k <= 50; ++k) {
      const double j = fiiss(inv, 0.4, 2.0 * k / 50.0);
      CHECK(j >= prev);
      prev = j;
    }
  }
}

TEST_CASE("time refinement barely moves J") {
  // coarse path = every 10th point of a fine path, so both share the trajectory
  const std::size_t thin = 10;
  for (auto [rho, tol] : {std::pair{0.0, 0.01}, std::pair{0.5, 0.01}, std::pair{-0.3, 0.03}}) {
    CAPTURE(rho);
    double diff = 0.0, level = 0.0;
    for (std::uint64_t r = 0; r < 100; ++r) {
      const double fine_step = 1e-5;
      const auto fine = simulate_subordinator(0.6, 1.0, fine_step, SeedSpec{42, r});
      std::vector<double> coarse_values;
      for (std::size_t i = 0; i < fine.values().size(); i += thin)
        coarse_values.push_back(fine.values()[i]);
      while (!(coarse_values.back() > 1.0)) coarse_values.push_back(fine.values().back());
      const StablePath coarse(0.6, fine_step * thin, std::move(coarse_values));
      const double jf = fiiss(invert_path(fine, 1.0, 2000), rho, 1.0);
      const double jc = fiiss(invert_path(coarse, 1.0, 2000), rho, 1.0);
      diff += std::abs(jf - jc);
      level += jf;
    }
    CHECK(diff / level <= tol);
  }
}

TEST_CASE("mean of J at alpha + rho = 1") {
  FiissGrid grid{1e-3, 1000};
  RunOptions options;
  options.grid = grid;
  const double u[] = {1.0};
  const auto j = column(fiiss_replicates(0.5, 0.5, u, 10000, 43, options), 0);
  const auto m = empirical_moment(j, 1);
  CHECK(std::abs(m.estimate - 0.5) <= std::max(3.0 * m.std_error, 0.02 * 0.5));
}

TEST_CASE("subordinator marginals") {
  const double alpha = 0.5;
  SUBCASE("Laplace transform of W(1)") {
    const double step = 0.1;
    const std::size_t at_one = 10;
    double sum = 0.0;
    const int n = 100000;
    for (int r = 0; r < n; ++r) {
      const auto p = simulate_subordinator(alpha, 1e-12, step, SeedSpec{44, static_cast<std::uint64_t>(r)}, 1.0);
      sum += std::exp(-p.values().at(at_one));
    }
    CHECK(sum / n == doctest::Approx(std::exp(-std::tgamma(1.0 - alpha))).epsilon(0.01));
  }
  SUBCASE("W(2) has the law of 2^{1/alpha} W(1)") {
    const int n = 20000;
    std::vector<double> a(n), b(n);
    for (int r = 0; r < n; ++r) {
      const auto p = simulate_subordinator(alpha, 1e-12, 0.25, SeedSpec{45, static_cast<std::uint64_t>(r)}, 2.0);
      const auto q = simulate_subordinator(alpha, 1e-12, 0.25, SeedSpec{46, static_cast<std::uint64_t>(r)}, 1.0);
      a[r] = p.values().at(8);
      b[r] = std::pow(2.0, 1.0 / alpha) * q.values().at(4);
    }
    CHECK(ks_statistic(a, b) <= 0.02);
  }
}
