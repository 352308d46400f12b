#include <doctest.h>

#include <algorithm>

#include "immig/renewal.hpp"
#include "oracles.hpp"

using namespace immig;

namespace {

RenewalPath fixture() {
  const double xi[] = {1.0, 2.5, 3.0};
  return RenewalPath::from_increments(xi, 4.0);
}

}  // namespace

TEST_CASE("forced increments give deterministic partial sums") {
  const auto p = fixture();
  CHECK(p.arrivals() == std::vector<double>{0.0, 1.0, 3.5, 6.5});
  CHECK(p.increments() == std::vector<double>{1.0, 2.5, 3.0});

  const double big[] = {10.0};
  CHECK(RenewalPath::from_increments(big, 4.0).arrivals() == std::vector<double>{0.0, 10.0});
}

TEST_CASE("first passage uses strict inequality") {
  const auto p = fixture();
  CHECK(first_passage(p, -0.5) == 0);
  CHECK(first_passage(p, 0.0) == 1);
  CHECK(first_passage(p, 3.5) == 3);
  CHECK(first_passage(p, 4.0) == 3);
  CHECK_THROWS_AS(first_passage(p, 4.01), std::out_of_range);
}

TEST_CASE("shot noise fixtures") {
  const auto p = fixture();
  CHECK(shot_noise(p, [](double x) { return x; }, 4.0) == 7.5);
  CHECK(shot_noise(p, [](double) { return 1.0; }, 2.0) == 2.0);
  CHECK(shot_noise(p, [](double) { return 1.0; }, -1.0) == 0.0);
}

TEST_CASE("simulate_walk rejects bad horizons") {
  CHECK_THROWS_AS(simulate_walk(ParetoAlpha{0.5}, 0.0, SeedSpec{}), std::invalid_argument);
  CHECK_THROWS_AS(simulate_walk(ParetoAlpha{0.5}, -3.0, SeedSpec{}), std::invalid_argument);
}

TEST_CASE("walk structure and first-passage identities on random paths") {
  CounterRng probe_rng(SeedSpec{5, 0});
  for (std::uint64_t r = 0; r < 200; ++r) {
    const double alpha = 0.2 + 0.7 * probe_rng.uniform_open();
    const double horizon = 1.0 + 1000.0 * probe_rng.uniform_open();
    const auto p = simulate_walk(ParetoAlpha{alpha}, horizon, SeedSpec{6, r});
    const auto& s = p.arrivals();
    REQUIRE(s.front() == 0.0);
    CHECK(std::adjacent_find(s.begin(), s.end(), std::greater_equal<>{}) == s.end());
    CHECK(s.back() > horizon);
    CHECK(s[s.size() - 2] <= horizon);

    std::size_t prev = 0;
    for (int i = 0; i < 50; ++i) {
      const double t = std::min(horizon, horizon * i / 49.0);
      const std::size_t nu = first_passage(p, t);
      const auto brute = static_cast<std::size_t>(
          std::count_if(s.begin(), s.end(), [t](double x) { return x <= t; }));
      CHECK(nu == brute);
      CHECK(nu >= prev);
      prev = nu;
      CHECK(shot_noise(p, [](double) { return 1.0; }, t) == static_cast<double>(nu));
      const double undershoot = t - s[nu - 1];
      CHECK(undershoot >= 0.0);
      CHECK(undershoot <= t);
    }
  }
}

TEST_CASE("mean number of visits to [0, t] follows the regularly varying renewal function") {
  // E nu(t) ~ t^alpha / (Gamma(1-alpha) Gamma(1+alpha)) = 100 * 2/pi at t = 1e4, alpha = 1/2
  const double t = 1e4;
  const int n = 10000;
  double sum = 0.0;
  for (int i = 0; i < n; ++i)
    sum += static_cast<double>(first_passage(simulate_walk(ParetoAlpha{0.5}, t, SeedSpec{8, static_cast<std::uint64_t>(i)}), t));
  const double expected = std::sqrt(t) * oracle::mittag_leffler_moment(0.5, 1);
  CHECK(sum / n == doctest::Approx(expected).epsilon(0.05));
}
