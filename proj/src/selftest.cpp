#include <cmath>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "immig/experiments.hpp"
#include "immig/immigration.hpp"
#include "immig/limitproc.hpp"
#include "immig/renewal.hpp"
#include "immig/response.hpp"
#include "immig/stats.hpp"

namespace immig {

namespace {

struct Check {
  std::string name;
  std::function<bool()> body;
};

RenewalPath fixture_path() {
  const double xi[] = {1.0, 2.5, 3.0};
  return RenewalPath::from_increments(xi, 4.0);
}

}  // namespace

int run_selftest(std::ostream& out) {
  const std::vector<Check> checks = {
      {"walk partial sums (0, 1, 3.5, 6.5)",
       [] { return fixture_path().arrivals() == std::vector<double>{0.0, 1.0, 3.5, 6.5}; }},
      {"first passage at t<0, t=0, tie t=3.5",
       [] {
         const auto p = fixture_path();
         return first_passage(p, -1.0) == 0 && first_passage(p, 0.0) == 1 &&
                first_passage(p, 3.5) == 3;
       }},
      {"shot noise h(x)=x at t=4 is 7.5",
       [] { return shot_noise(fixture_path(), [](double x) { return x; }, 4.0) == 7.5; }},
      {"shot noise with h=1 counts arrivals",
       [] {
         const auto p = fixture_path();
         return shot_noise(p, [](double) { return 1.0; }, 3.9) ==
                static_cast<double>(first_passage(p, 3.9));
       }},
      {"stable increment over dt=0 is 0",
       [] { return sample_stable_increment(0.5, 0.0, SeedSpec{1, 0}) == 0.0; }},
      {"queue indicator is right-continuous at eta",
       [] {
         const auto x = ResponseRealization::indicator(5.0);
         return x(4.9) == 1.0 && x(5.0) == 0.0;
       }},
      {"amplitude response eta=-1, f=(1+t)^0.5 at t=3 is -2",
       [] { return ResponseRealization::amplitude(-1.0, 1.0, 0.5)(3.0) == -2.0; }},
      {"forced queue fixture Y(4) = 1",
       [] {
         const ResponseSpec spec{QueueIndicator{}, 0.6};
         const double xi[] = {1.0, 2.5, 3.0};
         const auto path = RenewalPath::from_increments(xi, 4.0);
         const std::vector<ResponseRealization> r = {ResponseRealization::indicator(10.0),
                                                     ResponseRealization::indicator(0.2),
                                                     ResponseRealization::indicator(1e-3)};
         const double u[] = {1.0};
         const auto s = evaluate_Y(spec, path, r, 4.0, u);
         return std::abs(s.y_scaled[0] / scaling_factor(spec, 4.0) - 1.0) < 1e-12;
       }},
      {"deterministic model has zero martingale part",
       [] {
         const ResponseSpec spec{Deterministic{0.0, 1.0}, 0.5};
         const auto s = simulate_Y(spec, 100.0, default_u_grid(), SeedSpec{7, 0});
         for (std::size_t i = 0; i < s.u_grid.size(); ++i)
           if (s.martingale_part[i] != 0.0 || s.y_scaled[i] != s.shot_part[i]) return false;
         return true;
       }},
      {"two-point subordinator inverse is 1 on [0, 5)",
       [] {
         const InversePath inv(std::make_shared<const StablePath>(0.5, 1.0, std::vector{0.0, 5.0}),
                               4.0, 8);
         for (double v : inv.values())
           if (v != 1.0) return false;
         return true;
       }},
      {"fiiss with rho=0 equals the inverse at u",
       [] {
         const auto path = std::make_shared<const StablePath>(
             simulate_subordinator(0.5, 1.0, 1e-3, SeedSpec{3, 0}));
         const InversePath inv(path, 1.0, 1000);
         return fiiss(inv, 0.0, 0.37) == inv.at(0.37) && fiiss(inv, 0.0, 1.0) == inv.at(1.0);
       }},
      {"empirical moment of (0, 2) is (1, 1)",
       [] {
         const double x[] = {0.0, 2.0};
         const auto m = empirical_moment(x, 1);
         return m.estimate == 1.0 && std::abs(m.std_error - 1.0) < 1e-15;
       }},
      {"ks of disjoint samples is 1, of (1,2) vs (1.5,2.5) is 0.5",
       [] {
         const double a[] = {0, 0, 0}, b[] = {1, 1, 1};
         const double c[] = {1, 2}, d[] = {1.5, 2.5};
         return ks_statistic(a, b) == 1.0 && ks_statistic(c, d) == 0.5;
       }},
  };

  bool all = true;
  for (const auto& check : checks) {
    bool ok = false;
    try {
      ok = check.body();
    } catch (const std::exception& e) {
      out << "  exception: " << e.what() << '\n';
    }
    all = all && ok;
    out << (ok ? "[PASS] " : "[FAIL] ") << check.name << '\n';
  }
  return all ? kExitPass : kExitCheckFailed;
}

}  // namespace immig
