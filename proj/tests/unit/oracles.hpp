// Reference computations used only by the tests. Each one follows a route
// independent of the library code it checks.
#pragma once

#include <algorithm>
#include <cmath>
#include <span>
#include <vector>

#include <boost/math/quadrature/tanh_sinh.hpp>

namespace oracle {

inline const double kPi = std::acos(-1.0);

/// E W^<-(1)^n for rho = 0: Mittag-Leffler moments n! / (Gamma(1-a)^n Gamma(1+n a)).
inline double mittag_leffler_moment(double alpha, int n) {
  return std::tgamma(n + 1.0) /
         (std::pow(std::tgamma(1.0 - alpha), n) * std::tgamma(1.0 + n * alpha));
}

/// Density of the renewal measure of the inverse subordinator:
/// d/dy E W^<-(y) = y^{alpha-1} / (Gamma(1-alpha) Gamma(alpha)).
inline double renewal_density(double alpha, double y) {
  return std::pow(y, alpha - 1.0) / (std::tgamma(1.0 - alpha) * std::tgamma(alpha));
}

/// E J(1) = int_0^1 (1-y)^rho dU(y) by tanh-sinh quadrature.
inline double fiiss_mean_quadrature(double alpha, double rho) {
  boost::math::quadrature::tanh_sinh<double> q;
  return q.integrate(
      [&](double y) { return std::pow(1.0 - y, rho) * renewal_density(alpha, y); }, 0.0, 1.0);
}

/// E J(1)^2 = 2 int_{0<a<b<1} (1-a)^rho (1-b)^rho u(a) u(b-a) da db, using the
/// regenerative structure of the inverse subordinator's increments. The inner
/// integral over b in (a, 1) is homogeneous of degree alpha+rho in 1-a, so it
/// is evaluated once on the unit interval.
inline double fiiss_second_moment_quadrature(double alpha, double rho) {
  boost::math::quadrature::tanh_sinh<double> q;
  // tanh_sinh passes xc = hi - x above the midpoint of [0, hi]
  auto right = [](double x, double xc) { return x > 0.5 ? xc : 1.0 - x; };
  const double unit_inner = q.integrate(
      [&](double d, double dc) { return std::pow(right(d, dc), rho) * renewal_density(alpha, d); },
      0.0, 1.0);
  return 2.0 * unit_inner *
         q.integrate(
             [&](double a, double ac) {
               const double rest = right(a, ac);
               return std::pow(rest, 2.0 * rho + alpha) * renewal_density(alpha, a);
             },
             0.0, 1.0);
}

/// Brute-force two-sample KS: evaluate both ECDFs at every pooled point and
/// just below it.
inline double ks_brute_force(std::span<const double> a, std::span<const double> b) {
  auto ecdf = [](std::span<const double> xs, double x, bool strict) {
    double c = 0;
    for (double v : xs) c += strict ? (v < x) : (v <= x);
    return c / static_cast<double>(xs.size());
  };
  double d = 0;
  std::vector<double> pooled(a.begin(), a.end());
  pooled.insert(pooled.end(), b.begin(), b.end());
  for (double x : pooled) {
    d = std::max(d, std::abs(ecdf(a, x, false) - ecdf(b, x, false)));
    d = std::max(d, std::abs(ecdf(a, x, true) - ecdf(b, x, true)));
  }
  return d;
}

/// Standard error of a Monte Carlo proportion.
inline double proportion_se(double p, double n) { return std::sqrt(p * (1.0 - p) / n); }

}  // namespace oracle
