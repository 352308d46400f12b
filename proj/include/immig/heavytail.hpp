#pragma once

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "immig/rng.hpp"

namespace immig {

/// P{xi > t} = t^{-alpha} for t >= 1, alpha in (0, 1).
struct ParetoAlpha {
  double alpha;
};

/// P{eta > t} = t^{rho} for t >= 1, rho in (-1, 0).
struct ParetoRho {
  double rho;
};

/// P{eta > t} = 1 / (1 + ln(1 + t)), t >= 0. Slowly varying tail.
struct LogTail {};

/// Degenerate law at c > 0.
struct Constant {
  double c;
};

/// exp(N(mu, sigma^2)).
struct LogNormalAmp {
  double mu;
  double sigma;
};

using TailLaw = std::variant<ParetoAlpha, ParetoRho, LogTail, Constant, LogNormalAmp>;

/// Throws ConfigError naming the offending field if parameters are out of range.
void validate(const TailLaw& law);

std::string describe(const TailLaw& law);

/// Exact survival function P{X > t}.
double survival(const TailLaw& law, double t);

/// Generalized inverse of the survival function: the value x with
/// P{X > x} = s, for s in (0, 1]. Heavy tails are clamped at DBL_MAX.
double quantile_from_survival(const TailLaw& law, double s);

/// E X, +inf when the mean does not exist.
double mean(const TailLaw& law);
/// Var X, +inf when the second moment does not exist.
double variance(const TailLaw& law);

/// One inverse-CDF draw using a single uniform from `rng`.
double draw(const TailLaw& law, CounterRng& rng);

/// n i.i.d. draws from the interarrival substream of `seed`.
std::vector<double> sample_tail(const TailLaw& law, SeedSpec seed, std::size_t n);

/// Standard positive stable variate with E exp(-s S) = exp(-s^alpha),
/// Kanter's representation.
double standard_stable(double alpha, CounterRng& rng);

/// Scale turning a standard stable draw into W(t + dt) - W(t) for the
/// subordinator with Laplace exponent Gamma(1 - alpha) s^alpha.
double stable_increment_scale(double alpha, double dt);

/// One draw of the subordinator increment over a time span dt >= 0.
double sample_stable_increment(double alpha, double dt, CounterRng& rng);
double sample_stable_increment(double alpha, double dt, SeedSpec seed);

}  // namespace immig
