#include "immig/heavytail.hpp"

#include <boost/math/special_functions/erf.hpp>

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "immig/errors.hpp"

namespace immig {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

constexpr double kMaxDouble = std::numeric_limits<double>::max();
constexpr double kInf = std::numeric_limits<double>::infinity();

double clamp_finite(double x) { return std::isfinite(x) ? x : kMaxDouble; }

}  // namespace

void validate(const TailLaw& law) {
  std::visit(
      overloaded{
          [](const ParetoAlpha& p) {
            if (!(p.alpha > 0.0 && p.alpha < 1.0))
              throw ConfigError("alpha", "tail index must lie in (0, 1)");
          },
          [](const ParetoRho& p) {
            if (!(p.rho > -1.0 && p.rho < 0.0))
              throw ConfigError("rho", "tail index must lie in (-1, 0)");
          },
          [](const LogTail&) {},
          [](const Constant& p) {
            if (!(p.c > 0.0) || !std::isfinite(p.c))
              throw ConfigError("eta_c", "constant must be positive and finite");
          },
          [](const LogNormalAmp& p) {
            if (!std::isfinite(p.mu)) throw ConfigError("eta_mu", "must be finite");
            if (!(p.sigma > 0.0) || !std::isfinite(p.sigma))
              throw ConfigError("eta_sigma", "must be positive and finite");
          },
      },
      law);
}

std::string describe(const TailLaw& law) {
  std::ostringstream os;
  std::visit(overloaded{
                 [&](const ParetoAlpha& p) { os << "pareto_alpha(" << p.alpha << ")"; },
                 [&](const ParetoRho& p) { os << "pareto_rho(" << p.rho << ")"; },
                 [&](const LogTail&) { os << "log_tail"; },
                 [&](const Constant& p) { os << "constant(" << p.c << ")"; },
                 [&](const LogNormalAmp& p) {
                   os << "lognormal(" << p.mu << ", " << p.sigma << ")";
                 },
             },
             law);
  return os.str();
}

double survival(const TailLaw& law, double t) {
  return std::visit(
      overloaded{
          [t](const ParetoAlpha& p) { return t < 1.0 ? 1.0 : std::pow(t, -p.alpha); },
          [t](const ParetoRho& p) { return t < 1.0 ? 1.0 : std::pow(t, p.rho); },
          [t](const LogTail&) { return t < 0.0 ? 1.0 : 1.0 / (1.0 + std::log1p(t)); },
          [t](const Constant& p) { return t < p.c ? 1.0 : 0.0; },
          [t](const LogNormalAmp& p) {
            if (t <= 0.0) return 1.0;
            return 0.5 * std::erfc((std::log(t) - p.mu) / (p.sigma * std::sqrt(2.0)));
          },
      },
      law);
}

double quantile_from_survival(const TailLaw& law, double s) {
  if (!(s > 0.0 && s <= 1.0))
    throw std::domain_error("quantile_from_survival: level must lie in (0, 1]");
  return std::visit(
      overloaded{
          [s](const ParetoAlpha& p) { return clamp_finite(std::pow(s, -1.0 / p.alpha)); },
          [s](const ParetoRho& p) { return clamp_finite(std::pow(s, 1.0 / p.rho)); },
          [s](const LogTail&) {
            // 1/s - 1 exceeds ~709 for s below ~1.4e-3; the draw is then a
            // (finite) stand-in for an effectively infinite service time.
            return clamp_finite(std::expm1(1.0 / s - 1.0));
          },
          [](const Constant& p) { return p.c; },
          [s](const LogNormalAmp& p) {
            if (s >= 1.0) return 0.0;
            const double z = std::sqrt(2.0) * boost::math::erfc_inv(2.0 * s);
            return clamp_finite(std::exp(p.mu + p.sigma * z));
          },
      },
      law);
}

double mean(const TailLaw& law) {
  return std::visit(overloaded{
                        [](const ParetoAlpha&) { return kInf; },
                        [](const ParetoRho&) { return kInf; },
                        [](const LogTail&) { return kInf; },
                        [](const Constant& p) { return p.c; },
                        [](const LogNormalAmp& p) {
                          return std::exp(p.mu + 0.5 * p.sigma * p.sigma);
                        },
                    },
                    law);
}

double variance(const TailLaw& law) {
  return std::visit(overloaded{
                        [](const ParetoAlpha&) { return kInf; },
                        [](const ParetoRho&) { return kInf; },
                        [](const LogTail&) { return kInf; },
                        [](const Constant&) { return 0.0; },
                        [](const LogNormalAmp& p) {
                          const double s2 = p.sigma * p.sigma;
                          return std::expm1(s2) * std::exp(2.0 * p.mu + s2);
                        },
                    },
                    law);
}

double draw(const TailLaw& law, CounterRng& rng) {
  return quantile_from_survival(law, rng.uniform_open());
}

std::vector<double> sample_tail(const TailLaw& law, SeedSpec seed, std::size_t n) {
  validate(law);
  if (n == 0) throw std::invalid_argument("sample_tail: n must be at least 1");
  CounterRng rng(seed, substream::kInterarrival);
  std::vector<double> out(n);
  for (auto& x : out) x = draw(law, rng);
  return out;
}

double standard_stable(double alpha, CounterRng& rng) {
  const double u = rng.uniform_angle();
  const double e = rng.exponential();
  const double log_s = std::log(std::sin(alpha * u)) - std::log(std::sin(u)) / alpha +
                       (1.0 - alpha) / alpha * (std::log(std::sin((1.0 - alpha) * u)) - std::log(e));
  return std::exp(log_s);
}

double stable_increment_scale(double alpha, double dt) {
  return std::pow(dt * std::tgamma(1.0 - alpha), 1.0 / alpha);
}

double sample_stable_increment(double alpha, double dt, CounterRng& rng) {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw std::invalid_argument("sample_stable_increment: alpha must lie in (0, 1)");
  if (!(dt >= 0.0)) throw std::invalid_argument("sample_stable_increment: dt must be >= 0");
  if (dt == 0.0) return 0.0;
  return stable_increment_scale(alpha, dt) * standard_stable(alpha, rng);
}

double sample_stable_increment(double alpha, double dt, SeedSpec seed) {
  CounterRng rng(seed, substream::kGeneric);
  return sample_stable_increment(alpha, dt, rng);
}

}  // namespace immig
