#include "immig/renewal.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace immig {

RenewalPath RenewalPath::from_increments(std::span<const double> increments, double horizon) {
  if (!(horizon > 0.0)) throw std::invalid_argument("RenewalPath: horizon must be positive");
  RenewalPath path;
  path.horizon_ = horizon;
  path.arrivals_.push_back(0.0);
  double s = 0.0;
  for (double xi : increments) {
    if (!(xi > 0.0)) throw std::invalid_argument("RenewalPath: increments must be positive");
    s += xi;
    path.increments_.push_back(xi);
    path.arrivals_.push_back(s);
    if (s > horizon) return path;
  }
  throw std::invalid_argument("RenewalPath: increments do not reach past the horizon");
}

RenewalPath simulate_walk(const TailLaw& law, double horizon, SeedSpec seed) {
  if (!(horizon > 0.0) || !std::isfinite(horizon))
    throw std::invalid_argument("simulate_walk: horizon must be positive and finite");
  validate(law);
  CounterRng rng(seed, substream::kInterarrival);
  RenewalPath path;
  path.horizon_ = horizon;
  path.arrivals_.push_back(0.0);
  double s = 0.0;
  while (s <= horizon) {
    const double xi = draw(law, rng);
    s += xi;
    path.increments_.push_back(xi);
    path.arrivals_.push_back(s);
  }
  return path;
}

std::size_t first_passage(const RenewalPath& path, double t) {
  if (t < 0.0) return 0;
  if (t > path.horizon())
    throw std::out_of_range("first_passage: t beyond the simulated horizon");
  const auto& s = path.arrivals();
  return static_cast<std::size_t>(std::upper_bound(s.begin(), s.end(), t) - s.begin());
}

double PowerResponse::operator()(double t) const {
  return rho == 0.0 ? scale : scale * std::pow(1.0 + t, rho);
}

double shot_noise(const RenewalPath& path, const std::function<double(double)>& h, double t) {
  return shot_noise_with(path, h, t);
}

}  // namespace immig
