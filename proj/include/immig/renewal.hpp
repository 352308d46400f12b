#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "immig/heavytail.hpp"
#include "immig/rng.hpp"

namespace immig {

/// Zero-delayed random walk S_0 = 0 < S_1 < ... stored up to and including
/// the first point beyond `horizon`. Immutable after construction.
class RenewalPath {
 public:
  /// Builds the walk from forced increments xi_1, xi_2, ...; increments are
  /// consumed until the partial sum exceeds horizon. Throws if they run out.
  static RenewalPath from_increments(std::span<const double> increments, double horizon);

  const std::vector<double>& arrivals() const noexcept { return arrivals_; }
  /// increments()[k] = xi_{k+1} = S_{k+1} - S_k, kept exactly as drawn.
  const std::vector<double>& increments() const noexcept { return increments_; }
  double horizon() const noexcept { return horizon_; }

  /// Number of epochs S_k <= t that a query at time t can see.
  std::size_t size() const noexcept { return arrivals_.size(); }

 private:
  friend RenewalPath simulate_walk(const TailLaw&, double, SeedSpec);
  RenewalPath() = default;

  std::vector<double> arrivals_;
  std::vector<double> increments_;
  double horizon_ = 0.0;
};

/// Partial sums of i.i.d. draws from `law` until the first overshoot of horizon.
RenewalPath simulate_walk(const TailLaw& law, double horizon, SeedSpec seed);

/// nu(t) = inf{k >= 0 : S_k > t}. Throws std::out_of_range for t > horizon.
std::size_t first_passage(const RenewalPath& path, double t);

/// Power-law response h(t) = scale * (1 + t)^rho with its descriptor kept
/// evaluable at arbitrary points.
struct PowerResponse {
  double scale = 1.0;
  double rho = 0.0;

  double operator()(double t) const;
};

/// sum_{k < nu(t)} h(t - S_k).
double shot_noise(const RenewalPath& path, const std::function<double(double)>& h, double t);

template <class H>
double shot_noise_with(const RenewalPath& path, const H& h, double t) {
  const std::size_t n = first_passage(path, t);
  const auto& s = path.arrivals();
  double total = 0.0;
  for (std::size_t k = 0; k < n; ++k) total += h(t - s[k]);
  return total;
}

}  // namespace immig
