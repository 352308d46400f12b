#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "immig/rng.hpp"

namespace immig {

/// alpha-stable subordinator with Laplace exponent Gamma(1 - alpha) s^alpha,
/// sampled on the time grid t_i = i * step.
class StablePath {
 public:
  /// Wraps given values; throws unless values[0] == 0 and they are nondecreasing.
  StablePath(double alpha, double step, std::vector<double> values);

  double alpha() const noexcept { return alpha_; }
  double step() const noexcept { return step_; }
  double time(std::size_t i) const noexcept { return static_cast<double>(i) * step_; }
  const std::vector<double>& values() const noexcept { return values_; }

  /// Index of the first grid time with W(t_i) > y, or values().size() if none.
  std::size_t first_exceedance(double y) const;

 private:
  double alpha_;
  double step_;
  std::vector<double> values_;
};

/// Cumulative i.i.d. increments on a grid of spacing `step`, extended until
/// the path exceeds y_max and covers at least [0, min_time].
StablePath simulate_subordinator(double alpha, double y_max, double step, SeedSpec seed,
                                 double min_time = 0.0);

/// Generalized inverse W^<-(y) = inf{t : W(t) > y} on the uniform grid
/// y_j = j * u_max / n_y, j = 0..n_y. Values are grid times of the path.
class InversePath {
 public:
  InversePath(std::shared_ptr<const StablePath> path, double u_max, std::size_t n_y);

  double u_max() const noexcept { return u_max_; }
  std::size_t cells() const noexcept { return n_y_; }
  double alpha() const noexcept { return path_->alpha(); }
  double time_step() const noexcept { return path_->step(); }

  double y(std::size_t j) const noexcept {
    return j == n_y_ ? u_max_ : u_max_ * static_cast<double>(j) / static_cast<double>(n_y_);
  }
  /// Grid index of W^<-(y_j) in the underlying path.
  const std::vector<std::size_t>& indices() const noexcept { return index_; }
  std::vector<double> values() const;

  /// W^<-(y) for any y in [0, u_max], off-grid points included.
  double at(double y) const;
  std::size_t index_at(double y) const;

 private:
  std::shared_ptr<const StablePath> path_;
  double u_max_;
  std::size_t n_y_;
  std::vector<std::size_t> index_;
};

/// Throws std::out_of_range when the path does not exceed u_max.
InversePath invert_path(const StablePath& path, double u_max, std::size_t n_y);
InversePath invert_path(std::shared_ptr<const StablePath> path, double u_max, std::size_t n_y);

/// Left-point Stieltjes sum for J(u) = int_{[0,u]} (u - y)^rho dW^<-(y),
/// including the atom W^<-(0) at y = 0.
double fiiss(const InversePath& inverse, double rho, double u);

/// E J_{alpha,rho}(u)^l from the gamma-product formula, times u^{l(alpha+rho)}.
double fiiss_moment_closed_form(double alpha, double rho, int l, double u);

struct FiissGrid {
  double step = 1e-4;
  std::size_t n_y = 10000;
};

/// One path of J at every point of `u_values` (ascending, positive); the
/// inverse is built on [0, max(u_values)].
std::vector<double> sample_fiiss(double alpha, double rho, std::span<const double> u_values,
                                 const FiissGrid& grid, SeedSpec seed);

/// Rejects rho <= -alpha and alpha outside (0, 1).
void validate_fiiss_params(double alpha, double rho);

}  // namespace immig
