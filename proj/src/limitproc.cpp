#include "immig/limitproc.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <stdexcept>

#include "immig/errors.hpp"
#include "immig/heavytail.hpp"

namespace immig {

StablePath::StablePath(double alpha, double step, std::vector<double> values)
    : alpha_(alpha), step_(step), values_(std::move(values)) {
  if (!(alpha_ > 0.0 && alpha_ < 1.0))
    throw std::invalid_argument("StablePath: alpha must lie in (0, 1)");
  if (!(step_ > 0.0)) throw std::invalid_argument("StablePath: step must be positive");
  if (values_.empty() || values_.front() != 0.0)
    throw std::invalid_argument("StablePath: values must start at 0");
  for (std::size_t i = 1; i < values_.size(); ++i)
    if (values_[i] < values_[i - 1])
      throw std::invalid_argument("StablePath: values must be nondecreasing");
}

std::size_t StablePath::first_exceedance(double y) const {
  return static_cast<std::size_t>(std::upper_bound(values_.begin(), values_.end(), y) -
                                  values_.begin());
}

StablePath simulate_subordinator(double alpha, double y_max, double step, SeedSpec seed,
                                 double min_time) {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw std::invalid_argument("simulate_subordinator: alpha must lie in (0, 1)");
  if (!(step > 0.0) || !std::isfinite(step))
    throw std::invalid_argument("simulate_subordinator: step must be positive");
  if (!(y_max > 0.0) || !std::isfinite(y_max))
    throw std::invalid_argument("simulate_subordinator: y_max must be positive");

  CounterRng rng(seed, substream::kSubordinator);
  const double scale = stable_increment_scale(alpha, step);
  std::vector<double> values;
  values.reserve(static_cast<std::size_t>(std::min(1e7, 2.0 / step)) + 1);
  values.push_back(0.0);
  double w = 0.0;
  const double min_steps = std::ceil(min_time / step);
  while (w <= y_max || static_cast<double>(values.size() - 1) < min_steps) {
    w += scale * standard_stable(alpha, rng);
    values.push_back(w);
  }
  return StablePath(alpha, step, std::move(values));
}

InversePath::InversePath(std::shared_ptr<const StablePath> path, double u_max, std::size_t n_y)
    : path_(std::move(path)), u_max_(u_max), n_y_(n_y) {
  if (!path_) throw std::invalid_argument("InversePath: null path");
  if (!(u_max_ > 0.0) || !std::isfinite(u_max_))
    throw std::invalid_argument("InversePath: u_max must be positive");
  if (n_y_ == 0) throw std::invalid_argument("InversePath: n_y must be at least 1");
  const auto& w = path_->values();
  if (!(w.back() > u_max_))
    throw std::out_of_range("InversePath: subordinator path does not exceed u_max");

  index_.resize(n_y_ + 1);
  std::size_t i = 0;
  for (std::size_t j = 0; j <= n_y_; ++j) {
    const double level = y(j);
    while (w[i] <= level) ++i;
    index_[j] = i;
  }
}

std::vector<double> InversePath::values() const {
  std::vector<double> out(index_.size());
  for (std::size_t j = 0; j < index_.size(); ++j) out[j] = path_->time(index_[j]);
  return out;
}

std::size_t InversePath::index_at(double y_value) const {
  if (!(y_value >= 0.0 && y_value <= u_max_))
    throw std::out_of_range("InversePath: level outside [0, u_max]");
  return path_->first_exceedance(y_value);
}

double InversePath::at(double y_value) const { return path_->time(index_at(y_value)); }

InversePath invert_path(const StablePath& path, double u_max, std::size_t n_y) {
  return InversePath(std::make_shared<const StablePath>(path), u_max, n_y);
}

InversePath invert_path(std::shared_ptr<const StablePath> path, double u_max, std::size_t n_y) {
  return InversePath(std::move(path), u_max, n_y);
}

double fiiss(const InversePath& inverse, double rho, double u) {
  if (!(rho > -inverse.alpha()))
    throw std::domain_error(
        "fiiss: rho must exceed -alpha (trajectories are locally unbounded otherwise)");
  if (!(u > 0.0 && u <= inverse.u_max()))
    throw std::invalid_argument("fiiss: u must lie in (0, u_max]");

  const auto& idx = inverse.indices();
  const std::size_t n = inverse.cells();

  // last cell whose left endpoint lies strictly below u
  std::size_t last = static_cast<std::size_t>(
      std::floor(u / inverse.u_max() * static_cast<double>(n)));
  last = std::min(last, n);
  while (last > 0 && !(inverse.y(last) < u)) --last;
  while (last + 1 <= n && inverse.y(last + 1) < u) ++last;

  auto weight = [rho, u](double y) { return rho == 0.0 ? 1.0 : std::pow(u - y, rho); };

  // atom of dW^<- at y = 0 (W^<-(0-) = 0)
  double total = weight(0.0) * static_cast<double>(idx[0]);
  for (std::size_t j = 0; j < last; ++j) {
    const std::size_t delta = idx[j + 1] - idx[j];
    if (delta != 0) total += weight(inverse.y(j)) * static_cast<double>(delta);
  }
  const std::size_t right =
      (last + 1 <= n && inverse.y(last + 1) == u) ? idx[last + 1] : inverse.index_at(u);
  if (right != idx[last]) total += weight(inverse.y(last)) * static_cast<double>(right - idx[last]);

  return total * inverse.time_step();
}

void validate_fiiss_params(double alpha, double rho) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw ConfigError("alpha", "must lie in (0, 1)");
  if (!std::isfinite(rho) || !(rho > -alpha))
    throw ConfigError("rho",
                      "must exceed -alpha; for rho <= -alpha the fractionally integrated "
                      "inverse stable subordinator has locally unbounded trajectories");
}

double fiiss_moment_closed_form(double alpha, double rho, int l, double u) {
  validate_fiiss_params(alpha, rho);
  if (l < 1) throw std::invalid_argument("fiiss_moment_closed_form: l must be >= 1");
  if (!(u > 0.0)) throw std::invalid_argument("fiiss_moment_closed_form: u must be positive");
  const double ar = alpha + rho;
  double log_value = std::lgamma(static_cast<double>(l) + 1.0) -
                     static_cast<double>(l) * std::lgamma(1.0 - alpha);
  for (int j = 1; j <= l; ++j) {
    const double num = 1.0 + rho + (j - 1) * ar;
    const double den = j * ar + 1.0;
    assert(num > 0.0 && den > 0.0);
    log_value += std::lgamma(num) - std::lgamma(den);
  }
  return std::pow(u, l * ar) * std::exp(log_value);
}

std::vector<double> sample_fiiss(double alpha, double rho, std::span<const double> u_values,
                                 const FiissGrid& grid, SeedSpec seed) {
  if (u_values.empty()) throw std::invalid_argument("sample_fiiss: no evaluation points");
  const double u_max = *std::max_element(u_values.begin(), u_values.end());
  auto path = std::make_shared<const StablePath>(
      simulate_subordinator(alpha, u_max, grid.step, seed));
  const InversePath inverse(std::move(path), u_max, grid.n_y);
  std::vector<double> out;
  out.reserve(u_values.size());
  for (double u : u_values) out.push_back(fiiss(inverse, rho, u));
  return out;
}

}  // namespace immig
