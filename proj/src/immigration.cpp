#include "immig/immigration.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace immig {

std::vector<double> default_u_grid() {
  constexpr int n = 40;
  const double lo = std::log(0.1);
  const double hi = std::log(2.0);
  std::vector<double> grid(n);
  for (int i = 0; i < n; ++i) grid[i] = std::exp(lo + (hi - lo) * i / (n - 1));
  grid.front() = 0.1;
  grid.back() = 2.0;
  return grid;
}

void validate_u_grid(std::span<const double> u_grid) {
  if (u_grid.empty()) throw std::invalid_argument("u_grid: must not be empty");
  if (!(u_grid.front() > 0.0))
    throw std::invalid_argument("u_grid: points must be positive (the limit lives on (0, inf))");
  for (std::size_t i = 1; i < u_grid.size(); ++i)
    if (!(u_grid[i] > u_grid[i - 1]))
      throw std::invalid_argument("u_grid: must be strictly increasing");
  if (!std::isfinite(u_grid.back())) throw std::invalid_argument("u_grid: must be finite");
}

std::vector<ResponseRealization> draw_responses(const ResponseSpec& spec,
                                                const RenewalPath& path, SeedSpec seed) {
  const auto& xi = path.increments();
  std::vector<ResponseRealization> out;
  out.reserve(xi.size());
  for (std::size_t k = 0; k < xi.size(); ++k)
    out.push_back(draw_response(spec, xi[k], seed, k).first);
  return out;
}

ProcessSample evaluate_Y(const ResponseSpec& spec, const RenewalPath& path,
                         std::span<const ResponseRealization> responses, double t_scale,
                         std::span<const double> u_grid, SeedSpec seed) {
  validate_u_grid(u_grid);
  if (!(t_scale > 0.0)) throw std::invalid_argument("evaluate_Y: t_scale must be positive");

  ProcessSample out;
  out.t_scale = t_scale;
  out.u_grid.assign(u_grid.begin(), u_grid.end());
  out.replicate = seed;
  out.y_scaled.resize(u_grid.size());
  out.shot_part.resize(u_grid.size());
  out.martingale_part.resize(u_grid.size());

  const double scale = scaling_factor(spec, t_scale);
  const auto& s = path.arrivals();
  for (std::size_t i = 0; i < u_grid.size(); ++i) {
    const double time = u_grid[i] * t_scale;
    const std::size_t n = first_passage(path, time);
    if (n > responses.size())
      throw std::invalid_argument("evaluate_Y: fewer responses than visible arrivals");
    double y = 0.0;
    double shot = 0.0;
    double centered = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      const double age = time - s[k];
      const double x = responses[k](age);
      const double h = mean_h(spec, age);
      y += x;
      shot += h;
      centered += x - h;
    }
    out.y_scaled[i] = scale * y;
    out.shot_part[i] = scale * shot;
    out.martingale_part[i] = scale * centered;
  }
  return out;
}

ProcessSample simulate_Y(const ResponseSpec& spec, double t_scale,
                         std::span<const double> u_grid, SeedSpec seed) {
  validate(spec);
  validate_u_grid(u_grid);
  if (!(t_scale > 0.0)) throw std::invalid_argument("simulate_Y: t_scale must be positive");
  const double horizon = u_grid.back() * t_scale;
  if (!std::isfinite(horizon)) throw std::invalid_argument("simulate_Y: horizon overflows");
  const RenewalPath path = simulate_walk(spec.xi_law(), horizon, seed);
  const auto responses = draw_responses(spec, path, seed);
  return evaluate_Y(spec, path, responses, t_scale, u_grid, seed);
}

std::map<double, double> martingale_sup_diagnostic(std::span<const ProcessSample> samples) {
  if (samples.empty()) throw std::invalid_argument("martingale_sup_diagnostic: no samples");
  const auto& grid = samples.front().u_grid;
  std::map<double, std::pair<double, std::size_t>> acc;
  for (const auto& sample : samples) {
    if (sample.u_grid != grid)
      throw std::invalid_argument("martingale_sup_diagnostic: samples must share u_grid");
    double sup = 0.0;
    for (double m : sample.martingale_part) sup = std::max(sup, std::abs(m));
    auto& [sum, count] = acc[sample.t_scale];
    sum += sup;
    ++count;
  }
  std::map<double, double> out;
  for (const auto& [t, sc] : acc) out[t] = sc.first / static_cast<double>(sc.second);
  return out;
}

}  // namespace immig
