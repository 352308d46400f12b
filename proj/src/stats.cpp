#include "immig/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "immig/parallel.hpp"

namespace immig {

MomentEstimate empirical_moment(std::span<const double> samples, int l) {
  if (samples.size() < 2)
    throw std::invalid_argument("empirical_moment: need at least 2 samples");
  if (l < 1) throw std::invalid_argument("empirical_moment: l must be >= 1");
  std::vector<double> powers(samples.size());
  std::transform(samples.begin(), samples.end(), powers.begin(),
                 [l](double x) { return l == 1 ? x : std::pow(x, l); });
  const double n = static_cast<double>(powers.size());
  double sum = 0.0;
  for (double p : powers) sum += p;
  const double m = sum / n;
  double ss = 0.0;
  for (double p : powers) ss += (p - m) * (p - m);
  return {m, std::sqrt(ss / (n - 1.0)) / std::sqrt(n)};
}

double ks_statistic(std::span<const double> a, std::span<const double> b) {
  if (a.empty() || b.empty()) throw std::invalid_argument("ks_statistic: empty sample");
  std::vector<double> x(a.begin(), a.end());
  std::vector<double> y(b.begin(), b.end());
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  const double nx = static_cast<double>(x.size());
  const double ny = static_cast<double>(y.size());
  std::size_t i = 0;
  std::size_t j = 0;
  double d = 0.0;
  while (i < x.size() && j < y.size()) {
    const double v = std::min(x[i], y[j]);
    while (i < x.size() && x[i] <= v) ++i;
    while (j < y.size() && y[j] <= v) ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / nx - static_cast<double>(j) / ny));
  }
  return d;
}

bool MomentReport::within(double se_multiple, double rel_tol) const {
  return std::abs(gap()) <= std::max(se_multiple * std_error, rel_tol * std::abs(theoretical));
}

const char* to_string(Statistic s) {
  switch (s) {
    case Statistic::ks:
      return "ks";
    case Statistic::abs_moment_gap:
      return "abs_moment_gap";
    case Statistic::sup_martingale:
      return "sup_martingale";
  }
  return "unknown";
}

bool ConvergenceReport::strictly_decreasing() const {
  for (std::size_t i = 1; i < distances.size(); ++i)
    if (!(distances[i] < distances[i - 1])) return false;
  return true;
}

bool ConvergenceReport::weakly_decreasing_after_first() const {
  for (std::size_t i = 2; i < distances.size(); ++i)
    if (distances[i] > distances[i - 1]) return false;
  return true;
}

std::vector<ProcessSample> simulate_replicates(const ResponseSpec& spec, double t_scale,
                                               std::span<const double> u_grid, std::size_t n,
                                               std::uint64_t master_seed, unsigned threads) {
  validate(spec);
  validate_u_grid(u_grid);
  std::vector<ProcessSample> out(n);
  parallel_for(n, threads, [&](std::size_t i) {
    out[i] = simulate_Y(spec, t_scale, u_grid, SeedSpec{master_seed, i});
  });
  return out;
}

std::vector<std::vector<double>> fiiss_replicates(double alpha, double rho,
                                                  std::span<const double> u_values,
                                                  std::size_t n, std::uint64_t master_seed,
                                                  const RunOptions& options) {
  validate_fiiss_params(alpha, rho);
  std::vector<std::vector<double>> out(n);
  parallel_for(n, options.threads, [&](std::size_t i) {
    out[i] = sample_fiiss(alpha, rho, u_values, options.grid, SeedSpec{master_seed, i});
  });
  return out;
}

std::vector<double> column(const std::vector<std::vector<double>>& rows, std::size_t k) {
  std::vector<double> out;
  out.reserve(rows.size());
  for (const auto& r : rows) out.push_back(r.at(k));
  return out;
}

std::uint64_t limit_seed(std::uint64_t master_seed) {
  return detail::mix64(master_seed ^ 0x4c494d4954ULL);
}

std::vector<ConvergenceReport> flt_marginal_checks(const ResponseSpec& spec,
                                                   std::span<const double> t_grid,
                                                   std::span<const double> u_probes,
                                                   std::size_t n, std::uint64_t master_seed,
                                                   const RunOptions& options) {
  validate(spec);
  validate_u_grid(u_probes);
  if (t_grid.empty()) throw std::invalid_argument("flt_marginal_check: empty t_grid");
  if (n < 2) throw std::invalid_argument("flt_marginal_check: need n >= 2");

  const double alpha = spec.xi_alpha;
  const double rho = h_index(spec);
  const auto limit =
      fiiss_replicates(alpha, rho, u_probes, n, limit_seed(master_seed), options);
  if (options.on_limit_samples) options.on_limit_samples(alpha, rho, u_probes, limit);

  std::vector<ConvergenceReport> reports(u_probes.size());
  for (std::size_t k = 0; k < u_probes.size(); ++k) {
    reports[k].statistic = Statistic::ks;
    reports[k].u_probe = u_probes[k];
  }
  for (double t : t_grid) {
    const auto samples = simulate_replicates(spec, t, u_probes, n, master_seed, options.threads);
    if (options.on_process_samples) options.on_process_samples(samples);
    for (std::size_t k = 0; k < u_probes.size(); ++k) {
      std::vector<double> y(n);
      for (std::size_t i = 0; i < n; ++i) y[i] = samples[i].y_scaled[k];
      reports[k].t_grid.push_back(t);
      reports[k].distances.push_back(ks_statistic(y, column(limit, k)));
    }
  }
  return reports;
}

ConvergenceReport flt_marginal_check(const ResponseSpec& spec, std::span<const double> t_grid,
                                     double u_probe, std::size_t n, std::uint64_t master_seed,
                                     const RunOptions& options) {
  const double probes[] = {u_probe};
  return flt_marginal_checks(spec, t_grid, probes, n, master_seed, options).front();
}

std::vector<MomentReport> shot_noise_moment_check(double alpha, double rho, int l_max,
                                                  std::span<const double> t_grid,
                                                  std::size_t n, std::uint64_t master_seed,
                                                  const RunOptions& options) {
  validate_fiiss_params(alpha, rho);
  if (l_max < 1) throw std::invalid_argument("shot_noise_moment_check: l_max must be >= 1");
  const ResponseSpec spec{Deterministic{rho, 1.0}, alpha};
  const double probe[] = {1.0};
  std::vector<MomentReport> reports;
  for (double t : t_grid) {
    const auto samples = simulate_replicates(spec, t, probe, n, master_seed, options.threads);
    if (options.on_process_samples) options.on_process_samples(samples);
    std::vector<double> y(n);
    for (std::size_t i = 0; i < n; ++i) y[i] = samples[i].y_scaled[0];
    for (int l = 1; l <= l_max; ++l) {
      const auto est = empirical_moment(y, l);
      reports.push_back({"shot_noise", l, est.estimate, est.std_error,
                         fiiss_moment_closed_form(alpha, rho, l, 1.0), n, t});
    }
  }
  return reports;
}

std::vector<MomentReport> fiiss_moment_check(double alpha, double rho, int l_max, double u,
                                             std::size_t n, std::uint64_t master_seed,
                                             const RunOptions& options) {
  validate_fiiss_params(alpha, rho);
  const double probe[] = {u};
  const auto rows = fiiss_replicates(alpha, rho, probe, n, master_seed, options);
  if (options.on_limit_samples) options.on_limit_samples(alpha, rho, probe, rows);
  const auto j = column(rows, 0);
  std::vector<MomentReport> reports;
  for (int l = 1; l <= l_max; ++l) {
    const auto est = empirical_moment(j, l);
    reports.push_back({"fiiss", l, est.estimate, est.std_error,
                       fiiss_moment_closed_form(alpha, rho, l, u), n, std::nullopt});
  }
  return reports;
}

ConvergenceReport martingale_check(const ResponseSpec& spec, std::span<const double> t_grid,
                                   std::span<const double> u_grid, std::size_t n,
                                   std::uint64_t master_seed, const RunOptions& options) {
  ConvergenceReport report;
  report.statistic = Statistic::sup_martingale;
  for (double t : t_grid) {
    const auto samples = simulate_replicates(spec, t, u_grid, n, master_seed, options.threads);
    if (options.on_process_samples) options.on_process_samples(samples);
    const auto diag = martingale_sup_diagnostic(samples);
    report.t_grid.push_back(t);
    report.distances.push_back(diag.at(t));
  }
  return report;
}

}  // namespace immig
