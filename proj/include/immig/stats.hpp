#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "immig/immigration.hpp"
#include "immig/limitproc.hpp"
#include "immig/response.hpp"
#include "immig/rng.hpp"

namespace immig {

struct MomentEstimate {
  double estimate = 0.0;
  double std_error = 0.0;
};

/// Mean of x^l and the standard error sd(x^l) / sqrt(n). Needs n >= 2.
MomentEstimate empirical_moment(std::span<const double> samples, int l);

/// Two-sample Kolmogorov-Smirnov distance sup_x |F_a(x) - F_b(x)|.
double ks_statistic(std::span<const double> a, std::span<const double> b);

struct MomentReport {
  std::string label;
  int l = 1;
  double empirical = 0.0;
  double std_error = 0.0;
  double theoretical = 0.0;
  std::size_t n_replicates = 0;
  std::optional<double> t_scale;

  double gap() const { return empirical - theoretical; }
  /// |gap| <= max(se_multiple * SE, rel_tol * |theoretical|).
  bool within(double se_multiple, double rel_tol) const;
};

enum class Statistic { ks, abs_moment_gap, sup_martingale };

const char* to_string(Statistic s);

struct ConvergenceReport {
  std::vector<double> t_grid;
  std::vector<double> distances;
  Statistic statistic = Statistic::ks;
  std::optional<double> u_probe;

  bool strictly_decreasing() const;
  /// Non-increasing from the second entry onward.
  bool weakly_decreasing_after_first() const;
};

/// Receives every batch of prelimit replicates (one batch per t_scale).
using ProcessSink = std::function<void(std::span<const ProcessSample>)>;
/// Receives limit-process samples: rows[i][k] = J(u_values[k]) on path i.
using LimitSink = std::function<void(double alpha, double rho, std::span<const double> u_values,
                                     const std::vector<std::vector<double>>& rows)>;

struct RunOptions {
  unsigned threads = 1;
  FiissGrid grid;
  ProcessSink on_process_samples;
  LimitSink on_limit_samples;
};

/// n replicates of simulate_Y; replicate i uses SeedSpec{seed.master_seed, i}.
std::vector<ProcessSample> simulate_replicates(const ResponseSpec& spec, double t_scale,
                                               std::span<const double> u_grid, std::size_t n,
                                               std::uint64_t master_seed, unsigned threads);

/// n paths of J at `u_values`; result[i] holds path i.
std::vector<std::vector<double>> fiiss_replicates(double alpha, double rho,
                                                  std::span<const double> u_values,
                                                  std::size_t n, std::uint64_t master_seed,
                                                  const RunOptions& options);

/// Column k of a replicate-major table.
std::vector<double> column(const std::vector<std::vector<double>>& rows, std::size_t k);

/// Master seed for limit-process samples that must stay independent of the
/// prelimit replicates drawn from `master_seed`.
std::uint64_t limit_seed(std::uint64_t master_seed);

/// For each t, KS distance between n scaled samples of Y(u t) and n fresh
/// samples of J_{alpha,rho}(u), one report per u.
std::vector<ConvergenceReport> flt_marginal_checks(const ResponseSpec& spec,
                                                   std::span<const double> t_grid,
                                                   std::span<const double> u_probes,
                                                   std::size_t n, std::uint64_t master_seed,
                                                   const RunOptions& options);

ConvergenceReport flt_marginal_check(const ResponseSpec& spec, std::span<const double> t_grid,
                                     double u_probe, std::size_t n, std::uint64_t master_seed,
                                     const RunOptions& options);

/// Moments l = 1..l_max of (P{xi>t}/f(t)) sum f(t - S_k), f(t) = (1+t)^rho,
/// against the closed-form moments of J_{alpha,rho}(1), for every t.
std::vector<MomentReport> shot_noise_moment_check(double alpha, double rho, int l_max,
                                                  std::span<const double> t_grid,
                                                  std::size_t n, std::uint64_t master_seed,
                                                  const RunOptions& options);

/// Moments of J_{alpha,rho}(u) from n simulated paths against the closed form.
std::vector<MomentReport> fiiss_moment_check(double alpha, double rho, int l_max, double u,
                                             std::size_t n, std::uint64_t master_seed,
                                             const RunOptions& options);

/// Mean sup-norm of the scaled martingale part for each t.
ConvergenceReport martingale_check(const ResponseSpec& spec, std::span<const double> t_grid,
                                   std::span<const double> u_grid, std::size_t n,
                                   std::uint64_t master_seed, const RunOptions& options);

}  // namespace immig
