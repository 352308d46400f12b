#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "immig/response.hpp"

namespace immig {

enum class Experiment {
  flt_queue,
  flt_amplitude,
  shot_noise_moments,
  fiiss_moments,
  martingale_diagnostic,
  fiiss_sample,
};

const char* to_string(Experiment e);

/// Flat parameter namespace shared by every experiment.
struct ExperimentConfig {
  Experiment experiment = Experiment::fiiss_moments;
  double alpha = 0.6;
  double rho = -0.3;

  std::string model = "queue";  // queue | amplitude | deterministic
  std::string eta_law = "pareto_rho";  // pareto_rho | log_tail | lognormal | constant
  double eta_mu = 0.0;
  double eta_sigma = 0.5;
  double eta_c = 1.0;
  Dependence dependence = Dependence::independent;
  double f_rho = 0.5;
  double f_scale = 1.0;
  double h_rho = 0.0;
  double h_scale = 1.0;

  std::vector<double> t_grid = {1e2, 1e3, 1e4};
  std::vector<double> u_grid;  // defaults to 40 log-spaced points in [0.1, 2]
  std::vector<double> u_probes = {0.5, 1.0, 2.0};
  std::size_t replicates = 10000;
  std::uint64_t seed = 20180611;
  double grid_step = 1e-4;
  std::size_t n_y = 10000;
  int l_max = 3;

  double ks_threshold = 0.05;
  double moment_tol = 0.05;
  double fiiss_moment_tol = 0.03;
  double se_multiple = 3.0;

  std::string out_dir = "out";
  unsigned threads = 0;  // 0: IMMIGRATE_SIM_THREADS or hardware concurrency
  bool dump_samples = false;
};

ExperimentConfig default_config();

/// `key = value` lines; '#' starts a comment. Throws ConfigError on
/// malformed lines (field "line N").
std::vector<std::pair<std::string, std::string>> parse_config_text(std::string_view text);

/// Sets one key; '-' in keys is treated as '_'. Throws ConfigError naming
/// the key for unknown keys or unparsable values.
void apply_setting(ExperimentConfig& config, std::string key, const std::string& value);

ExperimentConfig load_config_file(const std::string& path);

/// Throws ConfigError naming the first invalid field.
void validate(const ExperimentConfig& config);

/// The config rendered in the file format, one key per line.
std::string format_config(const ExperimentConfig& config);

/// Ordered key/value view of the config (used for JSON params and printing).
std::vector<std::pair<std::string, std::string>> config_entries(const ExperimentConfig& config);

/// Response spec for the experiment: flt_queue forces the queue model,
/// flt_amplitude the amplitude model, shot_noise_moments a deterministic
/// h with index rho; martingale_diagnostic honours `model`.
ResponseSpec response_spec(const ExperimentConfig& config);

}  // namespace immig
