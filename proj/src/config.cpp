#include "immig/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "immig/errors.hpp"
#include "immig/format.hpp"
#include "immig/immigration.hpp"
#include "immig/limitproc.hpp"

namespace immig {

namespace {

constexpr std::pair<Experiment, const char*> kExperiments[] = {
    {Experiment::flt_queue, "flt_queue"},
    {Experiment::flt_amplitude, "flt_amplitude"},
    {Experiment::shot_noise_moments, "shot_noise_moments"},
    {Experiment::fiiss_moments, "fiiss_moments"},
    {Experiment::martingale_diagnostic, "martingale_diagnostic"},
    {Experiment::fiiss_sample, "fiiss_sample"},
};

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

double parse_double(const std::string& key, const std::string& value) {
  double out = 0.0;
  const auto* first = value.data();
  const auto* last = first + value.size();
  const auto res = std::from_chars(first, last, out);
  if (res.ec != std::errc{} || res.ptr != last)
    throw ConfigError(key, "expected a real number, got '" + value + "'");
  return out;
}

std::uint64_t parse_uint(const std::string& key, const std::string& value) {
  // accept 1e5-style counts as long as they are exact integers
  if (value.find_first_of("eE.") != std::string::npos) {
    const double d = parse_double(key, value);
    if (!(d >= 0.0) || d != std::floor(d) || d > 1.8e19)
      throw ConfigError(key, "expected a non-negative integer, got '" + value + "'");
    return static_cast<std::uint64_t>(d);
  }
  std::uint64_t out = 0;
  const auto* first = value.data();
  const auto* last = first + value.size();
  const auto res = std::from_chars(first, last, out);
  if (res.ec != std::errc{} || res.ptr != last)
    throw ConfigError(key, "expected a non-negative integer, got '" + value + "'");
  return out;
}

bool parse_bool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "1" || value == "yes") return true;
  if (value == "false" || value == "0" || value == "no") return false;
  throw ConfigError(key, "expected true or false, got '" + value + "'");
}

std::vector<double> parse_list(const std::string& key, const std::string& value) {
  std::vector<double> out;
  std::stringstream ss(value);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto t = trim(item);
    if (!t.empty()) out.push_back(parse_double(key, t));
  }
  return out;
}

std::string join(const std::vector<double>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ',';
    out += format_shortest(xs[i]);
  }
  return out;
}

void check_grid(const char* key, const std::vector<double>& grid) {
  try {
    validate_u_grid(grid);
  } catch (const std::invalid_argument&) {
    throw ConfigError(key, "must be non-empty, positive, finite and strictly increasing");
  }
}

std::string resolved_eta_law(const ExperimentConfig& c, const std::string& model) {
  if (c.eta_law != "auto") return c.eta_law;
  return model == "amplitude" ? "lognormal" : "pareto_rho";
}

TailLaw eta_law_for(const ExperimentConfig& c, const std::string& model) {
  const auto name = resolved_eta_law(c, model);
  if (name == "pareto_rho") return ParetoRho{c.rho};
  if (name == "log_tail") return LogTail{};
  if (name == "lognormal") return LogNormalAmp{c.eta_mu, c.eta_sigma};
  if (name == "constant") return Constant{c.eta_c};
  throw ConfigError("eta_law", "unknown law '" + name +
                                   "' (pareto_rho, log_tail, lognormal, constant)");
}

std::string model_for(const ExperimentConfig& c) {
  switch (c.experiment) {
    case Experiment::flt_queue:
      return "queue";
    case Experiment::flt_amplitude:
      return "amplitude";
    case Experiment::shot_noise_moments:
      return "deterministic";
    default:
      return c.model;
  }
}

bool uses_process(Experiment e) {
  return e == Experiment::flt_queue || e == Experiment::flt_amplitude ||
         e == Experiment::shot_noise_moments || e == Experiment::martingale_diagnostic;
}

}  // namespace

const char* to_string(Experiment e) {
  for (const auto& [k, name] : kExperiments)
    if (k == e) return name;
  return "unknown";
}

ExperimentConfig default_config() {
  ExperimentConfig c;
  c.eta_law = "auto";
  c.u_grid = default_u_grid();
  return c;
}

std::vector<std::pair<std::string, std::string>> parse_config_text(std::string_view text) {
  std::vector<std::pair<std::string, std::string>> out;
  std::istringstream in{std::string(text)};
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    const auto body = trim(line);
    if (body.empty()) continue;
    const auto eq = body.find('=');
    if (eq == std::string::npos)
      throw ConfigError("line " + std::to_string(number), "expected 'key = value'");
    auto key = trim(std::string_view(body).substr(0, eq));
    auto value = trim(std::string_view(body).substr(eq + 1));
    if (key.empty()) throw ConfigError("line " + std::to_string(number), "missing key");
    out.emplace_back(std::move(key), std::move(value));
  }
  return out;
}

void apply_setting(ExperimentConfig& c, std::string key, const std::string& value) {
  std::replace(key.begin(), key.end(), '-', '_');
  if (key == "experiment") {
    for (const auto& [k, name] : kExperiments) {
      if (value == name) {
        c.experiment = k;
        return;
      }
    }
    throw ConfigError(key, "unknown experiment '" + value + "'");
  }
  if (key == "alpha") c.alpha = parse_double(key, value);
  else if (key == "rho") c.rho = parse_double(key, value);
  else if (key == "model") {
    if (value != "queue" && value != "amplitude" && value != "deterministic")
      throw ConfigError(key, "unknown model '" + value + "' (queue, amplitude, deterministic)");
    c.model = value;
  }
  else if (key == "eta_law") c.eta_law = value;
  else if (key == "eta_mu") c.eta_mu = parse_double(key, value);
  else if (key == "eta_sigma") c.eta_sigma = parse_double(key, value);
  else if (key == "eta_c") c.eta_c = parse_double(key, value);
  else if (key == "dependence") {
    if (value == "independent") c.dependence = Dependence::independent;
    else if (value == "comonotone") c.dependence = Dependence::comonotone;
    else throw ConfigError(key, "expected independent or comonotone");
  }
  else if (key == "f_rho") c.f_rho = parse_double(key, value);
  else if (key == "f_scale") c.f_scale = parse_double(key, value);
  else if (key == "h_rho") c.h_rho = parse_double(key, value);
  else if (key == "h_scale") c.h_scale = parse_double(key, value);
  else if (key == "t_grid") c.t_grid = parse_list(key, value);
  else if (key == "u_grid") c.u_grid = parse_list(key, value);
  else if (key == "u_probes") c.u_probes = parse_list(key, value);
  else if (key == "replicates") c.replicates = parse_uint(key, value);
  else if (key == "seed") c.seed = parse_uint(key, value);
  else if (key == "grid_step") c.grid_step = parse_double(key, value);
  else if (key == "n_y") c.n_y = parse_uint(key, value);
  else if (key == "l_max") c.l_max = static_cast<int>(parse_uint(key, value));
  else if (key == "ks_threshold") c.ks_threshold = parse_double(key, value);
  else if (key == "moment_tol") c.moment_tol = parse_double(key, value);
  else if (key == "fiiss_moment_tol") c.fiiss_moment_tol = parse_double(key, value);
  else if (key == "se_multiple") c.se_multiple = parse_double(key, value);
  else if (key == "out_dir") c.out_dir = value;
  else if (key == "threads") c.threads = static_cast<unsigned>(parse_uint(key, value));
  else if (key == "dump_samples") c.dump_samples = parse_bool(key, value);
  else throw ConfigError(key, "unknown configuration key");
}

ExperimentConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config", "cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  auto config = default_config();
  for (const auto& [k, v] : parse_config_text(ss.str())) apply_setting(config, k, v);
  return config;
}

void validate(const ExperimentConfig& c) {
  validate_fiiss_params(c.alpha, c.rho);
  if (c.replicates < 2)
    throw ConfigError("replicates", "need at least 2 (standard errors are undefined otherwise)");
  check_grid("t_grid", c.t_grid);
  check_grid("u_grid", c.u_grid);
  check_grid("u_probes", c.u_probes);
  if (!(c.grid_step > 0.0) || !std::isfinite(c.grid_step))
    throw ConfigError("grid_step", "must be positive");
  if (c.n_y < 1) throw ConfigError("n_y", "must be at least 1");
  if (c.l_max < 1) throw ConfigError("l_max", "must be at least 1");
  if (!(c.ks_threshold > 0.0 && c.ks_threshold <= 1.0))
    throw ConfigError("ks_threshold", "must lie in (0, 1]");
  if (!(c.moment_tol >= 0.0)) throw ConfigError("moment_tol", "must be non-negative");
  if (!(c.fiiss_moment_tol >= 0.0)) throw ConfigError("fiiss_moment_tol", "must be non-negative");
  if (!(c.se_multiple >= 0.0)) throw ConfigError("se_multiple", "must be non-negative");
  if (c.out_dir.empty()) throw ConfigError("out_dir", "must not be empty");
  if (uses_process(c.experiment)) validate(response_spec(c));
}

std::vector<std::pair<std::string, std::string>> config_entries(const ExperimentConfig& c) {
  return {
      {"experiment", to_string(c.experiment)},
      {"alpha", format_shortest(c.alpha)},
      {"rho", format_shortest(c.rho)},
      {"model", c.model},
      {"eta_law", c.eta_law},
      {"eta_mu", format_shortest(c.eta_mu)},
      {"eta_sigma", format_shortest(c.eta_sigma)},
      {"eta_c", format_shortest(c.eta_c)},
      {"dependence", c.dependence == Dependence::comonotone ? "comonotone" : "independent"},
      {"f_rho", format_shortest(c.f_rho)},
      {"f_scale", format_shortest(c.f_scale)},
      {"h_rho", format_shortest(c.h_rho)},
      {"h_scale", format_shortest(c.h_scale)},
      {"t_grid", join(c.t_grid)},
      {"u_grid", join(c.u_grid)},
      {"u_probes", join(c.u_probes)},
      {"replicates", std::to_string(c.replicates)},
      {"seed", std::to_string(c.seed)},
      {"grid_step", format_shortest(c.grid_step)},
      {"n_y", std::to_string(c.n_y)},
      {"l_max", std::to_string(c.l_max)},
      {"ks_threshold", format_shortest(c.ks_threshold)},
      {"moment_tol", format_shortest(c.moment_tol)},
      {"fiiss_moment_tol", format_shortest(c.fiiss_moment_tol)},
      {"se_multiple", format_shortest(c.se_multiple)},
      {"out_dir", c.out_dir},
      {"threads", std::to_string(c.threads)},
      {"dump_samples", c.dump_samples ? "true" : "false"},
  };
}

std::string format_config(const ExperimentConfig& c) {
  std::string out = "# immigrate_sim configuration\n";
  for (const auto& [k, v] : config_entries(c)) out += k + " = " + v + "\n";
  return out;
}

ResponseSpec response_spec(const ExperimentConfig& c) {
  const auto model = model_for(c);
  ResponseSpec spec;
  spec.xi_alpha = c.alpha;
  if (model == "queue") {
    spec.model = QueueIndicator{eta_law_for(c, model), c.dependence};
  } else if (model == "amplitude") {
    spec.model = Amplitude{eta_law_for(c, model), c.f_rho, c.f_scale, c.dependence};
  } else if (c.experiment == Experiment::shot_noise_moments) {
    spec.model = Deterministic{c.rho, 1.0};
  } else {
    spec.model = Deterministic{c.h_rho, c.h_scale};
  }
  return spec;
}

}  // namespace immig
