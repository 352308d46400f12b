#include "immig/experiments.hpp"

#include <chrono>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "immig/errors.hpp"
#include "immig/format.hpp"
#include "immig/parallel.hpp"
#include "immig/stats.hpp"

namespace immig {

namespace {

using nlohmann::json;

class CsvFile {
 public:
  CsvFile(const std::filesystem::path& path, const char* header) : path_(path), out_(path) {
    if (!out_) throw std::runtime_error("cannot write " + path.string());
    out_ << header << '\n';
  }

  void process(std::span<const ProcessSample> samples) {
    for (const auto& s : samples)
      for (std::size_t k = 0; k < s.u_grid.size(); ++k)
        out_ << format_double(s.t_scale) << ',' << format_double(s.u_grid[k]) << ','
             << s.replicate.replicate_index << ',' << format_double(s.y_scaled[k]) << ','
             << format_double(s.shot_part[k]) << ',' << format_double(s.martingale_part[k])
             << '\n';
    check();
  }

  void limit(double alpha, double rho, std::span<const double> u,
             const std::vector<std::vector<double>>& rows) {
    for (std::size_t k = 0; k < u.size(); ++k)
      for (std::size_t i = 0; i < rows.size(); ++i)
        out_ << format_double(alpha) << ',' << format_double(rho) << ',' << format_double(u[k])
             << ',' << i << ',' << format_double(rows[i][k]) << '\n';
    check();
  }

 private:
  void check() {
    if (!out_) throw std::runtime_error("write failed: " + path_.string());
  }

  std::filesystem::path path_;
  std::ofstream out_;
};

constexpr const char* kProcessHeader = "t_scale,u,replicate,y_scaled,shot_part,martingale_part";
constexpr const char* kLimitHeader = "alpha,rho,u,path_id,J_value";

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

json to_json(const MomentReport& r, bool pass) {
  json j{{"type", "moment"},
         {"label", r.label},
         {"l", r.l},
         {"empirical", r.empirical},
         {"std_error", r.std_error},
         {"theoretical", r.theoretical},
         {"n_replicates", r.n_replicates},
         {"pass", pass}};
  j["t_scale"] = r.t_scale ? json(*r.t_scale) : json(nullptr);
  return j;
}

json to_json(const ConvergenceReport& r) {
  json j{{"type", "convergence"},
         {"statistic", to_string(r.statistic)},
         {"t_grid", r.t_grid},
         {"distances", r.distances},
         {"strictly_decreasing", r.strictly_decreasing()}};
  j["u_probe"] = r.u_probe ? json(*r.u_probe) : json(nullptr);
  return j;
}

std::string trend_line(const ConvergenceReport& r) {
  std::ostringstream os;
  for (std::size_t i = 0; i < r.t_grid.size(); ++i)
    os << (i ? " " : "") << "t=" << r.t_grid[i] << ":" << std::setprecision(5)
       << r.distances[i];
  return os.str();
}

struct Outcome {
  json reports = json::array();
  bool pass = true;
};

void record_moment(Outcome& o, std::ostream& out, const MomentReport& r, bool pass) {
  o.reports.push_back(to_json(r, pass));
  o.pass = o.pass && pass;
  out << (pass ? "[PASS] " : "[FAIL] ") << r.label << " l=" << r.l;
  if (r.t_scale) out << " t=" << *r.t_scale;
  out << std::setprecision(6) << " empirical=" << r.empirical << " se=" << r.std_error
      << " theoretical=" << r.theoretical << '\n';
}

Outcome run_flt(const ExperimentConfig& c, const RunOptions& options, std::ostream& out) {
  Outcome o;
  const auto spec = response_spec(c);
  const auto reports =
      flt_marginal_checks(spec, c.t_grid, c.u_probes, c.replicates, c.seed, options);
  for (const auto& r : reports) {
    const bool below = r.distances.back() <= c.ks_threshold;
    const bool trend = r.strictly_decreasing();
    const bool pass = below && trend;
    auto j = to_json(r);
    j["threshold"] = c.ks_threshold;
    j["final_below_threshold"] = below;
    j["pass"] = pass;
    o.reports.push_back(j);
    o.pass = o.pass && pass;
    out << (pass ? "[PASS] " : "[FAIL] ") << "ks u=" << *r.u_probe << " " << trend_line(r)
        << " threshold=" << c.ks_threshold << (trend ? "" : " (not decreasing)") << '\n';
  }
  return o;
}

Outcome run_shot_noise(const ExperimentConfig& c, const RunOptions& options, std::ostream& out) {
  Outcome o;
  const auto reports =
      shot_noise_moment_check(c.alpha, c.rho, c.l_max, c.t_grid, c.replicates, c.seed, options);
  const double t_final = c.t_grid.back();
  ConvergenceReport gap;
  gap.statistic = Statistic::abs_moment_gap;
  for (const auto& r : reports) {
    const bool final_t = r.t_scale && *r.t_scale == t_final;
    const bool pass = !final_t || r.within(c.se_multiple, c.moment_tol);
    record_moment(o, out, r, pass);
    if (r.l == 1) {
      gap.t_grid.push_back(*r.t_scale);
      gap.distances.push_back(std::abs(r.gap()));
    }
  }
  const bool trend = gap.t_grid.size() < 2 || gap.strictly_decreasing();
  auto j = to_json(gap);
  j["pass"] = trend;
  o.reports.push_back(j);
  o.pass = o.pass && trend;
  out << (trend ? "[PASS] " : "[FAIL] ") << "|mean gap| " << trend_line(gap) << '\n';
  return o;
}

Outcome run_fiiss_moments(const ExperimentConfig& c, const RunOptions& options,
                          std::ostream& out) {
  Outcome o;
  for (const auto& r :
       fiiss_moment_check(c.alpha, c.rho, c.l_max, 1.0, c.replicates, c.seed, options))
    record_moment(o, out, r, r.within(c.se_multiple, c.fiiss_moment_tol));
  return o;
}

Outcome run_fiiss_sample(const ExperimentConfig& c, const RunOptions& options,
                         std::ostream& out) {
  Outcome o;
  auto rows = fiiss_replicates(c.alpha, c.rho, c.u_grid, c.replicates, c.seed, options);
  if (options.on_limit_samples) options.on_limit_samples(c.alpha, c.rho, c.u_grid, rows);
  for (std::size_t k = 0; k < c.u_grid.size(); ++k) {
    const auto est = empirical_moment(column(rows, k), 1);
    MomentReport r{"fiiss_mean u=" + format_double(c.u_grid[k]),
                   1,
                   est.estimate,
                   est.std_error,
                   fiiss_moment_closed_form(c.alpha, c.rho, 1, c.u_grid[k]),
                   c.replicates,
                   std::nullopt};
    record_moment(o, out, r, r.within(c.se_multiple, c.fiiss_moment_tol));
  }
  return o;
}

Outcome run_martingale(const ExperimentConfig& c, const RunOptions& options, std::ostream& out) {
  Outcome o;
  const auto spec = response_spec(c);
  const auto r = martingale_check(spec, c.t_grid, c.u_grid, c.replicates, c.seed, options);
  const bool deterministic = std::holds_alternative<Deterministic>(spec.model);
  bool pass = false;
  if (deterministic) {
    pass = std::all_of(r.distances.begin(), r.distances.end(), [](double d) { return d == 0.0; });
  } else {
    pass = r.strictly_decreasing();
  }
  auto j = to_json(r);
  j["pass"] = pass;
  o.reports.push_back(j);
  o.pass = pass;
  out << (pass ? "[PASS] " : "[FAIL] ") << "sup|martingale| " << trend_line(r)
      << (deterministic ? " (expect identically 0)" : " (expect strictly decreasing)") << '\n';
  return o;
}

}  // namespace

int run(const ExperimentConfig& config, std::ostream& out, std::ostream& err) {
  try {
    validate(config);
    const std::filesystem::path dir(config.out_dir);
    std::filesystem::create_directories(dir);
    const std::string name = to_string(config.experiment);

    RunOptions options;
    options.threads = config.threads == 0 ? default_threads() : config.threads;
    options.grid = FiissGrid{config.grid_step, config.n_y};

    const bool process_csv =
        config.dump_samples || config.experiment == Experiment::martingale_diagnostic;
    const bool limit_csv = config.dump_samples || config.experiment == Experiment::fiiss_sample ||
                           config.experiment == Experiment::fiiss_moments;
    std::optional<CsvFile> process_file;
    std::optional<CsvFile> limit_file;
    const bool has_process = config.experiment != Experiment::fiiss_moments &&
                             config.experiment != Experiment::fiiss_sample;
    const bool has_limit = config.experiment == Experiment::flt_queue ||
                           config.experiment == Experiment::flt_amplitude ||
                           !has_process;
    if (process_csv && has_process) {
      process_file.emplace(dir / (name + "_process.csv"), kProcessHeader);
      options.on_process_samples = [&](std::span<const ProcessSample> s) {
        process_file->process(s);
      };
    }
    if (limit_csv && has_limit) {
      limit_file.emplace(dir / (name + "_fiiss.csv"), kLimitHeader);
      options.on_limit_samples = [&](double a, double r, std::span<const double> u,
                                     const std::vector<std::vector<double>>& rows) {
        limit_file->limit(a, r, u, rows);
      };
    }

    Outcome outcome;
    switch (config.experiment) {
      case Experiment::flt_queue:
      case Experiment::flt_amplitude:
        outcome = run_flt(config, options, out);
        break;
      case Experiment::shot_noise_moments:
        outcome = run_shot_noise(config, options, out);
        break;
      case Experiment::fiiss_moments:
        outcome = run_fiiss_moments(config, options, out);
        break;
      case Experiment::martingale_diagnostic:
        outcome = run_martingale(config, options, out);
        break;
      case Experiment::fiiss_sample:
        outcome = run_fiiss_sample(config, options, out);
        break;
    }

    json params = json::object();
    for (const auto& [k, v] : config_entries(config)) params[k] = v;
    const json summary{{"experiment", name},
                       {"params", params},
                       {"reports", outcome.reports},
                       {"pass", outcome.pass},
                       {"timestamp", utc_timestamp()}};
    std::ofstream js(dir / (name + ".json"));
    js << summary.dump(2) << '\n';
    if (!js) throw std::runtime_error("cannot write " + (dir / (name + ".json")).string());

    out << name << ": " << (outcome.pass ? "PASS" : "FAIL") << '\n';
    return outcome.pass ? kExitPass : kExitCheckFailed;
  } catch (const ConfigError& e) {
    err << "configuration error: " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitError;
}

}  // namespace immig
