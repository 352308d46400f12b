// immigrate_sim: run simulation experiments for random processes with
// immigration and their fractionally integrated inverse stable limit.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "immig/config.hpp"
#include "immig/errors.hpp"
#include "immig/experiments.hpp"

namespace {

// Applies `--key value`, `--key=value` and the bare flag `--dump-samples`.
void apply_overrides(immig::ExperimentConfig& config, const std::vector<std::string>& args) {
  for (std::size_t i = 0; i < args.size(); ++i) {
    std::string token = args[i];
    if (token.rfind("--", 0) != 0)
      throw immig::ConfigError(token, "expected an option of the form --key value");
    token.erase(0, 2);
    if (const auto eq = token.find('='); eq != std::string::npos) {
      immig::apply_setting(config, token.substr(0, eq), token.substr(eq + 1));
      continue;
    }
    const bool has_value = i + 1 < args.size() && args[i + 1].rfind("--", 0) != 0;
    if (token == "dump-samples" || token == "dump_samples") {
      immig::apply_setting(config, token, has_value ? args[++i] : "true");
      continue;
    }
    if (!has_value) throw immig::ConfigError(token, "missing value");
    immig::apply_setting(config, token, args[++i]);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Simulation and verification of random processes with immigration"};
  app.require_subcommand(1);

  auto* run = app.add_subcommand("run", "Run the experiment described by a config file");
  std::string config_path;
  run->add_option("config", config_path, "Configuration file (key = value lines)")->required();
  run->allow_extras();

  app.add_subcommand("print-config", "Print the default configuration");
  app.add_subcommand("selftest", "Run the fixture-level checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : immig::kExitError;
  }

  if (app.got_subcommand("print-config")) {
    std::cout << immig::format_config(immig::default_config());
    return immig::kExitPass;
  }
  if (app.got_subcommand("selftest")) return immig::run_selftest(std::cout);

  try {
    auto config = immig::load_config_file(config_path);
    apply_overrides(config, run->remaining());
    return immig::run(config, std::cout, std::cerr);
  } catch (const immig::ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
  }
  return immig::kExitError;
}
