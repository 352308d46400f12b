#pragma once

#include <iosfwd>
#include <string>

#include "immig/config.hpp"

namespace immig {

/// Exit codes of `run`.
inline constexpr int kExitPass = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitCheckFailed = 2;

/// Runs the configured experiment, writes `<experiment>.json` (and CSV files)
/// under out_dir and prints one line per report to `out`. Errors go to `err`.
int run(const ExperimentConfig& config, std::ostream& out, std::ostream& err);

/// Runs the fixture-level checks; one line per check. Returns kExitPass or
/// kExitCheckFailed.
int run_selftest(std::ostream& out);

}  // namespace immig
