#pragma once

#include <map>
#include <span>
#include <vector>

#include "immig/renewal.hpp"
#include "immig/response.hpp"
#include "immig/rng.hpp"

namespace immig {

/// One replicate of the scaled process u -> (P{xi>t}/h(t)) Y(u t) on a grid,
/// split into the centered (martingale) part and the renewal shot-noise part.
struct ProcessSample {
  double t_scale = 1.0;
  std::vector<double> u_grid;
  std::vector<double> y_scaled;
  std::vector<double> shot_part;
  std::vector<double> martingale_part;
  SeedSpec replicate;
};

/// 40 logarithmically spaced points in [0.1, 2].
std::vector<double> default_u_grid();

/// Throws std::invalid_argument unless the grid is non-empty, strictly
/// increasing and positive.
void validate_u_grid(std::span<const double> u_grid);

/// Draws one response per arrival S_0, ..., S_{n-1} (every epoch not beyond
/// the horizon). Response k is paired with xi_{k+1}.
std::vector<ResponseRealization> draw_responses(const ResponseSpec& spec,
                                                const RenewalPath& path, SeedSpec seed);

/// Evaluates Y(u t) = sum_{S_k <= u t} X_{k+1}(u t - S_k) and its decomposition
/// from an already realized walk and responses.
ProcessSample evaluate_Y(const ResponseSpec& spec, const RenewalPath& path,
                         std::span<const ResponseRealization> responses, double t_scale,
                         std::span<const double> u_grid, SeedSpec seed = {});

ProcessSample simulate_Y(const ResponseSpec& spec, double t_scale,
                         std::span<const double> u_grid, SeedSpec seed);

/// Per t_scale, the mean over samples of sup_u |martingale_part(u)|.
std::map<double, double> martingale_sup_diagnostic(std::span<const ProcessSample> samples);

}  // namespace immig
