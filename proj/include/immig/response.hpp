#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <variant>

#include "immig/heavytail.hpp"
#include "immig/rng.hpp"

namespace immig {

enum class Dependence { independent, comonotone };

/// X(t) = 1{eta > t}: busy-server indicator of a G/G/inf queue.
struct QueueIndicator {
  TailLaw eta_law = ParetoRho{-0.3};
  Dependence dependence = Dependence::independent;
};

/// X(t) = eta * f(t), f(t) = f_scale * (1 + t)^f_rho.
struct Amplitude {
  TailLaw eta_law = LogNormalAmp{0.0, 0.5};
  double f_rho = 0.5;
  double f_scale = 1.0;
  Dependence dependence = Dependence::independent;
};

/// X(t) = h(t) = h_scale * (1 + t)^h_rho almost surely.
struct Deterministic {
  double h_rho = 0.0;
  double h_scale = 1.0;
};

using ResponseModel = std::variant<QueueIndicator, Amplitude, Deterministic>;

struct ResponseSpec {
  ResponseModel model;
  double xi_alpha = 0.5;

  /// Interarrival law with P{xi > t} = t^{-xi_alpha}, t >= 1.
  TailLaw xi_law() const { return ParetoAlpha{xi_alpha}; }
};

/// Throws ConfigError when the model leaves the regime where the scaled
/// process converges (index of h not above -alpha, infinite moments, ...).
void validate(const ResponseSpec& spec);

/// Regular-variation index of h.
double h_index(const ResponseSpec& spec);

double mean_h(const ResponseSpec& spec, double t);
double variance_v(const ResponseSpec& spec, double t);

/// Analytic P{xi > t} / h(t).
double scaling_factor(const ResponseSpec& spec, double t);

/// One realized response path t -> X(t). Cheap value type; evaluation is O(1).
class ResponseRealization {
 public:
  enum class Kind { indicator, amplitude, deterministic };

  static ResponseRealization indicator(double eta) { return {Kind::indicator, eta, 1.0, 0.0}; }
  static ResponseRealization amplitude(double eta, double f_scale, double f_rho) {
    return {Kind::amplitude, eta, f_scale, f_rho};
  }
  static ResponseRealization deterministic(double h_scale, double h_rho) {
    return {Kind::deterministic, 1.0, h_scale, h_rho};
  }

  double operator()(double t) const;

  Kind kind() const noexcept { return kind_; }
  double eta() const noexcept { return eta_; }

 private:
  ResponseRealization(Kind kind, double eta, double scale, double rho)
      : kind_(kind), eta_(eta), scale_(scale), rho_(rho) {}

  Kind kind_;
  double eta_;
  double scale_;
  double rho_;
};

/// Draws the response paired with interarrival `xi` for arrival `arrival`.
/// Independent models read the per-arrival response substream of `seed`;
/// comonotone models set eta = Q_eta(F_xi(xi)).
std::pair<ResponseRealization, double> draw_response(const ResponseSpec& spec, double xi,
                                                     SeedSpec seed, std::uint64_t arrival = 0);

std::string describe(const ResponseSpec& spec);

}  // namespace immig
