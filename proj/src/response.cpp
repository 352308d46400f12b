#include "immig/response.hpp"

#include <cmath>
#include <sstream>

#include "immig/errors.hpp"

namespace immig {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

double power_profile(double scale, double rho, double t) {
  return rho == 0.0 ? scale : scale * std::pow(1.0 + t, rho);
}

void check_index(const char* field, double rho, double alpha) {
  if (!std::isfinite(rho) || !(rho > -alpha))
    throw ConfigError(field,
                      "index must exceed -alpha; for rho <= -alpha the limit process has "
                      "locally unbounded trajectories");
}

const char* dependence_name(Dependence d) {
  return d == Dependence::comonotone ? "comonotone" : "independent";
}

}  // namespace

void validate(const ResponseSpec& spec) {
  if (!(spec.xi_alpha > 0.0 && spec.xi_alpha < 1.0))
    throw ConfigError("alpha", "tail index of xi must lie in (0, 1)");
  const double alpha = spec.xi_alpha;
  std::visit(overloaded{
                 [&](const QueueIndicator& q) {
                   validate(q.eta_law);
                   if (const auto* p = std::get_if<ParetoRho>(&q.eta_law)) {
                     check_index("rho", p->rho, alpha);
                   } else if (!std::holds_alternative<LogTail>(q.eta_law)) {
                     throw ConfigError("eta_law",
                                       "queue model needs a regularly varying service tail "
                                       "(pareto_rho or log_tail)");
                   }
                 },
                 [&](const Amplitude& a) {
                   validate(a.eta_law);
                   if (!std::holds_alternative<LogNormalAmp>(a.eta_law))
                     throw ConfigError("eta_law",
                                       "amplitude model needs a non-degenerate factor with all "
                                       "moments finite (lognormal)");
                   check_index("f_rho", a.f_rho, alpha);
                   if (!(a.f_scale > 0.0) || !std::isfinite(a.f_scale))
                     throw ConfigError("f_scale", "must be positive and finite");
                 },
                 [&](const Deterministic& d) {
                   check_index("h_rho", d.h_rho, alpha);
                   if (!(d.h_scale > 0.0) || !std::isfinite(d.h_scale))
                     throw ConfigError("h_scale", "must be positive and finite");
                 },
             },
             spec.model);
}

double h_index(const ResponseSpec& spec) {
  return std::visit(overloaded{
                        [](const QueueIndicator& q) {
                          if (const auto* p = std::get_if<ParetoRho>(&q.eta_law)) return p->rho;
                          return 0.0;
                        },
                        [](const Amplitude& a) { return a.f_rho; },
                        [](const Deterministic& d) { return d.h_rho; },
                    },
                    spec.model);
}

double mean_h(const ResponseSpec& spec, double t) {
  return std::visit(
      overloaded{
          [t](const QueueIndicator& q) { return survival(q.eta_law, t); },
          [t](const Amplitude& a) {
            return mean(a.eta_law) * power_profile(a.f_scale, a.f_rho, t);
          },
          [t](const Deterministic& d) { return power_profile(d.h_scale, d.h_rho, t); },
      },
      spec.model);
}

double variance_v(const ResponseSpec& spec, double t) {
  return std::visit(overloaded{
                        [t](const QueueIndicator& q) {
                          const double h = survival(q.eta_law, t);
                          return h * (1.0 - h);
                        },
                        [t](const Amplitude& a) {
                          const double f = power_profile(a.f_scale, a.f_rho, t);
                          return variance(a.eta_law) * f * f;
                        },
                        [](const Deterministic&) { return 0.0; },
                    },
                    spec.model);
}

double scaling_factor(const ResponseSpec& spec, double t) {
  return survival(spec.xi_law(), t) / mean_h(spec, t);
}

double ResponseRealization::operator()(double t) const {
  switch (kind_) {
    case Kind::indicator:
      return eta_ > t ? 1.0 : 0.0;
    case Kind::amplitude:
      return eta_ * power_profile(scale_, rho_, t);
    case Kind::deterministic:
      return power_profile(scale_, rho_, t);
  }
  return 0.0;
}

std::pair<ResponseRealization, double> draw_response(const ResponseSpec& spec, double xi,
                                                     SeedSpec seed, std::uint64_t arrival) {
  auto eta_for = [&](const TailLaw& law, Dependence dep) {
    if (dep == Dependence::comonotone)
      return quantile_from_survival(law, survival(spec.xi_law(), xi));
    CounterRng rng(seed, substream::kResponseBase + arrival);
    return draw(law, rng);
  };
  return std::visit(
      overloaded{
          [&](const QueueIndicator& q) {
            return std::pair{ResponseRealization::indicator(eta_for(q.eta_law, q.dependence)),
                             xi};
          },
          [&](const Amplitude& a) {
            return std::pair{ResponseRealization::amplitude(eta_for(a.eta_law, a.dependence),
                                                            a.f_scale, a.f_rho),
                             xi};
          },
          [&](const Deterministic& d) {
            return std::pair{ResponseRealization::deterministic(d.h_scale, d.h_rho), xi};
          },
      },
      spec.model);
}

std::string describe(const ResponseSpec& spec) {
  std::ostringstream os;
  std::visit(overloaded{
                 [&](const QueueIndicator& q) {
                   os << "queue(eta=" << describe(q.eta_law)
                      << ", dependence=" << dependence_name(q.dependence) << ")";
                 },
                 [&](const Amplitude& a) {
                   os << "amplitude(eta=" << describe(a.eta_law) << ", f_rho=" << a.f_rho
                      << ", f_scale=" << a.f_scale
                      << ", dependence=" << dependence_name(a.dependence) << ")";
                 },
                 [&](const Deterministic& d) {
                   os << "deterministic(h_rho=" << d.h_rho << ", h_scale=" << d.h_scale << ")";
                 },
             },
             spec.model);
  os << ", xi=pareto_alpha(" << spec.xi_alpha << ")";
  return os.str();
}

}  // namespace immig
