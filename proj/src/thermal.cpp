#include "pdlc/thermal.hpp"

#include <cmath>
#include <string>

namespace pdlc {

void ThermalParams::validate() const {
  if (!(tau_minutes > 0.0)) {
    throw InvalidParameterError("thermal time constant must be positive, got " +
                                std::to_string(tau_minutes));
  }
  if (!(t_gain_f > 0.0)) {
    throw InvalidParameterError("temperature gain must be positive, got " +
                                std::to_string(t_gain_f));
  }
}

DiscreteCoeffs discretize(const ThermalParams& params, double dt_minutes) {
  params.validate();
  if (!(dt_minutes > 0.0)) {
    throw InvalidParameterError("packet length must be positive, got " +
                                std::to_string(dt_minutes));
  }
  DiscreteCoeffs coeffs;
  coeffs.dt_minutes = dt_minutes;
  coeffs.decay = 1.0 - std::exp(-dt_minutes / params.tau_minutes);
  coeffs.cooling_f = coeffs.decay * params.t_gain_f;
  return coeffs;
}

double dt_step(double temp_f, bool on, const DiscreteCoeffs& coeffs,
               const ThermalParams& params, double eps_f) {
  double next = (1.0 - coeffs.decay) * temp_f + coeffs.decay * params.t_out_f +
                coeffs.decay * eps_f;
  if (on) next -= coeffs.cooling_f;
  return next;
}

double dt_step_duty(double temp_f, double duty, const DiscreteCoeffs& coeffs,
                    const ThermalParams& params, double eps_f) {
  if (!(duty >= 0.0 && duty <= 1.0)) {
    throw InvalidParameterError("duty fraction must lie in [0, 1], got " +
                                std::to_string(duty));
  }
  return (1.0 - coeffs.decay) * temp_f + coeffs.decay * params.t_out_f -
         coeffs.cooling_f * duty + coeffs.decay * eps_f;
}

double ct_temperature(double t0_f, bool on, double minutes,
                      const ThermalParams& params) {
  params.validate();
  if (minutes < 0.0) {
    throw InvalidParameterError("elapsed time must be non-negative, got " +
                                std::to_string(minutes));
  }
  const double t_inf = params.t_out_f - (on ? params.t_gain_f : 0.0);
  return (t0_f - t_inf) * std::exp(-minutes / params.tau_minutes) + t_inf;
}

double duty_off_time(double t_min_f, double t_max_f,
                     const ThermalParams& params) {
  params.validate();
  if (t_min_f > t_max_f) {
    throw InvalidParameterError("band low exceeds band high");
  }
  if (t_max_f >= params.t_out_f) {
    throw InfeasibleError(
        "idle drift never reaches the band high: band high " +
        std::to_string(t_max_f) + " is not below the outside temperature " +
        std::to_string(params.t_out_f));
  }
  return params.tau_minutes *
         std::log((params.t_out_f - t_min_f) / (params.t_out_f - t_max_f));
}

double duty_on_time(double t_min_f, double t_max_f,
                    const ThermalParams& params) {
  params.validate();
  if (t_min_f > t_max_f) {
    throw InvalidParameterError("band low exceeds band high");
  }
  if (t_min_f + params.t_gain_f <= params.t_out_f) {
    throw InfeasibleError(
        "insufficient cooling capacity: a running unit cannot pull the "
        "temperature down to " +
        std::to_string(t_min_f));
  }
  return params.tau_minutes *
         std::log((t_max_f + params.t_gain_f - params.t_out_f) /
                  (t_min_f + params.t_gain_f - params.t_out_f));
}

double project_temperature(double temp_f, long packets, long intervals,
                           const DiscreteCoeffs& coeffs,
                           const ThermalParams& params) {
  if (intervals < 0) {
    throw InvalidParameterError("window length must be non-negative");
  }
  if (packets < 0 || packets > intervals) {
    throw InvalidParameterError(
        "packet quota must lie within the window: got " +
        std::to_string(packets) + " packets over " + std::to_string(intervals) +
        " intervals");
  }
  const double horizon = static_cast<double>(intervals) * coeffs.dt_minutes;
  return temp_f * (1.0 - horizon / params.tau_minutes) +
         (coeffs.dt_minutes / params.tau_minutes) *
             (static_cast<double>(intervals) * params.t_out_f -
              static_cast<double>(packets) * params.t_gain_f);
}

bool projection_horizon_ok(long intervals, const DiscreteCoeffs& coeffs,
                           const ThermalParams& params) {
  return static_cast<double>(intervals) * coeffs.dt_minutes <=
         params.tau_minutes / 2.0;
}

DisturbanceGenerator::DisturbanceGenerator(const Disturbance& spec)
    : DisturbanceGenerator(spec.eps_bar_f, spec.seed) {}

DisturbanceGenerator::DisturbanceGenerator(double eps_bar_f,
                                           std::uint64_t seed)
    : eps_bar_f_(eps_bar_f), rng_(seed) {
  if (eps_bar_f_ < 0.0) {
    throw InvalidParameterError("disturbance bound must be non-negative");
  }
}

double DisturbanceGenerator::draw() {
  if (eps_bar_f_ == 0.0) return 0.0;
  return rng_.next_uniform(-eps_bar_f_, eps_bar_f_);
}

}  // namespace pdlc
