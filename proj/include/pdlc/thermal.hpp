#pragma once

#include <cstdint>

#include "pdlc/errors.hpp"
#include "pdlc/rng.hpp"

namespace pdlc {

/// Single-zone cooling dynamics for one thermostatic appliance class.
/// Units are degrees Fahrenheit and minutes throughout the library.
struct ThermalParams {
  double tau_minutes = 0.0;  ///< effective thermal time constant
  double t_gain_f = 0.0;     ///< temperature pull while the appliance runs
  double t_out_f = 0.0;      ///< outside temperature

  void validate() const;  // throws InvalidParameterError
};

/// One-interval discretization of the continuous dynamics:
/// decay a = 1 - exp(-dt/tau), cooling b = a * t_gain.
struct DiscreteCoeffs {
  double dt_minutes = 0.0;
  double decay = 0.0;
  double cooling_f = 0.0;
};

/// Builds the discrete coefficients for interval dt_minutes.
DiscreteCoeffs discretize(const ThermalParams& params, double dt_minutes);

/// Advances one interval: (1-a)*T + a*T_out - b*u + a*eps. Pass eps_f = 0
/// for the deterministic model; adding a zero disturbance is bit-exact.
double dt_step(double temp_f, bool on, const DiscreteCoeffs& coeffs,
               const ThermalParams& params, double eps_f = 0.0);

/// Same step with a fractional duty in [0, 1]. Analysis mode only: the
/// protocol itself is strictly on/off, but aggregate convergence results are
/// stated for a real-valued budget spread evenly over the pool.
double dt_step_duty(double temp_f, double duty, const DiscreteCoeffs& coeffs,
                    const ThermalParams& params, double eps_f = 0.0);

/// Exact continuous-time solution after `minutes` with a constant switch
/// state: (T0 - Tinf)*exp(-t/tau) + Tinf, Tinf = T_out - u*T_gain.
double ct_temperature(double t0_f, bool on, double minutes,
                      const ThermalParams& params);

/// Time for an idle unit to drift from t_min up to t_max:
/// tau * ln((T_out - T_min) / (T_out - T_max)).
double duty_off_time(double t_min_f, double t_max_f,
                     const ThermalParams& params);

/// Time for a running unit to pull t_max down to t_min:
/// tau * ln((T_max + T_gain - T_out) / (T_min + T_gain - T_out)).
double duty_on_time(double t_min_f, double t_max_f,
                    const ThermalParams& params);

/// First-order window projection: temperature after `intervals` steps of
/// which `packets` are spent running. Valid for intervals*dt well below tau;
/// see projection_horizon_ok.
double project_temperature(double temp_f, long packets, long intervals,
                           const DiscreteCoeffs& coeffs,
                           const ThermalParams& params);

/// True when intervals*dt <= tau/2, the documented validity range of
/// project_temperature. Callers should surface a warning above it.
bool projection_horizon_ok(long intervals, const DiscreteCoeffs& coeffs,
                           const ThermalParams& params);

/// Bounded i.i.d. uniform thermal disturbance on [-eps_bar, +eps_bar].
struct Disturbance {
  double eps_bar_f = 0.0;
  std::uint64_t seed = 0;
};

/// Seeded disturbance stream. Draw order is owned by the caller and must be
/// documented (the simulator draws rooms in ascending id order, then advances
/// time). With eps_bar == 0 every draw is exactly 0 and the underlying
/// engine is never touched, so the deterministic model is reproduced
/// bit-exactly.
class DisturbanceGenerator {
 public:
  explicit DisturbanceGenerator(const Disturbance& spec);
  DisturbanceGenerator(double eps_bar_f, std::uint64_t seed);

  double draw();
  double eps_bar_f() const { return eps_bar_f_; }

 private:
  double eps_bar_f_ = 0.0;
  UniformRng rng_;
};

}  // namespace pdlc
