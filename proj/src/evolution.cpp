#include "fw/evolution.hpp"

#include <cmath>
#include <stdexcept>

#include "fw/kernel.hpp"
#include "fw/transforms.hpp"

namespace fw {

const char* to_string(RunStatus s) {
  switch (s) {
    case RunStatus::ReachedFinalTime: return "reached_final_time";
    case RunStatus::SlopeCapHit: return "slope_cap_hit";
    case RunStatus::ResolutionExhausted: return "resolution_exhausted";
    case RunStatus::NonFinite: return "non_finite";
  }
  return "unknown";
}

int dealias_cutoff(const GridSpec& grid) { return grid.size() / 3; }

SimState make_state(const Field& u0) {
  Spectrum s = truncated(to_spectrum(u0), dealias_cutoff(u0.grid));
  enforce_hermitian(s);
  Field u = to_field(s);
  return {0.0, std::move(u), std::move(s)};
}

double tail_fraction(const Spectrum& u_hat) {
  const int n = u_hat.grid.size();
  const int cutoff = dealias_cutoff(u_hat.grid);
  const int lower = cutoff / 2;
  double total = 0.0, tail = 0.0;
  for (int i = 0; i < n; ++i) {
    const int k = i < n / 2 ? i : i - n;
    const double e = std::norm(u_hat.coeffs[i]);
    total += e;
    if (std::abs(k) > lower && std::abs(k) <= cutoff) tail += e;
  }
  return total > 0.0 ? tail / total : 0.0;
}

Spectrum rhs(const Spectrum& u_hat, double transport_coeff, bool linear_only) {
  const int cutoff = dealias_cutoff(u_hat.grid);
  const Spectrum u_band = truncated(u_hat, cutoff);
  Spectrum out = apply_q_dx(u_band);
  if (linear_only || transport_coeff == 0.0) return out;
  const Field u = to_field(u_band);
  const Field ux = to_field(spectral_derivative(u_band, 1));
  const Field prod{u.grid, u.values * ux.values};
  const Spectrum prod_hat = truncated(to_spectrum(prod), cutoff);
  out.coeffs -= transport_coeff * prod_hat.coeffs;
  return out;
}

SimState step_rk4(const SimState& state, double dt, double transport_coeff, bool linear_only) {
  const Spectrum& y = state.u_hat;
  const Spectrum k1 = rhs(y, transport_coeff, linear_only);

  Spectrum stage{y.grid, y.coeffs + (0.5 * dt) * k1.coeffs};
  const Spectrum k2 = rhs(stage, transport_coeff, linear_only);

  stage.coeffs = y.coeffs + (0.5 * dt) * k2.coeffs;
  const Spectrum k3 = rhs(stage, transport_coeff, linear_only);

  stage.coeffs = y.coeffs + dt * k3.coeffs;
  const Spectrum k4 = rhs(stage, transport_coeff, linear_only);

  Spectrum next{y.grid, y.coeffs + (dt / 6.0) * (k1.coeffs + 2.0 * k2.coeffs +
                                                 2.0 * k3.coeffs + k4.coeffs)};
  enforce_hermitian(next);
  Field u = to_field(next);
  return {state.t + dt, std::move(u), std::move(next)};
}

double choose_dt(const SimState& state, const StepControl& ctl) {
  const double speed = std::max(1.0, ctl.transport_coefficient * norm_linf(state.u));
  return std::min(ctl.dt_max, ctl.cfl * state.u.grid.dx() / speed);
}

RunOutcome integrate(const Field& u0, double t_final, const StepControl& ctl,
                     const std::vector<Observer>& observers) {
  if (t_final < 0.0) throw std::invalid_argument("t_final must be >= 0");
  SimState state = make_state(u0);

  const auto emit = [&](const ExtremaResult& slope, double tail, double dt) {
    const StepEvent ev{state, slope, tail, dt};
    for (const auto& obs : observers) obs(ev);
  };

  ExtremaResult slope = slope_extrema(state.u_hat);
  double tail = tail_fraction(state.u_hat);
  emit(slope, tail, 0.0);

  const auto stop_reason = [&]() {
    RunOutcome out;
    out.t = state.t;
    out.min_slope = slope.min_value;
    out.tail_fraction = tail;
    if (!state.u.values.allFinite())
      out.status = RunStatus::NonFinite;
    else if (-slope.min_value >= ctl.slope_cap)
      out.status = RunStatus::SlopeCapHit;
    else if (tail >= ctl.tail_fraction_cap)
      out.status = RunStatus::ResolutionExhausted;
    else
      out.status = RunStatus::ReachedFinalTime;
    return out;
  };

  RunOutcome out = stop_reason();
  if (out.status != RunStatus::ReachedFinalTime) return out;

  while (state.t < t_final) {
    double dt = choose_dt(state, ctl);
    if (state.t + dt > t_final) dt = t_final - state.t;
    state = step_rk4(state, dt, ctl.transport_coefficient, ctl.linear_only);

    slope = slope_extrema(state.u_hat);
    tail = tail_fraction(state.u_hat);
    emit(slope, tail, dt);

    out = stop_reason();
    if (out.status != RunStatus::ReachedFinalTime) return out;
  }
  out.t = state.t;
  return out;
}

}  // namespace fw
