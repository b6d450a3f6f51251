#ifndef FW_EVOLUTION_HPP
#define FW_EVOLUTION_HPP

#include <functional>
#include <vector>

#include "fw/field.hpp"
#include "fw/norms.hpp"

namespace fw {

// Time integration of u_t + c u u_x = Q u_x on the torus (c = 3/2 for the
// physical normalization). Pseudospectral in space with 2/3-rule dealiasing,
// classical RK4 in time, advective CFL step control.

// Solution state at one instant; u and u_hat are kept consistent.
struct SimState {
  double t;
  Field u;
  Spectrum u_hat;
};

struct StepControl {
  double cfl = 0.3;
  double dt_max = 1e-2;
  double slope_cap = 1e3;             // |m1| that counts as breaking
  double tail_fraction_cap = 1e-4;    // spectral tail fraction that counts as underresolved
  bool linear_only = false;           // drop the transport term: u_t = Q u_x
  double transport_coefficient = 1.5;
};

enum class RunStatus {
  ReachedFinalTime,
  SlopeCapHit,
  ResolutionExhausted,
  NonFinite,
};

const char* to_string(RunStatus s);

struct RunOutcome {
  RunStatus status = RunStatus::ReachedFinalTime;
  double t = 0.0;
  double min_slope = 0.0;     // m1 at termination (SlopeCapHit)
  double tail_fraction = 0.0; // tail fraction at termination (ResolutionExhausted)
};

// Keep |k| <= n/3.
int dealias_cutoff(const GridSpec& grid);

// Initial projection: truncate to the dealiased band and resync the field.
SimState make_state(const Field& u0);

// Energy fraction held by the top octave of retained modes,
// sum over |k| in (cutoff/2, cutoff] of |u_hat|^2 divided by the total.
double tail_fraction(const Spectrum& u_hat);

// Spectrum of -c u u_x + Q u_x; the product is formed on the grid from the
// dealiased factors and truncated again afterwards.
Spectrum rhs(const Spectrum& u_hat, double transport_coeff = 1.5, bool linear_only = false);

SimState step_rk4(const SimState& state, double dt, double transport_coeff = 1.5,
                  bool linear_only = false);

// min(dt_max, cfl dx / max(1, c |u|_inf)): advective CFL with a unit speed
// floor so the linear regime stays resolved.
double choose_dt(const SimState& state, const StepControl& ctl);

// Hands per-step diagnostics to observers; emitted once for the initial
// state (dt = 0) and after every accepted step.
struct StepEvent {
  const SimState& state;
  ExtremaResult slope;
  double tail_fraction;
  double dt;
};
using Observer = std::function<void(const StepEvent&)>;

RunOutcome integrate(const Field& u0, double t_final, const StepControl& ctl,
                     const std::vector<Observer>& observers = {});

}  // namespace fw

#endif
