#ifndef FW_CHARACTERISTICS_HPP
#define FW_CHARACTERISTICS_HPP

#include <optional>
#include <vector>

#include "fw/evolution.hpp"

namespace fw {

// Characteristic curves gamma'(s) = c u(gamma(s), s) for the transport
// coefficient c of the recorded run, traced backward from gamma(tau) = y.
// Along such a curve d/ds u(gamma(s), s) = u_t + c u u_x = (Q u_x)(gamma(s), s),
// so u(y, tau) = u0(gamma(0)) + integral of Q u_x along the path; the speed
// must carry the transport coefficient or the identity picks up an O(1)
// model error.

// Snapshot series of one evolution run: spectra of u and of Q u_x at step
// times, dense enough to reconstruct either field between steps by cubic
// (four-point Lagrange) interpolation in time. Attach via observer():
//   RecordedRun run(ctl);
//   auto outcome = integrate(u0, t_final, ctl, {run.observer()});
//   run.set_outcome(outcome);
class RecordedRun {
 public:
  // stride: keep every stride-th snapshot; the latest state is always kept
  // as a provisional final snapshot so the series ends at the final time.
  explicit RecordedRun(const StepControl& ctl, int stride = 1);

  // Reassemble from stored snapshots (times strictly ascending); the Q u_x
  // series is recomputed from the spectra.
  RecordedRun(double transport_coefficient, std::vector<double> times,
              std::vector<Spectrum> u_hats, const RunOutcome& outcome);

  Observer observer();
  void set_outcome(const RunOutcome& outcome);

  int size() const { return static_cast<int>(times_.size()); }
  double t_front() const;
  double t_back() const;
  double transport_coefficient() const { return transport_coefficient_; }
  const std::optional<RunOutcome>& outcome() const { return outcome_; }
  const std::vector<double>& times() const { return times_; }
  const Spectrum& snapshot(int i) const { return u_hats_.at(i); }

  // Off-grid value of u / of Q u_x at time s, cubic time interpolation of
  // the bracketing snapshots (degree < 4 when fewer snapshots exist).
  double eval_u(double s, double x) const;
  double eval_q_ux(double s, double x) const;

  // max over snapshots of the L2 norm of u.
  double max_l2() const;

 private:
  double interpolate(const std::vector<Spectrum>& series, double s, double x) const;

  double transport_coefficient_;
  int stride_;
  long event_count_ = 0;
  bool provisional_ = false;
  std::vector<double> times_;
  std::vector<Spectrum> u_hats_;
  std::vector<Spectrum> q_ux_hats_;
  std::optional<RunOutcome> outcome_;
};

struct CharacteristicSample {
  double s;         // time along the curve
  double position;  // gamma(s), wrapped to [0, 1)
  double u;         // u(gamma(s), s)
  double q_ux;      // (Q u_x)(gamma(s), s)
};

struct CharacteristicPath {
  double seed_position = 0.0;  // y
  double seed_time = 0.0;      // tau
  bool reliable = true;        // false when the source run ended in breaking
  std::vector<CharacteristicSample> samples;  // s ascending from 0 to tau
};

// Backward RK4 from gamma(tau) = y to s = 0 on the lifted line (positions are
// wrapped only in the output samples). The step is the mean snapshot spacing
// unless step_hint > 0 asks for a finer one; the sample count is kept even so
// Simpson quadrature applies directly. Throws std::out_of_range when tau is
// outside the recorded range and std::invalid_argument for runs that ended
// underresolved or non-finite (their snapshots misrepresent the solution).
CharacteristicPath trace_characteristic(const RecordedRun& run, double y, double tau,
                                        double step_hint = 0.0);

// |u(y,tau) - u0(gamma(0)) - Simpson quadrature of the sampled Q u_x|.
double verify_transport_identity(const CharacteristicPath& path, const Field& u0);

}  // namespace fw

#endif
