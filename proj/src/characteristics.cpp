#include "fw/characteristics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "fw/kernel.hpp"
#include "fw/transforms.hpp"

namespace fw {

RecordedRun::RecordedRun(const StepControl& ctl, int stride)
    : transport_coefficient_(ctl.linear_only ? 0.0 : ctl.transport_coefficient),
      stride_(stride) {
  if (stride < 1) throw std::invalid_argument("snapshot stride must be >= 1");
}

RecordedRun::RecordedRun(double transport_coefficient, std::vector<double> times,
                         std::vector<Spectrum> u_hats, const RunOutcome& outcome)
    : transport_coefficient_(transport_coefficient),
      stride_(1),
      times_(std::move(times)),
      u_hats_(std::move(u_hats)),
      outcome_(outcome) {
  if (times_.size() != u_hats_.size())
    throw std::invalid_argument("snapshot times and spectra differ in length");
  for (std::size_t i = 1; i < times_.size(); ++i)
    if (!(times_[i] > times_[i - 1]))
      throw std::invalid_argument("snapshot times must be strictly increasing");
  q_ux_hats_.reserve(u_hats_.size());
  for (const Spectrum& s : u_hats_) q_ux_hats_.push_back(apply_q_dx(s));
}

Observer RecordedRun::observer() {
  return [this](const StepEvent& ev) {
    const long index = event_count_++;
    const double t = ev.state.t;
    Spectrum q_ux = apply_q_dx(ev.state.u_hat);
    if (index % stride_ == 0) {
      if (provisional_) {
        times_.pop_back();
        u_hats_.pop_back();
        q_ux_hats_.pop_back();
      }
      times_.push_back(t);
      u_hats_.push_back(ev.state.u_hat);
      q_ux_hats_.push_back(std::move(q_ux));
      provisional_ = false;
    } else if (provisional_) {
      times_.back() = t;
      u_hats_.back() = ev.state.u_hat;
      q_ux_hats_.back() = std::move(q_ux);
    } else {
      times_.push_back(t);
      u_hats_.push_back(ev.state.u_hat);
      q_ux_hats_.push_back(std::move(q_ux));
      provisional_ = true;
    }
  };
}

void RecordedRun::set_outcome(const RunOutcome& outcome) { outcome_ = outcome; }

double RecordedRun::t_front() const {
  if (times_.empty()) throw std::logic_error("empty recorded run");
  return times_.front();
}

double RecordedRun::t_back() const {
  if (times_.empty()) throw std::logic_error("empty recorded run");
  return times_.back();
}

double RecordedRun::interpolate(const std::vector<Spectrum>& series, double s,
                                double x) const {
  const int m = static_cast<int>(times_.size());
  if (m == 0) throw std::logic_error("empty recorded run");
  if (m == 1) return eval_at(series[0], x);

  // Four-point Lagrange window around the bracketing interval (shorter
  // near the ends and for short series); evaluating the interpolated
  // spectrum at x equals interpolating the point values, so work with values.
  auto it = std::upper_bound(times_.begin(), times_.end(), s);
  int j = static_cast<int>(it - times_.begin()) - 1;
  j = std::clamp(j, 0, m - 2);
  const int count = std::min(4, m);
  const int i0 = std::clamp(j - 1, 0, m - count);

  double value = 0.0;
  for (int i = 0; i < count; ++i) {
    double w = 1.0;
    for (int k = 0; k < count; ++k) {
      if (k == i) continue;
      w *= (s - times_[i0 + k]) / (times_[i0 + i] - times_[i0 + k]);
    }
    value += w * eval_at(series[i0 + i], x);
  }
  return value;
}

double RecordedRun::eval_u(double s, double x) const { return interpolate(u_hats_, s, x); }

double RecordedRun::eval_q_ux(double s, double x) const {
  return interpolate(q_ux_hats_, s, x);
}

double RecordedRun::max_l2() const {
  double best = 0.0;
  for (const Spectrum& s : u_hats_) best = std::max(best, norm_l2(s));
  return best;
}

CharacteristicPath trace_characteristic(const RecordedRun& run, double y, double tau,
                                        double step_hint) {
  if (run.size() == 0) throw std::invalid_argument("empty recorded run");
  if (!run.outcome().has_value())
    throw std::logic_error("recorded run has no outcome; call set_outcome first");
  const RunStatus status = run.outcome()->status;
  if (status == RunStatus::ResolutionExhausted || status == RunStatus::NonFinite)
    throw std::invalid_argument(
        "refusing to trace a run whose snapshots stopped resolving the solution");
  if (run.t_front() != 0.0)
    throw std::invalid_argument("recorded run must start at t = 0");
  if (!(tau >= run.t_front() && tau <= run.t_back()))
    throw std::out_of_range("tau outside the recorded time range");

  CharacteristicPath path;
  path.seed_position = y - std::floor(y);
  path.seed_time = tau;
  path.reliable = status == RunStatus::ReachedFinalTime;

  const double c = run.transport_coefficient();
  auto speed = [&](double s, double x) { return c * run.eval_u(s, x); };

  int steps = 0;
  if (tau > 0.0) {
    double h_target = run.size() > 1
                          ? (run.t_back() - run.t_front()) / (run.size() - 1)
                          : tau;
    if (step_hint > 0.0) h_target = std::min(h_target, step_hint);
    steps = 2 * std::max(1L, std::lround(std::ceil(tau / (2.0 * h_target))));
  }

  // Backward RK4 on the lifted line; positions wrap only in the samples.
  std::vector<double> lifted(steps + 1);
  lifted[steps] = y;
  for (int i = steps; i >= 1; --i) {
    const double s1 = tau * (static_cast<double>(i) / steps);
    const double s0 = tau * (static_cast<double>(i - 1) / steps);
    const double h = s1 - s0;
    const double g = lifted[i];
    const double k1 = speed(s1, g);
    const double k2 = speed(s1 - 0.5 * h, g - 0.5 * h * k1);
    const double k3 = speed(s1 - 0.5 * h, g - 0.5 * h * k2);
    const double k4 = speed(s0, g - h * k3);
    lifted[i - 1] = g - (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }

  path.samples.reserve(steps + 1);
  for (int i = 0; i <= steps; ++i) {
    const double s = steps == 0 ? tau : tau * (static_cast<double>(i) / steps);
    CharacteristicSample sample;
    sample.s = s;
    sample.position = lifted[i] - std::floor(lifted[i]);
    sample.u = run.eval_u(s, lifted[i]);
    sample.q_ux = run.eval_q_ux(s, lifted[i]);
    path.samples.push_back(sample);
  }
  return path;
}

double verify_transport_identity(const CharacteristicPath& path, const Field& u0) {
  if (path.samples.empty()) throw std::invalid_argument("empty characteristic path");
  const double u_tau = path.samples.back().u;
  const double u0_at_start = eval_at(to_spectrum(u0), path.samples.front().position);

  double integral = 0.0;
  const int intervals = static_cast<int>(path.samples.size()) - 1;
  if (intervals > 0) {
    if (intervals % 2 != 0)
      throw std::invalid_argument("Simpson quadrature needs an even interval count");
    const double h = (path.samples.back().s - path.samples.front().s) / intervals;
    double sum = path.samples.front().q_ux + path.samples.back().q_ux;
    for (int i = 1; i < intervals; ++i)
      sum += (i % 2 == 1 ? 4.0 : 2.0) * path.samples[i].q_ux;
    integral = h / 3.0 * sum;
  }
  return std::abs(u_tau - u0_at_start - integral);
}

}  // namespace fw
