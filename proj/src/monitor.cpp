#include "fw/monitor.hpp"

#include <cmath>

#include "fw/transforms.hpp"

namespace fw {

BoundCheck check_l2_bound(double t, double l2, double l2_0) {
  const double bound = std::exp(t) * l2_0;
  return {l2 <= bound * (1.0 + kBoundRelTol), bound - l2};
}

BoundCheck check_linf_bound(double t, double linf, double linf_0, double l2_0) {
  const double bound = linf_0 + l2_0 * (std::exp(t) - 1.0);
  return {linf <= bound * (1.0 + kBoundRelTol), bound - linf};
}

H2BoundCheck check_h2_conditional_bound(const std::vector<MonitorRecord>& records) {
  H2BoundCheck out;
  if (records.empty()) return out;
  double m = 0.0;
  for (const auto& r : records) m = std::max(m, -r.slope.min_value);
  out.slope_floor = m;
  const double rate = 1.0 + 15.0 * m / 4.0;
  const double uxx0 = records.front().uxx_l2;
  for (const auto& r : records) {
    const double bound = std::exp(rate * r.t) * uxx0;
    if (bound <= 0.0) {
      if (r.uxx_l2 > 0.0) out.pass = false;
      continue;
    }
    const double ratio = r.uxx_l2 / bound;
    out.worst_ratio = std::max(out.worst_ratio, ratio);
    if (ratio > 1.0 + kBoundRelTol) out.pass = false;
  }
  return out;
}

BlowupReport evaluate_criterion(const Field& u0) {
  const ExtremaResult ex = slope_extrema(u0);
  BlowupReport rep;
  rep.m1_0 = ex.min_value;
  rep.m2_0 = ex.max_value;
  rep.criterion_value = ex.min_value + ex.max_value;
  rep.criterion_met = rep.criterion_value < -2.0 / 3.0;
  rep.m_0 = ex.min_value + 1.0 / 3.0;
  if (rep.criterion_met)
    rep.predicted_t_upper = 2.0 / (3.0 * std::abs(rep.m_0));
  return rep;
}

RiccatiCheck check_riccati_inequalities(const std::vector<MonitorRecord>& records,
                                        double slack_rate, double slack_floor) {
  RiccatiCheck out;
  for (size_t i = 0; i + 1 < records.size(); ++i) {
    const MonitorRecord& a = records[i];
    const MonitorRecord& b = records[i + 1];
    const double h = b.t - a.t;
    if (h <= 0.0) continue;
    const double slack = slack_rate * h + slack_floor;
    const double spread = 0.5 * (a.slope.max_value - a.slope.min_value);
    const double q1 = (b.slope.min_value - a.slope.min_value) / h;
    const double q2 = (b.slope.max_value - a.slope.max_value) / h;
    const double bound1 = -1.5 * a.slope.min_value * a.slope.min_value + spread;
    const double bound2 = -1.5 * a.slope.max_value * a.slope.max_value + spread;
    out.pairs += 2;
    const double e1 = q1 - bound1 - slack;
    const double e2 = q2 - bound2 - slack;
    if (e1 > 0.0) ++out.failures;
    if (e2 > 0.0) ++out.failures;
    out.worst_excess = std::max({out.worst_excess, e1, e2});
  }
  return out;
}

EnvelopeCheck check_blowup_envelope(const std::vector<MonitorRecord>& records,
                                    double m_0, double tol) {
  EnvelopeCheck out;
  if (m_0 >= 0.0) {
    out.ok = false;
    return out;
  }
  for (const auto& r : records) {
    const double m = r.slope.min_value + 1.0 / 3.0;
    if (m >= 0.0) {
      ++out.wrong_sign;
      out.ok = false;
      continue;
    }
    ++out.checked;
    const double margin = 1.0 / m - (1.0 / m_0 + 1.5 * r.t) + tol;
    out.worst_margin = std::min(out.worst_margin, margin);
    if (margin < 0.0) out.ok = false;
  }
  return out;
}

const char* to_string(Classification c) {
  switch (c) {
    case Classification::WaveBreaking: return "wave_breaking";
    case Classification::Completed: return "completed";
    case Classification::Inconclusive: return "inconclusive";
  }
  return "unknown";
}

Classification classify_outcome(const RunOutcome& outcome) {
  switch (outcome.status) {
    case RunStatus::SlopeCapHit: return Classification::WaveBreaking;
    case RunStatus::ReachedFinalTime: return Classification::Completed;
    default: return Classification::Inconclusive;
  }
}

Monitor::Monitor(double hs_index, int stride)
    : hs_index_(hs_index), stride_(stride > 0 ? stride : 1) {}

Observer Monitor::observer() {
  return [this](const StepEvent& ev) { record(ev); };
}

void Monitor::record(const StepEvent& ev) {
  const long index = steps_++;
  MonitorRecord rec;
  rec.t = ev.state.t;
  rec.l2 = norm_l2(ev.state.u_hat);
  rec.linf = norm_linf(ev.state.u);
  rec.slope = ev.slope;
  rec.uxx_l2 = norm_l2(spectral_derivative(ev.state.u_hat, 2));
  rec.hs = norm_hs(ev.state.u_hat, hs_index_);
  rec.tail_fraction = ev.tail_fraction;
  if (index == 0) {
    l2_0_ = rec.l2;
    linf_0_ = rec.linf;
  }
  rec.l2_bound = check_l2_bound(rec.t, rec.l2, l2_0_);
  rec.linf_bound = check_linf_bound(rec.t, rec.linf, linf_0_, l2_0_);

  // Every stride-th step becomes a permanent record; in between, the latest
  // step is held provisionally so the series always ends at the final state.
  if (index % stride_ == 0) {
    if (provisional_) records_.pop_back();
    records_.push_back(rec);
    provisional_ = false;
  } else if (provisional_) {
    records_.back() = rec;
  } else {
    records_.push_back(rec);
    provisional_ = true;
  }
}

}  // namespace fw
