#ifndef FW_MONITOR_HPP
#define FW_MONITOR_HPP

#include <optional>
#include <vector>

#include "fw/evolution.hpp"
#include "fw/norms.hpp"

namespace fw {

// Checks the solution against the a priori estimates for the 3/2-transport
// normalization: norm growth bounds, the slope Riccati inequalities, the
// breaking criterion m1(0) + m2(0) < -2/3, and the blow-up time envelope
// 1/M(t) >= 1/M(0) + (3/2) t for M(t) = m1(t) + 1/3.

// Relative slack applied to every closed-form bound before it counts as
// violated.
inline constexpr double kBoundRelTol = 1e-8;

struct BoundCheck {
  bool pass = true;
  double margin = 0.0;  // bound - value; negative within tolerance still passes
};

// Diagnostics for one recorded instant.
struct MonitorRecord {
  double t = 0.0;
  double l2 = 0.0;
  double linf = 0.0;
  ExtremaResult slope{};
  double uxx_l2 = 0.0;
  double hs = 0.0;
  double tail_fraction = 0.0;
  BoundCheck l2_bound;
  BoundCheck linf_bound;
};

// |u(t)|_L2 <= e^t |u0|_L2
BoundCheck check_l2_bound(double t, double l2, double l2_0);
// |u(t)|_inf <= |u0|_inf + |u0|_L2 (e^t - 1)
BoundCheck check_linf_bound(double t, double linf, double linf_0, double l2_0);

struct H2BoundCheck {
  bool pass = true;
  double slope_floor = 0.0;  // M = max over records of max(0, -m1)
  double worst_ratio = 0.0;  // max of |u_xx|_L2 / (e^{(1+15M/4)t} |u0''|_L2)
};
// sup_t |u_xx(t)|_L2 <= e^{(1+15M/4) T} |u0''|_L2, with M taken from the
// recorded slopes; meaningful on runs that stay below the slope cap.
H2BoundCheck check_h2_conditional_bound(const std::vector<MonitorRecord>& records);

struct BlowupReport {
  double m1_0 = 0.0;
  double m2_0 = 0.0;
  double criterion_value = 0.0;  // m1(0) + m2(0)
  bool criterion_met = false;    // criterion_value < -2/3
  double m_0 = 0.0;              // M(0) = m1(0) + 1/3
  std::optional<double> predicted_t_upper;       // 2/(3 |M(0)|)
  std::optional<double> observed_breaking_time;  // set by classify_outcome
};

// Breaking criterion and predicted latest breaking time for initial data.
BlowupReport evaluate_criterion(const Field& u0);

struct RiccatiCheck {
  int pairs = 0;
  int failures = 0;
  double worst_excess = 0.0;  // largest violation beyond the slack
  double pass_fraction() const {
    return pairs > 0 ? double(pairs - failures) / pairs : 1.0;
  }
};
// Forward difference quotients of m1 and m2 against
//   m' <= -(3/2) m^2 + (1/2) (m2 - m1)
// with slack = slack_rate * h + slack_floor per adjacent record pair.
RiccatiCheck check_riccati_inequalities(const std::vector<MonitorRecord>& records,
                                        double slack_rate = 1e2,
                                        double slack_floor = 1e-6);

struct EnvelopeCheck {
  bool ok = true;
  int checked = 0;        // records with M(t) < 0
  int wrong_sign = 0;     // records where M(t) >= 0 despite M(0) < 0
  double worst_margin = 0.0;  // most negative envelope slack seen
};
// 1/M(t) >= 1/M(0) + (3/2) t - tol at every record; requires M(0) < -1/3
// to be meaningful, callers gate on criterion_met.
EnvelopeCheck check_blowup_envelope(const std::vector<MonitorRecord>& records,
                                    double m_0, double tol = 1e-6);

enum class Classification { WaveBreaking, Completed, Inconclusive };
const char* to_string(Classification c);

// WaveBreaking when the run hit the slope cap; Completed when it reached the
// horizon; everything else is inconclusive (resolution loss, non-finite).
Classification classify_outcome(const RunOutcome& outcome);

// Observer that keeps one MonitorRecord every `stride` steps plus the
// initial state and the final step.
class Monitor {
 public:
  explicit Monitor(double hs_index = 2.0, int stride = 1);

  Observer observer();
  const std::vector<MonitorRecord>& records() const { return records_; }

 private:
  void record(const StepEvent& ev);

  double hs_index_;
  int stride_;
  long steps_ = 0;
  bool provisional_ = false;
  double l2_0_ = 0.0;
  double linf_0_ = 0.0;
  std::vector<MonitorRecord> records_;
};

}  // namespace fw

#endif
