#ifndef FW_ACCEPTANCE_HPP
#define FW_ACCEPTANCE_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace fw {

// One end-to-end verification check: kernel cross-checks, operator bound,
// linear oracle, conservation, growth bounds, breaking bracket, envelope
// and Riccati inequalities, negative control, transport identity, and
// refinement stability. Each runs self-contained with pinned tolerances.
struct AcceptanceCheck {
  std::string name;
  bool pass = false;
  std::string detail;  // measured values against their bounds
  double seconds = 0.0;
};

// Run the checks whose names contain `filter` (all when empty).
std::vector<AcceptanceCheck> run_acceptance(const std::string& filter = "");

// Print one PASS/FAIL line per check plus a summary; returns the number of
// failed checks.
int report_acceptance(std::ostream& os, const std::string& filter = "");

}  // namespace fw

#endif
