#ifndef FW_ARTIFACT_HPP
#define FW_ARTIFACT_HPP

#include <memory>
#include <string>
#include <vector>

#include "fw/characteristics.hpp"
#include "fw/monitor.hpp"
#include "fw/scenario.hpp"

namespace fw {

// Everything one run produces: the scenario echo (sufficient to reproduce
// the run), the outcome and its classification, the monitor series, the
// breaking report, and optionally the snapshot series for characteristics.
struct RunArtifact {
  Scenario scenario;
  RunOutcome outcome;
  Classification classification = Classification::Completed;
  BlowupReport report;
  std::vector<MonitorRecord> records;
  std::shared_ptr<const RecordedRun> snapshots;  // null unless requested
};

// Execute a scenario. Deterministic: the step formula is fixed and nothing
// draws randomness, so identical scenarios give identical artifacts.
// Termination trouble lands in outcome/classification, it is not thrown.
RunArtifact run_scenario(const Scenario& scenario);

// One row per monitor record:
// t,l2,linf,m1,m2,xi1,xi2,uxx_l2,hs,tail_fraction,l2_ok,l2_margin,linf_ok,linf_margin
// All numbers printed with %.17g, flags as 0/1; byte-stable across runs.
void export_csv(const RunArtifact& artifact, const std::string& path);

// Full artifact including the report and any snapshots; import inverts it.
void export_json(const RunArtifact& artifact, const std::string& path);
RunArtifact import_json(const std::string& path);

}  // namespace fw

#endif
