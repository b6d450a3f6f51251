#include "fw/artifact.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace fw {

namespace {

using nlohmann::json;

RunStatus status_from_string(const std::string& s) {
  if (s == "reached_final_time") return RunStatus::ReachedFinalTime;
  if (s == "slope_cap_hit") return RunStatus::SlopeCapHit;
  if (s == "resolution_exhausted") return RunStatus::ResolutionExhausted;
  if (s == "non_finite") return RunStatus::NonFinite;
  throw std::runtime_error("unknown run status: " + s);
}

Classification classification_from_string(const std::string& s) {
  if (s == "wave_breaking") return Classification::WaveBreaking;
  if (s == "completed") return Classification::Completed;
  if (s == "inconclusive") return Classification::Inconclusive;
  throw std::runtime_error("unknown classification: " + s);
}

// JSON has no non-finite numbers; keep them readable instead of null.
json num(double v) {
  if (std::isfinite(v)) return v;
  if (std::isnan(v)) return "nan";
  return v > 0 ? "inf" : "-inf";
}

double num_back(const json& j) {
  if (j.is_number()) return j.get<double>();
  const std::string s = j.get<std::string>();
  if (s == "nan") return std::nan("");
  if (s == "inf") return HUGE_VAL;
  if (s == "-inf") return -HUGE_VAL;
  throw std::runtime_error("expected a number, got '" + s + "'");
}

constexpr const char* kColumns[] = {"t",   "l2",  "linf",          "m1",
                                    "m2",  "xi1", "xi2",           "uxx_l2",
                                    "hs",  "tail_fraction",        "l2_ok",
                                    "l2_margin",  "linf_ok",       "linf_margin"};

json record_row(const MonitorRecord& r) {
  return json::array({num(r.t), num(r.l2), num(r.linf), num(r.slope.min_value),
                      num(r.slope.max_value), num(r.slope.min_location),
                      num(r.slope.max_location), num(r.uxx_l2), num(r.hs),
                      num(r.tail_fraction), r.l2_bound.pass ? 1 : 0,
                      num(r.l2_bound.margin), r.linf_bound.pass ? 1 : 0,
                      num(r.linf_bound.margin)});
}

MonitorRecord record_from_row(const json& row) {
  if (!row.is_array() || row.size() != 14)
    throw std::runtime_error("monitor record row must have 14 columns");
  MonitorRecord r;
  r.t = num_back(row[0]);
  r.l2 = num_back(row[1]);
  r.linf = num_back(row[2]);
  r.slope.min_value = num_back(row[3]);
  r.slope.max_value = num_back(row[4]);
  r.slope.min_location = num_back(row[5]);
  r.slope.max_location = num_back(row[6]);
  r.uxx_l2 = num_back(row[7]);
  r.hs = num_back(row[8]);
  r.tail_fraction = num_back(row[9]);
  r.l2_bound.pass = row[10].get<int>() != 0;
  r.l2_bound.margin = num_back(row[11]);
  r.linf_bound.pass = row[12].get<int>() != 0;
  r.linf_bound.margin = num_back(row[13]);
  return r;
}

json snapshots_json(const RecordedRun& run, int n) {
  json times = json::array();
  json modes = json::array();
  for (int i = 0; i < run.size(); ++i) {
    times.push_back(num(run.times()[i]));
    const Spectrum& s = run.snapshot(i);
    json half = json::array();
    for (int k = 0; k <= n / 2; ++k)
      half.push_back(json::array({num(s.coeffs[k].real()), num(s.coeffs[k].imag())}));
    modes.push_back(std::move(half));
  }
  return json{{"transport_coefficient", run.transport_coefficient()},
              {"times", std::move(times)},
              {"modes", std::move(modes)}};
}

std::shared_ptr<const RecordedRun> snapshots_from_json(const json& j, int n,
                                                       const RunOutcome& outcome) {
  const GridSpec grid(n);
  std::vector<double> times;
  std::vector<Spectrum> spectra;
  const json& jt = j.at("times");
  const json& jm = j.at("modes");
  if (jt.size() != jm.size())
    throw std::runtime_error("snapshot times and modes differ in length");
  times.reserve(jt.size());
  spectra.reserve(jt.size());
  for (std::size_t i = 0; i < jt.size(); ++i) {
    times.push_back(num_back(jt[i]));
    const json& half = jm[i];
    if (static_cast<int>(half.size()) != n / 2 + 1)
      throw std::runtime_error("snapshot mode count does not match the grid");
    Spectrum s = zero_spectrum(grid);
    for (int k = 0; k <= n / 2; ++k)
      s.coeffs[k] = {num_back(half[k][0]), num_back(half[k][1])};
    for (int k = 1; k < n / 2; ++k) s.coeffs[n - k] = std::conj(s.coeffs[k]);
    spectra.push_back(std::move(s));
  }
  return std::make_shared<RecordedRun>(j.at("transport_coefficient").get<double>(),
                                       std::move(times), std::move(spectra), outcome);
}

}  // namespace

RunArtifact run_scenario(const Scenario& scenario) {
  RunArtifact artifact;
  artifact.scenario = scenario;

  const Field u0 = build_initial_data(scenario);
  Monitor monitor(2.0, scenario.monitor_stride);
  std::vector<Observer> observers{monitor.observer()};
  std::shared_ptr<RecordedRun> recorded;
  if (scenario.keep_snapshots) {
    recorded = std::make_shared<RecordedRun>(scenario.control, scenario.snapshot_stride);
    observers.push_back(recorded->observer());
  }

  artifact.outcome = integrate(u0, scenario.t_final, scenario.control, observers);
  artifact.classification = classify_outcome(artifact.outcome);
  artifact.records = monitor.records();
  // evaluate the criterion on the dealiased projection the run actually
  // evolved, so the report matches the first monitor record exactly
  artifact.report = evaluate_criterion(make_state(u0).u);
  if (artifact.outcome.status == RunStatus::SlopeCapHit)
    artifact.report.observed_breaking_time = artifact.outcome.t;
  if (recorded) {
    recorded->set_outcome(artifact.outcome);
    artifact.snapshots = recorded;
  }
  return artifact;
}

void export_csv(const RunArtifact& artifact, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write csv: " + path);
  for (std::size_t i = 0; i < std::size(kColumns); ++i)
    out << kColumns[i] << (i + 1 < std::size(kColumns) ? ',' : '\n');

  char buf[40];
  auto put = [&](double v, char sep) {
    std::snprintf(buf, sizeof buf, "%.17g", v);
    out << buf << sep;
  };
  for (const MonitorRecord& r : artifact.records) {
    put(r.t, ',');
    put(r.l2, ',');
    put(r.linf, ',');
    put(r.slope.min_value, ',');
    put(r.slope.max_value, ',');
    put(r.slope.min_location, ',');
    put(r.slope.max_location, ',');
    put(r.uxx_l2, ',');
    put(r.hs, ',');
    put(r.tail_fraction, ',');
    out << (r.l2_bound.pass ? 1 : 0) << ',';
    put(r.l2_bound.margin, ',');
    out << (r.linf_bound.pass ? 1 : 0) << ',';
    put(r.linf_bound.margin, '\n');
  }
  if (!out) throw std::runtime_error("failed writing csv: " + path);
}

void export_json(const RunArtifact& artifact, const std::string& path) {
  json j;
  j["config"] = config_json(artifact.scenario);
  j["outcome"] = {{"status", to_string(artifact.outcome.status)},
                  {"t", num(artifact.outcome.t)},
                  {"min_slope", num(artifact.outcome.min_slope)},
                  {"tail_fraction", num(artifact.outcome.tail_fraction)}};
  j["classification"] = to_string(artifact.classification);
  const BlowupReport& rep = artifact.report;
  j["report"] = {{"m1_0", num(rep.m1_0)},
                 {"m2_0", num(rep.m2_0)},
                 {"criterion_value", num(rep.criterion_value)},
                 {"criterion_met", rep.criterion_met},
                 {"m_0", num(rep.m_0)},
                 {"predicted_t_upper",
                  rep.predicted_t_upper ? json(num(*rep.predicted_t_upper)) : json()},
                 {"observed_breaking_time",
                  rep.observed_breaking_time ? json(num(*rep.observed_breaking_time))
                                             : json()}};
  j["columns"] = json::array();
  for (const char* c : kColumns) j["columns"].push_back(c);
  j["records"] = json::array();
  for (const MonitorRecord& r : artifact.records) j["records"].push_back(record_row(r));
  j["snapshots"] =
      artifact.snapshots ? snapshots_json(*artifact.snapshots, artifact.scenario.n)
                         : json();

  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write artifact: " + path);
  out << j.dump(1) << '\n';
  if (!out) throw std::runtime_error("failed writing artifact: " + path);
}

RunArtifact import_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open artifact: " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::runtime_error(path + ": " + e.what());
  }

  RunArtifact artifact;
  artifact.scenario = parse_config(j.at("config"));
  const json& out = j.at("outcome");
  artifact.outcome.status = status_from_string(out.at("status").get<std::string>());
  artifact.outcome.t = num_back(out.at("t"));
  artifact.outcome.min_slope = num_back(out.at("min_slope"));
  artifact.outcome.tail_fraction = num_back(out.at("tail_fraction"));
  artifact.classification =
      classification_from_string(j.at("classification").get<std::string>());
  const json& rep = j.at("report");
  artifact.report.m1_0 = num_back(rep.at("m1_0"));
  artifact.report.m2_0 = num_back(rep.at("m2_0"));
  artifact.report.criterion_value = num_back(rep.at("criterion_value"));
  artifact.report.criterion_met = rep.at("criterion_met").get<bool>();
  artifact.report.m_0 = num_back(rep.at("m_0"));
  if (!rep.at("predicted_t_upper").is_null())
    artifact.report.predicted_t_upper = num_back(rep.at("predicted_t_upper"));
  if (!rep.at("observed_breaking_time").is_null())
    artifact.report.observed_breaking_time = num_back(rep.at("observed_breaking_time"));
  for (const json& row : j.at("records"))
    artifact.records.push_back(record_from_row(row));
  if (!j.at("snapshots").is_null())
    artifact.snapshots =
        snapshots_from_json(j.at("snapshots"), artifact.scenario.n, artifact.outcome);
  return artifact;
}

}  // namespace fw
