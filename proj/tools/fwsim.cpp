// Command-line front end: run scenarios, render plots, sweep parameters,
// and execute the verification suite.
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "fw/acceptance.hpp"
#include "fw/artifact.hpp"
#include "fw/plot.hpp"
#include "fw/scenario.hpp"

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

std::string fmt(const char* spec, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

void print_summary(const fw::RunArtifact& a) {
  std::cout << a.scenario.name << ": " << fw::to_string(a.outcome.status) << " at t = "
            << fmt("%.6g", a.outcome.t) << " (" << fw::to_string(a.classification)
            << ")\n"
            << "  records " << a.records.size() << ", min slope "
            << fmt("%.6g", a.outcome.min_slope) << ", tail fraction "
            << fmt("%.3e", a.outcome.tail_fraction) << "\n"
            << "  breaking criterion m1+m2 = " << fmt("%.6g", a.report.criterion_value)
            << (a.report.criterion_met ? " (met)" : " (not met)") << "\n";
  if (a.report.predicted_t_upper)
    std::cout << "  predicted breaking time <= " << fmt("%.6g", *a.report.predicted_t_upper)
              << "\n";
  if (a.report.observed_breaking_time)
    std::cout << "  observed breaking time = "
              << fmt("%.6g", *a.report.observed_breaking_time) << "\n";
}

int cmd_run(const std::string& config_path, const std::string& out_dir) {
  const fw::Scenario scenario = fw::load_config(config_path);
  const fw::RunArtifact artifact = fw::run_scenario(scenario);
  fs::create_directories(out_dir);
  const fs::path base = fs::path(out_dir) / scenario.name;
  fw::export_csv(artifact, base.string() + ".csv");
  fw::export_json(artifact, base.string() + ".json");
  print_summary(artifact);
  std::cout << "  wrote " << base.string() << ".csv and .json\n";
  return 0;
}

int cmd_plot(const std::string& artifact_path, const std::string& kind,
             std::string out_path) {
  const fw::RunArtifact artifact = fw::import_json(artifact_path);
  if (out_path.empty()) {
    fs::path p(artifact_path);
    p.replace_extension();
    out_path = p.string() + "-" + kind + ".svg";
  }
  fw::plot_artifact(artifact, kind, out_path);
  std::cout << "wrote " << out_path << "\n";
  return 0;
}

int cmd_sweep(const std::string& template_path, const std::string& param_spec,
              const std::string& out_dir) {
  const std::size_t eq = param_spec.find('=');
  if (eq == std::string::npos)
    throw std::runtime_error("--param expects name=start:stop:count");
  const std::string name = param_spec.substr(0, eq);
  const std::vector<double> values = fw::parse_range(param_spec.substr(eq + 1));

  // normalize first: sugar forms become objects and defaults are filled in,
  // so any documented config entry is addressable by its dotted name
  const json base = fw::config_json(fw::load_config(template_path));

  fs::create_directories(out_dir);
  std::ofstream csv(fs::path(out_dir) / "sweep.csv");
  csv << "param,criterion_value,criterion_met,status,classification,t_end,"
         "min_slope,predicted_t_upper,observed_breaking_time\n";

  std::cout << name << "  m1+m2      met  outcome\n";
  for (double value : values) {
    json config = base;
    fw::apply_parameter(config, name, value);
    const fw::RunArtifact a = fw::run_scenario(fw::parse_config(config));

    csv << fmt("%.17g", value) << ',' << fmt("%.17g", a.report.criterion_value) << ','
        << (a.report.criterion_met ? 1 : 0) << ',' << fw::to_string(a.outcome.status)
        << ',' << fw::to_string(a.classification) << ',' << fmt("%.17g", a.outcome.t)
        << ',' << fmt("%.17g", a.outcome.min_slope) << ',';
    if (a.report.predicted_t_upper) csv << fmt("%.17g", *a.report.predicted_t_upper);
    csv << ',';
    if (a.report.observed_breaking_time)
      csv << fmt("%.17g", *a.report.observed_breaking_time);
    csv << '\n';

    std::cout << fmt("%-8.4g", value) << fmt("%-11.4g", a.report.criterion_value)
              << (a.report.criterion_met ? "yes  " : "no   ")
              << fw::to_string(a.classification) << " (t = " << fmt("%.5g", a.outcome.t)
              << ")\n";
  }
  std::cout << "wrote " << (fs::path(out_dir) / "sweep.csv").string() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"periodic Fornberg-Whitham pseudospectral simulator"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir = "out";
  CLI::App* run = app.add_subcommand("run", "run a scenario config, write artifacts");
  run->add_option("config", config_path, "JSON scenario config")->required();
  run->add_option("--out", out_dir, "output directory (default: out)");

  std::string artifact_path;
  std::string kind;
  std::string plot_out;
  CLI::App* plot = app.add_subcommand("plot", "render an SVG chart from an artifact");
  plot->add_option("artifact", artifact_path, "artifact JSON from a run")->required();
  plot->add_option("--kind", kind,
                   "norms | slopes | envelope | profile_snapshots")
      ->required();
  plot->add_option("--out", plot_out, "output SVG path (default: <artifact>-<kind>.svg)");

  std::string filter;
  CLI::App* verify =
      app.add_subcommand("verify", "run the verification suite, report pass/fail");
  verify->add_option("--filter", filter, "only checks whose name contains this");

  std::string template_path;
  std::string param_spec;
  std::string sweep_out = "sweep";
  CLI::App* sweep =
      app.add_subcommand("sweep", "rerun a config while varying one parameter");
  sweep->add_option("config", template_path, "JSON scenario config template")->required();
  sweep->add_option("--param", param_spec, "name=start:stop:count, dotted names allowed")
      ->required();
  sweep->add_option("--out", sweep_out, "output directory (default: sweep)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) return cmd_run(config_path, out_dir);
    if (plot->parsed()) return cmd_plot(artifact_path, kind, plot_out);
    if (verify->parsed()) return fw::report_acceptance(std::cout, filter) == 0 ? 0 : 1;
    if (sweep->parsed()) return cmd_sweep(template_path, param_spec, sweep_out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
