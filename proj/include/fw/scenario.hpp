#ifndef FW_SCENARIO_HPP
#define FW_SCENARIO_HPP

#include <string>
#include <vector>

#include "json.hpp"

#include "fw/evolution.hpp"

namespace fw {

// A fully specified run: initial data, grid, horizon, step control, and
// what to retain. Built from a JSON config; defaults are filled so the
// stored form always echoes a complete, reproducible description.
//
// initial_data accepts either a builtin string
//   "zero" | "constant(c)" | "sine(a,k)" | "two_mode(a1,a2)"
// (sine(a,k) = a sin(2 pi k x), two_mode(a1,a2) = a1 sin(2 pi x) + a2 sin(4 pi x))
// or an object form
//   {"constant": c} | {"sine": [a, k]} | {"two_mode": [a1, a2]}
//   {"fourier": [[k, cos_coeff, sin_coeff], ...]}
//   {"samples": [u_0, ..., u_{n-1}]} | {"samples_file": "path"}
// A samples_file is read eagerly and stored inline so the echoed config
// reproduces the run without the file.
struct Scenario {
  std::string name = "unnamed";
  nlohmann::json initial_data = "zero";
  int n = 256;
  double t_final = 1.0;
  StepControl control{};
  int monitor_stride = 1;
  bool keep_snapshots = false;
  int snapshot_stride = 1;
};

// Parse and validate a config object; unknown keys are rejected by name.
Scenario parse_config(const nlohmann::json& config);

// Read a JSON config file. Parse errors carry line/column, validation
// errors name the offending field.
Scenario load_config(const std::string& path);

// Complete config (all defaults filled) that parse_config maps back to the
// same scenario; this is the form echoed into artifacts.
nlohmann::json config_json(const Scenario& scenario);

// Evaluate the initial profile on the scenario's grid.
Field build_initial_data(const Scenario& scenario);

// "start:stop:count" -> count evenly spaced values (count >= 1).
std::vector<double> parse_range(const std::string& text);

// Overwrite the numeric config entry at a dotted path ("control.cfl",
// "initial_data.two_mode.0") for parameter sweeps; the entry must already
// exist as a number.
void apply_parameter(nlohmann::json& config, const std::string& path, double value);

}  // namespace fw

#endif
