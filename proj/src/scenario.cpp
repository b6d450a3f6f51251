#include "fw/scenario.hpp"

#include <bit>
#include <cctype>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace fw {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& field, const std::string& what) {
  throw std::runtime_error(field + ": " + what);
}

std::string trimmed(const std::string& s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

double strict_double(const std::string& text, const std::string& field) {
  const std::string s = trimmed(text);
  std::size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &pos);
  } catch (const std::exception&) {
    fail(field, "expected a number, got '" + text + "'");
  }
  if (pos != s.size()) fail(field, "expected a number, got '" + text + "'");
  if (!std::isfinite(v)) fail(field, "must be finite");
  return v;
}

int strict_int(const std::string& text, const std::string& field) {
  const double v = strict_double(text, field);
  if (v != std::floor(v) || std::abs(v) > 1e9) fail(field, "expected an integer");
  return static_cast<int>(v);
}

double number_field(const json& j, const std::string& field) {
  if (!j.is_number()) fail(field, "expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) fail(field, "must be finite");
  return v;
}

int int_field(const json& j, const std::string& field) {
  if (!j.is_number_integer()) fail(field, "expected an integer");
  return j.get<int>();
}

bool bool_field(const json& j, const std::string& field) {
  if (!j.is_boolean()) fail(field, "expected true or false");
  return j.get<bool>();
}

// "name(a,b)" -> object form; the four simple builtins only.
json sugar_to_object(const std::string& text) {
  const std::string s = trimmed(text);
  if (s == "zero") return json("zero");
  const std::size_t open = s.find('(');
  if (open == std::string::npos || s.back() != ')')
    fail("initial_data",
         "unknown builtin '" + s +
             "' (expected zero, constant(c), sine(a,k), two_mode(a1,a2), or an object)");
  const std::string head = trimmed(s.substr(0, open));
  std::vector<std::string> args;
  std::stringstream body(s.substr(open + 1, s.size() - open - 2));
  for (std::string part; std::getline(body, part, ',');) args.push_back(part);

  auto want = [&](std::size_t count) {
    if (args.size() != count)
      fail("initial_data", head + " takes " + std::to_string(count) + " argument(s)");
  };
  if (head == "constant") {
    want(1);
    return json{{"constant", strict_double(args[0], "initial_data.constant")}};
  }
  if (head == "sine") {
    want(2);
    return json{{"sine",
                 {strict_double(args[0], "initial_data.sine.amplitude"),
                  strict_int(args[1], "initial_data.sine.mode")}}};
  }
  if (head == "two_mode") {
    want(2);
    return json{{"two_mode",
                 {strict_double(args[0], "initial_data.two_mode.0"),
                  strict_double(args[1], "initial_data.two_mode.1")}}};
  }
  fail("initial_data", "unknown builtin '" + head + "'");
}

std::vector<double> load_samples_file(const std::string& path, int n) {
  std::ifstream in(path);
  if (!in) fail("initial_data.samples_file", "cannot open " + path);
  std::vector<double> values;
  for (double v; in >> v;) values.push_back(v);
  if (!in.eof()) fail("initial_data.samples_file", path + " contains non-numeric data");
  if (static_cast<int>(values.size()) != n)
    fail("initial_data.samples_file", path + " holds " + std::to_string(values.size()) +
                                          " values, grid needs " + std::to_string(n));
  return values;
}

// Validate the object form and return it normalized (samples inlined).
json normalize_initial_data(const json& spec, int n) {
  json obj = spec.is_string() ? sugar_to_object(spec.get<std::string>()) : spec;
  if (obj.is_string() && obj.get<std::string>() == "zero") return obj;
  if (!obj.is_object() || obj.size() != 1)
    fail("initial_data", "expected a builtin string or a single-key object");
  const std::string kind = obj.begin().key();
  const json& arg = obj.begin().value();

  if (kind == "constant") {
    number_field(arg, "initial_data.constant");
    return obj;
  }
  if (kind == "sine") {
    if (!arg.is_array() || arg.size() != 2) fail("initial_data.sine", "expected [a, k]");
    number_field(arg[0], "initial_data.sine.amplitude");
    const int k = int_field(arg[1], "initial_data.sine.mode");
    if (k < 1 || k > n / 2)
      fail("initial_data.sine.mode", "must be in [1, n/2]");
    return obj;
  }
  if (kind == "two_mode") {
    if (!arg.is_array() || arg.size() != 2)
      fail("initial_data.two_mode", "expected [a1, a2]");
    number_field(arg[0], "initial_data.two_mode.0");
    number_field(arg[1], "initial_data.two_mode.1");
    if (n / 2 < 2) fail("initial_data.two_mode", "grid too small for mode 2");
    return obj;
  }
  if (kind == "fourier") {
    if (!arg.is_array() || arg.empty())
      fail("initial_data.fourier", "expected a list of [k, cos_coeff, sin_coeff]");
    for (const json& term : arg) {
      if (!term.is_array() || term.size() != 3)
        fail("initial_data.fourier", "each term is [k, cos_coeff, sin_coeff]");
      const int k = int_field(term[0], "initial_data.fourier.k");
      if (k < 0 || k > n / 2) fail("initial_data.fourier.k", "must be in [0, n/2]");
      number_field(term[1], "initial_data.fourier.cos_coeff");
      number_field(term[2], "initial_data.fourier.sin_coeff");
    }
    return obj;
  }
  if (kind == "samples") {
    if (!arg.is_array() || static_cast<int>(arg.size()) != n)
      fail("initial_data.samples", "expected exactly n = " + std::to_string(n) + " values");
    for (const json& v : arg) number_field(v, "initial_data.samples");
    return obj;
  }
  if (kind == "samples_file") {
    if (!arg.is_string()) fail("initial_data.samples_file", "expected a path string");
    return json{{"samples", load_samples_file(arg.get<std::string>(), n)}};
  }
  fail("initial_data", "unknown kind '" + kind + "'");
}

StepControl parse_control(const json& j) {
  StepControl ctl;
  for (const auto& [key, value] : j.items()) {
    if (key == "cfl") {
      ctl.cfl = number_field(value, "control.cfl");
      if (ctl.cfl <= 0.0) fail("control.cfl", "must be positive");
    } else if (key == "dt_max") {
      ctl.dt_max = number_field(value, "control.dt_max");
      if (ctl.dt_max <= 0.0) fail("control.dt_max", "must be positive");
    } else if (key == "slope_cap") {
      ctl.slope_cap = number_field(value, "control.slope_cap");
      if (ctl.slope_cap <= 0.0) fail("control.slope_cap", "must be positive");
    } else if (key == "tail_fraction_cap") {
      ctl.tail_fraction_cap = number_field(value, "control.tail_fraction_cap");
      if (ctl.tail_fraction_cap <= 0.0 || ctl.tail_fraction_cap > 1.0)
        fail("control.tail_fraction_cap", "must be in (0, 1]");
    } else if (key == "linear_only") {
      ctl.linear_only = bool_field(value, "control.linear_only");
    } else if (key == "transport_coefficient") {
      ctl.transport_coefficient = number_field(value, "control.transport_coefficient");
    } else {
      fail("control." + key, "unknown key");
    }
  }
  return ctl;
}

}  // namespace

Scenario parse_config(const nlohmann::json& config) {
  if (!config.is_object()) throw std::runtime_error("config: expected a JSON object");
  Scenario sc;

  // n first: initial-data validation depends on the grid size.
  if (config.contains("n")) {
    sc.n = int_field(config.at("n"), "n");
    if (sc.n < 8 || !std::has_single_bit(static_cast<unsigned>(sc.n)))
      fail("n", "must be a power of two, at least 8 (got " + std::to_string(sc.n) + ")");
  }

  json initial = sc.initial_data;
  for (const auto& [key, value] : config.items()) {
    if (key == "n") {
      continue;
    } else if (key == "name") {
      if (!value.is_string()) fail("name", "expected a string");
      sc.name = value.get<std::string>();
      if (sc.name.empty()) fail("name", "must not be empty");
    } else if (key == "initial_data") {
      initial = value;
    } else if (key == "t_final") {
      sc.t_final = number_field(value, "t_final");
      if (sc.t_final <= 0.0) fail("t_final", "must be positive");
    } else if (key == "control") {
      if (!value.is_object()) fail("control", "expected an object");
      sc.control = parse_control(value);
    } else if (key == "monitor_stride") {
      sc.monitor_stride = int_field(value, "monitor_stride");
      if (sc.monitor_stride < 1) fail("monitor_stride", "must be >= 1");
    } else if (key == "keep_snapshots") {
      sc.keep_snapshots = bool_field(value, "keep_snapshots");
    } else if (key == "snapshot_stride") {
      sc.snapshot_stride = int_field(value, "snapshot_stride");
      if (sc.snapshot_stride < 1) fail("snapshot_stride", "must be >= 1");
    } else {
      fail(key, "unknown key");
    }
  }
  sc.initial_data = normalize_initial_data(initial, sc.n);
  return sc;
}

Scenario load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config: " + path);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
  return parse_config(j);
}

nlohmann::json config_json(const Scenario& scenario) {
  return nlohmann::json{
      {"name", scenario.name},
      {"initial_data", scenario.initial_data},
      {"n", scenario.n},
      {"t_final", scenario.t_final},
      {"control",
       {{"cfl", scenario.control.cfl},
        {"dt_max", scenario.control.dt_max},
        {"slope_cap", scenario.control.slope_cap},
        {"tail_fraction_cap", scenario.control.tail_fraction_cap},
        {"linear_only", scenario.control.linear_only},
        {"transport_coefficient", scenario.control.transport_coefficient}}},
      {"monitor_stride", scenario.monitor_stride},
      {"keep_snapshots", scenario.keep_snapshots},
      {"snapshot_stride", scenario.snapshot_stride}};
}

Field build_initial_data(const Scenario& scenario) {
  const GridSpec grid(scenario.n);
  Field f = zero_field(grid);
  const json& spec = scenario.initial_data;
  if (spec.is_string()) return f;  // "zero"

  const std::string kind = spec.begin().key();
  const json& arg = spec.begin().value();
  constexpr double tau = 2.0 * std::numbers::pi;

  if (kind == "constant") {
    f.values.setConstant(arg.get<double>());
  } else if (kind == "sine") {
    const double a = arg[0].get<double>();
    const int k = arg[1].get<int>();
    for (int j = 0; j < scenario.n; ++j)
      f.values[j] = a * std::sin(tau * k * (double(j) / scenario.n));
  } else if (kind == "two_mode") {
    const double a1 = arg[0].get<double>();
    const double a2 = arg[1].get<double>();
    for (int j = 0; j < scenario.n; ++j) {
      const double x = double(j) / scenario.n;
      f.values[j] = a1 * std::sin(tau * x) + a2 * std::sin(2.0 * tau * x);
    }
  } else if (kind == "fourier") {
    for (const json& term : arg) {
      const int k = term[0].get<int>();
      const double c = term[1].get<double>();
      const double s = term[2].get<double>();
      for (int j = 0; j < scenario.n; ++j) {
        const double x = double(j) / scenario.n;
        f.values[j] += c * std::cos(tau * k * x) + s * std::sin(tau * k * x);
      }
    }
  } else {  // samples
    for (int j = 0; j < scenario.n; ++j) f.values[j] = arg[j].get<double>();
  }
  return f;
}

std::vector<double> parse_range(const std::string& text) {
  const std::size_t c1 = text.find(':');
  const std::size_t c2 = text.find(':', c1 == std::string::npos ? c1 : c1 + 1);
  if (c1 == std::string::npos || c2 == std::string::npos)
    throw std::runtime_error("range must be start:stop:count, got '" + text + "'");
  const double start = strict_double(text.substr(0, c1), "range.start");
  const double stop = strict_double(text.substr(c1 + 1, c2 - c1 - 1), "range.stop");
  const int count = strict_int(text.substr(c2 + 1), "range.count");
  if (count < 1) throw std::runtime_error("range.count: must be >= 1");
  std::vector<double> values;
  values.reserve(count);
  for (int i = 0; i < count; ++i)
    values.push_back(count == 1 ? start : start + (stop - start) * i / (count - 1));
  return values;
}

void apply_parameter(nlohmann::json& config, const std::string& path, double value) {
  std::string pointer = "/" + path;
  for (char& c : pointer)
    if (c == '.') c = '/';
  const nlohmann::json::json_pointer p(pointer);
  if (!config.contains(p))
    throw std::runtime_error("sweep parameter not present in config: " + path);
  nlohmann::json& slot = config.at(p);
  if (!slot.is_number())
    throw std::runtime_error("sweep parameter is not numeric: " + path);
  if (slot.is_number_integer() && value == std::floor(value))
    slot = static_cast<long long>(value);
  else
    slot = value;
}

}  // namespace fw
