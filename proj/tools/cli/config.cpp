// Copyright 2026 The rotframe Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "config.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <set>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include "rotframe/error.hpp"

namespace rotframe::cli {

Mode parse_mode(const std::string& name) {
  if (name == "spectrum") return Mode::spectrum;
  if (name == "intensity") return Mode::intensity;
  if (name == "ionization") return Mode::ionization;
  if (name == "point" || name == "single-point") return Mode::point;
  throw ConfigError("run.mode: unknown mode '" + name + "'");
}

std::string mode_name(Mode mode) {
  switch (mode) {
    case Mode::spectrum: return "spectrum";
    case Mode::intensity: return "intensity";
    case Mode::ionization: return "ionization";
    case Mode::point: return "point";
  }
  return "point";
}

KeyValues read_config_file(const std::string& path) {
  if (!std::filesystem::is_regular_file(path)) throw IoError("cannot read config file " + path);
  boost::property_tree::ptree tree;
  try {
    boost::property_tree::read_ini(path, tree);
  } catch (const boost::property_tree::ini_parser_error& e) {
    throw ConfigError(std::string("config file: ") + e.what());
  }
  KeyValues out;
  for (const auto& [section, body] : tree) {
    if (body.empty()) throw ConfigError("config key '" + section + "' is outside any section");
    for (const auto& [key, value] : body) out[section + "." + key] = value.data();
  }
  return out;
}

std::vector<std::string> preset_names() { return {"fig1", "fig2", "fig3", "fig4"}; }

KeyValues preset_values(const std::string& name) {
  // Sweep extents are a choice; see README.
  if (name == "fig1") {
    return {{"run.mode", "spectrum"},          {"run.n0", "18"},
            {"laser.amplitude_vspm", "5e-6"},  {"sweep.start", "0.05"},
            {"sweep.stop", "3.0"},             {"sweep.count", "60"},
            {"sweep.spacing", "linear"}};
  }
  if (name == "fig2") {
    return {{"run.mode", "intensity"},         {"run.n0", "18"},
            {"laser.photon_energy_ev", "0.296"}, {"sweep.start", "1e-7"},
            {"sweep.stop", "1e-5"},            {"sweep.count", "25"},
            {"sweep.spacing", "log"}};
  }
  if (name == "fig3") {
    return {{"run.mode", "ionization"},        {"run.n0", "18"},
            {"laser.photon_energy_ev", "2.37"}, {"sweep.start", "1e-7"},
            {"sweep.stop", "1e-5"},            {"sweep.count", "21"},
            {"sweep.spacing", "log"}};
  }
  if (name == "fig4") {
    return {{"run.mode", "ionization"},        {"run.n0", "18"},
            {"laser.photon_energy_ev", "2.37"}, {"sweep.start", "5e-7"},
            {"sweep.stop", "1e-5"},            {"sweep.count", "25"},
            {"sweep.spacing", "log"}};
  }
  throw ConfigError("unknown preset '" + name + "' (expected fig1, fig2, fig3 or fig4)");
}

namespace {

const std::set<std::string>& known_keys() {
  static const std::set<std::string> keys = {
      "run.mode",          "run.n0",           "run.threads",
      "state.n",           "state.l",          "state.mu",
      "laser.amplitude_vspm", "laser.photon_energy_ev",
      "sweep.start",       "sweep.stop",       "sweep.count",
      "sweep.spacing",     "model.reduced_mass", "model.drop_a2",
      "tolerance.degeneracy_gap", "tolerance.residual", "tolerance.orthonormality",
      "output.path",       "output.w_threshold", "debug.fail_point"};
  return keys;
}

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

double to_double(const std::string& key, const std::string& raw) {
  const std::string s = trim(raw);
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw ConfigError(key + ": '" + raw + "' is not a number");
  }
  if (used != s.size() || !std::isfinite(v)) throw ConfigError(key + ": '" + raw + "' is not a number");
  return v;
}

long long to_integer(const std::string& key, const std::string& raw) {
  const std::string s = trim(raw);
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    throw ConfigError(key + ": '" + raw + "' is not an integer");
  }
  if (used != s.size()) throw ConfigError(key + ": '" + raw + "' is not an integer");
  return v;
}

int to_int(const std::string& key, const std::string& raw) {
  const long long v = to_integer(key, raw);
  if (v < -1000000000LL || v > 1000000000LL) throw ConfigError(key + ": value out of range");
  return static_cast<int>(v);
}

bool to_bool(const std::string& key, const std::string& raw) {
  std::string s = trim(raw);
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  if (s == "true" || s == "1" || s == "yes" || s == "on") return true;
  if (s == "false" || s == "0" || s == "no" || s == "off") return false;
  throw ConfigError(key + ": '" + raw + "' is not a boolean");
}

}  // namespace

RunConfig config_from_values(Mode mode, const KeyValues& values) {
  for (const auto& [key, value] : values) {
    if (!known_keys().count(key)) throw ConfigError("unknown config key '" + key + "'");
  }
  const auto get = [&](const std::string& key) -> const std::string* {
    auto it = values.find(key);
    return it == values.end() ? nullptr : &it->second;
  };

  RunConfig c;
  c.mode = mode;
  if (auto v = get("run.mode"); v && parse_mode(trim(*v)) != mode) {
    throw ConfigError("run.mode: '" + trim(*v) + "' contradicts the '" + mode_name(mode) +
                      "' subcommand");
  }
  c.threads = default_threads();
  if (auto v = get("run.n0")) c.n0 = to_int("run.n0", *v);
  if (auto v = get("run.threads")) c.threads = to_int("run.threads", *v);
  if (auto v = get("state.n")) c.initial.n = to_int("state.n", *v);
  if (auto v = get("state.l")) c.initial.l = to_int("state.l", *v);
  if (auto v = get("state.mu")) c.initial.mu = to_int("state.mu", *v);
  if (auto v = get("laser.amplitude_vspm")) c.amplitude_vspm = to_double("laser.amplitude_vspm", *v);
  if (auto v = get("laser.photon_energy_ev")) {
    c.photon_energy_ev = to_double("laser.photon_energy_ev", *v);
  }

  const bool any_sweep = get("sweep.start") || get("sweep.stop") || get("sweep.count") ||
                         get("sweep.spacing");
  if (any_sweep) {
    SweepRange r;
    const char* required[] = {"sweep.start", "sweep.stop", "sweep.count"};
    for (const char* key : required)
      if (!get(key)) throw ConfigError(std::string(key) + ": missing (required with [sweep])");
    r.start = to_double("sweep.start", *get("sweep.start"));
    r.stop = to_double("sweep.stop", *get("sweep.stop"));
    r.count = to_int("sweep.count", *get("sweep.count"));
    if (auto v = get("sweep.spacing")) {
      try {
        r.spacing = parse_axis_spacing(trim(*v));
      } catch (const ConfigError& e) {
        throw ConfigError(std::string("sweep.spacing: ") + e.what());
      }
    }
    c.sweep = r;
  }
  if (auto v = get("model.reduced_mass")) c.reduced_mass = to_bool("model.reduced_mass", *v);
  if (auto v = get("model.drop_a2")) c.drop_a2 = to_bool("model.drop_a2", *v);
  if (auto v = get("tolerance.degeneracy_gap")) {
    c.degeneracy_gap = to_double("tolerance.degeneracy_gap", *v);
  }
  if (auto v = get("tolerance.residual")) c.residual_tolerance = to_double("tolerance.residual", *v);
  if (auto v = get("tolerance.orthonormality")) {
    c.orthonormality_tolerance = to_double("tolerance.orthonormality", *v);
  }
  if (auto v = get("output.path")) c.output_path = trim(*v);
  if (auto v = get("output.w_threshold")) c.w_threshold = to_double("output.w_threshold", *v);
  if (auto v = get("debug.fail_point")) {
    const long long p = to_integer("debug.fail_point", *v);
    if (p < 0) throw ConfigError("debug.fail_point: must be >= 0");
    c.fail_point = static_cast<std::size_t>(p);
  }
  validate(c);
  return c;
}

void validate(const RunConfig& c) {
  if (c.n0 < 1 || c.n0 > BasisSet::kMaxN0) {
    throw ConfigError("run.n0: must lie in [1, " + std::to_string(BasisSet::kMaxN0) + "], got " +
                      std::to_string(c.n0));
  }
  if (c.threads < 1) throw ConfigError("run.threads: must be >= 1");
  if (!c.initial.valid() || c.initial.n > c.n0) {
    throw ConfigError("state: " + c.initial.to_string() +
                      " is not a bound state of the n0=" + std::to_string(c.n0) + " basis");
  }
  const bool scans_omega = c.mode == Mode::spectrum;
  const bool scans_amplitude = c.mode == Mode::intensity || c.mode == Mode::ionization;

  if (scans_omega || c.mode == Mode::point) {
    if (!c.amplitude_vspm) throw ConfigError("laser.amplitude_vspm: missing");
    if (*c.amplitude_vspm < 0.0) throw ConfigError("laser.amplitude_vspm: must be >= 0");
  } else if (c.amplitude_vspm) {
    throw ConfigError("laser.amplitude_vspm: contradicts the amplitude sweep of " +
                      mode_name(c.mode) + " mode");
  }
  if (scans_amplitude || c.mode == Mode::point) {
    if (!c.photon_energy_ev) throw ConfigError("laser.photon_energy_ev: missing");
    if (!(*c.photon_energy_ev > 0.0)) throw ConfigError("laser.photon_energy_ev: must be > 0");
  } else if (c.photon_energy_ev) {
    throw ConfigError("laser.photon_energy_ev: contradicts the photon-energy sweep of spectrum mode");
  }

  if (c.mode == Mode::point) {
    if (c.sweep) throw ConfigError("sweep: point mode takes no sweep");
  } else {
    if (!c.sweep) throw ConfigError("sweep: missing (" + mode_name(c.mode) + " mode needs a sweep)");
    const SweepRange& r = *c.sweep;
    if (r.count < 1) throw ConfigError("sweep.count: must be >= 1");
    if (r.count > 1 && !(r.stop > r.start)) throw ConfigError("sweep.stop: must exceed sweep.start");
    if (scans_omega && !(r.start > 0.0)) throw ConfigError("sweep.start: photon energy must be > 0");
    if (scans_amplitude && r.start < 0.0) throw ConfigError("sweep.start: amplitude must be >= 0");
    if (r.spacing == AxisSpacing::logarithmic && !(r.start > 0.0)) {
      throw ConfigError("sweep.start: logarithmic spacing needs a positive start");
    }
  }
  if (!(c.degeneracy_gap > 0.0)) throw ConfigError("tolerance.degeneracy_gap: must be > 0");
  if (!(c.residual_tolerance > 0.0)) throw ConfigError("tolerance.residual: must be > 0");
  if (!(c.orthonormality_tolerance > 0.0)) {
    throw ConfigError("tolerance.orthonormality: must be > 0");
  }
  if (c.w_threshold < 0.0) throw ConfigError("output.w_threshold: must be >= 0");
}

RunConfig resolve_config(Mode mode, const Overrides& o) {
  KeyValues merged;
  std::string preset;
  if (o.preset) preset = *o.preset;
  KeyValues file;
  if (o.config_path) file = read_config_file(*o.config_path);
  if (!preset.empty()) merged = preset_values(preset);
  for (const auto& [k, v] : file) merged[k] = v;
  if (o.n0) merged["run.n0"] = std::to_string(*o.n0);
  if (o.threads) merged["run.threads"] = std::to_string(*o.threads);
  if (o.output_path) merged["output.path"] = *o.output_path;

  RunConfig c = config_from_values(mode, merged);
  c.preset = preset;
  if (c.output_path.empty()) c.output_path = "rotframe_" + mode_name(mode) + ".csv";
  return c;
}

int default_threads() {
  const char* env = std::getenv("ROTFRAME_THREADS");
  if (!env || !*env) return 1;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 1 || v > 1024) return 1;
  return static_cast<int>(v);
}

}  // namespace rotframe::cli
