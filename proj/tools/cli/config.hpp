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

#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rotframe/basis.hpp"
#include "rotframe/scan.hpp"

namespace rotframe::cli {

enum class Mode { spectrum, intensity, ionization, point };

Mode parse_mode(const std::string& name);
std::string mode_name(Mode mode);

/// Swept axis in I/O units: eV for photon energy, V s / m for amplitude.
struct SweepRange {
  double start = 0.0;
  double stop = 0.0;
  int count = 1;
  AxisSpacing spacing = AxisSpacing::linear;

  std::vector<double> values() const { return make_axis(start, stop, count, spacing); }
};

struct RunConfig {
  Mode mode = Mode::point;
  std::string preset;
  int n0 = 18;
  QuantumNumbers initial{1, 0, 0};
  /// Fixed amplitude (spectrum, point) in V s / m.
  std::optional<double> amplitude_vspm;
  /// Fixed photon energy (intensity, ionization, point) in eV.
  std::optional<double> photon_energy_ev;
  /// Photon-energy sweep for spectrum, amplitude sweep for intensity/ionization.
  std::optional<SweepRange> sweep;
  bool reduced_mass = false;
  bool drop_a2 = false;
  std::string output_path;
  int threads = 1;
  double degeneracy_gap = 1e-10;
  double residual_tolerance = 1e-9;
  double orthonormality_tolerance = 1e-9;
  /// Transition rows with W below this are not written (0 writes all).
  double w_threshold = 0.0;
  /// Scan point forced to fail (fault injection for tests).
  std::optional<std::size_t> fail_point;
};

/// Key/value pairs from an INI-style file: "section.key" -> raw value.
using KeyValues = std::map<std::string, std::string>;

/// Throws IoError if unreadable, ConfigError on syntax errors.
KeyValues read_config_file(const std::string& path);

/// Built-in parameter sets: fig1 .. fig4. Throws ConfigError if unknown.
KeyValues preset_values(const std::string& name);
std::vector<std::string> preset_names();

/// Command-line overrides; unset fields leave the file values alone.
struct Overrides {
  std::optional<std::string> config_path;
  std::optional<std::string> preset;
  std::optional<int> n0;
  std::optional<std::string> output_path;
  std::optional<int> threads;
};

/// Layers preset < file < flags, then validates. `mode` comes from the
/// subcommand. Throws ConfigError naming the offending key.
RunConfig resolve_config(Mode mode, const Overrides& overrides);

/// Validation on its own (also applied by resolve_config).
void validate(const RunConfig& config);

/// Build a RunConfig from merged key/values (no file access).
RunConfig config_from_values(Mode mode, const KeyValues& values);

/// Default worker count: ROTFRAME_THREADS if set and valid, else 1.
int default_threads();

}  // namespace rotframe::cli
