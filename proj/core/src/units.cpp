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

#include "rotframe/units.hpp"

#include <algorithm>
#include <cctype>
#include <numbers>
#include <string>

#include "rotframe/error.hpp"

namespace rotframe {

namespace {

PhysicalConstants make_codata2018() {
  PhysicalConstants k{};
  k.fine_structure_alpha = 7.2973525693e-3;
  k.electron_mass = 9.1093837015e-31;
  k.proton_mass = 1.67262192369e-27;
  k.elementary_charge = 1.602176634e-19;                     // exact
  k.hbar = 6.62607015e-34 / (2.0 * std::numbers::pi);        // h exact
  k.light_speed = 299792458.0;                               // exact
  k.vacuum_permittivity = 8.8541878128e-12;
  k.bohr_radius_a0 = k.hbar / (k.fine_structure_alpha * k.electron_mass * k.light_speed);
  k.hartree = k.fine_structure_alpha * k.fine_structure_alpha * k.electron_mass *
              k.light_speed * k.light_speed;
  return k;
}

// Joules per unit.
double joules_per(EnergyUnit u) {
  const auto& k = PhysicalConstants::codata2018();
  switch (u) {
    case EnergyUnit::hartree:
      return k.hartree;
    case EnergyUnit::electron_volt:
      return k.elementary_charge;
    case EnergyUnit::joule:
      return 1.0;
  }
  throw ConfigError("unknown energy unit");
}

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

}  // namespace

const PhysicalConstants& PhysicalConstants::codata2018() {
  static const PhysicalConstants k = make_codata2018();
  return k;
}

EnergyUnit parse_energy_unit(std::string_view name) {
  const std::string s = lower(name);
  if (s == "hartree" || s == "ha") return EnergyUnit::hartree;
  if (s == "ev" || s == "electronvolt" || s == "electron_volt") return EnergyUnit::electron_volt;
  if (s == "j" || s == "joule") return EnergyUnit::joule;
  throw ConfigError("unknown energy unit '" + std::string(name) + "'");
}

double convert_energy(double value, EnergyUnit from, EnergyUnit to) {
  if (from == to) return value;
  // Direct hartree <-> eV factor keeps the round trip to a single rounding.
  const auto& k = PhysicalConstants::codata2018();
  const double ev_per_hartree = k.hartree / k.elementary_charge;
  if (from == EnergyUnit::hartree && to == EnergyUnit::electron_volt) return value * ev_per_hartree;
  if (from == EnergyUnit::electron_volt && to == EnergyUnit::hartree) return value / ev_per_hartree;
  return value * joules_per(from) / joules_per(to);
}

double vector_potential_unit_vspm() {
  const auto& k = PhysicalConstants::codata2018();
  return k.hbar / (k.elementary_charge * k.bohr_radius_a0);
}

double convert_vector_potential(double vspm) {
  if (!(vspm >= 0.0)) throw DomainError("vector potential amplitude must be non-negative");
  return vspm / vector_potential_unit_vspm();
}

double vector_potential_to_vspm(double atomic) {
  if (!(atomic >= 0.0)) throw DomainError("vector potential amplitude must be non-negative");
  return atomic * vector_potential_unit_vspm();
}

double ModelOptions::mass() const {
  if (!reduced_mass) return 1.0;
  const auto& k = PhysicalConstants::codata2018();
  return k.proton_mass / (k.electron_mass + k.proton_mass);
}

}  // namespace rotframe
