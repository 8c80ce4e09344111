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

#include <string_view>

namespace rotframe {

/// SI values of the constants the model needs (CODATA 2018).
///
/// The primary constants are stored at full published precision; the Bohr
/// radius and the hartree are derived from them so that
/// a0 = hbar / (alpha m c) and Eh = alpha^2 m c^2 hold to rounding.
struct PhysicalConstants {
  double fine_structure_alpha;
  double electron_mass;        // kg
  double proton_mass;          // kg
  double elementary_charge;    // C
  double hbar;                 // J s
  double light_speed;          // m / s
  double bohr_radius_a0;       // m
  double hartree;              // J
  double vacuum_permittivity;  // F / m

  /// Ground-state binding energy of hydrogen with an infinitely heavy
  /// nucleus, in hartree.
  static constexpr double binding_energy = 0.5;

  static const PhysicalConstants& codata2018();

  /// Short tag for metadata output.
  static constexpr std::string_view version = "CODATA 2018";
};

enum class EnergyUnit { hartree, electron_volt, joule };

/// Accepts "hartree"/"Ha", "eV"/"electronvolt", "J"/"joule" (case-insensitive).
/// Throws ConfigError on anything else.
EnergyUnit parse_energy_unit(std::string_view name);

double convert_energy(double value, EnergyUnit from, EnergyUnit to);

inline double ev_to_hartree(double ev) {
  return convert_energy(ev, EnergyUnit::electron_volt, EnergyUnit::hartree);
}
inline double hartree_to_ev(double ha) {
  return convert_energy(ha, EnergyUnit::hartree, EnergyUnit::electron_volt);
}

/// Atomic unit of vector potential, hbar / (e a0), in V s / m.
double vector_potential_unit_vspm();

/// V s / m -> atomic units. Throws DomainError for negative input.
double convert_vector_potential(double vspm);

/// Atomic units -> V s / m. Throws DomainError for negative input.
double vector_potential_to_vspm(double atomic);

/// Model switches that change the physics, shared by every stage.
struct ModelOptions {
  /// Use the electron-proton reduced mass instead of the electron mass.
  bool reduced_mass = false;
  /// Keep the A^2/2m constant on the pseudo-Hamiltonian diagonal.
  bool keep_a2 = true;

  /// Particle mass in units of the electron mass.
  double mass() const;
};

}  // namespace rotframe
