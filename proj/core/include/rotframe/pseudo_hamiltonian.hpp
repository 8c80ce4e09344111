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

#include <filesystem>
#include <memory>

#include <Eigen/Core>

#include "rotframe/basis.hpp"
#include "rotframe/units.hpp"

namespace rotframe {

/// Circularly polarised field in the dipole approximation, atomic units.
struct LaserField {
  double amplitude = 0.0;  // vector-potential amplitude A
  double omega = 0.0;      // photon energy, hartree

  /// k = omega / c = omega * alpha, in 1/a0.
  double wavenumber() const;

  /// Throws DomainError unless amplitude >= 0 and omega > 0 (both finite).
  void validate() const;

  /// A in V s / m and photon energy in eV.
  static LaserField from_lab_units(double amplitude_vspm, double photon_energy_ev);
};

/// Dense real symmetric matrix of H0 + omega L_z + A p_x / m + A^2 / 2m.
struct PseudoHamiltonianMatrix {
  std::shared_ptr<const BasisSet> basis;
  LaserField laser;
  ModelOptions model;
  Eigen::MatrixXd entries;

  Eigen::Index dimension() const { return entries.rows(); }
};

/// Diagonal E_n + mu omega (+ A^2 / 2m unless dropped), off-diagonal
/// A <a|p_x|b>. Radial integrals come from the shared RadialTable.
PseudoHamiltonianMatrix assemble(std::shared_ptr<const BasisSet> basis, const LaserField& laser,
                                 const ModelOptions& model = {});
PseudoHamiltonianMatrix assemble(const BasisSet& basis, const LaserField& laser,
                                 const ModelOptions& model = {});

/// Adds delta to every diagonal entry.
PseudoHamiltonianMatrix diagonal_shift(PseudoHamiltonianMatrix matrix, double delta);

/// Binary dump: uint64 dimension, then the lower triangle row by row
/// (row i holds columns 0..i) as little-endian float64. Throws IoError.
void write_matrix_dump(const PseudoHamiltonianMatrix& matrix, const std::filesystem::path& path);

/// Inverse of write_matrix_dump; returns the full symmetric matrix.
Eigen::MatrixXd read_matrix_dump(const std::filesystem::path& path);

}  // namespace rotframe
