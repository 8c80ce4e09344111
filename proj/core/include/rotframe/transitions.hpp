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
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "rotframe/eigensolver.hpp"
#include "rotframe/scan.hpp"

namespace rotframe {

/// W = sum_i C^2_from(i) C^2_to(i).
double averaged_probability(const EigenDecomposition& decomp, const QuantumNumbers& from,
                            const QuantumNumbers& to);

/// |sum_i C_from(i) C_to(i) exp(-i (E_i - mu_to omega) t)|^2, t >= 0 in atomic time units.
double time_resolved_probability(const EigenDecomposition& decomp, const QuantumNumbers& from,
                                 const QuantumNumbers& to, double t);

/// Full matrix W(a, b) over the basis; exactly symmetric.
Eigen::MatrixXd transition_matrix(const EigenDecomposition& decomp);

struct TransitionTable {
  QuantumNumbers initial;
  LaserField laser;
  int n0 = 0;
  /// One entry per basis state, in basis order.
  std::vector<std::pair<QuantumNumbers, double>> probabilities;
  /// Near-degenerate pairs in the block holding the initial state.
  std::vector<DegeneratePair> degeneracies;

  double row_sum() const;
  double probability(const QuantumNumbers& final) const;
  bool degenerate() const { return !degeneracies.empty(); }
};

TransitionTable transition_table(const EigenDecomposition& decomp, const QuantumNumbers& initial,
                                 double degeneracy_gap = 1e-10);

/// Total variation sum_f |W_fine(f) - W_coarse(f)| between two rows over
/// the union of their final states (missing entries count as 0). Both rows
/// sum to 1, so this is the fractional change of the row.
double row_change(const TransitionTable& coarse, const TransitionTable& fine);

using Diagonalizer = std::function<EigenDecomposition(const PseudoHamiltonianMatrix&)>;

struct ScanSettings {
  int n0 = 18;
  QuantumNumbers initial{1, 0, 0};
  ModelOptions model;
  int threads = 1;
  double degeneracy_gap = 1e-10;
  DiagonalizeOptions diagonalize;
  /// Replaces the default diagonalize(matrix, diagonalize) when set.
  Diagonalizer diagonalizer;
};

struct ScanPoint {
  std::size_t index = 0;
  double axis_value = 0.0;  // as given to the scan (a.u.)
  LaserField laser;
  bool ok = false;
  std::string error;
  std::optional<TransitionTable> table;
};

using ScanSink = std::function<void(const ScanPoint&)>;

struct ScanSummary {
  std::size_t points = 0;
  std::size_t failed = 0;
};

/// Fixed amplitude, photon energies `omegas` (hartree, strictly increasing).
/// Points are delivered to `sink` in axis order; a failing point is marked and
/// the scan continues.
ScanSummary spectrum_scan(double amplitude, const std::vector<double>& omegas,
                          const ScanSettings& settings, const ScanSink& sink);

/// Fixed photon energy, amplitudes (a.u., >= 0, strictly increasing).
ScanSummary intensity_scan(double omega, const std::vector<double>& amplitudes,
                           const ScanSettings& settings, const ScanSink& sink);

/// Collects every point in memory.
std::vector<ScanPoint> collect_spectrum(double amplitude, const std::vector<double>& omegas,
                                        const ScanSettings& settings);
std::vector<ScanPoint> collect_intensity(double omega, const std::vector<double>& amplitudes,
                                         const ScanSettings& settings);

/// Single (A, omega) evaluation used by both scans.
ScanPoint evaluate_point(const LaserField& laser, const ScanSettings& settings);

}  // namespace rotframe
