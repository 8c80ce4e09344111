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

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "rotframe/eigensolver.hpp"
#include "rotframe/scan.hpp"
#include "rotframe/transitions.hpp"

namespace rotframe {

/// Energy-normalised Coulomb partial wave i^l R_El(r) Y_lmu, so the density
/// of final states is 1 per unit energy.
struct ContinuumState {
  double energy = 0.0;  // E_f0, hartree
  int l = 0;
  int mu = 0;

  /// Throws DomainError unless energy > 0 and |mu| <= l.
  void validate() const;
};

struct IonizationRecord {
  std::size_t dressed_index = 0;
  double E_i = 0.0;  // pseudo-energy, hartree
  int mu_branch = 0;
  double E_f0 = 0.0;  // hartree
  double eta = 0.0;
  /// Partial amplitudes indexed by the final l (zero below |mu_branch|).
  std::vector<std::complex<double>> beta_l;
  double rate = 0.0;   // 1 / atomic time
  double sigma = 0.0;  // pi a0^2
};

/// E_i - mu omega. Non-positive results mark closed channels.
double photoelectron_energy(double E_i, int mu_branch, double omega);

/// (E_i + b) / omega - mu with b = mass / 2.
double eta_index(double E_i, double omega, int mu_branch, double mass = 1.0);

/// int_0^inf R_El(r) R_nl'(r) r^power dr for unit mass, via the Laplace
/// transform of the bound polynomial times the continuum Kummer function.
double continuum_radial_moment(double energy, int l_final, int n, int l, int power);

/// Phased <f|p_x|b> (continuum final, bound initial), real in this convention.
double bound_free_px(const ContinuumState& final, const QuantumNumbers& bound, double mass = 1.0);

/// <f|b>; zero by orthogonality up to rounding, kept for the A^2 term.
double bound_free_overlap(const ContinuumState& final, const QuantumNumbers& bound,
                          double mass = 1.0);

/// <f| A p_x / m + A^2 / 2m |phi_i> for dressed state i.
std::complex<double> bound_free_element(const EigenDecomposition& decomp,
                                        std::size_t dressed_index, const ContinuumState& final);

struct IonizationOptions {
  /// Largest final partial wave; -1 means n0 (largest bound l plus one).
  int max_partial_wave = -1;
};

struct IonizationResult {
  std::vector<IonizationRecord> records;  // open branches, mu ascending
  double total_rate = 0.0;
  double total_sigma = 0.0;
};

/// Golden-rule rates P = 2 pi sum_l |H''_l|^2 and cross sections
/// sigma = 16 alpha v / omega sum_l |beta_l|^2 (pi a0^2),
/// beta_l = sqrt(pi / 2v) H''_l / A, for every open branch.
IonizationResult ionize(const EigenDecomposition& decomp, std::size_t dressed_index,
                        const IonizationOptions& options = {});

double ionization_rate(const EigenDecomposition& decomp, std::size_t dressed_index,
                       const IonizationOptions& options = {});
double cross_section(const EigenDecomposition& decomp, std::size_t dressed_index,
                     const IonizationOptions& options = {});

struct IonizationPoint {
  std::size_t index = 0;
  LaserField laser;
  bool ok = false;
  std::string error;
  TrackedState tracked;
  double energy = 0.0;  // pseudo-energy of the tracked state, hartree
  IonizationResult result;
};

using IonizationSink = std::function<void(const IonizationPoint&)>;

/// Fixed omega, amplitudes strictly increasing; tracks `settings.initial`.
ScanSummary ionization_intensity_scan(double omega, const std::vector<double>& amplitudes,
                                      const ScanSettings& settings, const IonizationSink& sink,
                                      const IonizationOptions& options = {});

}  // namespace rotframe
