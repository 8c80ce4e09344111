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
#include <memory>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "rotframe/basis.hpp"
#include "rotframe/pseudo_hamiltonian.hpp"

namespace rotframe {

struct DiagonalizeOptions {
  /// Check residuals and orthonormality after solving; NumericError if violated.
  bool verify = true;
  double residual_tolerance = 1e-9;        // relative to ||H||_2
  double orthonormality_tolerance = 1e-9;  // max |C^T C - I|
  /// Solve decoupled blocks of the matrix separately.
  bool split_blocks = true;
};

/// Energies ascending; column i of `coefficients` is eigenvector i, with the
/// largest-magnitude component positive (first such index on ties).
struct EigenDecomposition {
  std::shared_ptr<const BasisSet> basis;  // null for raw matrices
  LaserField laser;
  ModelOptions model;
  Eigen::VectorXd energies;
  Eigen::MatrixXd coefficients;
  /// Connected block of the matrix each eigenvector lives in.
  std::vector<int> block;
  double matrix_norm = 0.0;  // ||H||_2
  double max_residual = 0.0;
  double orthonormality_error = 0.0;

  Eigen::Index size() const { return energies.size(); }
};

EigenDecomposition diagonalize(const PseudoHamiltonianMatrix& matrix,
                               const DiagonalizeOptions& options = {});

/// Raw symmetric matrix; only the lower triangle is read.
EigenDecomposition diagonalize(const Eigen::MatrixXd& matrix, const DiagonalizeOptions& options = {});

/// Connected components of the nonzero pattern; labels are assigned in
/// order of the lowest index in each component.
std::vector<int> coupling_blocks(const Eigen::MatrixXd& matrix);

/// Largest |H c_i - E_i c_i| over columns, and max |C^T C - I|.
struct DecompositionCheck {
  double max_residual = 0.0;
  double orthonormality_error = 0.0;
};
DecompositionCheck check_decomposition(const Eigen::MatrixXd& matrix,
                                       const EigenDecomposition& decomp);

struct TrackedState {
  std::size_t index = 0;
  double overlap = 0.0;  // C^2_target(index)
  bool ambiguous = false;
  std::string warning;
};

/// Dressed state with the largest weight on `target`; ties go to the lower
/// energy. Flags an ambiguity when that weight is below 0.5.
TrackedState track_state(const EigenDecomposition& decomp, const QuantumNumbers& target);

struct DegeneratePair {
  std::size_t first = 0;
  std::size_t second = 0;
  double gap = 0.0;
};

/// Adjacent eigenvalues of the same block closer than `gap`. Pairs from
/// different blocks do not mix and are not reported.
std::vector<DegeneratePair> near_degeneracies(const EigenDecomposition& decomp, double gap = 1e-10);

}  // namespace rotframe
