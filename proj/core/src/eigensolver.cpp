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

#include "rotframe/eigensolver.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include <lapacke.h>

#include "rotframe/error.hpp"

namespace rotframe {

std::vector<int> coupling_blocks(const Eigen::MatrixXd& matrix) {
  const Eigen::Index dim = matrix.rows();
  std::vector<Eigen::Index> parent(static_cast<std::size_t>(dim));
  std::iota(parent.begin(), parent.end(), Eigen::Index{0});
  const auto root = [&](Eigen::Index i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (Eigen::Index j = 0; j < dim; ++j) {
    for (Eigen::Index i = j + 1; i < dim; ++i) {
      if (matrix(i, j) == 0.0) continue;
      const Eigen::Index a = root(i);
      const Eigen::Index b = root(j);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::vector<int> label(static_cast<std::size_t>(dim), -1);
  std::vector<int> root_label(static_cast<std::size_t>(dim), -1);
  int next = 0;
  for (Eigen::Index i = 0; i < dim; ++i) {
    const Eigen::Index r = root(i);
    if (root_label[r] < 0) root_label[r] = next++;
    label[i] = root_label[r];
  }
  return label;
}

namespace {

// Eigenpairs of one dense block via LAPACK divide and conquer.
void solve_block(Eigen::MatrixXd& a, Eigen::VectorXd& w) {
  const auto n = static_cast<lapack_int>(a.rows());
  w.resize(n);
  if (n == 1) {
    w(0) = a(0, 0);
    a(0, 0) = 1.0;
    return;
  }
  const lapack_int info =
      LAPACKE_dsyevd(LAPACK_COL_MAJOR, 'V', 'L', n, a.data(), n, w.data());
  if (info != 0) {
    std::ostringstream diag;
    diag << "dsyevd info=" << info << " block dimension=" << n;
    if (info > 0) diag << " (" << info << " eigenvalues failed to converge)";
    throw NumericError("symmetric eigensolver failed", diag.str());
  }
}

void fix_signs(Eigen::MatrixXd& c) {
  for (Eigen::Index col = 0; col < c.cols(); ++col) {
    const double biggest = c.col(col).cwiseAbs().maxCoeff();
    for (Eigen::Index row = 0; row < c.rows(); ++row) {
      if (std::abs(c(row, col)) >= biggest * (1.0 - 1e-12)) {
        if (c(row, col) < 0.0) c.col(col) *= -1.0;
        break;
      }
    }
  }
}

EigenDecomposition solve(const Eigen::MatrixXd& h, const DiagonalizeOptions& options) {
  const Eigen::Index dim = h.rows();
  if (h.cols() != dim || dim == 0) throw DomainError("diagonalize: matrix must be square, nonempty");
  if (!h.allFinite()) throw DomainError("diagonalize: matrix has non-finite entries");

  std::vector<int> label =
      options.split_blocks ? coupling_blocks(h) : std::vector<int>(static_cast<std::size_t>(dim), 0);
  const int blocks = label.empty() ? 0 : *std::max_element(label.begin(), label.end()) + 1;
  std::vector<std::vector<Eigen::Index>> members(static_cast<std::size_t>(blocks));
  for (Eigen::Index i = 0; i < dim; ++i) members[label[i]].push_back(i);

  struct Pair {
    double energy;
    int block;
    Eigen::Index position;  // column within the stacked block results
  };
  std::vector<Pair> pairs;
  pairs.reserve(static_cast<std::size_t>(dim));
  Eigen::MatrixXd stacked = Eigen::MatrixXd::Zero(dim, dim);
  Eigen::Index column = 0;
  for (int b = 0; b < blocks; ++b) {
    const auto& idx = members[b];
    const auto n = static_cast<Eigen::Index>(idx.size());
    Eigen::MatrixXd sub(n, n);
    for (Eigen::Index j = 0; j < n; ++j)
      for (Eigen::Index i = j; i < n; ++i) sub(i, j) = h(std::max(idx[i], idx[j]), std::min(idx[i], idx[j]));
    Eigen::VectorXd w;
    solve_block(sub, w);
    for (Eigen::Index k = 0; k < n; ++k) {
      for (Eigen::Index i = 0; i < n; ++i) stacked(idx[i], column) = sub(i, k);
      pairs.push_back({w(k), b, column});
      ++column;
    }
  }
  std::stable_sort(pairs.begin(), pairs.end(),
                   [](const Pair& x, const Pair& y) { return x.energy < y.energy; });

  EigenDecomposition d;
  d.energies.resize(dim);
  d.coefficients.resize(dim, dim);
  d.block.resize(static_cast<std::size_t>(dim));
  for (Eigen::Index k = 0; k < dim; ++k) {
    d.energies(k) = pairs[k].energy;
    d.coefficients.col(k) = stacked.col(pairs[k].position);
    d.block[k] = pairs[k].block;
  }
  fix_signs(d.coefficients);
  d.matrix_norm = std::max(std::abs(d.energies(0)), std::abs(d.energies(dim - 1)));

  if (options.verify) {
    const DecompositionCheck check = check_decomposition(h, d);
    d.max_residual = check.max_residual;
    d.orthonormality_error = check.orthonormality_error;
    const double scale = d.matrix_norm > 0.0 ? d.matrix_norm : 1.0;
    if (check.max_residual > options.residual_tolerance * scale ||
        check.orthonormality_error > options.orthonormality_tolerance) {
      std::ostringstream diag;
      diag << "max residual=" << check.max_residual << " ||H||=" << d.matrix_norm
           << " orthonormality error=" << check.orthonormality_error;
      throw NumericError("eigendecomposition failed verification", diag.str());
    }
  }
  return d;
}

}  // namespace

DecompositionCheck check_decomposition(const Eigen::MatrixXd& matrix,
                                       const EigenDecomposition& decomp) {
  const Eigen::MatrixXd h = matrix.selfadjointView<Eigen::Lower>();
  const Eigen::MatrixXd& c = decomp.coefficients;
  DecompositionCheck out;
  const Eigen::MatrixXd r = h * c - c * decomp.energies.asDiagonal();
  out.max_residual = r.colwise().norm().maxCoeff();
  Eigen::MatrixXd g = c.transpose() * c;
  g.diagonal().array() -= 1.0;
  out.orthonormality_error = g.cwiseAbs().maxCoeff();
  return out;
}

EigenDecomposition diagonalize(const Eigen::MatrixXd& matrix, const DiagonalizeOptions& options) {
  return solve(matrix, options);
}

EigenDecomposition diagonalize(const PseudoHamiltonianMatrix& matrix,
                               const DiagonalizeOptions& options) {
  EigenDecomposition d = solve(matrix.entries, options);
  d.basis = matrix.basis;
  d.laser = matrix.laser;
  d.model = matrix.model;
  return d;
}

TrackedState track_state(const EigenDecomposition& decomp, const QuantumNumbers& target) {
  if (!decomp.basis) throw DomainError("track_state needs a decomposition with a basis");
  const auto row = static_cast<Eigen::Index>(decomp.basis->index_of(target));
  TrackedState t;
  for (Eigen::Index i = 0; i < decomp.size(); ++i) {
    const double c = decomp.coefficients(row, i);
    // Strict comparison keeps the lower-energy state on exact ties.
    if (c * c > t.overlap) {
      t.overlap = c * c;
      t.index = static_cast<std::size_t>(i);
    }
  }
  if (t.overlap < 0.5) {
    t.ambiguous = true;
    std::ostringstream msg;
    msg << "state " << target.to_string() << " is strongly mixed: largest weight "
        << t.overlap << " in dressed state " << t.index;
    t.warning = msg.str();
  }
  return t;
}

std::vector<DegeneratePair> near_degeneracies(const EigenDecomposition& decomp, double gap) {
  std::vector<DegeneratePair> out;
  // Walk each block's own ascending sequence.
  std::vector<Eigen::Index> last(decomp.block.size(), -1);
  for (Eigen::Index i = 0; i < decomp.size(); ++i) {
    const int b = decomp.block[i];
    const Eigen::Index prev = last[b];
    if (prev >= 0) {
      const double g = decomp.energies(i) - decomp.energies(prev);
      if (g < gap) out.push_back({static_cast<std::size_t>(prev), static_cast<std::size_t>(i), g});
    }
    last[b] = i;
  }
  return out;
}

}  // namespace rotframe
