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

#include <compare>
#include <complex>
#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace rotframe {

/// Bound hydrogen state |n l mu>.
struct QuantumNumbers {
  int n = 1;
  int l = 0;
  int mu = 0;

  bool valid() const { return n >= 1 && l >= 0 && l < n && mu >= -l && mu <= l; }
  std::string to_string() const;

  friend auto operator<=>(const QuantumNumbers&, const QuantumNumbers&) = default;
};

/// Throws DomainError unless 1 <= n, 0 <= l < n, |mu| <= l.
QuantumNumbers make_state(int n, int l, int mu);

/// All bound states with n <= n0, ordered lexicographically by (n, l, mu).
class BasisSet {
 public:
  static constexpr int kMaxN0 = 30;

  /// Throws ConfigError unless 1 <= n0 <= kMaxN0.
  explicit BasisSet(int n0);

  int n0() const { return n0_; }
  std::size_t size() const { return states_.size(); }
  const std::vector<QuantumNumbers>& states() const { return states_; }
  const QuantumNumbers& operator[](std::size_t i) const { return states_[i]; }

  bool contains(const QuantumNumbers& q) const { return q.valid() && q.n <= n0_; }
  std::optional<std::size_t> find(const QuantumNumbers& q) const;
  /// Throws DomainError if q is not in the basis.
  std::size_t index_of(const QuantumNumbers& q) const;

  /// n0 (n0 + 1)(2 n0 + 1) / 6.
  static std::size_t size_for(int n0);

 private:
  int n0_;
  std::vector<QuantumNumbers> states_;
};

BasisSet enumerate_basis(int n0);

/// -mass / (2 n^2) hartree; `mass` in electron masses.
double bound_energy(int n, double mass = 1.0);

/// R_nl(r) in atomic units (unit mass), normalised so int R^2 r^2 dr = 1.
/// The i^l phase of the full state is not included.
double radial_wavefunction(int n, int l, double r);

/// dR_nl/dr.
double radial_wavefunction_derivative(int n, int l, double r);

/// Gauss-Laguerre rule mapped onto functions decaying like e^{-scale r}:
///   int_0^inf f(r) dr ~ sum_i weights[i] f(nodes[i]).
/// Exact for e^{-scale r} times a polynomial of degree < 2 * order.
class RadialGrid {
 public:
  RadialGrid(int order, double scale);

  int order() const { return static_cast<int>(nodes_.size()); }
  double scale() const { return scale_; }
  const std::vector<double>& nodes() const { return nodes_; }
  const std::vector<double>& weights() const { return weights_; }

  double integrate(const std::function<double(double)>& f) const;

  /// Order used for a basis truncated at n0.
  static int order_for(int n0) { return 4 * n0 + 20; }

 private:
  double scale_;
  std::vector<double> nodes_;
  std::vector<double> weights_;
};

/// <l_a mu_a| sin(theta) cos(phi) |l_b mu_b> for Condon-Shortley harmonics.
/// Nonzero only for |l_a - l_b| = 1 and |mu_a - mu_b| = 1.
double angular_x(int la, int mua, int lb, int mub);

/// <a|b> by radial quadrature; exactly 0 when (l, mu) differ.
double overlap(const QuantumNumbers& a, const QuantumNumbers& b);

/// Real <a|x|b> between the plain (unphased) states R_nl Y_lmu. Symmetric.
/// With the i^l phases of the basis this element would be imaginary; the
/// phased momentum element relates to it by
///   px(a, b) = (l_b - l_a) * mass * (E_b - E_a) * x(a, b).
double x_matrix_element(const QuantumNumbers& a, const QuantumNumbers& b, double mass = 1.0);

/// Real <a|p_x|b> between the i^l-phased basis states. Symmetric, and zero
/// unless |l_a - l_b| = 1 and |mu_a - mu_b| = 1.
double px_matrix_element(const QuantumNumbers& a, const QuantumNumbers& b, double mass = 1.0);

/// The same element before the imaginary part is dropped:
/// i^{l_b - l_a} (-i) <a|d/dx|b> with the plain states.
std::complex<double> px_matrix_element_complex(const QuantumNumbers& a, const QuantumNumbers& b,
                                               double mass = 1.0);

/// <a|L_z|b> = mu delta_ab.
double lz_matrix_element(const QuantumNumbers& a, const QuantumNumbers& b);

// ----------------------------------------------------- radial integrals

/// int_0^inf R_a R_b r^power dr, evaluated through the Laplace transform of
/// two terminating Kummer functions (unit mass).
double radial_moment(int na, int la, int nb, int lb, int power);

/// int_0^inf R_{n_lo,l} (d/dr + (l + 2)/r) R_{n_hi,l+1} r^2 dr: the radial part
/// of the gradient between l and l + 1 (unit mass).
double radial_gradient(int n_lo, int l, int n_hi);

/// Precomputed radial_gradient / radial_moment(power 3) values for every
/// pair of shells up to n0. Immutable; share through `shared`.
class RadialTable {
 public:
  explicit RadialTable(int n0);

  int n0() const { return n0_; }
  /// radial_gradient(n_lo, l, n_hi); zero when n_lo == n_hi.
  double gradient(int n_lo, int l, int n_hi) const { return gradient_[slot(n_lo, l, n_hi)]; }
  /// radial_moment(n_lo, l, n_hi, l + 1, 3).
  double dipole(int n_lo, int l, int n_hi) const { return dipole_[slot(n_lo, l, n_hi)]; }

  /// Process-wide cache; a table built for a larger n0 is reused.
  static std::shared_ptr<const RadialTable> shared(int n0);

 private:
  std::size_t slot(int n_lo, int l, int n_hi) const;

  int n0_;
  std::vector<double> gradient_;
  std::vector<double> dipole_;
};

/// px_matrix_element using a precomputed table (unit mass).
double px_matrix_element(const RadialTable& table, const QuantumNumbers& a,
                         const QuantumNumbers& b);

}  // namespace rotframe
