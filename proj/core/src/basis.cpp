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

#include "rotframe/basis.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <utility>

#include <Eigen/Eigenvalues>

#include "rotframe/error.hpp"

namespace rotframe {

std::string QuantumNumbers::to_string() const {
  return "(" + std::to_string(n) + "," + std::to_string(l) + "," + std::to_string(mu) + ")";
}

QuantumNumbers make_state(int n, int l, int mu) {
  const QuantumNumbers q{n, l, mu};
  if (!q.valid()) throw DomainError("invalid quantum numbers " + q.to_string());
  return q;
}

// ------------------------------------------------------------- BasisSet

BasisSet::BasisSet(int n0) : n0_(n0) {
  if (n0 < 1 || n0 > kMaxN0) {
    throw ConfigError("n0 must lie in [1, " + std::to_string(kMaxN0) + "], got " +
                      std::to_string(n0));
  }
  states_.reserve(size_for(n0));
  for (int n = 1; n <= n0; ++n)
    for (int l = 0; l < n; ++l)
      for (int mu = -l; mu <= l; ++mu) states_.push_back({n, l, mu});
}

std::size_t BasisSet::size_for(int n0) {
  const auto n = static_cast<std::size_t>(n0);
  return n * (n + 1) * (2 * n + 1) / 6;
}

std::optional<std::size_t> BasisSet::find(const QuantumNumbers& q) const {
  if (!contains(q)) return std::nullopt;
  // Shells below n hold sum_{k<n} k^2 states; within the shell, l^2 precede l.
  return size_for(q.n - 1) + static_cast<std::size_t>(q.l * q.l + q.mu + q.l);
}

std::size_t BasisSet::index_of(const QuantumNumbers& q) const {
  if (auto i = find(q)) return *i;
  throw DomainError("state " + q.to_string() + " is not in the n0=" + std::to_string(n0_) +
                    " basis");
}

BasisSet enumerate_basis(int n0) { return BasisSet(n0); }

double bound_energy(int n, double mass) {
  if (n < 1) throw DomainError("principal quantum number must be >= 1");
  return -mass / (2.0 * n * static_cast<double>(n));
}

// ---------------------------------------------------- radial functions

namespace {

// Generalised Laguerre L_k^alpha(t) and L_{k-1}^{alpha+1}(t) by upward
// recurrence (stable in the oscillatory region).
double laguerre(int k, double alpha, double t) {
  if (k < 0) return 0.0;
  double prev = 1.0;
  if (k == 0) return prev;
  double cur = 1.0 + alpha - t;
  for (int j = 1; j < k; ++j) {
    const double next = ((2.0 * j + 1.0 + alpha - t) * cur - (j + alpha) * prev) / (j + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

// log of sqrt((2/n)^3 (n-l-1)! / (2n (n+l)!)).
double log_radial_prefactor(int n, int l) {
  return 0.5 * (3.0 * std::log(2.0 / n) + std::lgamma(n - l) - std::log(2.0 * n) -
                std::lgamma(n + l + 1.0));
}

}  // namespace

double radial_wavefunction(int n, int l, double r) {
  if (n < 1 || l < 0 || l >= n) throw DomainError("invalid (n, l) for radial function");
  if (r < 0.0) throw DomainError("radius must be non-negative");
  const double t = 2.0 * r / n;
  const double poly = laguerre(n - l - 1, 2.0 * l + 1.0, t);
  if (t == 0.0) return l == 0 ? std::exp(log_radial_prefactor(n, l)) * poly : 0.0;
  return std::exp(log_radial_prefactor(n, l) + l * std::log(t) - 0.5 * t) * poly;
}

double radial_wavefunction_derivative(int n, int l, double r) {
  if (n < 1 || l < 0 || l >= n) throw DomainError("invalid (n, l) for radial function");
  if (r < 0.0) throw DomainError("radius must be non-negative");
  const int k = n - l - 1;
  const double alpha = 2.0 * l + 1.0;
  const double t = 2.0 * r / n;
  const double poly = laguerre(k, alpha, t);
  const double dpoly = -laguerre(k - 1, alpha + 1.0, t);
  const double pref = std::exp(log_radial_prefactor(n, l) - 0.5 * t) * 2.0 / n;
  // d/dt [t^l e^{-t/2} L(t)] = l t^{l-1} L - t^l L / 2 + t^l L'.
  double inner = 0.0;
  if (l == 0) {
    inner = -0.5 * poly + dpoly;
  } else if (t == 0.0) {
    inner = l == 1 ? poly : 0.0;
  } else {
    const double tl1 = std::pow(t, l - 1);
    inner = l * tl1 * poly + tl1 * t * (dpoly - 0.5 * poly);
  }
  return pref * inner;
}

// ----------------------------------------------------------- RadialGrid

namespace {

struct LaguerreRule {
  std::vector<double> nodes;
  std::vector<double> log_weights_times_exp;  // log(w_i e^{x_i})
};

LaguerreRule build_laguerre_rule(int order) {
  // Golub-Welsch for starting values, then Newton on L_N for full accuracy.
  Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(order, order);
  for (int i = 0; i < order; ++i) {
    jacobi(i, i) = 2.0 * i + 1.0;
    if (i + 1 < order) jacobi(i, i + 1) = jacobi(i + 1, i) = i + 1.0;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(jacobi, Eigen::EigenvaluesOnly);
  LaguerreRule rule;
  rule.nodes.resize(order);
  rule.log_weights_times_exp.resize(order);
  for (int i = 0; i < order; ++i) {
    double x = solver.eigenvalues()[i];
    double ln_next = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      // L_N(x), L_{N-1}(x) by recurrence; L_N' = N (L_N - L_{N-1}) / x.
      double p_prev = 1.0;
      double p = 1.0 - x;
      for (int j = 1; j < order; ++j) {
        const double next = ((2.0 * j + 1.0 - x) * p - j * p_prev) / (j + 1.0);
        p_prev = p;
        p = next;
      }
      const double dp = order * (p - p_prev) / x;
      const double step = p / dp;
      x -= step;
      if (std::abs(step) <= 1e-15 * x) {
        // L_{N+1}(x_i) = -N L_{N-1}(x_i) / (N + 1) at a root of L_N.
        ln_next = std::log(std::abs(order * p_prev / (order + 1.0)));
        break;
      }
      ln_next = std::log(std::abs(order * p_prev / (order + 1.0)));
    }
    rule.nodes[i] = x;
    // w_i = x_i / ((N+1)^2 L_{N+1}(x_i)^2).
    rule.log_weights_times_exp[i] = std::log(x) - 2.0 * std::log(order + 1.0) - 2.0 * ln_next + x;
  }
  return rule;
}

const LaguerreRule& laguerre_rule(int order) {
  static std::mutex mutex;
  static std::map<int, LaguerreRule> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(order);
  if (it == cache.end()) it = cache.emplace(order, build_laguerre_rule(order)).first;
  return it->second;
}

}  // namespace

RadialGrid::RadialGrid(int order, double scale) : scale_(scale) {
  if (order < 1) throw DomainError("quadrature order must be positive");
  if (!(scale > 0.0)) throw DomainError("quadrature scale must be positive");
  const LaguerreRule& rule = laguerre_rule(order);
  nodes_.resize(order);
  weights_.resize(order);
  for (int i = 0; i < order; ++i) {
    nodes_[i] = rule.nodes[i] / scale;
    weights_[i] = std::exp(rule.log_weights_times_exp[i]) / scale;
  }
}

double RadialGrid::integrate(const std::function<double(double)>& f) const {
  double sum = 0.0;
  for (std::size_t i = 0; i < nodes_.size(); ++i) sum += weights_[i] * f(nodes_[i]);
  return sum;
}

// ------------------------------------------------------ matrix elements

double angular_x(int la, int mua, int lb, int mub) {
  if (std::abs(la - lb) != 1 || std::abs(mua - mub) != 1) return 0.0;
  // Evaluate from the lower-l side so that (a, b) and (b, a) agree bitwise.
  if (la > lb) {
    std::swap(la, lb);
    std::swap(mua, mub);
  }
  // a = (l, m), b = (l + 1, m +- 1).
  const double l = la;
  const double m = mua;
  const double den = (2.0 * l + 1.0) * (2.0 * l + 3.0);
  if (mub == mua - 1) return 0.5 * std::sqrt((l - m + 1.0) * (l - m + 2.0) / den);
  return -0.5 * std::sqrt((l + m + 1.0) * (l + m + 2.0) / den);
}

double overlap(const QuantumNumbers& a, const QuantumNumbers& b) {
  if (!a.valid() || !b.valid()) throw DomainError("invalid state in overlap");
  if (a.l != b.l || a.mu != b.mu) return 0.0;
  const RadialGrid grid(RadialGrid::order_for(std::max(a.n, b.n)), 1.0 / a.n + 1.0 / b.n);
  return grid.integrate([&](double r) {
    return radial_wavefunction(a.n, a.l, r) * radial_wavefunction(b.n, b.l, r) * r * r;
  });
}

double x_matrix_element(const QuantumNumbers& a, const QuantumNumbers& b, double mass) {
  if (!a.valid() || !b.valid()) throw DomainError("invalid state in x matrix element");
  const double ang = angular_x(a.l, a.mu, b.l, b.mu);
  if (ang == 0.0) return 0.0;
  const auto& lo = a.l < b.l ? a : b;
  const auto& hi = a.l < b.l ? b : a;
  return ang * radial_moment(lo.n, lo.l, hi.n, hi.l, 3) / mass;
}

std::complex<double> px_matrix_element_complex(const QuantumNumbers& a, const QuantumNumbers& b,
                                               double mass) {
  if (!a.valid() || !b.valid()) throw DomainError("invalid state in p_x matrix element");
  const double ang = angular_x(a.l, a.mu, b.l, b.mu);
  // Within a shell p_x = i m [H0, x] vanishes; keep it exactly zero.
  if (ang == 0.0 || a.n == b.n) return 0.0;
  const bool a_low = a.l < b.l;
  const auto& lo = a_low ? a : b;
  const auto& hi = a_low ? b : a;
  // <a|d/dx|b>; the gradient is anti-symmetric between real states.
  const double grad = (a_low ? 1.0 : -1.0) * ang * radial_gradient(lo.n, lo.l, hi.n);
  static constexpr std::complex<double> powers_of_i[] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  const std::complex<double> phase = powers_of_i[((b.l - a.l) % 4 + 4) % 4];
  return mass * phase * std::complex<double>(0.0, -1.0) * grad;
}

double px_matrix_element(const QuantumNumbers& a, const QuantumNumbers& b, double mass) {
  return px_matrix_element_complex(a, b, mass).real();
}

double lz_matrix_element(const QuantumNumbers& a, const QuantumNumbers& b) {
  if (!a.valid() || !b.valid()) throw DomainError("invalid state in L_z matrix element");
  return a == b ? static_cast<double>(a.mu) : 0.0;
}

double px_matrix_element(const RadialTable& table, const QuantumNumbers& a,
                         const QuantumNumbers& b) {
  const double ang = angular_x(a.l, a.mu, b.l, b.mu);
  if (ang == 0.0) return 0.0;
  const auto& lo = a.l < b.l ? a : b;
  const auto& hi = a.l < b.l ? b : a;
  return ang * table.gradient(lo.n, lo.l, hi.n);
}

// ----------------------------------------------------------- RadialTable

RadialTable::RadialTable(int n0) : n0_(n0) {
  if (n0 < 1 || n0 > BasisSet::kMaxN0) throw ConfigError("RadialTable: n0 out of range");
  const auto n = static_cast<std::size_t>(n0);
  gradient_.assign(n * n * n, 0.0);
  dipole_.assign(n * n * n, 0.0);
  for (int n_lo = 1; n_lo <= n0; ++n_lo) {
    for (int n_hi = 2; n_hi <= n0; ++n_hi) {
      for (int l = 0; l < n_lo && l + 1 < n_hi; ++l) {
        const std::size_t i = slot(n_lo, l, n_hi);
        dipole_[i] = radial_moment(n_lo, l, n_hi, l + 1, 3);
        // Degenerate shells: <a|p|b> = i (E_a - E_b) <a|x|b> vanishes.
        gradient_[i] = n_lo == n_hi ? 0.0 : radial_gradient(n_lo, l, n_hi);
      }
    }
  }
}

std::size_t RadialTable::slot(int n_lo, int l, int n_hi) const {
  if (n_lo < 1 || n_hi < 1 || n_lo > n0_ || n_hi > n0_ || l < 0 || l >= n0_) {
    throw DomainError("RadialTable: shell outside the table");
  }
  const auto n = static_cast<std::size_t>(n0_);
  return (static_cast<std::size_t>(n_lo - 1) * n + static_cast<std::size_t>(n_hi - 1)) * n +
         static_cast<std::size_t>(l);
}

std::shared_ptr<const RadialTable> RadialTable::shared(int n0) {
  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const RadialTable>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.lower_bound(n0);
  if (it != cache.end()) return it->second;
  auto table = std::make_shared<const RadialTable>(n0);
  cache.emplace(n0, table);
  return table;
}

}  // namespace rotframe
