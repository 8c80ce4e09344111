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

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <string>

#include "rotframe/error.hpp"
#include "rotframe/specfun.hpp"

namespace rotframe::specfun {

namespace {

constexpr int kCfCap = 200000;
constexpr double kTiny = 1e-300;
constexpr double kEps = 1e-16;

// Below this rho the power series loses at most a couple of digits.
constexpr double kSeriesRho = 2.5;

// F_l(eta, rho) / C_l(eta) from the ascending series
//   rho^{l+1} sum_j B_j rho^j,  B_0 = 1, B_1 = eta/(l+1),
//   j (j + 2l + 1) B_j = 2 eta B_{j-1} - B_{j-2}.
double coulomb_series(int l, double eta, double rho) {
  double b_prev = 1.0;
  double b = eta / (l + 1.0);
  double power = rho;
  double sum = 1.0 + b * rho;
  int quiet = 0;
  for (int j = 2; j < 10000; ++j) {
    const double next = (2.0 * eta * b - b_prev) / (j * (j + 2.0 * l + 1.0));
    b_prev = b;
    b = next;
    power *= rho;
    const double term = b * power;
    sum += term;
    quiet = std::abs(term) <= kEps * std::abs(sum) ? quiet + 1 : 0;
    if (quiet >= 3) break;
  }
  return std::pow(rho, l + 1) * sum;
}

struct Cf1Result {
  double ratio;  // F'_L / F_L
  double sign;   // sign of F_L
};

// F'_L/F_L = S_{L+1} - R^2_{L+1} / (T_{L+1} - R^2_{L+2} / (T_{L+2} - ...)),
// S_j = j/rho + eta/j, R^2_j = 1 + eta^2/j^2, T_j = S_j + S_{j+1}.
// The sign of F_L flips with every negative forward denominator.
Cf1Result coulomb_cf1(int l, double eta, double rho) {
  const double inv_rho = 1.0 / rho;
  const auto s = [&](double j) { return j * inv_rho + eta / j; };
  double f = s(l + 1.0);
  if (f == 0.0) f = kTiny;
  double c = f;
  double d = 0.0;
  double sign = 1.0;
  for (int j = l + 1; j < l + 1 + kCfCap; ++j) {
    const double jj = j;
    const double a = -(1.0 + eta * eta / (jj * jj));
    const double b = (2.0 * jj + 1.0) * (inv_rho + eta / (jj * (jj + 1.0)));
    d = b + a * d;
    if (std::abs(d) < kTiny) d = kTiny;
    c = b + a / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    if (d < 0.0) sign = -sign;
    const double delta = c * d;
    f *= delta;
    if (std::abs(delta - 1.0) < kEps && jj > rho) return {f, sign};
  }
  throw NumericError("Coulomb CF1 did not converge",
                     "l=" + std::to_string(l) + " eta=" + std::to_string(eta) +
                         " rho=" + std::to_string(rho));
}

// (G' + iF') / (G + iF) at L = 0:
//   i (1 - eta/rho) + (i/rho) a_1 / (b_1 + a_2 / (b_2 + ...)),
//   a_k = (i eta + k - 1)(i eta + k), b_k = 2 (rho - eta) + 2 i k.
std::complex<double> coulomb_cf2(double eta, double rho) {
  using C = std::complex<double>;
  const C ieta(0.0, eta);
  const auto a = [&](int k) { return (ieta + double(k - 1)) * (ieta + double(k)); };
  const auto b = [&](int k) { return C(2.0 * (rho - eta), 2.0 * k); };

  // Modified Lentz on the tail a_1 / (b_1 + a_2/(b_2 + ...)), seeded at 0.
  C f(kTiny, 0.0);
  C c = f;
  C d(0.0, 0.0);
  for (int k = 1; k < kCfCap; ++k) {
    d = b(k) + a(k) * d;
    if (std::abs(d) < kTiny) d = kTiny;
    c = b(k) + a(k) / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const C delta = c * d;
    f *= delta;
    if (std::abs(delta - 1.0) < kEps) {
      return C(0.0, 1.0 - eta / rho) + C(0.0, 1.0 / rho) * f;
    }
  }
  throw NumericError("Coulomb CF2 did not converge",
                     "eta=" + std::to_string(eta) + " rho=" + std::to_string(rho));
}

double coulomb_steed(int l, double eta, double rho) {
  const Cf1Result cf1 = coulomb_cf1(l, eta, rho);

  // Downward recurrence of the unnormalised pair (F_L, F'_L) to L = 0:
  //   F_{L-1} = (S_L F_L + F'_L) / R_L,  F'_{L-1} = S_L F_{L-1} - R_L F_L.
  double f_l = cf1.sign;
  double fp_l = cf1.ratio * f_l;
  const double f_top = f_l;
  double scale = 1.0;
  for (int big_l = l; big_l >= 1; --big_l) {
    const double ll = big_l;
    const double s = ll / rho + eta / ll;
    const double r = std::sqrt(1.0 + eta * eta / (ll * ll));
    const double f_lower = (s * f_l + fp_l) / r;
    fp_l = s * f_lower - r * f_l;
    f_l = f_lower;
    if (std::abs(f_l) > 1e200) {
      f_l *= 1e-200;
      fp_l *= 1e-200;
      scale *= 1e-200;
    }
  }

  // Wronskian F'G - FG' = 1 with G = gamma F, G' = (p gamma - q) F.
  const std::complex<double> pq = coulomb_cf2(eta, rho);
  const double p = pq.real();
  const double q = pq.imag();
  const double f0 = fp_l / f_l;
  const double gamma = (f0 - p) / q;
  const double norm = 1.0 / std::sqrt((f0 - p) * gamma + q);
  // F_0 carries the sign of the recurrence; F_l = F_0 * f_top * scale / f_l.
  return norm * f_top * scale / std::abs(f_l);
}

}  // namespace

double coulomb_normalization(int l, double eta) {
  // e^{-pi eta/2} |Gamma(1 + i eta)| = sqrt(2 pi eta / (e^{2 pi eta} - 1)).
  const double x = 2.0 * std::numbers::pi * eta;
  const double lead = x == 0.0 ? 1.0 : x / std::expm1(x);
  double log_c = l * std::log(2.0) + 0.5 * std::log(lead) - std::lgamma(2.0 * l + 2.0);
  for (int s = 1; s <= l; ++s) log_c += 0.5 * std::log(s * double(s) + eta * eta);
  return std::exp(log_c);
}

double coulomb_f(int l, double eta, double rho) {
  if (l < 0) throw DomainError("Coulomb function needs l >= 0");
  if (!(rho > 0.0)) throw DomainError("Coulomb function needs rho > 0");
  if (rho < kSeriesRho) return coulomb_normalization(l, eta) * coulomb_series(l, eta, rho);
  return coulomb_steed(l, eta, rho);
}

double coulomb_radial(double energy, int l, double r, double charge) {
  if (!(energy > 0.0)) throw DomainError("continuum energy must be positive");
  if (!(r > 0.0)) throw DomainError("radius must be positive");
  const double k = std::sqrt(2.0 * energy);
  const double eta = -charge / k;
  return std::sqrt(2.0 / (std::numbers::pi * k)) * coulomb_f(l, eta, k * r);
}

}  // namespace rotframe::specfun
