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

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

namespace rotframe::specfun {

/// 50-digit types for sums that cancel catastrophically in double
/// (terminating hypergeometric polynomials with n up to ~30).
using HighReal = boost::multiprecision::cpp_bin_float_50;
using HighComplex = boost::multiprecision::cpp_complex_50;

template <class T>
struct scalar_traits;

template <>
struct scalar_traits<double> {
  using real_type = double;
  static constexpr bool is_complex = false;
  static double re(double x) { return x; }
  static double im(double) { return 0.0; }
};

template <>
struct scalar_traits<std::complex<double>> {
  using real_type = double;
  static constexpr bool is_complex = true;
  static double re(const std::complex<double>& z) { return z.real(); }
  static double im(const std::complex<double>& z) { return z.imag(); }
};

template <>
struct scalar_traits<HighReal> {
  using real_type = HighReal;
  static constexpr bool is_complex = false;
  static HighReal re(const HighReal& x) { return x; }
  static HighReal im(const HighReal&) { return HighReal(0); }
};

template <>
struct scalar_traits<HighComplex> {
  using real_type = HighReal;
  static constexpr bool is_complex = true;
  static HighReal re(const HighComplex& z) { return z.real(); }
  static HighReal im(const HighComplex& z) { return z.imag(); }
};

template <class T>
using real_of = typename scalar_traits<T>::real_type;

/// True when x is 0, -1, -2, ... (exactly, with zero imaginary part).
template <class T>
bool is_nonpositive_integer(const T& x);

// ---------------------------------------------------------------- Gamma

/// Gamma function. Throws DomainError at the poles 0, -1, -2, ...
double gamma_fn(double z);
std::complex<double> gamma_fn(std::complex<double> z);
HighReal gamma_fn(const HighReal& z);

// --------------------------------------------------- Kummer 1F1(a; c; t)

template <class T>
struct KummerParams {
  T a;
  real_of<T> c;

  /// a is a non-positive integer, so the series is a polynomial.
  bool terminating() const { return is_nonpositive_integer(a); }
  /// Number of series terms, (-a)+1, for a terminating series; -1 otherwise.
  int term_count() const;
};

/// Confluent hypergeometric function F(a, c, t).
///
/// Terminating parameters are summed exactly term by term. Otherwise the
/// series is summed until the term ratio drops below 1e-16; large negative
/// real arguments go through Kummer's transformation e^t F(c-a, c, -t).
/// Throws DomainError if c is a pole, NumericError if the series does not
/// settle within the iteration cap.
template <class T>
T kummer_1f1(const KummerParams<T>& p, const T& t);

// ---------------------------------------- Appell F2(u; a1, a2; c1, c2; x, y)

template <class T>
struct AppellF2Params {
  real_of<T> u;
  T a1;
  T a2;
  real_of<T> c1;
  real_of<T> c2;
  T x;
  T y;
};

/// Appell's second double hypergeometric series
///
///   F2 = sum_{m,n} (u)_{m+n} (a1)_m (a2)_n / ((c1)_m (c2)_n m! n!) x^m y^n.
///
/// An index whose numerator parameter is a non-positive integer is summed
/// exactly. When the other index does not terminate, its inner series is a
/// Gauss 2F1(u+m, a; c; z); for |z| >= 1 it is continued through Euler's
/// transformation (1-z)^{c-b-a'} 2F1(c-a', c-b; c; z), which is a polynomial
/// whenever c-(u+m) or c-a is a non-positive integer. With neither index
/// terminating the double series needs |x| + |y| < 1.
///
/// Throws DomainError naming the violated condition when no convergent
/// representation applies.
template <class T>
T appell_f2(const AppellF2Params<T>& p);

/// Closed form of
///
///   int_0^inf e^{-s t} t^{u-1} F(a1, c1, t) F(a2, c2, q t) dt
///     = Gamma(u) s^{-u} F2(u; a1, a2; c1, c2; 1/s, q/s).
///
/// Requires Re(s) > 0 and u > 0.
template <class T>
T laplace_1f1_product(const T& s, const real_of<T>& u, const KummerParams<T>& k1,
                      const KummerParams<T>& k2, const T& q);

// ------------------------------------------------------- Coulomb waves

/// Regular Coulomb function F_l(eta, rho).
double coulomb_f(int l, double eta, double rho);

/// Normalisation constant C_l(eta) = 2^l e^{-pi eta/2} |Gamma(l+1+i eta)| / (2l+1)!.
double coulomb_normalization(int l, double eta);

/// Reduced radial continuum wave u(r) for kinetic energy `energy` (hartree)
/// in the attractive potential -charge/r, energy normalised so that
/// int u_E u_E' dr = delta(E - E'). Behaves like r^{l+1} at the origin.
/// Throws DomainError for energy <= 0 or r <= 0.
double coulomb_radial(double energy, int l, double r, double charge = 1.0);

extern template bool is_nonpositive_integer(const double&);
extern template bool is_nonpositive_integer(const std::complex<double>&);
extern template bool is_nonpositive_integer(const HighReal&);
extern template bool is_nonpositive_integer(const HighComplex&);

extern template struct KummerParams<double>;
extern template struct KummerParams<std::complex<double>>;
extern template struct KummerParams<HighReal>;
extern template struct KummerParams<HighComplex>;

extern template double kummer_1f1(const KummerParams<double>&, const double&);
extern template std::complex<double> kummer_1f1(const KummerParams<std::complex<double>>&,
                                                const std::complex<double>&);
extern template HighReal kummer_1f1(const KummerParams<HighReal>&, const HighReal&);
extern template HighComplex kummer_1f1(const KummerParams<HighComplex>&, const HighComplex&);

extern template double appell_f2(const AppellF2Params<double>&);
extern template std::complex<double> appell_f2(const AppellF2Params<std::complex<double>>&);
extern template HighReal appell_f2(const AppellF2Params<HighReal>&);
extern template HighComplex appell_f2(const AppellF2Params<HighComplex>&);

extern template double laplace_1f1_product(const double&, const double&,
                                           const KummerParams<double>&,
                                           const KummerParams<double>&, const double&);
extern template std::complex<double> laplace_1f1_product(
    const std::complex<double>&, const double&, const KummerParams<std::complex<double>>&,
    const KummerParams<std::complex<double>>&, const std::complex<double>&);
extern template HighReal laplace_1f1_product(const HighReal&, const HighReal&,
                                             const KummerParams<HighReal>&,
                                             const KummerParams<HighReal>&, const HighReal&);
extern template HighComplex laplace_1f1_product(const HighComplex&, const HighReal&,
                                                const KummerParams<HighComplex>&,
                                                const KummerParams<HighComplex>&,
                                                const HighComplex&);

}  // namespace rotframe::specfun
