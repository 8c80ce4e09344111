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

#include "rotframe/specfun.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>
#include <type_traits>

#include <boost/math/special_functions/gamma.hpp>

#include "rotframe/error.hpp"

namespace rotframe::specfun {

namespace {

constexpr int kSeriesCap = 100000;

template <class T>
real_of<T> magnitude(const T& x) {
  using std::abs;
  return abs(x);
}

template <class T>
real_of<T> tolerance() {
  return std::numeric_limits<real_of<T>>::epsilon();
}

template <class T>
int nonpositive_integer_order(const T& x) {
  using std::round;
  return -static_cast<int>(round(scalar_traits<T>::re(x)));
}

template <class R>
void require_not_pole(const R& c, const char* name) {
  if (is_nonpositive_integer(c)) {
    std::ostringstream msg;
    msg << "hypergeometric parameter " << name << " = " << c
        << " is a non-positive integer (pole of the series)";
    throw DomainError(msg.str());
  }
}

template <class T>
std::string describe(const T& x) {
  std::ostringstream out;
  out.precision(6);
  out << x;
  return out.str();
}

// Gauss 2F1(a, b; c; z) as a plain series. Callers guarantee either a
// terminating parameter or |z| < 1.
template <class T>
T gauss_series(const T& a, const T& b, const real_of<T>& c, const T& z) {
  using R = real_of<T>;
  const bool finite = is_nonpositive_integer(a) || is_nonpositive_integer(b);
  int last = kSeriesCap;
  if (finite) {
    const int na = is_nonpositive_integer(a) ? nonpositive_integer_order(a) : kSeriesCap;
    const int nb = is_nonpositive_integer(b) ? nonpositive_integer_order(b) : kSeriesCap;
    last = std::min(na, nb);
  }
  T term(1);
  T sum(1);
  for (int k = 0; k < last; ++k) {
    const R rk(k);
    term *= (a + T(rk)) * (b + T(rk)) / T((c + rk) * (rk + R(1))) * z;
    sum += term;
    if (!finite && magnitude(term) <= tolerance<T>() * magnitude(sum) &&
        magnitude(z) * (R(k) + R(1)) < R(k) + R(2)) {
      return sum;
    }
  }
  if (!finite) {
    throw NumericError("2F1 series did not converge",
                       "terms=" + std::to_string(kSeriesCap) + " last=" + describe(term) +
                           " partial=" + describe(sum));
  }
  return sum;
}

template <class T>
T real_power(const T& base, const real_of<T>& exponent) {
  using std::pow;
  return pow(base, T(exponent));
}

}  // namespace

template <class T>
bool is_nonpositive_integer(const T& x) {
  using std::round;
  using Tr = scalar_traits<T>;
  const auto re = Tr::re(x);
  return Tr::im(x) == 0 && re <= 0 && re == round(re);
}

// ---------------------------------------------------------------- Gamma

double gamma_fn(double z) {
  if (is_nonpositive_integer(z)) throw DomainError("Gamma has a pole at " + describe(z));
  return std::tgamma(z);
}

std::complex<double> gamma_fn(std::complex<double> z) {
  if (is_nonpositive_integer(z)) throw DomainError("Gamma has a pole at " + describe(z));
  using C = std::complex<double>;
  constexpr double pi = std::numbers::pi;
  if (z.real() < 0.5) {
    // Reflection keeps the Lanczos sum in its accurate half-plane.
    return pi / (std::sin(pi * z) * gamma_fn(C(1.0) - z));
  }
  // Lanczos, g = 7, n = 9.
  static constexpr double coef[] = {0.99999999999980993,     676.5203681218851,
                                    -1259.1392167224028,     771.32342877765313,
                                    -176.61502916214059,     12.507343278686905,
                                    -0.13857109526572012,    9.9843695780195716e-6,
                                    1.5056327351493116e-7};
  z -= 1.0;
  C x = coef[0];
  for (int i = 1; i < 9; ++i) x += coef[i] / (z + static_cast<double>(i));
  const C t = z + 7.5;
  return std::exp(0.5 * std::log(2.0 * pi) + (z + 0.5) * std::log(t) - t + std::log(x));
}

HighReal gamma_fn(const HighReal& z) {
  if (is_nonpositive_integer(z)) throw DomainError("Gamma has a pole at " + describe(z));
  return boost::math::tgamma(z);
}

// --------------------------------------------------------------- Kummer

template <class T>
int KummerParams<T>::term_count() const {
  return terminating() ? nonpositive_integer_order(a) + 1 : -1;
}

// Double sums whose terms peak 1e6 above the result have lost six digits
// or more; those are redone with 50 digits.
template <class T>
bool cancels(const real_of<T>& peak, const T& sum) {
  if constexpr (std::is_same_v<real_of<T>, double>) {
    return peak > 1e6 * magnitude(sum);
  } else {
    return false;
  }
}

template <class T>
T kummer_high_precision(const KummerParams<T>& p, const T& t) {
  if constexpr (std::is_same_v<T, double>) {
    return static_cast<double>(kummer_1f1(KummerParams<HighReal>{HighReal(p.a), HighReal(p.c)},
                                          HighReal(t)));
  } else if constexpr (std::is_same_v<T, std::complex<double>>) {
    const HighComplex a(HighReal(p.a.real()), HighReal(p.a.imag()));
    const HighComplex z(HighReal(t.real()), HighReal(t.imag()));
    const HighComplex v = kummer_1f1(KummerParams<HighComplex>{a, HighReal(p.c)}, z);
    return {static_cast<double>(v.real()), static_cast<double>(v.imag())};
  } else {
    return kummer_1f1(p, t);
  }
}

template <class T>
T kummer_1f1(const KummerParams<T>& p, const T& t) {
  using R = real_of<T>;
  require_not_pole(p.c, "c");
  if (t == T(0)) return T(1);

  if (p.terminating()) {
    const int n = nonpositive_integer_order(p.a);
    T term(1);
    T sum(1);
    R peak(1);
    for (int k = 0; k < n; ++k) {
      const R rk(k);
      term *= (p.a + T(rk)) / T((p.c + rk) * (rk + R(1))) * t;
      sum += term;
      if (magnitude(term) > peak) peak = magnitude(term);
    }
    if (cancels(peak, sum)) return kummer_high_precision(p, t);
    return sum;
  }

  if (scalar_traits<T>::re(t) < R(-1)) {
    using std::exp;
    return exp(t) * kummer_1f1(KummerParams<T>{T(p.c) - p.a, p.c}, T(-t));
  }

  T term(1);
  T sum(1);
  R peak(1);
  for (int k = 0; k < kSeriesCap; ++k) {
    const R rk(k);
    term *= (p.a + T(rk)) / T((p.c + rk) * (rk + R(1))) * t;
    sum += term;
    if (magnitude(term) > peak) peak = magnitude(term);
    const bool past_peak = magnitude(t) < R(k) + R(1);
    if (past_peak && magnitude(term) <= tolerance<T>() * magnitude(sum)) {
      if (cancels(peak, sum)) return kummer_high_precision(p, t);
      return sum;
    }
  }
  throw NumericError("1F1 series did not converge",
                     "terms=" + std::to_string(kSeriesCap) + " last=" + describe(term) +
                         " partial=" + describe(sum));
}

// ------------------------------------------------------------ Appell F2

template <class T>
T appell_f2(const AppellF2Params<T>& p) {
  using R = real_of<T>;
  require_not_pole(p.c1, "c1");
  require_not_pole(p.c2, "c2");

  const bool first_terminates = is_nonpositive_integer(p.a1);
  const bool second_terminates = is_nonpositive_integer(p.a2);
  if (!first_terminates && second_terminates) {
    return appell_f2(AppellF2Params<T>{p.u, p.a2, p.a1, p.c2, p.c1, p.y, p.x});
  }
  if (!first_terminates && !(magnitude(p.x) + magnitude(p.y) < R(1))) {
    throw DomainError(
        "Appell F2: neither index terminates and |x| + |y| >= 1 (outside the convergence "
        "domain)");
  }

  // Inner sum over the second index for a given outer index m:
  //   2F1(u + m, a2; c2; y).
  enum class Inner { finite, series, euler };
  Inner mode = Inner::finite;
  T euler_base(1);
  T euler_step(1);
  if (!second_terminates) {
    if (magnitude(p.y) < R(1)) {
      mode = Inner::series;
    } else {
      // Euler: 2F1(A, b; c; y) = (1-y)^{c-A-b} 2F1(c-A, c-b; c; y).
      const bool c_minus_u_terminates = is_nonpositive_integer(p.c2 - p.u);
      const bool c_minus_b_terminates = is_nonpositive_integer(T(p.c2) - p.a2);
      if (!c_minus_u_terminates && !c_minus_b_terminates) {
        throw DomainError(
            "Appell F2: second-index series diverges (|y| >= 1) and neither c2 - u nor "
            "c2 - a2 is a non-positive integer, so Euler's transformation does not "
            "terminate");
      }
      if (!scalar_traits<T>::is_complex && scalar_traits<T>::re(T(1) - p.y) <= R(0)) {
        throw DomainError("Appell F2: Euler continuation needs 1 - y > 0 for real arguments");
      }
      mode = Inner::euler;
      using std::pow;
      euler_base = pow(T(1) - p.y, T(p.c2 - p.u) - p.a2);
      euler_step = T(1) / (T(1) - p.y);
    }
  }

  auto inner = [&](int m) -> T {
    const T upm = T(p.u + R(m));
    switch (mode) {
      case Inner::finite:
      case Inner::series:
        return gauss_series(upm, p.a2, p.c2, p.y);
      case Inner::euler: {
        T factor = euler_base;
        for (int i = 0; i < m; ++i) factor *= euler_step;
        return factor * gauss_series(T(p.c2) - upm, T(p.c2) - p.a2, p.c2, p.y);
      }
    }
    return T(0);
  };

  if (first_terminates) {
    const int n = nonpositive_integer_order(p.a1);
    T coef(1);
    T sum = inner(0);
    for (int m = 1; m <= n; ++m) {
      const R rm(m - 1);
      coef *= T(p.u + rm) * (p.a1 + T(rm)) / T((p.c1 + rm) * (rm + R(1))) * p.x;
      sum += coef * inner(m);
    }
    return sum;
  }

  T coef(1);
  T sum = inner(0);
  for (int m = 1; m < kSeriesCap; ++m) {
    const R rm(m - 1);
    coef *= T(p.u + rm) * (p.a1 + T(rm)) / T((p.c1 + rm) * (rm + R(1))) * p.x;
    const T contribution = coef * inner(m);
    sum += contribution;
    if (magnitude(contribution) <= tolerance<T>() * magnitude(sum) &&
        magnitude(p.x) * R(m + 1) < R(m)) {
      return sum;
    }
  }
  throw NumericError("Appell F2 double series did not converge",
                     "outer terms=" + std::to_string(kSeriesCap) + " partial=" + describe(sum));
}

template <class T>
T laplace_1f1_product(const T& s, const real_of<T>& u, const KummerParams<T>& k1,
                      const KummerParams<T>& k2, const T& q) {
  using R = real_of<T>;
  if (!(scalar_traits<T>::re(s) > R(0))) {
    throw DomainError("Laplace transform needs Re(s) > 0, got s = " + describe(s));
  }
  if (!(u > R(0))) throw DomainError("Laplace transform needs u > 0, got u = " + describe(u));
  const T inv_s = T(1) / s;
  const T f2 = appell_f2(AppellF2Params<T>{u, k1.a, k2.a, k1.c, k2.c, inv_s, q * inv_s});
  return T(gamma_fn(u)) * real_power(inv_s, u) * f2;
}

// ------------------------------------------------- explicit instantiation

template bool is_nonpositive_integer(const double&);
template bool is_nonpositive_integer(const std::complex<double>&);
template bool is_nonpositive_integer(const HighReal&);
template bool is_nonpositive_integer(const HighComplex&);

template struct KummerParams<double>;
template struct KummerParams<std::complex<double>>;
template struct KummerParams<HighReal>;
template struct KummerParams<HighComplex>;

template double kummer_1f1(const KummerParams<double>&, const double&);
template std::complex<double> kummer_1f1(const KummerParams<std::complex<double>>&,
                                         const std::complex<double>&);
template HighReal kummer_1f1(const KummerParams<HighReal>&, const HighReal&);
template HighComplex kummer_1f1(const KummerParams<HighComplex>&, const HighComplex&);

template double appell_f2(const AppellF2Params<double>&);
template std::complex<double> appell_f2(const AppellF2Params<std::complex<double>>&);
template HighReal appell_f2(const AppellF2Params<HighReal>&);
template HighComplex appell_f2(const AppellF2Params<HighComplex>&);

template double laplace_1f1_product(const double&, const double&, const KummerParams<double>&,
                                    const KummerParams<double>&, const double&);
template std::complex<double> laplace_1f1_product(const std::complex<double>&, const double&,
                                                  const KummerParams<std::complex<double>>&,
                                                  const KummerParams<std::complex<double>>&,
                                                  const std::complex<double>&);
template HighReal laplace_1f1_product(const HighReal&, const HighReal&,
                                      const KummerParams<HighReal>&,
                                      const KummerParams<HighReal>&, const HighReal&);
template HighComplex laplace_1f1_product(const HighComplex&, const HighReal&,
                                         const KummerParams<HighComplex>&,
                                         const KummerParams<HighComplex>&, const HighComplex&);

}  // namespace rotframe::specfun
