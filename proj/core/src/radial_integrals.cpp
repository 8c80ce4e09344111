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

#include <vector>

#include "rotframe/basis.hpp"
#include "rotframe/error.hpp"
#include "rotframe/specfun.hpp"
#include "detail/hydrogenic.hpp"

namespace rotframe {

namespace {

using specfun::HighReal;
using specfun::KummerParams;
using detail::bound_normalisation;
using detail::require_shell;

// coef * r^power * e^{-r/n} * F(a, c, 2r/n)
struct RadialTerm {
  HighReal coef;
  int power;
  int n;
  int a;
  int c;
};

RadialTerm radial_term(int n, int l) {
  return {bound_normalisation(n, l), l, n, l + 1 - n, 2 * l + 2};
}

// (d/dr + kappa/r) R_nl as a sum of terms of the same shape. Uses
// dF(a, c, t)/dt = (a/c) F(a+1, c+1, t).
std::vector<RadialTerm> derivative_terms(int n, int l, int kappa) {
  const HighReal norm = bound_normalisation(n, l);
  const int a = l + 1 - n;
  const int c = 2 * l + 2;
  std::vector<RadialTerm> terms;
  if (l + kappa != 0) terms.push_back({norm * (l + kappa), l - 1, n, a, c});
  terms.push_back({-norm / n, l, n, a, c});
  if (a != 0) terms.push_back({norm * 2 * a / (HighReal(n) * c), l, n, a + 1, c + 1});
  return terms;
}

// int_0^inf A(r) B(r) r^extra dr, substituting t = 2r / n_A.
HighReal integrate(const RadialTerm& x, const RadialTerm& y, int extra) {
  using boost::multiprecision::pow;
  const int power = x.power + y.power + extra;
  if (power < 0) throw DomainError("radial integrand is not integrable at the origin");
  const HighReal u(power + 1);
  const HighReal ratio = HighReal(x.n) / y.n;
  const HighReal s = (1 + ratio) / 2;
  const HighReal value = specfun::laplace_1f1_product<HighReal>(
      s, u, KummerParams<HighReal>{HighReal(x.a), HighReal(x.c)},
      KummerParams<HighReal>{HighReal(y.a), HighReal(y.c)}, ratio);
  return x.coef * y.coef * pow(HighReal(x.n) / 2, power + 1) * value;
}

}  // namespace

double radial_moment(int na, int la, int nb, int lb, int power) {
  require_shell(na, la);
  require_shell(nb, lb);
  return static_cast<double>(integrate(radial_term(na, la), radial_term(nb, lb), power));
}

double radial_gradient(int n_lo, int l, int n_hi) {
  require_shell(n_lo, l);
  require_shell(n_hi, l + 1);
  const RadialTerm lo = radial_term(n_lo, l);
  HighReal sum(0);
  for (const RadialTerm& t : derivative_terms(n_hi, l + 1, l + 2)) sum += integrate(lo, t, 2);
  return static_cast<double>(sum);
}

}  // namespace rotframe
