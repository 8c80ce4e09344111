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

#include <string>

#include "rotframe/error.hpp"
#include "rotframe/specfun.hpp"

namespace rotframe::detail {

inline specfun::HighReal factorial(int k) {
  specfun::HighReal f(1);
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

// R_nl = N r^l e^{-r/n} F(l+1-n, 2l+2, 2r/n) with
// N = sqrt((2/n)^{2l+3} (n+l)! / (2n (n-l-1)!)) / (2l+1)!
inline specfun::HighReal bound_normalisation(int n, int l) {
  using boost::multiprecision::pow;
  using boost::multiprecision::sqrt;
  const specfun::HighReal two_over_n = specfun::HighReal(2) / n;
  return sqrt(pow(two_over_n, 2 * l + 3) * factorial(n + l) / (2 * n * factorial(n - l - 1))) /
         factorial(2 * l + 1);
}

inline void require_shell(int n, int l) {
  if (n < 1 || l < 0 || l >= n) {
    throw DomainError("invalid shell (n=" + std::to_string(n) + ", l=" + std::to_string(l) + ")");
  }
}

}  // namespace rotframe::detail
