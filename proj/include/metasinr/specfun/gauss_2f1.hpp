// Copyright 2026 The metasinr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef METASINR_SPECFUN_GAUSS_2F1_HPP
#define METASINR_SPECFUN_GAUSS_2F1_HPP

#include <cmath>
#include <cstdlib>

#include "metasinr/core.hpp"

namespace metasinr {

namespace detail {

// Plain Gauss series sum_{n>=0} (a)_n (b)_n / (c)_n z^n / n!, |z| < 1.
// Kahan-compensated; terminates on |term| <= eps |sum|.
inline double gauss_series(double a, double b, double c, double z,
                           long max_terms = 2000000) {
  double sum = 1.0, comp = 0.0, term = 1.0;
  for (long n = 0; n < max_terms; ++n) {
    term *= (a + n) * (b + n) / ((c + n) * (n + 1.0)) * z;
    double y = term - comp;
    double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
    if (std::abs(term) <= 1e-17 * std::abs(sum)) return sum;
  }
  throw numerical_error("gauss_2f1: series did not converge");
}

}  // namespace detail

// Gauss hypergeometric 2F1(a, b; c; z) for the argument range used by the
// moment series: z <= 0 and c > b > 0. Series for |z| < 0.9, otherwise the
// Pfaff transform z -> z/(z-1) maps onto (0, 1).
inline double gauss_2f1(double a, double b, double c, double z) {
  if (z > 0.0) throw std::invalid_argument("gauss_2f1: requires z <= 0");
  if (c <= 0.0 && c == std::floor(c))
    throw std::invalid_argument("gauss_2f1: c is a nonpositive integer");
  if (z == 0.0) return 1.0;
  if (std::abs(z) < 0.9) return detail::gauss_series(a, b, c, z);
  // (1-z)^-a 2F1(a, c-b; c; z/(z-1)); for z < 0 the new argument is in (0,1).
  double zp = z / (z - 1.0);
  return std::pow(1.0 - z, -a) * detail::gauss_series(a, c - b, c, zp);
}

}  // namespace metasinr

#endif  // METASINR_SPECFUN_GAUSS_2F1_HPP
