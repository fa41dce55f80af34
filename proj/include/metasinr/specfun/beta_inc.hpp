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

#ifndef METASINR_SPECFUN_BETA_INC_HPP
#define METASINR_SPECFUN_BETA_INC_HPP

#include <cmath>

#include "metasinr/core.hpp"

namespace metasinr {

namespace detail {

// Continued fraction for the incomplete beta (modified Lentz).
inline double beta_cf(double a, double b, double x) {
  const double tiny = 1e-300;
  const double eps = 1e-16;
  double qab = a + b, qap = a + 1.0, qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::abs(d) < tiny) d = tiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= 500; ++m) {
    int m2 = 2 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < tiny) d = tiny;
    c = 1.0 + aa / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < tiny) d = tiny;
    c = 1.0 + aa / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    double del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < eps) return h;
  }
  throw numerical_error("reg_inc_beta: continued fraction did not converge");
}

}  // namespace detail

// Regularized incomplete beta I_x(a, b) for a, b > 0 and x in [0, 1].
inline double reg_inc_beta(double x, double a, double b) {
  if (!(a > 0.0 && b > 0.0))
    throw std::invalid_argument("reg_inc_beta: a, b must be > 0");
  if (!(x >= 0.0 && x <= 1.0))
    throw std::invalid_argument("reg_inc_beta: x must be in [0,1]");
  if (x == 0.0) return 0.0;
  if (x == 1.0) return 1.0;
  double lbeta = std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b);
  double front = std::exp(a * std::log(x) + b * std::log1p(-x) - lbeta);
  if (x < (a + 1.0) / (a + b + 2.0)) {
    return front * detail::beta_cf(a, b, x) / a;
  }
  return 1.0 - front * detail::beta_cf(b, a, 1.0 - x) / b;
}

}  // namespace metasinr

#endif  // METASINR_SPECFUN_BETA_INC_HPP
