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

#ifndef METASINR_SPECFUN_STABLE_CDF_HPP
#define METASINR_SPECFUN_STABLE_CDF_HPP

#include <cmath>

#include "metasinr/core.hpp"

namespace metasinr {

// CDF of the one-sided (positive) stable law with Laplace transform
// E[e^{-b Y}] = exp(-a b^delta), 0 < delta < 1, evaluated at x.
//
// The complementary CDF has the convergent series (Pollard)
//   P(Y > x) = (1/pi) sum_{k>=1} (-1)^{k+1} (Gamma(k delta)/k!) sin(k pi
//   delta) z^k,   z = a x^{-delta},
// which at delta = 1/2 collapses to the Levy form erf(z/2). Deep in the left
// tail the series terms grow before they decay; there the Chernoff bound
//   P(Y <= x) <= exp(-(1-delta) delta^{delta/(1-delta)} z^{1/(1-delta)})
// certifies the value is below double noise and 0 is returned instead.
inline double one_sided_stable_cdf(double x, double delta, double a) {
  if (!(x > 0.0)) return 0.0;
  if (!(a > 0.0)) return 1.0;
  double z = a * std::pow(x, -delta);
  double chernoff =
      (1.0 - delta) * std::pow(delta, delta / (1.0 - delta)) *
      std::pow(z, 1.0 / (1.0 - delta));
  if (chernoff > 34.0) return 0.0;
  if (std::abs(delta - 0.5) < 1e-12) return std::erfc(0.5 * z);
  double lz = std::log(z);
  double ccdf = 0.0;
  for (int k = 1; k < 800; ++k) {
    double mag =
        std::exp(std::lgamma(k * delta) - std::lgamma(k + 1.0) + k * lz);
    ccdf += (k % 2 == 1 ? mag : -mag) * std::sin(k * kPi * delta);
    if (mag < 1e-18 * std::max(1.0, std::abs(ccdf)) && k > 8) break;
  }
  double cdf = 1.0 - ccdf / kPi;
  return std::min(1.0, std::max(0.0, cdf));
}

}  // namespace metasinr

#endif  // METASINR_SPECFUN_STABLE_CDF_HPP
