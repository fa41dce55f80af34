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

#ifndef METASINR_SPECFUN_COMPLEX_GAMMA_HPP
#define METASINR_SPECFUN_COMPLEX_GAMMA_HPP

#include <cmath>
#include <complex>

#include "metasinr/core.hpp"

namespace metasinr {

using cdouble = std::complex<double>;

// (1+x)^b for real x > -1 and complex b, evaluated as exp(b log1p(x)) so that
// purely imaginary exponents keep unit modulus exactly.
inline cdouble pow_one_plus(double x, cdouble b) {
  if (!(x > -1.0)) throw std::invalid_argument("pow_one_plus: x must be > -1");
  return std::exp(b * std::log1p(x));
}

// log Gamma(z) for Re(z) > 0 (shifted by recurrence when Re(z) < 8).
// Lanczos approximation, g = 7, 9 coefficients; ~1e-13 relative accuracy.
inline cdouble log_gamma(cdouble z) {
  static const double lg[9] = {
      0.99999999999980993,  676.5203681218851,   -1259.1392167224028,
      771.32342877765313,   -176.61502916214059, 12.507343278686905,
      -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
  if (z.real() <= 0.0 && z.imag() == 0.0 && z.real() == std::floor(z.real()))
    throw std::invalid_argument("log_gamma: nonpositive integer pole");

  // Shift into Re(z) >= 8 for full Lanczos accuracy: lgamma(z) =
  // lgamma(z+n) - sum log(z+k).
  cdouble shift = 0.0;
  int n = 0;
  while (z.real() < 8.0 && n < 64) {
    shift += std::log(z);
    z += 1.0;
    ++n;
  }
  cdouble x = lg[0];
  for (int i = 1; i < 9; ++i) x += lg[i] / (z - 1.0 + static_cast<double>(i));
  cdouble t = z + 6.5;
  const double half_log_2pi = 0.91893853320467274178;
  cdouble out = half_log_2pi + (z - 0.5) * std::log(t) - t + std::log(x);
  return out - shift;
}

// Gamma(b + d) / Gamma(b) for complex b off the nonpositive real axis poles.
inline cdouble gamma_ratio(cdouble b, double d) {
  return std::exp(log_gamma(b + d) - log_gamma(b));
}

}  // namespace metasinr

#endif  // METASINR_SPECFUN_COMPLEX_GAMMA_HPP
