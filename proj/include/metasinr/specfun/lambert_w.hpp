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

#ifndef METASINR_SPECFUN_LAMBERT_W_HPP
#define METASINR_SPECFUN_LAMBERT_W_HPP

#include <cmath>
#include <limits>

#include "metasinr/core.hpp"

namespace metasinr {

namespace detail {

// One Halley step for f(w) = w e^w - x. Returns the updated w.
inline double halley_we(double w, double x) {
  double e = std::exp(w);
  double f = w * e - x;
  double d = e * (w + 1.0) - 0.5 * (w + 2.0) * f / (w + 1.0);
  return w - f / d;
}

}  // namespace detail

// Principal branch W0(x) for x >= 0: the solution w >= 0 of w e^w = x.
// Halley iteration from a piecewise initial guess; relative accuracy ~1e-15.
inline double lambert_w0(double x) {
  if (!(x >= 0.0)) throw std::invalid_argument("lambert_w0: x must be >= 0");
  if (x == 0.0) return 0.0;
  if (x == std::numeric_limits<double>::infinity())
    return std::numeric_limits<double>::infinity();

  double w;
  if (x < 1.0) {
    // Series seed W = x - x^2 + 1.5 x^3 ... is fine for small x.
    w = x * (1.0 - x * (1.0 - 1.5 * x));
    if (w <= 0.0) w = x / (1.0 + x);
  } else {
    // Asymptotic seed: L1 - L2 + L2/L1.
    double l1 = std::log(x);
    double l2 = std::log(std::max(l1, 1e-300));
    w = (l1 > 3.0) ? l1 - l2 + l2 / l1 : 0.5 * l1 + 0.45;
    if (w <= 0.0) w = 0.5;
  }
  for (int i = 0; i < 40; ++i) {
    double w2 = detail::halley_we(w, x);
    if (!(w2 > 0.0)) w2 = 0.5 * w;
    if (std::abs(w2 - w) <= 1e-16 * std::abs(w2)) {
      w = w2;
      break;
    }
    w = w2;
  }
  return w;
}

// Log-domain principal branch: given lx = ln x, returns w with w e^w = x,
// i.e. the root of w + ln w = lx. Usable far beyond the overflow range of x
// (lx up to ~1e4 and down to ~-1e4 and below).
inline double lambert_w0_log(double lx) {
  if (std::isnan(lx)) throw std::invalid_argument("lambert_w0_log: nan input");
  if (lx == std::numeric_limits<double>::infinity())
    return std::numeric_limits<double>::infinity();

  // For very negative lx, w = e^lx (1 - e^lx + ...) underflows gracefully.
  if (lx < -700.0) return std::exp(lx);

  // g(w) = w + ln w - lx is increasing on (0, inf) with a unique root.
  double w;
  if (lx > 1.0) {
    double ll = std::log(lx);
    w = lx - ll + ll / lx;  // asymptotic seed
    if (w <= 0.0) w = lx;
  } else {
    // Root is below 1; seed from w ~ e^(lx - w) a couple of times.
    double e = std::exp(lx);
    w = e / (1.0 + e);
    if (w <= 0.0) w = std::numeric_limits<double>::min();
  }
  for (int i = 0; i < 60; ++i) {
    double g = w + std::log(w) - lx;
    double gp = 1.0 + 1.0 / w;
    double gpp = -1.0 / (w * w);
    // Halley
    double step = g / (gp - 0.5 * g * gpp / gp);
    double w2 = w - step;
    if (!(w2 > 0.0)) w2 = 0.5 * w;
    if (std::abs(w2 - w) <= 1e-16 * std::abs(w2) + 1e-300) {
      w = w2;
      break;
    }
    w = w2;
  }
  return w;
}

}  // namespace metasinr

#endif  // METASINR_SPECFUN_LAMBERT_W_HPP
