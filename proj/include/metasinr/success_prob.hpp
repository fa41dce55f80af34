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

#ifndef METASINR_SUCCESS_PROB_HPP
#define METASINR_SUCCESS_PROB_HPP

#include <cmath>
#include <span>

#include "metasinr/core.hpp"

namespace metasinr {

// Rayleigh-fading-averaged success probability of a link of length r0
// against a fixed set of interferer distances (equal transmit powers):
//   P = e^{-theta r0^a sigma2 / p_t} * prod_i 1 / (1 + theta (r0/r_i)^a).
// This is the exact fading average, so simulations need no fading draws.
inline double conditional_success_probability(const ChannelModel& ch,
                                              double theta, double r0,
                                              std::span<const double> r_int) {
  double a = ch.alpha;
  double r0a = std::pow(r0, a);
  double logp = -theta * r0a * ch.sigma2 / ch.p_t;
  for (double ri : r_int)
    logp -= std::log1p(theta * r0a * std::pow(ri, -a));
  return std::exp(logp);
}

// Same, with the residual interference beyond the j modeled interferers
// replaced by its conditional mean g (normalized by transmit power):
//   P = e^{-(theta/p_t)(p_t g + sigma2) r0^a} * prod_{k<=j} 1/(1+theta (r0/R_k)^a).
inline double approx_success_probability(const ChannelModel& ch, double theta,
                                         double r0,
                                         std::span<const double> r_nearest,
                                         double g) {
  double a = ch.alpha;
  double r0a = std::pow(r0, a);
  double s = theta / ch.p_t * (ch.p_t * g + ch.sigma2);
  double logp = -s * r0a;
  for (double rk : r_nearest)
    logp -= std::log1p(theta * r0a * std::pow(rk, -a));
  return std::exp(logp);
}

}  // namespace metasinr

#endif  // METASINR_SUCCESS_PROB_HPP
