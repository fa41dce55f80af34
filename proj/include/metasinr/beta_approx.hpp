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

#ifndef METASINR_BETA_APPROX_HPP
#define METASINR_BETA_APPROX_HPP

#include <cmath>

#include "metasinr/core.hpp"
#include "metasinr/models.hpp"
#include "metasinr/moments.hpp"
#include "metasinr/specfun/beta_inc.hpp"

namespace metasinr {

struct BetaFit {
  double a = 0.0;
  double b = 0.0;
  double m1 = 0.0;
  double m2 = 0.0;
  bool degenerate = false;  // vanishing variance; fall back to a step at m1
};

// Moment-match a Beta(a, b) to (M1, M2).
inline BetaFit beta_fit_from_moments(double m1, double m2) {
  BetaFit f;
  f.m1 = m1;
  f.m2 = m2;
  double var = m2 - m1 * m1;
  if (!(m1 > 0.0 && m1 < 1.0) || var <= 1e-14 * m1 * (1.0 - m1)) {
    f.degenerate = true;
    return f;
  }
  f.a = m1 * (m1 - m2) / var;
  f.b = (m1 - m2) * (1.0 - m1) / var;
  if (!(f.a > 0.0 && f.b > 0.0)) f.degenerate = true;
  return f;
}

inline double beta_meta_from_fit(const BetaFit& f, double gamma) {
  if (f.degenerate) return f.m1 > gamma ? 1.0 : 0.0;
  return 1.0 - reg_inc_beta(gamma, f.a, f.b);
}

inline BetaFit beta_fit(const NetworkModel& m, const ChannelModel& ch,
                        double theta, const QuadratureSpec& q = {}) {
  double m1 = moment_real(m, ch, 1.0, theta, q);
  double m2 = moment_real(m, ch, 2.0, theta, q);
  return beta_fit_from_moments(m1, m2);
}

// Two-moment beta approximation of the meta distribution.
inline double beta_meta(const NetworkModel& m, const ChannelModel& ch,
                        const MetaQuery& qy, const QuadratureSpec& q = {}) {
  qy.validate();
  return beta_meta_from_fit(beta_fit(m, ch, qy.theta, q), qy.gamma);
}

}  // namespace metasinr

#endif  // METASINR_BETA_APPROX_HPP
