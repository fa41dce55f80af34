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

#ifndef METASINR_MEAN_FIELD_HPP
#define METASINR_MEAN_FIELD_HPP

#include <cmath>
#include <variant>

#include "metasinr/core.hpp"
#include "metasinr/distance_laws.hpp"
#include "metasinr/models.hpp"
#include "metasinr/quadrature.hpp"

namespace metasinr {

// How the interference beyond the modeled nearest interferers is folded in.
enum class InterferenceMode {
  mean_field,  // conditional-mean residual (default)
  none,        // drop the residual entirely (nearest-only reduction)
};

// For the line Cox model: full line-aware residual mean vs. the equivalent-
// density planar approximation.
enum class PlcpInterference {
  lines,       // typical line + line ensemble residual
  ppp_approx,  // planar PPP of density pi*lambda_l*lambda_p
};

// Residual mean interference of a planar PPP of density lambda outside
// radius r, normalized by transmit power: 2 pi lambda r^{2-alpha}/(alpha-2).
inline double ppp_mean_field(double lambda, double alpha, double r) {
  return 2.0 * kPi * lambda / (alpha - 2.0) * std::pow(r, 2.0 - alpha);
}

// Line Cox residual mean beyond radius r: the line ensemble outside the
// disk (two double integrals over offset x along-line coordinate) plus the
// user's own line beyond r.
inline double plcp_mean_field_lines(const PlcpModel& m, double alpha, double r,
                                    const QuadratureSpec& q = {}) {
  double scale = std::max(r, 0.5);
  auto kernel = [alpha](double rho, double t) {
    return std::pow(rho * rho + t * t, -0.5 * alpha);
  };
  // lines missing the disk: offset rho > r, whole line
  auto outer1 = [&](double rho) {
    auto in = [&](double t) { return kernel(rho, t); };
    return integrate_semi_inf(in, 0.0, std::max(rho, scale), q);
  };
  double i1 = integrate_semi_inf(outer1, r, scale, q);
  // lines crossing the disk: offset rho < r, points beyond the chord
  auto outer2 = [&](double rho) {
    double lo = std::sqrt(std::max(r * r - rho * rho, 0.0));
    auto in = [&](double t) { return kernel(rho, t); };
    return integrate_semi_inf(in, lo, std::max(r, scale), q);
  };
  double i2 = integrate(outer2, 0.0, r, q);
  double line_term =
      2.0 * m.lambda_p * std::pow(r, 1.0 - alpha) / (alpha - 1.0);
  return 4.0 * kPi * m.lambda_l * m.lambda_p * (i1 + i2) + line_term;
}

// Same quantity in closed form (the double integrals reduce to the planar
// term of the equivalent density); kept as an oracle and for callers that
// need it in a tight loop.
inline double plcp_mean_field_closed(const PlcpModel& m, double alpha,
                                     double r) {
  return ppp_mean_field(m.density(), alpha, r) +
         2.0 * m.lambda_p * std::pow(r, 1.0 - alpha) / (alpha - 1.0);
}

// G(r): mean residual interference (normalized by transmit power) beyond
// the nearest interferer at distance r, conditioned on that distance.
inline double mean_field_g(const NetworkModel& m, const ChannelModel& ch,
                           double r,
                           PlcpInterference pm = PlcpInterference::lines,
                           const QuadratureSpec& q = {}) {
  struct V {
    double r, alpha;
    PlcpInterference pm;
    const QuadratureSpec& q;
    double operator()(const PppModel& x) const {
      return ppp_mean_field(x.lambda, alpha, r);
    }
    double operator()(const BipolarModel& x) const {
      return ppp_mean_field(x.lambda, alpha, r);
    }
    double operator()(const McpModel& x) const {
      return ppp_mean_field(x.lambda, alpha, r);
    }
    double operator()(const KtierModel& x) const {
      return ppp_mean_field(map_ktier(x, alpha).lambda, alpha, r);
    }
    double operator()(const PlcpModel& x) const {
      if (pm == PlcpInterference::ppp_approx)
        return ppp_mean_field(x.density(), alpha, r);
      // closed form of the line-ensemble double integral (Campbell over
      // the Cox intensity) plus the user's own line; the integral form
      // stays available as plcp_mean_field_lines for cross-checks
      return plcp_mean_field_closed(x, alpha, r);
    }
  };
  if (!(r > 0.0)) throw std::invalid_argument("mean_field_g: r must be > 0");
  return std::visit(V{r, ch.alpha, pm, q}, m);
}

}  // namespace metasinr

#endif  // METASINR_MEAN_FIELD_HPP
