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

#ifndef METASINR_DISTANCE_LAWS_HPP
#define METASINR_DISTANCE_LAWS_HPP

#include <cmath>
#include <variant>

#include "metasinr/core.hpp"
#include "metasinr/models.hpp"
#include "metasinr/plcp.hpp"

namespace metasinr {

// Joint density of (serving distance, nearest-interferer distance) in a
// nearest-BS Poisson network: (2 pi lambda)^2 r0 r1 e^{-pi lambda r1^2} on
// 0 < r0 < r1.
inline double ppp_joint_pdf_r0_r1(double lambda, double r0, double r1) {
  if (!(r0 > 0.0) || !(r1 > r0)) return 0.0;
  double c = 2.0 * kPi * lambda;
  return c * c * r0 * r1 * std::exp(-kPi * lambda * r1 * r1);
}

// Density of the nearest interferer distance.
//   ppp / ktier : second-nearest point of the (mapped) PPP
//   bipolar/mcp : first contact distance of the interferer PPP
//   plcp        : corrected Laplace-functional derivative form
inline double pdf_r1(const NetworkModel& m, const ChannelModel& ch, double r,
                     const QuadratureSpec& q = {}) {
  struct V {
    double r, alpha;
    const QuadratureSpec& q;
    double operator()(const PppModel& x) const {
      double a = kPi * x.lambda;
      return 2.0 * a * a * r * r * r * std::exp(-a * r * r);
    }
    double operator()(const BipolarModel& x) const {
      double a = kPi * x.lambda;
      return 2.0 * a * r * std::exp(-a * r * r);
    }
    double operator()(const McpModel& x) const {
      double a = kPi * x.lambda;
      return 2.0 * a * r * std::exp(-a * r * r);
    }
    double operator()(const KtierModel& x) const {
      return V{r, alpha, q}(map_ktier(x, alpha));
    }
    double operator()(const PlcpModel& x) const {
      return plcp_pdf_r1(x, r, q);
    }
  };
  if (r <= 0.0) return 0.0;
  return std::visit(V{r, ch.alpha, q}, m);
}

// Conditional CDF of the serving distance given the nearest interferer at
// r1, evaluated at r0.
inline double conditional_cdf_r0_given_r1(const NetworkModel& m,
                                          const ChannelModel& ch, double r0,
                                          double r1,
                                          const QuadratureSpec& q = {}) {
  struct V {
    double r0, r1, alpha;
    const QuadratureSpec& q;
    double operator()(const PppModel&) const {
      if (r0 <= 0.0) return 0.0;
      return std::min(1.0, (r0 * r0) / (r1 * r1));
    }
    double operator()(const BipolarModel& x) const {
      return r0 >= x.tx_distance ? 1.0 : 0.0;
    }
    double operator()(const McpModel& x) const {
      if (r0 <= 0.0) return 0.0;
      double rc = x.cluster_radius;
      return std::min(1.0, (r0 * r0) / (rc * rc));
    }
    double operator()(const KtierModel&) const {
      if (r0 <= 0.0) return 0.0;
      return std::min(1.0, (r0 * r0) / (r1 * r1));
    }
    double operator()(const PlcpModel& x) const {
      return plcp_conditional_cdf(x, r0, r1, q);
    }
  };
  if (!(r1 > 0.0)) throw std::invalid_argument("conditional cdf: r1 must be > 0");
  return std::visit(V{r0, r1, ch.alpha, q}, m);
}

// CDF of the serving distance (used by samplers' goodness-of-fit checks).
inline double serving_cdf(const NetworkModel& m, const ChannelModel& ch,
                          double r, const QuadratureSpec& q = {}) {
  struct V {
    double r, alpha;
    const QuadratureSpec& q;
    double operator()(const PppModel& x) const {
      return 1.0 - std::exp(-kPi * x.lambda * r * r);
    }
    double operator()(const BipolarModel& x) const {
      return r >= x.tx_distance ? 1.0 : 0.0;
    }
    double operator()(const McpModel& x) const {
      double rc = x.cluster_radius;
      return std::min(1.0, (r * r) / (rc * rc));
    }
    double operator()(const KtierModel& x) const {
      return V{r, alpha, q}(map_ktier(x, alpha));
    }
    double operator()(const PlcpModel& x) const {
      return 1.0 - plcp_void_ccdf(x, r, q);
    }
  };
  if (r <= 0.0) return 0.0;
  return std::visit(V{r, ch.alpha, q}, m);
}

}  // namespace metasinr

#endif  // METASINR_DISTANCE_LAWS_HPP
