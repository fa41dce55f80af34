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

#ifndef METASINR_MOMENTS_HPP
#define METASINR_MOMENTS_HPP

// b-th moments M_b = E[P_s^b] of the conditional success probability, for
// real b (beta fit) and purely imaginary b (characteristic function of
// ln P_s, inverted by Gil-Pelaez). No analytic form exists for the line
// Cox model.

#include <cmath>
#include <complex>
#include <variant>

#include "metasinr/core.hpp"
#include "metasinr/models.hpp"
#include "metasinr/quadrature.hpp"
#include "metasinr/specfun/complex_gamma.hpp"
#include "metasinr/specfun/gauss_2f1.hpp"

namespace metasinr {

namespace detail {

// Interference functional of the Poisson cellular model:
//   Phi_b = 2 pi int_1^inf (1 - (1 + theta v^-alpha)^-b) v dv
// evaluated after v = 1/s as 2 pi int_0^1 (1 - (1+theta s^alpha)^-b) s^-3 ds.
// The nearest-interferer exclusion scales out: the pair-correlation integral
// for serving distance r equals r^2 Phi_b.
inline cdouble phi_b_direct(double theta, double alpha, cdouble b,
                            const QuadratureSpec& q = {}) {
  auto f = [theta, alpha, b](double s) {
    double x = theta * std::pow(s, alpha);
    cdouble w = 1.0 - pow_one_plus(x, -b);
    return w * std::pow(s, -3.0);
  };
  return 2.0 * kPi * integrate(f, 0.0, 1.0, q);
}

}  // namespace detail

// Series form of the same functional (binomial expansion, Gauss
// hypergeometric terms): oracle for real b. Terminates for integer b.
inline double phi_b_series(double theta, double alpha, double b,
                           int k_max = 60) {
  double delta = 2.0 / alpha;
  double sum = 0.0;
  double binom = 1.0;  // (b choose k), updated multiplicatively
  for (int k = 1; k <= k_max; ++k) {
    binom *= (b - (k - 1)) / k;
    if (binom == 0.0) break;
    double term = binom * ((k % 2 == 1) ? 1.0 : -1.0) * alpha *
                  std::pow(theta, k) / (k * alpha - 2.0) *
                  gauss_2f1(k, k - delta, 1.0 + k - delta, -theta);
    sum += term;
    if (std::abs(term) < 1e-14 * std::abs(sum) && k > b) break;
  }
  return kPi * delta * sum;
}

// M_b of the Poisson cellular network (nearest-BS association).
inline cdouble moment_b(const PppModel& m, const ChannelModel& ch, cdouble b,
                        double theta, const QuadratureSpec& q = {}) {
  if (b == cdouble{0.0, 0.0}) return 1.0;
  cdouble phi = detail::phi_b_direct(theta, ch.alpha, b, q);
  cdouble one_plus = 1.0 + phi / kPi;
  if (ch.sigma2 == 0.0) return 1.0 / one_plus;
  double nu = theta * ch.sigma2 / ch.p_t / std::pow(kPi * m.lambda, 0.5 * ch.alpha);
  double ha = 0.5 * ch.alpha;
  auto f = [&](double u) {
    return std::exp(-one_plus * u - b * nu * std::pow(u, ha));
  };
  return integrate(f, 0.0, 50.0, q);
}

// M_b of the bipolar network: closed form through the complete interference
// functional of the plane, times the noise factor of the fixed link.
inline cdouble moment_b(const BipolarModel& m, const ChannelModel& ch,
                        cdouble b, double theta, const QuadratureSpec& = {}) {
  if (b == cdouble{0.0, 0.0}) return 1.0;
  double d = 2.0 / ch.alpha;
  double R = m.tx_distance;
  double Ra = std::pow(R, ch.alpha);
  cdouble expo = kPi * m.lambda * R * R * std::tgamma(1.0 - d) *
                 std::pow(theta, d) * gamma_ratio(b, d);
  cdouble noise = b * theta * Ra * ch.sigma2 / ch.p_t;
  return std::exp(-expo - noise);
}

// M_b of the clustered-user network: serving distance uniform-in-disk, all
// other cluster centers interfere from the whole plane, for which the
// interference functional also reduces to Gamma ratios.
inline cdouble moment_b(const McpModel& m, const ChannelModel& ch, cdouble b,
                        double theta, const QuadratureSpec& q = {}) {
  if (b == cdouble{0.0, 0.0}) return 1.0;
  double d = 2.0 / ch.alpha;
  cdouble kappa = m.lambda * kPi * std::pow(theta, d) * std::tgamma(1.0 - d) *
                  gamma_ratio(b, d);
  double rc = m.cluster_radius;
  double ha = 0.5 * ch.alpha;
  cdouble bn = b * theta * ch.sigma2 / ch.p_t;
  auto f = [&](double r) {
    return std::exp(-kappa * (r * r) - bn * std::pow(r, ch.alpha)) * 2.0 * r /
           (rc * rc);
  };
  return integrate(f, 0.0, rc, q);
}

inline cdouble moment_b(const KtierModel& m, const ChannelModel& ch, cdouble b,
                        double theta, const QuadratureSpec& q = {}) {
  ChannelModel ch1 = ch;
  ch1.p_t = m.tiers.front().p_t;
  return moment_b(map_ktier(m, ch.alpha), ch1, b, theta, q);
}

inline cdouble moment_b(const NetworkModel& m, const ChannelModel& ch,
                        cdouble b, double theta, const QuadratureSpec& q = {}) {
  if (std::holds_alternative<PlcpModel>(m))
    throw std::invalid_argument(
        "moment_b: the line Cox model has no analytic moments");
  return std::visit(
      [&](const auto& mm) -> cdouble {
        if constexpr (std::is_same_v<std::decay_t<decltype(mm)>, PlcpModel>)
          return 0.0;  // unreachable
        else
          return moment_b(mm, ch, b, theta, q);
      },
      m);
}

// Real-order moment (b > 0).
inline double moment_real(const NetworkModel& m, const ChannelModel& ch,
                          double b, double theta,
                          const QuadratureSpec& q = {}) {
  return moment_b(m, ch, cdouble{b, 0.0}, theta, q).real();
}

}  // namespace metasinr

#endif  // METASINR_MOMENTS_HPP
