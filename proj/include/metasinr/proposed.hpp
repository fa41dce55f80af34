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

#ifndef METASINR_PROPOSED_HPP
#define METASINR_PROPOSED_HPP

// Dominant-interferer approximation of the SINR meta distribution: the j
// nearest interferers are kept exactly, the rest enter through their
// conditional mean. The per-link success probability is then monotone in
// the serving distance, so thresholding it at gamma becomes a critical
// serving radius, and the meta distribution is the distance law evaluated
// there.

#include <cmath>
#include <span>
#include <vector>

#include "metasinr/core.hpp"
#include "metasinr/distance_laws.hpp"
#include "metasinr/mean_field.hpp"
#include "metasinr/models.hpp"
#include "metasinr/plcp.hpp"
#include "metasinr/quadrature.hpp"
#include "metasinr/specfun/lambert_w.hpp"

namespace metasinr {

struct ProposedOptions {
  InterferenceMode interference = InterferenceMode::mean_field;
  PlcpInterference plcp = PlcpInterference::lines;
  QuadratureSpec quad{};
  long mc_nodes = 200000;  // quasi-Monte-Carlo budget for j >= 3
  int mc_batches = 16;
};

// Largest serving distance r0 at which the mean-field success probability
// with interferers at r_nearest (sorted ascending, s evaluated at the
// farthest) still exceeds gamma. Solves
//   e^{-s x} = gamma (1 + theta S x),  x = r0^alpha,  S = sum r_k^-alpha,
// through the log-domain Lambert W.
inline double kj_radius(const ChannelModel& ch, double theta, double gamma,
                        std::span<const double> r_nearest, double g) {
  double a = ch.alpha;
  double s = theta / ch.p_t * (ch.p_t * g + ch.sigma2);
  double S = 0.0;
  for (double rk : r_nearest) S += std::pow(rk, -a);
  if (!(S > 0.0)) throw std::invalid_argument("kj_radius: empty interferer set");
  double ts = theta * S;
  if (s <= 0.0) {
    // no residual and no noise: 1 = gamma (1 + theta S x)
    return std::pow((1.0 - gamma) / (gamma * ts), 1.0 / a);
  }
  // w e^w = (s / (gamma theta S)) e^{s/(theta S)}
  double lw = std::log(s) + s / ts - std::log(gamma * ts);
  double w = lambert_w0_log(lw);
  double x = w / s - 1.0 / ts;
  // The subtraction above cancels as gamma -> 1 (the root slides to 0 while
  // w/s and 1/ts stay order one). Polish with safeguarded Newton on
  //   h(x) = expm1(-s x) + (1 - gamma) - gamma ts x,
  // which evaluates the defining equation without that cancellation. In the
  // well-conditioned regime the first step is ~0 and the loop exits at once.
  double hi = (1.0 - gamma) / (gamma * ts);  // e^{-sx} <= 1 bounds the root
  double lo = 0.0;
  if (!(x > lo) || x > hi) x = hi;
  for (int it = 0; it < 60; ++it) {
    double h = std::expm1(-s * x) + (1.0 - gamma) - gamma * ts * x;
    if (h > 0.0)
      lo = x;
    else
      hi = x;
    double nx = x - h / (-s * std::exp(-s * x) - gamma * ts);
    if (!(nx > lo) || !(nx < hi)) nx = 0.5 * (lo + hi);
    bool done = std::abs(nx - x) <= 1e-15 * x;
    x = nx;
    if (done) break;
  }
  return std::pow(x, 1.0 / a);
}

inline double k1_radius(const NetworkModel& m, const ChannelModel& ch,
                        double r1, double theta, double gamma,
                        const ProposedOptions& opt = {}) {
  double g = 0.0;
  if (opt.interference == InterferenceMode::mean_field)
    g = mean_field_g(m, ch, r1, opt.plcp, opt.quad);
  const double rs[1] = {r1};
  return kj_radius(ch, theta, gamma, rs, g);
}

// Closed-form nearest-interferer-only reduction (no residual, no noise).
inline double nearest_only_meta(const ChannelModel& ch, const MetaQuery& qy) {
  qy.validate();
  double v = (1.0 - qy.gamma) / (qy.gamma * qy.theta);
  return std::min(1.0, std::pow(v, 1.0 / ch.alpha));
}

namespace detail {

// Truncation radius: smallest r with P(R1 > r) below tol.
inline double r1_cutoff(const NetworkModel& m, const ChannelModel& ch,
                        const QuadratureSpec& q) {
  double lam = effective_density(m, ch);
  if (std::holds_alternative<PlcpModel>(m)) {
    const auto& x = std::get<PlcpModel>(m);
    double r = 1.0 / std::sqrt(lam);
    while (plcp_ccdf_r1(x, r, q) > 0.01 * q.abs_tol && r < 1e4 / std::sqrt(lam))
      r *= 1.5;
    return r;
  }
  // Poisson-type tails: (1 + pi lam r^2) e^{-pi lam r^2} < tol at
  // pi lam r^2 = 55 for tol ~ 1e-14.
  return std::sqrt(55.0 / (kPi * lam));
}

}  // namespace detail

// One-dominant-interferer meta distribution: E_{R1}[ F_{R0|R1}(K1 | R1) ].
inline double proposed_meta(const NetworkModel& m, const ChannelModel& ch,
                            const MetaQuery& qy,
                            const ProposedOptions& opt = {}) {
  qy.validate();
  ch.validate();
  validate(m);
  // Explicit nearest-only reduction: with the residual dropped and no noise
  // the integral collapses to the closed form.
  if (opt.interference == InterferenceMode::none && ch.sigma2 == 0.0)
    return nearest_only_meta(ch, qy);

  // K-tier folds into the equivalent single-tier network up front.
  if (std::holds_alternative<KtierModel>(m)) {
    const auto& kt = std::get<KtierModel>(m);
    ChannelModel ch1 = ch;
    ch1.p_t = kt.tiers.front().p_t;
    NetworkModel eq = map_ktier(kt, ch.alpha);
    return proposed_meta(eq, ch1, qy, opt);
  }

  double rmax = detail::r1_cutoff(m, ch, opt.quad);

  if (std::holds_alternative<BipolarModel>(m)) {
    // Step conditional CDF: the integrand is f_R1 * 1{K1(r) >= R}. Locate
    // the crossings of K1 - R and sum exact first-contact CCDF mass.
    const auto& x = std::get<BipolarModel>(m);
    double R = x.tx_distance;
    auto above = [&](double r) {
      return k1_radius(m, ch, r, qy.theta, qy.gamma, opt) >= R;
    };
    auto mass = [&](double a, double b) {
      double c = kPi * x.lambda;
      return std::exp(-c * a * a) - std::exp(-c * b * b);
    };
    const int ngrid = 400;
    double total = 0.0;
    double lo = rmax / ngrid;
    bool prev = above(lo);
    double seg_start = prev ? 0.0 : -1.0;
    // K1 -> 0 as r -> 0, so the state below the first grid point is "below"
    // unless R is tiny; the first grid cell absorbs that error (mass
    // O(lambda pi lo^2) ~ 1e-4 of a cell) -- refined by the bisection below.
    for (int i = 2; i <= ngrid; ++i) {
      double r = rmax * i / ngrid;
      bool cur = above(r);
      if (cur != prev) {
        double a = rmax * (i - 1) / ngrid, b = r;
        for (int it = 0; it < 60; ++it) {
          double mid = 0.5 * (a + b);
          if (above(mid) == prev)
            a = mid;
          else
            b = mid;
        }
        double cross = 0.5 * (a + b);
        if (prev) {  // closing an "above" interval
          total += mass(seg_start, cross);
        } else {
          seg_start = cross;
        }
        prev = cur;
      }
    }
    if (prev) total += mass(seg_start < 0.0 ? 0.0 : seg_start, rmax);
    return std::min(1.0, total);
  }

  if (std::holds_alternative<PlcpModel>(m)) {
    const auto& x = std::get<PlcpModel>(m);
    auto f = [&](double b) {
      double k = k1_radius(m, ch, b, qy.theta, qy.gamma, opt);
      return plcp_conditional_cdf_times_pdf_r1(x, std::min(k, b), b, opt.quad);
    };
    QuadratureSpec qq = opt.quad;
    qq.rel_tol = std::max(qq.rel_tol, 1e-6);  // outer integral; inner quads dominate cost
    double v = integrate(f, 0.0, rmax, qq);
    if (v < 0.0 || v > 1.0) diag::note_clamp();
    return std::min(1.0, std::max(0.0, v));
  }

  auto f = [&](double r) {
    double k = k1_radius(m, ch, r, qy.theta, qy.gamma, opt);
    // No clamp against r here: each conditional law saturates at the end of
    // its own support (r for nearest-point association, the cluster radius
    // for the cluster model, where the serving distance may exceed R1).
    double cdf = conditional_cdf_r0_given_r1(m, ch, k, r, opt.quad);
    return cdf * pdf_r1(m, ch, r, opt.quad);
  };
  double v = integrate(f, 0.0, rmax, opt.quad);
  if (v < 0.0 || v > 1.0) diag::note_clamp();
  return std::min(1.0, std::max(0.0, v));
}

// j dominant interferers, Poisson cellular model only. j = 1 delegates,
// j = 2 is a nested quadrature over the joint law of (R1, R2), j in {3, 4}
// uses quasi-Monte-Carlo over the ordered distance vector.
inline double proposed_meta_j(const PppModel& m, const ChannelModel& ch,
                              const MetaQuery& qy, int j,
                              const ProposedOptions& opt = {},
                              double* std_err = nullptr) {
  qy.validate();
  ch.validate();
  m.validate();
  if (j < 1 || j > 4)
    throw std::invalid_argument("proposed_meta_j: j must be in 1..4");
  if (std_err) *std_err = 0.0;
  if (j == 1) return proposed_meta(NetworkModel{m}, ch, qy, opt);

  double a = ch.alpha;
  double lp = kPi * m.lambda;

  auto g_of = [&](double rj) {
    return opt.interference == InterferenceMode::mean_field
               ? ppp_mean_field(m.lambda, a, rj)
               : 0.0;
  };

  if (j == 2) {
    double rmax = std::sqrt(60.0 / lp);
    // f_{R1,R2}(r1,r2) = (2 lp)^3 r1^3 r2 e^{-lp r2^2} / 2
    auto outer = [&](double r2) {
      auto inner = [&](double r1) {
        double rs[2] = {r1, r2};
        double k = kj_radius(ch, qy.theta, qy.gamma, rs, g_of(r2));
        double cdf = std::min(1.0, std::pow(std::min(k, r1) / r1, 2.0));
        return cdf * r1 * r1 * r1;
      };
      double in = integrate(inner, 0.0, r2, opt.quad);
      return in * r2 * std::exp(-lp * r2 * r2);
    };
    double c = 8.0 * lp * lp * lp / 2.0;
    double v = c * integrate(outer, 0.0, rmax, opt.quad);
    return std::min(1.0, std::max(0.0, v));
  }

  // QMC: the first j+1 ordered squared distances of the PPP are scaled
  // arrival times of a unit-rate Poisson process. Halton points with
  // deterministic Cranley-Patterson shifts; batch spread gives a standard
  // error.
  static const int primes[5] = {2, 3, 5, 7, 11};
  long n_per = std::max<long>(1, opt.mc_nodes / opt.mc_batches);
  std::vector<double> batch_means(opt.mc_batches, 0.0);
  for (int bidx = 0; bidx < opt.mc_batches; ++bidx) {
    double acc = 0.0;
    // fixed per-batch shifts (golden-ratio scramble of the batch index)
    double shift[5];
    for (int d = 0; d <= j; ++d) {
      double u = std::fmod(0.61803398874989484820 * (bidx * (j + 1) + d + 1), 1.0);
      shift[d] = u;
    }
    for (long i = 0; i < n_per; ++i) {
      double rs[4];
      double t = 0.0;
      double r1 = 0.0;
      for (int d = 0; d <= j; ++d) {
        // Halton radical inverse in base primes[d]
        double f = 1.0, h = 0.0;
        long idx = i + 1;
        int base = primes[d];
        while (idx > 0) {
          f /= base;
          h += f * (idx % base);
          idx /= base;
        }
        double u = h + shift[d];
        if (u >= 1.0) u -= 1.0;
        if (u >= 1.0 - 1e-15) u = 1.0 - 1e-15;
        t += -std::log1p(-u);  // exponential arrival gap
        double r = std::sqrt(t / lp);
        if (d == 0) continue;  // serving distance integrated out analytically
        rs[d - 1] = r;
        if (d == 1) r1 = r;
      }
      double k = kj_radius(ch, qy.theta, qy.gamma, std::span(rs, j),
                           g_of(rs[j - 1]));
      acc += std::min(1.0, std::pow(std::min(k, r1) / r1, 2.0));
    }
    batch_means[bidx] = acc / n_per;
  }
  double mean = 0.0;
  for (double b : batch_means) mean += b;
  mean /= opt.mc_batches;
  if (std_err) {
    double var = 0.0;
    for (double b : batch_means) var += (b - mean) * (b - mean);
    var /= (opt.mc_batches - 1.0) * opt.mc_batches;
    *std_err = std::sqrt(var);
  }
  return std::min(1.0, std::max(0.0, mean));
}

}  // namespace metasinr

#endif  // METASINR_PROPOSED_HPP
