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

#ifndef METASINR_SIMULATE_HPP
#define METASINR_SIMULATE_HPP

// Monte-Carlo estimation of the meta distribution. Fading is averaged in
// closed form per link (products of 1/(1+theta (r0/ri)^alpha)), so a
// "realization" only draws geometry. Users are confined to the inner half
// of the window so every link sees a full interference neighborhood of at
// least half the window radius.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "metasinr/core.hpp"
#include "metasinr/distance_laws.hpp"
#include "metasinr/models.hpp"
#include "metasinr/parallel.hpp"

namespace metasinr {

struct SimulationConfig {
  int n_realizations = 100;
  int n_links = 500;  // links per realization
  std::uint64_t seed = 1;
  double window_radius = 0.0;  // 0: 30/sqrt(density)
  int fading_draws = 0;        // 0: closed-form fading average
};

struct EmpiricalMeta {
  double theta = 0.0;
  std::vector<double> gamma;    // evaluation grid
  std::vector<double> ccdf;     // P(P_s > gamma)
  std::vector<double> std_err;  // binomial, per grid point
  double mean_ps = 0.0;
  long n_links = 0;
  long rejected_links = 0;
  std::vector<double> ps;  // per-link success probabilities
};

inline std::vector<double> default_gamma_grid() {
  std::vector<double> g;
  for (int i = 1; i <= 99; ++i) g.push_back(i / 100.0);
  return g;
}

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::mt19937_64 make_rng(std::uint64_t seed, std::uint64_t stream) {
  return std::mt19937_64(splitmix64(seed * 0x100000001b3ULL + stream));
}

// (theta (r0/ri)^alpha) with precomputed r0^2; works from squared distances.
inline double pow_half_alpha(double z, double half_alpha) {
  if (half_alpha == 2.0) return z * z;
  if (half_alpha == 1.5) return z * std::sqrt(z);
  return std::pow(z, half_alpha);
}

struct XY {
  std::vector<double> x, y;
  void add(double xx, double yy) {
    x.push_back(xx);
    y.push_back(yy);
  }
  size_t size() const { return x.size(); }
};

inline void fill_disk_ppp(XY& pts, double lambda, double w,
                          std::mt19937_64& rng) {
  std::poisson_distribution<long> np(lambda * kPi * w * w);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  long n = np(rng);
  for (long i = 0; i < n; ++i) {
    double r = w * std::sqrt(uni(rng));
    double a = 2.0 * kPi * uni(rng);
    pts.add(r * std::cos(a), r * std::sin(a));
  }
}

struct PlcpLine {
  double rho, cx, cy, dx, dy;    // foot of perpendicular and direction
  double half;                   // half chord length in window
  std::vector<double> pt;        // BS coordinates along the line
  double core_lo = 0.0, core_hi = 0.0;  // chord segment inside the core disk
};

inline std::vector<PlcpLine> fill_plcp(const PlcpModel& m, double w,
                                       std::mt19937_64& rng,
                                       bool typical_line_through_origin) {
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  std::vector<PlcpLine> lines;
  auto add_line = [&](double rho, double ang) {
    PlcpLine L;
    L.rho = rho;
    double nx = std::cos(ang), ny = std::sin(ang);
    L.cx = rho * nx;
    L.cy = rho * ny;
    L.dx = -ny;
    L.dy = nx;
    double h2 = w * w - rho * rho;
    if (h2 <= 0.0) return;
    L.half = std::sqrt(h2);
    std::poisson_distribution<long> np(m.lambda_p * 2.0 * L.half);
    long n = np(rng);
    L.pt.resize(n);
    for (long i = 0; i < n; ++i) L.pt[i] = L.half * (2.0 * uni(rng) - 1.0);
    lines.push_back(std::move(L));
  };
  if (typical_line_through_origin) add_line(0.0, kPi * uni(rng));
  std::poisson_distribution<long> nl(m.offset_intensity() * 2.0 * w);
  long n = nl(rng);
  for (long i = 0; i < n; ++i)
    add_line(w * (2.0 * uni(rng) - 1.0), kPi * uni(rng));
  return lines;
}

}  // namespace detail

// Per-link success probabilities of one geometry realization, one value per
// (link, theta). Used by simulate_meta; split out for testability.
class LinkSampler {
 public:
  LinkSampler(const NetworkModel& m, const ChannelModel& ch,
              const SimulationConfig& cfg)
      : model_(m), ch_(ch), cfg_(cfg) {
    w_ = cfg.window_radius > 0.0 ? cfg.window_radius
                                 : default_window_radius(m, ch);
  }

  double window_radius() const { return w_; }

  // Appends ps[link][theta_index] for one realization.
  void run_realization(std::uint64_t realization_index,
                       std::span<const double> thetas,
                       std::vector<std::vector<double>>& out,
                       long& rejected) const {
    auto rng = detail::make_rng(cfg_.seed, realization_index);
    // Fading draws use a stream of their own so the geometry (and therefore
    // the link set) is identical whichever fading mode is active.
    auto frng =
        detail::make_rng(detail::splitmix64(cfg_.seed), realization_index);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    double core = 0.5 * w_;
    double ha = 0.5 * ch_.alpha;

    auto eval_link = [&](double r0sq, const std::vector<double>& d2,
                         size_t skip) {
      std::vector<double> row(thetas.size());
      if (cfg_.fading_draws > 0) {
        eval_link_fading(r0sq, d2, skip, thetas, row, frng);
      } else {
        for (size_t ti = 0; ti < thetas.size(); ++ti) {
          double th = thetas[ti];
          double logp =
              -th * detail::pow_half_alpha(r0sq, ha) * ch_.sigma2 / ch_.p_t;
          for (size_t i = 0; i < d2.size(); ++i) {
            if (i == skip) continue;
            logp -= std::log1p(th * detail::pow_half_alpha(r0sq / d2[i], ha));
          }
          row[ti] = std::exp(logp);
        }
      }
      out.push_back(std::move(row));
    };

    if (const auto* pp = std::get_if<PppModel>(&model_)) {
      detail::XY pts;
      detail::fill_disk_ppp(pts, pp->lambda, w_, rng);
      for (int l = 0; l < cfg_.n_links; ++l) {
        double ux, uy;
        double r0sq = 0.0;
        size_t s0 = 0;
        std::vector<double> d2;
        bool ok = false;
        for (int attempt = 0; attempt < 100; ++attempt) {
          double r = core * std::sqrt(uni(rng));
          double a = 2.0 * kPi * uni(rng);
          ux = r * std::cos(a);
          uy = r * std::sin(a);
          d2.assign(pts.size(), 0.0);
          if (pts.size() == 0) break;
          for (size_t i = 0; i < pts.size(); ++i) {
            double dx = pts.x[i] - ux, dy = pts.y[i] - uy;
            d2[i] = dx * dx + dy * dy;
          }
          s0 = std::min_element(d2.begin(), d2.end()) - d2.begin();
          r0sq = d2[s0];
          if (r0sq <= core * core) {
            ok = true;
            break;
          }
          ++rejected;
        }
        if (!ok) continue;
        eval_link(r0sq, d2, s0);
      }
      return;
    }

    if (const auto* bp = std::get_if<BipolarModel>(&model_)) {
      detail::XY pts;
      detail::fill_disk_ppp(pts, bp->lambda, w_, rng);
      double R = bp->tx_distance;
      for (int l = 0; l < cfg_.n_links; ++l) {
        double r = core * std::sqrt(uni(rng));
        double a = 2.0 * kPi * uni(rng);
        double ux = r * std::cos(a), uy = r * std::sin(a);
        std::vector<double> d2(pts.size());
        for (size_t i = 0; i < pts.size(); ++i) {
          double dx = pts.x[i] - ux, dy = pts.y[i] - uy;
          d2[i] = dx * dx + dy * dy;
        }
        eval_link(R * R, d2, d2.size());
      }
      return;
    }

    if (const auto* mp = std::get_if<McpModel>(&model_)) {
      detail::XY pts;
      detail::fill_disk_ppp(pts, mp->lambda, w_, rng);
      double rc = mp->cluster_radius;
      for (int l = 0; l < cfg_.n_links; ++l) {
        double r = core * std::sqrt(uni(rng));
        double a = 2.0 * kPi * uni(rng);
        double ux = r * std::cos(a), uy = r * std::sin(a);
        double r0 = rc * std::sqrt(uni(rng));  // own center, uniform in disk
        std::vector<double> d2(pts.size());
        for (size_t i = 0; i < pts.size(); ++i) {
          double dx = pts.x[i] - ux, dy = pts.y[i] - uy;
          d2[i] = dx * dx + dy * dy;
        }
        eval_link(r0 * r0, d2, d2.size());
      }
      return;
    }

    if (const auto* kt = std::get_if<KtierModel>(&model_)) {
      // Map every point to its tier-1-equivalent distance: association by
      // strongest average power and the fading average keep their exact
      // form in the mapped coordinates.
      double p1 = kt->tiers.front().p_t;
      detail::XY pts;
      std::vector<double> scale2;  // (p1/pi)^{2/alpha} per point
      for (const auto& tier : kt->tiers) {
        double s =
            std::pow(p1 / tier.p_t, 2.0 / ch_.alpha);  // d^2 multiplier
        detail::XY tier_pts;
        detail::fill_disk_ppp(tier_pts, tier.lambda, w_, rng);
        for (size_t i = 0; i < tier_pts.size(); ++i) {
          pts.add(tier_pts.x[i], tier_pts.y[i]);
          scale2.push_back(s);
        }
      }
      ChannelModel ch1 = ch_;
      ch1.p_t = p1;
      for (int l = 0; l < cfg_.n_links; ++l) {
        double r = core * std::sqrt(uni(rng));
        double a = 2.0 * kPi * uni(rng);
        double ux = r * std::cos(a), uy = r * std::sin(a);
        if (pts.size() == 0) continue;
        std::vector<double> d2(pts.size());
        for (size_t i = 0; i < pts.size(); ++i) {
          double dx = pts.x[i] - ux, dy = pts.y[i] - uy;
          d2[i] = (dx * dx + dy * dy) * scale2[i];
        }
        size_t s0 = std::min_element(d2.begin(), d2.end()) - d2.begin();
        double r0sq = d2[s0];
        if (r0sq > core * core) {
          ++rejected;
          continue;
        }
        // noise term uses tier-1 power
        std::vector<double> row(thetas.size());
        for (size_t ti = 0; ti < thetas.size(); ++ti) {
          double th = thetas[ti];
          double logp = -th * detail::pow_half_alpha(r0sq, ha) * ch1.sigma2 /
                        ch1.p_t;
          for (size_t i = 0; i < d2.size(); ++i) {
            if (i == s0) continue;
            logp -= std::log1p(th * detail::pow_half_alpha(r0sq / d2[i], ha));
          }
          row[ti] = std::exp(logp);
        }
        out.push_back(std::move(row));
      }
      return;
    }

    const auto& pl = std::get<PlcpModel>(model_);
    auto lines = detail::fill_plcp(pl, w_, rng, false);
    // chord mass inside the core disk, for length-weighted user placement
    double total = 0.0;
    for (auto& L : lines) {
      double h2 = core * core - L.rho * L.rho;
      if (h2 > 0.0) {
        double h = std::sqrt(h2);
        L.core_lo = -h;
        L.core_hi = h;
        total += 2.0 * h;
      } else {
        L.core_lo = L.core_hi = 0.0;
      }
    }
    if (total <= 0.0) return;
    for (int l = 0; l < cfg_.n_links; ++l) {
      double pick = uni(rng) * total;
      size_t li = 0;
      for (; li < lines.size(); ++li) {
        double len = lines[li].core_hi - lines[li].core_lo;
        if (pick <= len) break;
        pick -= len;
      }
      if (li >= lines.size()) li = lines.size() - 1;
      const auto& L = lines[li];
      double tau = L.core_lo + pick;
      double ux = L.cx + tau * L.dx, uy = L.cy + tau * L.dy;
      std::vector<double> d2;
      d2.reserve(256);
      for (const auto& M : lines) {
        if (&M == &L) {
          for (double t : M.pt) {
            double dd = t - tau;
            d2.push_back(dd * dd);
          }
        } else {
          for (double t : M.pt) {
            double px = M.cx + t * M.dx - ux, py = M.cy + t * M.dy - uy;
            d2.push_back(px * px + py * py);
          }
        }
      }
      if (d2.empty()) continue;
      size_t s0 = std::min_element(d2.begin(), d2.end()) - d2.begin();
      double r0sq = d2[s0];
      if (r0sq > core * core) {
        ++rejected;
        continue;
      }
      eval_link(r0sq, d2, s0);
    }
  }

 private:
  void eval_link_fading(double r0sq, const std::vector<double>& d2,
                        size_t skip, std::span<const double> thetas,
                        std::vector<double>& row,
                        std::mt19937_64& rng) const {
    double ha = 0.5 * ch_.alpha;
    std::exponential_distribution<double> expd(1.0);
    std::vector<long> hits(thetas.size(), 0);
    double r0a = detail::pow_half_alpha(r0sq, ha);
    for (int d = 0; d < cfg_.fading_draws; ++d) {
      double inter = 0.0;
      for (size_t i = 0; i < d2.size(); ++i) {
        if (i == skip) continue;
        inter += expd(rng) / detail::pow_half_alpha(d2[i], ha);
      }
      double sig = expd(rng) / r0a;
      double sinr = ch_.p_t * sig / (ch_.p_t * inter + ch_.sigma2);
      for (size_t ti = 0; ti < thetas.size(); ++ti)
        if (sinr > thetas[ti]) ++hits[ti];
    }
    for (size_t ti = 0; ti < thetas.size(); ++ti)
      row[ti] = static_cast<double>(hits[ti]) / cfg_.fading_draws;
  }

  NetworkModel model_;
  ChannelModel ch_;
  SimulationConfig cfg_;
  double w_;
};

// Empirical meta distribution at each theta, estimated over
// n_realizations x n_links links. Deterministic for a fixed seed,
// independent of the thread count.
inline std::vector<EmpiricalMeta> simulate_meta(
    const NetworkModel& m, const ChannelModel& ch,
    std::span<const double> thetas, const SimulationConfig& cfg,
    std::vector<double> gamma_grid = {}) {
  validate(m);
  ch.validate();
  if (gamma_grid.empty()) gamma_grid = default_gamma_grid();
  LinkSampler sampler(m, ch, cfg);

  std::vector<std::vector<std::vector<double>>> per_real(cfg.n_realizations);
  std::vector<long> rejected(cfg.n_realizations, 0);
  parallel_for(cfg.n_realizations, [&](long i) {
    sampler.run_realization(static_cast<std::uint64_t>(i), thetas,
                            per_real[i], rejected[i]);
  });

  std::vector<EmpiricalMeta> out(thetas.size());
  long rej = 0;
  for (long r : rejected) rej += r;
  for (size_t ti = 0; ti < thetas.size(); ++ti) {
    EmpiricalMeta& em = out[ti];
    em.theta = thetas[ti];
    em.gamma = gamma_grid;
    em.rejected_links = rej;
    for (const auto& rows : per_real)
      for (const auto& row : rows) em.ps.push_back(row[ti]);
    em.n_links = static_cast<long>(em.ps.size());
    double mean = 0.0;
    for (double p : em.ps) mean += p;
    em.mean_ps = em.n_links ? mean / em.n_links : 0.0;
    em.ccdf.resize(gamma_grid.size());
    em.std_err.resize(gamma_grid.size());
    for (size_t gi = 0; gi < gamma_grid.size(); ++gi) {
      long cnt = 0;
      for (double p : em.ps)
        if (p > gamma_grid[gi]) ++cnt;
      double phat = em.n_links ? static_cast<double>(cnt) / em.n_links : 0.0;
      em.ccdf[gi] = phat;
      em.std_err[gi] =
          em.n_links ? std::sqrt(phat * (1.0 - phat) / em.n_links) : 0.0;
    }
  }
  return out;
}

// Origin-user view of one realization: serving distance under the model's
// association rule. Used by distribution goodness-of-fit tests.
inline double sample_serving_distance(const NetworkModel& m,
                                      const ChannelModel& ch, double w,
                                      std::mt19937_64& rng) {
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  if (const auto* pp = std::get_if<PppModel>(&m)) {
    detail::XY pts;
    detail::fill_disk_ppp(pts, pp->lambda, w, rng);
    double best = w * w;
    for (size_t i = 0; i < pts.size(); ++i)
      best = std::min(best, pts.x[i] * pts.x[i] + pts.y[i] * pts.y[i]);
    return std::sqrt(best);
  }
  if (std::get_if<BipolarModel>(&m))
    return std::get<BipolarModel>(m).tx_distance;
  if (const auto* mp = std::get_if<McpModel>(&m))
    return mp->cluster_radius * std::sqrt(uni(rng));
  if (const auto* kt = std::get_if<KtierModel>(&m)) {
    double p1 = kt->tiers.front().p_t;
    double best = w * w;
    for (const auto& tier : kt->tiers) {
      double s = std::pow(p1 / tier.p_t, 2.0 / ch.alpha);
      detail::XY pts;
      detail::fill_disk_ppp(pts, tier.lambda, w, rng);
      for (size_t i = 0; i < pts.size(); ++i)
        best = std::min(best, (pts.x[i] * pts.x[i] + pts.y[i] * pts.y[i]) * s);
    }
    return std::sqrt(best);
  }
  const auto& pl = std::get<PlcpModel>(m);
  auto lines = detail::fill_plcp(pl, w, rng, true);  // Palm: line through origin
  double best = w * w;
  for (const auto& L : lines)
    for (double t : L.pt) {
      double px = L.cx + t * L.dx, py = L.cy + t * L.dy;
      best = std::min(best, px * px + py * py);
    }
  return std::sqrt(best);
}

// Nearest-interferer distance from the origin user (second nearest point,
// or first interferer for the fixed-link / clustered models).
inline double sample_interferer_distance(const NetworkModel& m,
                                         const ChannelModel& ch, double w,
                                         std::mt19937_64& rng) {
  if (const auto* pp = std::get_if<PppModel>(&m)) {
    detail::XY pts;
    detail::fill_disk_ppp(pts, pp->lambda, w, rng);
    double b0 = w * w, b1 = w * w;
    for (size_t i = 0; i < pts.size(); ++i) {
      double d = pts.x[i] * pts.x[i] + pts.y[i] * pts.y[i];
      if (d < b0) {
        b1 = b0;
        b0 = d;
      } else if (d < b1) {
        b1 = d;
      }
    }
    return std::sqrt(b1);
  }
  if (const auto* bp = std::get_if<BipolarModel>(&m)) {
    detail::XY pts;
    detail::fill_disk_ppp(pts, bp->lambda, w, rng);
    double best = w * w;
    for (size_t i = 0; i < pts.size(); ++i)
      best = std::min(best, pts.x[i] * pts.x[i] + pts.y[i] * pts.y[i]);
    return std::sqrt(best);
  }
  if (const auto* mp = std::get_if<McpModel>(&m)) {
    detail::XY pts;
    detail::fill_disk_ppp(pts, mp->lambda, w, rng);
    double best = w * w;
    for (size_t i = 0; i < pts.size(); ++i)
      best = std::min(best, pts.x[i] * pts.x[i] + pts.y[i] * pts.y[i]);
    return std::sqrt(best);
  }
  if (std::get_if<KtierModel>(&m))
    throw std::invalid_argument("interferer sampling: use the mapped network");
  const auto& pl = std::get<PlcpModel>(m);
  auto lines = detail::fill_plcp(pl, w, rng, true);
  double b0 = w * w, b1 = w * w;
  for (const auto& L : lines)
    for (double t : L.pt) {
      double px = L.cx + t * L.dx, py = L.cy + t * L.dy;
      double d = px * px + py * py;
      if (d < b0) {
        b1 = b0;
        b0 = d;
      } else if (d < b1) {
        b1 = d;
      }
    }
  return std::sqrt(b1);
}

}  // namespace metasinr

#endif  // METASINR_SIMULATE_HPP
