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

#ifndef METASINR_MODELS_HPP
#define METASINR_MODELS_HPP

#include <cmath>
#include <stdexcept>
#include <variant>
#include <vector>

#include "metasinr/core.hpp"

namespace metasinr {

// Homogeneous Poisson cellular network; the user talks to the nearest BS.
struct PppModel {
  double lambda = 1.0;  // BS density [1/km^2]
  void validate() const {
    if (!(lambda > 0.0)) throw std::invalid_argument("ppp: lambda must be > 0");
  }
};

// Poisson bipolar (ad hoc) network: each receiver has a dedicated
// transmitter at fixed distance tx_distance; all other transmitters of the
// density-lambda PPP interfere.
struct BipolarModel {
  double lambda = 10.0;      // transmitter density [1/km^2]
  double tx_distance = 0.05; // link length [km]
  void validate() const {
    if (!(lambda > 0.0) || !(tx_distance > 0.0))
      throw std::invalid_argument("bipolar: lambda and tx_distance must be > 0");
  }
};

// Clustered users: cluster centers (the BSs) form a PPP of density lambda,
// each user is uniform in a disk of radius cluster_radius around its own
// center and is served by that center. Other centers interfere.
struct McpModel {
  double lambda = 10.0;        // center density [1/km^2]
  double cluster_radius = 0.1; // disk radius [km]
  void validate() const {
    if (!(lambda > 0.0) || !(cluster_radius > 0.0))
      throw std::invalid_argument("mcp: lambda and cluster_radius must be > 0");
  }
};

// K independent PPP tiers with per-tier transmit powers; the user associates
// with the strongest average received power.
struct KtierModel {
  struct Tier {
    double lambda;  // [1/km^2]
    double p_t;     // [W]
  };
  std::vector<Tier> tiers;
  void validate() const {
    if (tiers.empty()) throw std::invalid_argument("ktier: needs >= 1 tier");
    for (const auto& t : tiers)
      if (!(t.lambda > 0.0) || !(t.p_t > 0.0))
        throw std::invalid_argument("ktier: tier lambda and p_t must be > 0");
  }
};

// Poisson line Cox: lines with signed-offset intensity pi*lambda_l and
// uniform angles; BSs are 1D PPPs of intensity lambda_p on each line. The
// typical user sits on a line. BS density is pi*lambda_l*lambda_p.
struct PlcpModel {
  double lambda_l = 8.0 / 3.14159265358979323846;  // line parameter [1/km]
  double lambda_p = 0.2;                           // points per km of line
  void validate() const {
    if (!(lambda_l > 0.0) || !(lambda_p > 0.0))
      throw std::invalid_argument("plcp: lambda_l and lambda_p must be > 0");
  }
  double offset_intensity() const { return 3.14159265358979323846 * lambda_l; }
  double density() const { return offset_intensity() * lambda_p; }
};

using NetworkModel =
    std::variant<PppModel, BipolarModel, McpModel, KtierModel, PlcpModel>;

inline void validate(const NetworkModel& m) {
  std::visit([](const auto& mm) { mm.validate(); }, m);
}

// Equivalent single-tier density for a K-tier network: fold tier i into the
// tier-1 power scale, lambda' = sum_i lambda_i (p_i / p_1)^delta. The mapped
// network is a PPP of density lambda' transmitting at p_1.
inline PppModel map_ktier(const KtierModel& m, double alpha) {
  m.validate();
  double delta = 2.0 / alpha;
  double p1 = m.tiers.front().p_t;
  double lam = 0.0;
  for (const auto& t : m.tiers) lam += t.lambda * std::pow(t.p_t / p1, delta);
  return PppModel{lam};
}

// Density that sets the spatial scale of a model (used for windows and
// integral truncation).
inline double effective_density(const NetworkModel& m, const ChannelModel& ch) {
  struct V {
    double alpha;
    double operator()(const PppModel& x) const { return x.lambda; }
    double operator()(const BipolarModel& x) const { return x.lambda; }
    double operator()(const McpModel& x) const { return x.lambda; }
    double operator()(const KtierModel& x) const {
      return map_ktier(x, alpha).lambda;
    }
    double operator()(const PlcpModel& x) const { return x.density(); }
  };
  return std::visit(V{ch.alpha}, m);
}

// Simulation / sampling window radius: 30 / sqrt(density), which keeps the
// mean residual interference beyond the window negligible at all supported
// alpha.
inline double default_window_radius(const NetworkModel& m,
                                    const ChannelModel& ch) {
  return 30.0 / std::sqrt(effective_density(m, ch));
}

}  // namespace metasinr

#endif  // METASINR_MODELS_HPP
