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

#ifndef METASINR_CURVE_HPP
#define METASINR_CURVE_HPP

#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "metasinr/beta_approx.hpp"
#include "metasinr/gil_pelaez.hpp"
#include "metasinr/models.hpp"
#include "metasinr/proposed.hpp"

namespace metasinr {

enum class Method { proposed, proposed_j, beta, exact, nearest_only };

inline const char* method_name(Method m) {
  switch (m) {
    case Method::proposed: return "proposed";
    case Method::proposed_j: return "proposed-j";
    case Method::beta: return "beta";
    case Method::exact: return "exact";
    case Method::nearest_only: return "nearest-only";
  }
  return "?";
}

struct MetaCurve {
  double theta = 0.0;
  Method method = Method::proposed;
  std::vector<double> gamma;
  std::vector<double> value;
  std::vector<double> std_err;  // zero except for the sampled variants
};

struct CurveOptions {
  ProposedOptions proposed;
  int j = 1;  // dominant-interferer count for Method::proposed_j
};

// One CCDF curve over the gamma grid. Expensive shared state (the
// characteristic function cache for the exact method, the beta fit) is
// built once per call.
inline MetaCurve evaluate_curve(const NetworkModel& m, const ChannelModel& ch,
                                double theta, std::vector<double> gamma_grid,
                                Method method, const CurveOptions& opt = {}) {
  MetaCurve c;
  c.theta = theta;
  c.method = method;
  c.gamma = std::move(gamma_grid);
  c.value.reserve(c.gamma.size());
  c.std_err.assign(c.gamma.size(), 0.0);
  switch (method) {
    case Method::proposed:
      for (double g : c.gamma)
        c.value.push_back(proposed_meta(m, ch, {theta, g}, opt.proposed));
      break;
    case Method::proposed_j: {
      const auto* pp = std::get_if<PppModel>(&m);
      if (!pp)
        throw std::invalid_argument(
            "proposed-j: only the Poisson cellular model");
      for (size_t i = 0; i < c.gamma.size(); ++i) {
        double se = 0.0;
        c.value.push_back(proposed_meta_j(*pp, ch, {theta, c.gamma[i]}, opt.j,
                                          opt.proposed, &se));
        c.std_err[i] = se;
      }
      break;
    }
    case Method::beta: {
      BetaFit fit = beta_fit(m, ch, theta, opt.proposed.quad);
      for (double g : c.gamma) c.value.push_back(beta_meta_from_fit(fit, g));
      break;
    }
    case Method::exact: {
      GilPelaezEngine engine(m, ch, theta, opt.proposed.quad);
      for (double g : c.gamma) c.value.push_back(engine.eval(g).value);
      break;
    }
    case Method::nearest_only: {
      ProposedOptions po = opt.proposed;
      po.interference = InterferenceMode::none;
      ChannelModel ch0 = ch;
      ch0.sigma2 = 0.0;
      for (double g : c.gamma)
        c.value.push_back(proposed_meta(m, ch0, {theta, g}, po));
      break;
    }
  }
  return c;
}

}  // namespace metasinr

#endif  // METASINR_CURVE_HPP
