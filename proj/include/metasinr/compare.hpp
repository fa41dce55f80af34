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

#ifndef METASINR_COMPARE_HPP
#define METASINR_COMPARE_HPP

#include <algorithm>
#include <cmath>
#include <span>
#include <stdexcept>
#include <vector>

namespace metasinr {

struct SupGap {
  double value = 0.0;
  double at_gamma = 0.0;
};

// max_i |a_i - b_i| over a common gamma grid
inline SupGap sup_gap(std::span<const double> gamma, std::span<const double> a,
                      std::span<const double> b) {
  if (gamma.size() != a.size() || a.size() != b.size())
    throw std::invalid_argument("sup_gap: size mismatch");
  SupGap g;
  for (size_t i = 0; i < a.size(); ++i) {
    double d = std::abs(a[i] - b[i]);
    if (d >= g.value) {
      g.value = d;
      g.at_gamma = gamma[i];
    }
  }
  return g;
}

enum class KlMode {
  renormalized,  // clamp cell masses at 0, renormalize both to sum 1
  raw_cells      // sum p ln(p/q) over in-grid cells as they come, no renorm
};

// Discretized KL divergence between two meta distributions given as CCDF
// values on the same increasing gamma grid. Each grid point owns one cell:
// the CCDF decrement to the next point, and the last point owns the whole
// remaining tail (the CCDF itself, since the reliability cannot exceed 1).
// Mass below gamma_front is not represented. raw_cells keeps exactly those
// unnormalized cell sums (the totals can differ from 1 when the curves
// disagree at gamma_front, so signed values are possible); renormalized is
// a proper KL between the induced in-grid distributions.
inline double kl_divergence(std::span<const double> gamma,
                            std::span<const double> p_ccdf,
                            std::span<const double> q_ccdf,
                            KlMode mode = KlMode::renormalized) {
  if (gamma.size() != p_ccdf.size() || p_ccdf.size() != q_ccdf.size())
    throw std::invalid_argument("kl_divergence: size mismatch");
  if (gamma.size() < 2) throw std::invalid_argument("kl_divergence: grid");
  size_t n = gamma.size();
  std::vector<double> p(n), q(n);
  for (size_t i = 0; i + 1 < n; ++i) {
    p[i] = p_ccdf[i] - p_ccdf[i + 1];
    q[i] = q_ccdf[i] - q_ccdf[i + 1];
  }
  p[n - 1] = p_ccdf[n - 1];
  q[n - 1] = q_ccdf[n - 1];
  if (mode == KlMode::raw_cells) {
    double kl = 0.0;
    for (size_t i = 0; i < n; ++i)
      if (p[i] > 0.0 && q[i] > 0.0) kl += p[i] * std::log(p[i] / q[i]);
    return kl;
  }
  double ps = 0.0, qs = 0.0;
  for (size_t i = 0; i < n; ++i) {
    p[i] = std::max(p[i], 0.0);
    q[i] = std::max(q[i], 0.0);
    ps += p[i];
    qs += q[i];
  }
  if (ps <= 0.0 || qs <= 0.0) return 0.0;
  double kl = 0.0;
  for (size_t i = 0; i < n; ++i) {
    if (p[i] <= 0.0) continue;
    double pi = p[i] / ps;
    double qi = std::max(q[i] / qs, 1e-12);
    kl += pi * std::log(pi / qi);
  }
  return kl;
}

}  // namespace metasinr

#endif  // METASINR_COMPARE_HPP
