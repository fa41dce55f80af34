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

#ifndef METASINR_CORE_HPP
#define METASINR_CORE_HPP

#include <atomic>
#include <cmath>
#include <stdexcept>
#include <string>

namespace metasinr {

inline constexpr double kPi = 3.14159265358979323846;

// Thrown when an iteration or quadrature routine cannot reach its target
// accuracy. The CLI maps this to exit code 3.
class numerical_error : public std::runtime_error {
 public:
  explicit numerical_error(const std::string& what) : std::runtime_error(what) {}
};

// Propagation environment. Distances are in km, powers in watts, so the mean
// received power over a link of length r is p_t * r^-alpha.
struct ChannelModel {
  double alpha = 4.0;    // path-loss exponent, > 2
  double p_t = 10.0;     // transmit power [W]
  double sigma2 = 1e-9;  // noise power [W], >= 0

  double delta() const { return 2.0 / alpha; }

  void validate() const {
    if (!(alpha > 2.0)) throw std::invalid_argument("alpha must be > 2");
    if (!(p_t > 0.0)) throw std::invalid_argument("p_t must be > 0");
    if (!(sigma2 >= 0.0)) throw std::invalid_argument("sigma2 must be >= 0");
  }
};

// A single evaluation point of the meta distribution: the SINR threshold
// theta (linear) and the reliability level gamma.
struct MetaQuery {
  double theta = 1.0;  // > 0
  double gamma = 0.5;  // in (0, 1)

  void validate() const {
    if (!(theta > 0.0)) throw std::invalid_argument("theta must be > 0");
    if (!(gamma > 0.0 && gamma < 1.0))
      throw std::invalid_argument("gamma must be in (0,1)");
  }
};

// Knobs shared by all numerical routines.
struct QuadratureSpec {
  double rel_tol = 1e-8;
  double abs_tol = 1e-12;
  int max_subdivisions = 2000;
  double gilpelaez_t_max = 200.0;
  int gilpelaez_nodes = 4000;
  int series_k_max = 60;
  // Semi-infinite integrals over a density with scale L are truncated at
  // L * infinite_cutoff_multiplier once the tail bound drops below abs_tol.
  double infinite_cutoff_multiplier = 40.0;
};

namespace diag {
// Out-of-range results that were clamped back into their contract range
// (e.g. a CDF value at 1 + 1e-12, or a negative critical-radius bracket).
inline std::atomic<long>& clamp_count() {
  static std::atomic<long> c{0};
  return c;
}
inline void note_clamp() { clamp_count().fetch_add(1, std::memory_order_relaxed); }
}  // namespace diag

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
inline double linear_to_db(double x) { return 10.0 * std::log10(x); }

}  // namespace metasinr

#endif  // METASINR_CORE_HPP
