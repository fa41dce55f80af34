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

#ifndef METASINR_PLCP_HPP
#define METASINR_PLCP_HPP

// Distance laws of the line Cox network under the on-line user's Palm view.
//
// Everything below is driven by the Laplace functional of the total chord
// length C_r of the process lines inside B(0, r),
//   L(r, s) = E[e^{-s C_r}]
//           = exp(-2 s r - 2 pi lambda_l A(r, s)),
//   A(r, s) = int_0^r (1 - e^{-2 s sqrt(r^2 - rho^2)}) drho,
// where the 2sr term is the user's own line. Counts of BSs in B(0, r) are
// mixed Poisson with mean lambda_p C_r, so
//   P(R0 > r)                 = L(r, lambda_p)
//   P(R1 > r)                 = L - lambda_p dL/ds        at s = lambda_p
//   P(R0 > x, R1 > b), x < b  = E[(1 + lambda_p (C_b - C_x)) e^{-lambda_p C_b}].
// Densities and the conditional CDF follow by differentiating in r. The
// rho-integrals are evaluated after rho = r sin(t), which removes the
// 1/sqrt(r^2 - rho^2) endpoint factor.

#include <cmath>

#include "metasinr/core.hpp"
#include "metasinr/models.hpp"
#include "metasinr/quadrature.hpp"

namespace metasinr {

namespace plcp_detail {

// A(r) = int_0^r (1 - e^{-2 s sqrt(r^2-rho^2)}) drho at s = lambda_p.
inline double chord_void_integral(const PlcpModel& m, double r,
                                  const QuadratureSpec& q) {
  double s = m.lambda_p;
  auto f = [r, s](double t) {
    double ct = std::cos(t);
    return (1.0 - std::exp(-2.0 * s * r * ct)) * ct;
  };
  return r * integrate(f, 0.0, 1.5707963267948966, q);
}

// P(r) = int_0^r (2r / sqrt(r^2-rho^2)) e^{-2 s sqrt(...)} drho.
inline double p_integral(const PlcpModel& m, double r,
                         const QuadratureSpec& q) {
  double s = m.lambda_p;
  auto f = [r, s](double t) { return std::exp(-2.0 * s * r * std::cos(t)); };
  return 2.0 * r * integrate(f, 0.0, 1.5707963267948966, q);
}

// Q(r) = int_0^r 2 sqrt(r^2-rho^2) e^{-2 s sqrt(...)} drho.
inline double q_integral(const PlcpModel& m, double r,
                         const QuadratureSpec& q) {
  double s = m.lambda_p;
  auto f = [r, s](double t) {
    double ct = std::cos(t);
    return 2.0 * ct * ct * std::exp(-2.0 * s * r * ct);
  };
  return r * r * integrate(f, 0.0, 1.5707963267948966, q);
}

// T(r) = int_0^r 2r e^{-2 s sqrt(...)} drho.
inline double t_integral(const PlcpModel& m, double r,
                         const QuadratureSpec& q) {
  double s = m.lambda_p;
  auto f = [r, s](double t) {
    double ct = std::cos(t);
    return std::exp(-2.0 * s * r * ct) * ct;
  };
  return 2.0 * r * r * integrate(f, 0.0, 1.5707963267948966, q);
}

}  // namespace plcp_detail

// P(R0 > r): no BS within r of the on-line user.
inline double plcp_void_ccdf(const PlcpModel& m, double r,
                             const QuadratureSpec& q = {}) {
  if (r <= 0.0) return 1.0;
  double a = plcp_detail::chord_void_integral(m, r, q);
  double pil = 3.14159265358979323846 * m.lambda_l;
  return std::exp(-2.0 * m.lambda_p * r - 2.0 * pil * a);
}

// Serving-distance density f_R0(r) = -d/dr P(R0 > r).
inline double plcp_pdf_r0(const PlcpModel& m, double r,
                          const QuadratureSpec& q = {}) {
  if (r <= 0.0) return 0.0;
  double pil = 3.14159265358979323846 * m.lambda_l;
  double p = plcp_detail::p_integral(m, r, q);
  return (2.0 * m.lambda_p + 2.0 * pil * m.lambda_p * p) *
         plcp_void_ccdf(m, r, q);
}

// Nearest-interferer (second BS) density
//   f_R1 = L * [E_r + lambda_p (E_s E_r - E_sr)]
// with E = 2 s r + 2 pi lambda_l A(r, s) and subscripts denoting partials at
// s = lambda_p.
inline double plcp_pdf_r1(const PlcpModel& m, double r,
                          const QuadratureSpec& q = {}) {
  if (r <= 0.0) return 0.0;
  double s = m.lambda_p;
  double pil = 3.14159265358979323846 * m.lambda_l;
  double p = plcp_detail::p_integral(m, r, q);
  double qq = plcp_detail::q_integral(m, r, q);
  double t = plcp_detail::t_integral(m, r, q);
  double er = 2.0 * s + 2.0 * pil * s * p;
  double es = 2.0 * r + 2.0 * pil * qq;
  double esr = 2.0 + 2.0 * pil * (p - 2.0 * s * t);
  return plcp_void_ccdf(m, r, q) * (er + s * (es * er - esr));
}

// P(R1 > r).
inline double plcp_ccdf_r1(const PlcpModel& m, double r,
                           const QuadratureSpec& q = {}) {
  if (r <= 0.0) return 1.0;
  double s = m.lambda_p;
  double pil = 3.14159265358979323846 * m.lambda_l;
  double qq = plcp_detail::q_integral(m, r, q);
  double es = 2.0 * r + 2.0 * pil * qq;
  return plcp_void_ccdf(m, r, q) * (1.0 + s * es);
}

namespace plcp_detail {

// Pieces of W(x,b) = P(R0 > x, R1 > b) = V(b) * beta(x,b) with
// beta = 1 + 2 lambda_p (b - x) + 2 pi lambda_l lambda_p J(x, b),
// J = int_0^b (D - d) e^{-lambda_p D} drho, D = 2 sqrt(b^2-rho^2),
// d = 2 sqrt(max(0, x^2-rho^2)).
//
// The rho-integrals are split at rho = x where d has a kink.
struct JointPieces {
  double beta;    // beta(x, b)
  double beta_b;  // d beta / d b
};

inline JointPieces joint_pieces(const PlcpModel& m, double x, double b,
                                const QuadratureSpec& q) {
  double s = m.lambda_p;
  double pil = 3.14159265358979323846 * m.lambda_l;
  auto dd = [x](double rho) {
    double v = x * x - rho * rho;
    return v > 0.0 ? 2.0 * std::sqrt(v) : 0.0;
  };
  auto jf = [&](double rho) {
    double D = 2.0 * std::sqrt(std::max(b * b - rho * rho, 0.0));
    return (D - dd(rho)) * std::exp(-s * D);
  };
  // dJ/db integrand, with rho = b sin(t) to tame 2b/sqrt(b^2-rho^2).
  auto djf = [&](double t) {
    double rho = b * std::sin(t);
    double D = 2.0 * b * std::cos(t);
    return 2.0 * b * (1.0 - s * (D - dd(rho))) * std::exp(-s * D);
  };
  double J = integrate(jf, 0.0, x, q) + integrate(jf, x, b, q);
  double tx = std::asin(std::min(x / b, 1.0));
  double dJ = integrate(djf, 0.0, tx, q) +
              integrate(djf, tx, 1.5707963267948966, q);
  JointPieces out;
  out.beta = 1.0 + 2.0 * s * (b - x) + 2.0 * pil * s * J;
  out.beta_b = 2.0 * s + 2.0 * pil * s * dJ;
  return out;
}

}  // namespace plcp_detail

// Joint survival W(x, b) = P(R0 > x, R1 > b), 0 <= x <= b.
inline double plcp_joint_survival(const PlcpModel& m, double x, double b,
                                  const QuadratureSpec& q = {}) {
  if (b <= 0.0) return 1.0;
  x = std::min(std::max(x, 0.0), b);
  auto pieces = plcp_detail::joint_pieces(m, x, b, q);
  return plcp_void_ccdf(m, b, q) * pieces.beta;
}

// F_{R0|R1}(x | b) * f_R1(b), i.e. d/db applied to -W plus the marginal
// term; integrating this against db directly avoids dividing by f_R1 near
// its zeros. Equals f_R1(b) + dW/db.
inline double plcp_conditional_cdf_times_pdf_r1(const PlcpModel& m, double x,
                                                double b,
                                                const QuadratureSpec& q = {}) {
  if (b <= 0.0) return 0.0;
  if (x >= b) return plcp_pdf_r1(m, b, q);
  if (x <= 0.0) return 0.0;
  double s = m.lambda_p;
  double pil = 3.14159265358979323846 * m.lambda_l;
  auto pieces = plcp_detail::joint_pieces(m, x, b, q);
  double v = plcp_void_ccdf(m, b, q);
  double p = plcp_detail::p_integral(m, b, q);
  double vp = -v * (2.0 * s + 2.0 * pil * s * p);
  double dw = vp * pieces.beta + v * pieces.beta_b;
  return plcp_pdf_r1(m, b, q) + dw;
}

// Conditional serving-distance CDF given the nearest interferer at b.
inline double plcp_conditional_cdf(const PlcpModel& m, double x, double b,
                                   const QuadratureSpec& q = {}) {
  if (x <= 0.0) return 0.0;
  if (x >= b) return 1.0;
  double f1 = plcp_pdf_r1(m, b, q);
  if (f1 <= 0.0) return 1.0;
  double num = plcp_conditional_cdf_times_pdf_r1(m, x, b, q);
  double out = num / f1;
  if (out < 0.0 || out > 1.0) {
    diag::note_clamp();
    out = std::min(std::max(out, 0.0), 1.0);
  }
  return out;
}

}  // namespace metasinr

#endif  // METASINR_PLCP_HPP
