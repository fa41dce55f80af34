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

// Reference values computed with an independent numerical implementation
// of the same distance laws (different quadrature, different language),
// themselves validated against direct Monte-Carlo sampling of the process.

#include <catch2/catch_amalgamated.hpp>
#include <cmath>

#include "metasinr/mean_field.hpp"
#include "metasinr/plcp.hpp"
#include "metasinr/quadrature.hpp"

using namespace metasinr;

static const PlcpModel kM{8.0 / kPi, 0.2};  // lines 8/pi km/km^2, 0.2 pts/km

TEST_CASE("void probability reference values") {
  QuadratureSpec q;
  CHECK(plcp_void_ccdf(kM, 0.3, q) ==
        Catch::Approx(0.576867886926).epsilon(1e-9));
  CHECK(plcp_void_ccdf(kM, 0.7, q) ==
        Catch::Approx(0.084331608791).epsilon(1e-9));
  CHECK(plcp_void_ccdf(kM, 1.2, q) ==
        Catch::Approx(0.001610287641).epsilon(1e-8));
  CHECK(plcp_void_ccdf(kM, 2.0, q) ==
        Catch::Approx(1.98031e-7).epsilon(1e-4));
}

TEST_CASE("serving-distance density reference values and normalization") {
  QuadratureSpec q;
  CHECK(plcp_pdf_r0(kM, 0.3, q) == Catch::Approx(1.843685465945).epsilon(1e-9));
  CHECK(plcp_pdf_r0(kM, 0.7, q) == Catch::Approx(0.532167180129).epsilon(1e-9));
  CHECK(plcp_pdf_r0(kM, 1.2, q) == Catch::Approx(0.015115787065).epsilon(1e-8));
  double n = integrate([&](double r) { return plcp_pdf_r0(kM, r, q); }, 0.0,
                       6.0, q);
  CHECK(n == Catch::Approx(1.0).margin(1e-6));
  // density is -d/dr of the void probability
  double h = 1e-6;
  double fd = (plcp_void_ccdf(kM, 0.7 - h, q) - plcp_void_ccdf(kM, 0.7 + h, q)) /
              (2.0 * h);
  CHECK(plcp_pdf_r0(kM, 0.7, q) == Catch::Approx(fd).epsilon(1e-5));
}

TEST_CASE("dominant-interferer density reference values and normalization") {
  QuadratureSpec q;
  CHECK(plcp_pdf_r1(kM, 0.3, q) == Catch::Approx(1.095693991952).epsilon(1e-9));
  CHECK(plcp_pdf_r1(kM, 0.7, q) == Catch::Approx(1.268766389868).epsilon(1e-9));
  CHECK(plcp_pdf_r1(kM, 1.2, q) == Catch::Approx(0.084407394478).epsilon(1e-8));
  CHECK(plcp_pdf_r1(kM, 2.0, q) == Catch::Approx(2.9382680e-5).epsilon(1e-6));
  double n = integrate([&](double r) { return plcp_pdf_r1(kM, r, q); }, 0.0,
                       8.0, q);
  CHECK(n == Catch::Approx(1.0).margin(1e-4));
  // ccdf consistency: -d/dr P(R1 > r) = f_R1(r)
  double h = 1e-6;
  double fd =
      (plcp_ccdf_r1(kM, 0.7 - h, q) - plcp_ccdf_r1(kM, 0.7 + h, q)) / (2.0 * h);
  CHECK(plcp_pdf_r1(kM, 0.7, q) == Catch::Approx(fd).epsilon(1e-5));
  // tail integral consistency
  double tail = integrate([&](double r) { return plcp_pdf_r1(kM, r, q); },
                          0.7, 8.0, q);
  CHECK(plcp_ccdf_r1(kM, 0.7, q) == Catch::Approx(tail).margin(1e-6));
}

TEST_CASE("conditional serving CDF given the dominant interferer") {
  QuadratureSpec q;
  CHECK(plcp_conditional_cdf(kM, 0.2, 0.7, q) ==
        Catch::Approx(0.1015714359).margin(2e-5));
  CHECK(plcp_conditional_cdf(kM, 0.45, 0.7, q) ==
        Catch::Approx(0.4252769955).margin(2e-5));
  CHECK(plcp_conditional_cdf(kM, 0.65, 0.7, q) ==
        Catch::Approx(0.8594189080).margin(2e-5));
  CHECK(plcp_conditional_cdf(kM, 0.5, 1.2, q) ==
        Catch::Approx(0.1827061723).margin(2e-5));
  CHECK(plcp_conditional_cdf(kM, 1.0, 1.2, q) ==
        Catch::Approx(0.6840408954).margin(2e-5));
  // boundaries and monotonicity
  CHECK(plcp_conditional_cdf(kM, 1e-9, 0.7, q) == Catch::Approx(0.0).margin(1e-6));
  CHECK(plcp_conditional_cdf(kM, 0.7, 0.7, q) == Catch::Approx(1.0).margin(1e-9));
  double prev = 0.0;
  for (double x = 0.05; x < 0.7; x += 0.05) {
    double c = plcp_conditional_cdf(kM, x, 0.7, q);
    CHECK(c >= prev - 1e-12);
    prev = c;
  }
}

TEST_CASE("product form avoids the density division") {
  QuadratureSpec q;
  for (double b : {0.4, 0.8, 1.1}) {
    double direct = plcp_conditional_cdf(kM, 0.5 * b, b, q) *
                    plcp_pdf_r1(kM, b, q);
    CHECK(plcp_conditional_cdf_times_pdf_r1(kM, 0.5 * b, b, q) ==
          Catch::Approx(direct).epsilon(1e-9));
  }
}

TEST_CASE("joint survival is a proper bivariate tail") {
  QuadratureSpec q;
  // W(x, b) decreasing in both arguments, W(0, b) = P(R1 > b)
  CHECK(plcp_joint_survival(kM, 1e-12, 0.7, q) ==
        Catch::Approx(plcp_ccdf_r1(kM, 0.7, q)).epsilon(1e-9));
  CHECK(plcp_joint_survival(kM, 0.3, 0.7, q) <=
        plcp_joint_survival(kM, 0.2, 0.7, q));
  CHECK(plcp_joint_survival(kM, 0.3, 0.8, q) <=
        plcp_joint_survival(kM, 0.3, 0.7, q));
}

TEST_CASE("line-ensemble residual mean reduces to the planar closed form") {
  QuadratureSpec q;
  q.rel_tol = 1e-9;
  for (double r : {0.5, 1.0, 2.0}) {
    double integral = plcp_mean_field_lines(kM, 4.0, r, q);
    double closed = plcp_mean_field_closed(kM, 4.0, r);
    CHECK(integral == Catch::Approx(closed).epsilon(1e-6));
  }
}
