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

#include <catch2/catch_amalgamated.hpp>
#include <cmath>
#include <complex>

#include "metasinr/quadrature.hpp"

using namespace metasinr;

TEST_CASE("polynomials are exact") {
  QuadratureSpec q;
  CHECK(integrate([](double x) { return x * x; }, 0.0, 1.0, q) ==
        Catch::Approx(1.0 / 3.0).epsilon(1e-14));
  CHECK(integrate([](double x) { return x * x * x - x; }, -2.0, 3.0, q) ==
        Catch::Approx(13.75).epsilon(1e-13));
}

TEST_CASE("oscillatory and cancelling integrands") {
  QuadratureSpec q;
  CHECK(integrate([](double x) { return std::sin(x); }, 0.0, 2.0 * kPi, q) ==
        Catch::Approx(0.0).margin(1e-10));
  CHECK(integrate([](double x) { return std::sin(10.0 * x); }, 0.0, 1.0, q) ==
        Catch::Approx((1.0 - std::cos(10.0)) / 10.0).epsilon(1e-10));
}

TEST_CASE("integrable endpoint singularity") {
  QuadratureSpec q;
  q.rel_tol = 1e-9;
  CHECK(integrate([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, q) ==
        Catch::Approx(2.0).epsilon(1e-7));
}

TEST_CASE("complex-valued integrand") {
  QuadratureSpec q;
  auto v = integrate(
      [](double x) {
        return std::complex<double>(std::cos(x), std::sin(x));
      },
      0.0, 1.0, q);
  CHECK(v.real() == Catch::Approx(std::sin(1.0)).epsilon(1e-12));
  CHECK(v.imag() == Catch::Approx(1.0 - std::cos(1.0)).epsilon(1e-12));
}

TEST_CASE("semi-infinite transform") {
  QuadratureSpec q;
  CHECK(integrate_semi_inf([](double x) { return std::exp(-x); }, 0.0, 1.0,
                           q) == Catch::Approx(1.0).epsilon(1e-10));
  CHECK(integrate_semi_inf([](double x) { return std::exp(-0.1 * x); }, 2.0,
                           10.0, q) ==
        Catch::Approx(10.0 * std::exp(-0.2)).epsilon(1e-9));
}

TEST_CASE("fixed panel matches adaptive on smooth integrands") {
  QuadratureSpec q;
  auto f = [](double x) { return std::exp(-x * x); };
  double a = integrate(f, 0.0, 1.0, q);
  double err = 0.0;
  double b = fixed_panel(f, 0.0, 1.0, &err);
  CHECK(a == Catch::Approx(b).epsilon(1e-10));
  CHECK(err < 1e-8);
}
