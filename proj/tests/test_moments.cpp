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

#include "metasinr/beta_approx.hpp"
#include "metasinr/gil_pelaez.hpp"
#include "metasinr/moments.hpp"

using namespace metasinr;

static const ChannelModel kCh{4.0, 10.0, 1e-9};
static const ChannelModel kNoNoise{4.0, 10.0, 0.0};

TEST_CASE("mean reliability matches the closed-form coverage, alpha 4") {
  // 1 / (1 + sqrt(t) (pi/2 - atan(1/sqrt(t)))) at sigma2 = 0
  auto closed = [](double t) {
    return 1.0 /
           (1.0 + std::sqrt(t) * (kPi / 2.0 - std::atan(1.0 / std::sqrt(t))));
  };
  NetworkModel m = PppModel{1.0};
  for (double t : {0.1, 1.0, 10.0}) {
    INFO("theta = " << t);
    CHECK(moment_real(m, kNoNoise, 1.0, t) ==
          Catch::Approx(closed(t)).margin(1e-6));
  }
  CHECK(closed(1.0) == Catch::Approx(0.560099153512).epsilon(1e-11));
}

TEST_CASE("interference exponent: direct integral equals series") {
  for (double b : {1.0, 2.0, 3.0}) {
    double direct = detail::phi_b_direct(1.0, 4.0, {b, 0.0}, {}).real();
    double series = phi_b_series(1.0, 4.0, b);
    INFO("b = " << b);
    CHECK(direct == Catch::Approx(series).margin(1e-6));
  }
  // independently computed reference values at theta 1, alpha 4
  CHECK(detail::phi_b_direct(1.0, 4.0, {1.0, 0.0}, {}).real() ==
        Catch::Approx(2.467401100252).epsilon(1e-9));
  CHECK(detail::phi_b_direct(1.0, 4.0, {2.0, 0.0}, {}).real() ==
        Catch::Approx(4.486499813764).epsilon(1e-9));
  CHECK(detail::phi_b_direct(1.0, 4.0, {3.0, 0.0}, {}).real() ==
        Catch::Approx(6.197173389743).epsilon(1e-9));
}

TEST_CASE("fixed-link moments in closed form") {
  NetworkModel m = BipolarModel{10.0, 0.05};
  CHECK(moment_real(m, kCh, 1.0, 1.0) ==
        Catch::Approx(0.883936496898).margin(1e-8));
  CHECK(moment_real(m, kCh, 2.0, 1.0) ==
        Catch::Approx(0.831058505794).margin(1e-8));
}

TEST_CASE("clustered serving-link moment") {
  NetworkModel m = McpModel{1.0, 0.2};
  CHECK(moment_real(m, kCh, 1.0, 1.0) ==
        Catch::Approx(0.907489678941).margin(1e-7));
}

TEST_CASE("k-tier moment folds to the mapped network") {
  NetworkModel kt = KtierModel{{{1.0, 10.0}, {3.0, 5.0}}};
  NetworkModel eq = PppModel{3.121320343559643};
  ChannelModel ch1 = kCh;  // tier-1 power is already 10
  CHECK(moment_real(kt, kCh, 1.0, 1.0) ==
        Catch::Approx(moment_real(eq, ch1, 1.0, 1.0)).epsilon(1e-10));
}

TEST_CASE("imaginary moments are characteristic-function values") {
  NetworkModel m = PppModel{1.0};
  for (double t : {0.5, 1.0, 5.0, 20.0}) {
    cdouble mt = moment_b(m, kCh, {0.0, t}, 1.0);
    INFO("t = " << t);
    CHECK(std::abs(mt) <= 1.0 + 1e-9);
  }
  cdouble near1 = moment_b(m, kCh, {0.0, 1e-6}, 1.0);
  CHECK(near1.real() == Catch::Approx(1.0).margin(1e-4));
}

TEST_CASE("line Cox moments are out of analytic scope") {
  NetworkModel m = PlcpModel{8.0 / kPi, 0.2};
  CHECK_THROWS_AS(moment_real(m, kCh, 1.0, 1.0), std::invalid_argument);
}

TEST_CASE("beta fit reproduces the matched moments") {
  NetworkModel m = PppModel{1.0};
  BetaFit f = beta_fit(m, kCh, 1.0);
  REQUIRE_FALSE(f.degenerate);
  CHECK(f.a > 0.0);
  CHECK(f.b > 0.0);
  CHECK(f.a / (f.a + f.b) == Catch::Approx(f.m1).epsilon(1e-10));
  // ccdf endpoints
  CHECK(beta_meta_from_fit(f, 1e-9) == Catch::Approx(1.0).margin(1e-6));
  CHECK(beta_meta_from_fit(f, 1.0 - 1e-12) == Catch::Approx(0.0).margin(1e-6));
  double prev = 1.0;
  for (double g = 0.05; g < 1.0; g += 0.05) {
    double v = beta_meta_from_fit(f, g);
    CHECK(v <= prev + 1e-12);
    prev = v;
  }
}

TEST_CASE("fixed-link inversion matches high-precision references") {
  // references from 40-digit Talbot inversion of M_b / b
  struct Point {
    double gamma, want;
  };
  {
    NetworkModel m = BipolarModel{10.0, 0.015};
    GilPelaezEngine eng(m, kCh, 1.0);
    for (Point p : {Point{0.01, 0.999282815109}, Point{0.5, 0.992913851309},
                    Point{0.95, 0.969177522272}, Point{0.99, 0.929741236185}}) {
      INFO("gamma = " << p.gamma);
      CHECK(eng.eval(p.gamma).value == Catch::Approx(p.want).margin(1e-9));
    }
  }
  {
    NetworkModel m = BipolarModel{10.0, 0.05};
    GilPelaezEngine eng(m, kCh, 1.0);
    for (Point p : {Point{0.2, 0.95896180931}, Point{0.9, 0.765929587953},
                    Point{0.99, 0.326583332581}}) {
      INFO("gamma = " << p.gamma);
      CHECK(eng.eval(p.gamma).value == Catch::Approx(p.want).margin(1e-9));
    }
  }
  {
    // path-loss exponent off the half-stable special case
    ChannelModel ch = kCh;
    ch.alpha = 3.0;
    NetworkModel m = BipolarModel{10.0, 0.03};
    GilPelaezEngine eng(m, ch, std::pow(10.0, 1.2));
    CHECK(eng.eval(0.5).value == Catch::Approx(0.7606076295).margin(1e-9));
    CHECK(eng.eval(0.9).value == Catch::Approx(0.0780397709971).margin(1e-9));
  }
}

TEST_CASE("characteristic-function inversion basics") {
  NetworkModel m = PppModel{1.0};
  GilPelaezEngine eng(m, kCh, 1.0);
  GilPelaezResult r = eng.eval(0.5);
  CHECK(r.value >= 0.0);
  CHECK(r.value <= 1.0);
  CHECK(r.value == Catch::Approx(0.56102).margin(5e-3));
  CHECK(r.quad_error < 1e-3);
  // integral of the ccdf over gamma recovers the first moment
  double acc = 0.0;
  double prev_g = 0.0, prev_v = 1.0;
  for (int i = 1; i <= 200; ++i) {
    double g = i / 201.0;
    double v = eng.eval(g).value;
    acc += 0.5 * (prev_v + v) * (g - prev_g);
    prev_g = g;
    prev_v = v;
  }
  acc += 0.5 * prev_v * (1.0 - prev_g);
  CHECK(acc == Catch::Approx(moment_real(m, kCh, 1.0, 1.0)).margin(1e-3));
}
