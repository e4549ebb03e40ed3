// SPDX-License-Identifier: Apache-2.0
//
// hstn — outage analysis for UAV-relayed hybrid satellite-terrestrial networks
// Copyright 2026 hstn contributors
//
// Licensed under the Apache License, Version 2.0 (the "License"); you may not use
// this file except in compliance with the License. You may obtain a copy of the
// License at http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software distributed
// under the License is distributed on an "AS IS" BASIS, WITHOUT WARRANTIES OR
// CONDITIONS OF ANY KIND, either express or implied. See the License for the
// specific language governing permissions and limitations under the License.
// -------------------------------------------------------------------------------

// Golden constants frozen from closed-form / arbitrary-precision evaluation of
// the same stationary laws (40 m ceiling, 80 m disk, speeds 0.1..30 m/s).

#include <doctest.h>

#include <cmath>

#include "hstn/mobility.hpp"
#include "hstn/quadrature.hpp"

using namespace hstn;

namespace {

bool close(double got, double want, double rtol, double atol = 0.0)
{
    return std::fabs(got - want) <= atol + rtol * std::fabs(want);
}

}  // namespace

TEST_CASE("default config reproduces the reference geometry")
{
    MobilityConfig cfg;
    CHECK(cfg.height == 40.0);
    CHECK(cfg.radius == 80.0);
    CHECK(close(cfg.mean_move_time(), 2.5434927423216058, 1e-12));
    // dwell_max default is tuned so dwell and move phases each take half the time.
    CHECK(close(cfg.mean_dwell_time(), 2.5434927423216058, 1e-12));
    CHECK(close(cfg.stay_prob(), 0.5, 1e-12));
    CHECK(close(max_distance(cfg), 89.442719099991588, 1e-13));
}

TEST_CASE("with_stay_prob inverts the renewal ratio")
{
    for (double p : {0.2, 0.5, 0.75, 0.95}) {
        const auto cfg = MobilityConfig::with_stay_prob(40, 80, 40, 0.1, 30, p);
        CHECK(close(cfg.stay_prob(), p, 1e-12));
    }
}

TEST_CASE("altitude pdf: mixture shape and normalization")
{
    MobilityConfig cfg;
    const double h = cfg.height;
    // p_s/H + (1-p_s) 6x(H-x)/H^3 at p_s = 1/2.
    const double x = 10.0;
    const double want = 0.5 / h + 0.5 * 6.0 * x * (h - x) / (h * h * h);
    CHECK(close(altitude_pdf(x, cfg), want, 1e-12));

    auto norm = quad::integrate([&](double t) { return altitude_pdf(t, cfg); },
                                0.0, h);
    CHECK(norm.converged);
    CHECK(close(norm.value, 1.0, 1e-10));

    // Near the pure-dwell limit the mixture tends to the uniform density
    // (stay_prob = 1 itself is rejected: the dwell time would be infinite).
    const auto still =
        MobilityConfig::with_stay_prob(40, 80, 40, 0.1, 30, 1.0 - 1e-9);
    CHECK(close(altitude_pdf(5.0, still), 1.0 / 40.0, 1e-8));
    CHECK(close(altitude_pdf(35.0, still), 1.0 / 40.0, 1e-8));
    CHECK_THROWS(MobilityConfig::with_stay_prob(40, 80, 40, 0.1, 30, 1.0));
}

TEST_CASE("transition altitude cdf and quantile are inverse")
{
    const double h = 40.0;
    for (double u : {0.01, 0.2, 0.5, 0.8, 0.99}) {
        const double x = mobile_altitude_quantile(u, h);
        CHECK(x >= 0.0);
        CHECK(x <= h);
        CHECK(close(mobile_altitude_cdf(x, h), u, 1e-10));
    }
    CHECK(mobile_altitude_cdf(0.0, h) == 0.0);
    CHECK(mobile_altitude_cdf(h, h) == 1.0);
}

TEST_CASE("horizontal offset pdf is the uniform-disk law")
{
    MobilityConfig cfg;
    CHECK(close(horizontal_pdf(20.0, cfg), 2.0 * 20.0 / (80.0 * 80.0), 1e-13));
    auto norm = quad::integrate([&](double z) { return horizontal_pdf(z, cfg); },
                                0.0, cfg.radius);
    CHECK(norm.converged);
    CHECK(close(norm.value, 1.0, 1e-11));
}

TEST_CASE("slant-distance pdf reference values")
{
    MobilityConfig cfg;
    CHECK(close(distance_pdf(10.0, cfg), 0.000634765625, 1e-12));
    CHECK(close(distance_pdf(30.0, cfg), 0.007470703125, 1e-12));
    CHECK(close(distance_pdf(60.0, cfg), 0.01875, 1e-12));
    CHECK(close(distance_pdf(85.0, cfg), 0.0063160936431614578, 1e-12));
    CHECK(distance_pdf(0.0, cfg) == 0.0);
    CHECK(distance_pdf(89.5, cfg) == 0.0);  // beyond max_distance
}

TEST_CASE("slant-distance pdf integrates to one with the right moments")
{
    MobilityConfig cfg;
    const double rmax = max_distance(cfg);
    const std::vector<double> seams{0.0, cfg.height, cfg.radius, rmax};

    auto norm = quad::integrate_pieces(
        [&](double w) { return distance_pdf(w, cfg); }, seams);
    CHECK(norm.converged);
    CHECK(close(norm.value, 1.0, 1e-10));

    auto m2 = quad::integrate_pieces(
        [&](double w) { return w * w * distance_pdf(w, cfg); }, seams);
    CHECK(close(m2.value, 3706.6666666666667, 1e-9));

    auto m4 = quad::integrate_pieces(
        [&](double w) { return std::pow(w, 4) * distance_pdf(w, cfg); }, seams);
    CHECK(close(m4.value, 17334857.142857143, 1e-9));

    auto m6 = quad::integrate_pieces(
        [&](double w) { return std::pow(w, 6) * distance_pdf(w, cfg); }, seams);
    CHECK(close(m6.value, 90965333333.333333, 1e-9));
}

TEST_CASE("trajectory simulator stays inside the flight volume")
{
    MobilityConfig cfg;
    TrajectorySimulator sim(cfg, 99, 0.5);
    const double rmax = max_distance(cfg);
    for (int i = 0; i < 20000; ++i) {
        sim.step();
        CHECK(sim.altitude() >= 0.0);
        CHECK(sim.altitude() <= cfg.height);
        CHECK(sim.ground_offset() <= cfg.radius + 1e-12);
        CHECK(sim.distance() <= rmax + 1e-12);
        const double want = std::hypot(sim.altitude(), sim.ground_offset());
        CHECK(close(sim.distance(), want, 1e-12, 1e-12));
    }
}

TEST_CASE("trajectory simulator is seed-deterministic")
{
    MobilityConfig cfg;
    TrajectorySimulator a(cfg, 7, 1.0), b(cfg, 7, 1.0), c(cfg, 8, 1.0);
    bool all_same = true, any_diff = false;
    for (int i = 0; i < 1000; ++i) {
        a.step();
        b.step();
        c.step();
        all_same = all_same && a.altitude() == b.altitude() &&
                   a.distance() == b.distance();
        any_diff = any_diff || a.altitude() != c.altitude();
    }
    CHECK(all_same);
    CHECK(any_diff);
}

TEST_CASE("config constructor validates its arguments")
{
    CHECK_THROWS(MobilityConfig(0.0, 80, 40, 0.1, 30, 0, 5));     // flat ceiling
    CHECK_THROWS(MobilityConfig(40, -1, 40, 0.1, 30, 0, 5));      // negative disk
    CHECK_THROWS(MobilityConfig(40, 80, 40, 30, 0.1, 0, 5));      // v_min > v_max
    CHECK_THROWS(MobilityConfig(40, 80, 40, 0.1, 30, 5, 1));      // dwell inverted
    CHECK_THROWS(MobilityConfig(40, 80, 40, -0.1, 30, 0, 5));     // negative speed
}
