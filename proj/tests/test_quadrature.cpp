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

#include <doctest.h>

#include <cmath>

#include "hstn/quadrature.hpp"

using namespace hstn;

TEST_CASE("integrate handles polynomials and smooth transcendentals")
{
    auto r1 = quad::integrate([](double x) { return x * x; }, 0.0, 1.0);
    CHECK(r1.converged);
    CHECK(std::fabs(r1.value - 1.0 / 3.0) < 1e-14);

    auto r2 = quad::integrate([](double x) { return std::sin(x); }, 0.0,
                              3.14159265358979323846);
    CHECK(r2.converged);
    CHECK(std::fabs(r2.value - 2.0) < 1e-12);

    auto r3 = quad::integrate([](double x) { return std::exp(-x); }, 0.0, 30.0);
    CHECK(r3.converged);
    CHECK(std::fabs(r3.value - 1.0) < 1e-12);
}

TEST_CASE("integrate over an empty interval is zero")
{
    auto r = quad::integrate([](double x) { return x; }, 2.0, 2.0);
    CHECK(r.value == 0.0);
}

TEST_CASE("integrate_pieces resolves interior kinks")
{
    auto f = [](double x) { return std::fabs(x - 0.5); };
    auto r = quad::integrate_pieces(f, {0.0, 0.5, 1.0});
    CHECK(r.converged);
    CHECK(std::fabs(r.value - 0.25) < 1e-14);

    // Piecewise density: triangle on [0,1], flat on [1,3].
    auto g = [](double x) { return x < 1.0 ? x : 0.5; };
    auto r2 = quad::integrate_pieces(g, {0.0, 1.0, 3.0});
    CHECK(r2.converged);
    CHECK(std::fabs(r2.value - 1.5) < 1e-13);
}

TEST_CASE("integrate_to_inf folds exponential tails")
{
    auto r1 = quad::integrate_to_inf([](double x) { return std::exp(-x); }, 0.0, 1.0);
    CHECK(r1.converged);
    CHECK(std::fabs(r1.value - 1.0) < 1e-11);

    auto r2 = quad::integrate_to_inf(
        [](double x) { return x * std::exp(-x * x); }, 0.0, 1.0);
    CHECK(r2.converged);
    CHECK(std::fabs(r2.value - 0.5) < 1e-11);

    // Shifted lower limit.
    auto r3 = quad::integrate_to_inf(
        [](double x) { return std::exp(-(x - 2.0)); }, 2.0, 1.0);
    CHECK(r3.converged);
    CHECK(std::fabs(r3.value - 1.0) < 1e-11);

    // Slow decay scale: mean of an Exp(1/50) density.
    auto r4 = quad::integrate_to_inf(
        [](double x) { return x * std::exp(-x / 50.0) / 50.0; }, 0.0, 50.0);
    CHECK(r4.converged);
    CHECK(std::fabs(r4.value - 50.0) < 1e-8);
}

TEST_CASE("unreachable tolerance is reported, value still usable")
{
    quad::Options opt;
    opt.abs_tol = 1e-30;
    opt.rel_tol = 1e-30;
    opt.max_depth = 3;
    auto r = quad::integrate([](double x) { return std::exp(x); }, 0.0, 1.0, opt);
    CHECK_FALSE(r.converged);
    CHECK(std::fabs(r.value - (std::exp(1.0) - 1.0)) < 1e-10);
}

TEST_CASE("error estimate bounds the true error on a smooth integrand")
{
    auto r = quad::integrate([](double x) { return std::cos(3.0 * x); }, 0.0, 2.0);
    const double truth = std::sin(6.0) / 3.0;
    CHECK(r.converged);
    CHECK(std::fabs(r.value - truth) <= std::max(r.error_estimate, 1e-14));
}
