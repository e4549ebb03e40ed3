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

// The op_* golden values were frozen from an independent arbitrary-precision
// implementation of the same probability (direct 2-D integration of exact
// conditional laws), so the closed form, the quadrature path, and those
// references are three separate derivations of each number.

#include <doctest.h>

#include <cmath>

#include "hstn/channel.hpp"
#include "hstn/mobility.hpp"
#include "hstn/outage.hpp"

using namespace hstn;

namespace {

bool close(double got, double want, double rtol, double atol = 0.0)
{
    return std::fabs(got - want) <= atol + rtol * std::fabs(want);
}

const SrFadingParams kHeavy{1, 0.063, 0.0007};
const SrFadingParams kAverage{5, 0.251, 0.279};
const MobilityConfig kMob{};

struct Golden {
    const char* name;
    OutageQuery q;
    SrFadingParams sr;
    TerrestrialFading fading;
    double want;
    double tol_exact;
};

OutageQuery make_q(double gamma, double eta, double ks, double ku, int relays = 1)
{
    OutageQuery q;
    q.relays = relays;
    q.gamma_th = gamma;
    q.eta_sat = q.eta_relay = eta;
    q.hw = HardwareProfile{ks, ku};
    return q;
}

}  // namespace

TEST_CASE("hardware profile coefficients and ceiling")
{
    const HardwareProfile hw{0.3, 0.3};
    CHECK(close(hw.prod_coeff(), 0.09 + 0.09 + 0.0081, 1e-14));
    CHECK(close(hw.sat_coeff(), 1.09, 1e-14));
    CHECK(close(hw.relay_coeff(), 1.09, 1e-14));
    CHECK(close(hw.ceiling_linear(), 5.31632110579479, 1e-13));
    CHECK(close(hw.ceiling_db(), 7.2561120444962112, 1e-13));

    const HardwareProfile mild{0.1, 0.1};
    CHECK(close(mild.ceiling_linear(), 49.751243781094527, 1e-13));
    CHECK(close(mild.ceiling_db(), 16.968039425795111, 1e-13));

    const HardwareProfile ideal{0.0, 0.0};
    CHECK(ideal.prod_coeff() == 0.0);
    CHECK(std::isinf(ideal.ceiling_linear()));
}

TEST_CASE("sndr formula and its ceiling behavior")
{
    const HardwareProfile hw{0.3, 0.3};
    // Large per-hop SNRs approach but never reach the ceiling.
    CHECK(sndr(1e9, 1e9, hw) < hw.ceiling_linear());
    CHECK(sndr(1e9, 1e9, hw) > 0.999 * hw.ceiling_linear());
    // Ideal hardware recovers the familiar AF cascade.
    const HardwareProfile ideal{0.0, 0.0};
    const double v = sndr(4.0, 12.0, ideal);
    CHECK(close(v, 4.0 * 12.0 / (4.0 + 12.0 + 1.0), 1e-13));
    // Either hop collapsing takes the SNDR down with it.
    CHECK(sndr(0.0, 100.0, hw) == 0.0);
}

TEST_CASE("closed form and quadrature agree with frozen references")
{
    const Golden goldens[] = {
        {"gamma=1 eta=100 k=.3 heavy nak1", make_q(1.0, 100.0, 0.3, 0.3), kHeavy,
         TerrestrialFading::nakagami(1), 9.990227065684e-01, 2e-6},
        {"gamma=1 eta=1e4 k=.3 heavy nak1", make_q(1.0, 1e4, 0.3, 0.3), kHeavy,
         TerrestrialFading::nakagami(1), 3.761215244518e-01, 2e-6},
        {"gamma=1 eta=1e3 ideal heavy nak3", make_q(1.0, 1e3, 0.0, 0.0), kHeavy,
         TerrestrialFading::nakagami(3), 9.162023573670e-01, 2e-6},
        {"gamma=1 eta=1e3 k=.3 heavy rice2", make_q(1.0, 1e3, 0.3, 0.3), kHeavy,
         TerrestrialFading::rician(2.0), 9.432894124064e-01, 2e-5},
        {"gamma=4dB eta=1e3 k=.1 average nak1",
         make_q(2.511886431509580, 1e3, 0.1, 0.1), kAverage,
         TerrestrialFading::nakagami(1), 9.765911841907e-01, 2e-6},
        {"gamma=1 eta=10^4.5 k=.3 heavy rice2",
         make_q(1.0, std::pow(10.0, 4.5), 0.3, 0.3), kHeavy,
         TerrestrialFading::rician(2.0), 7.978689584059e-02, 2e-5},
        {"gamma=1 eta=1e6 k=.3 heavy nak1", make_q(1.0, 1e6, 0.3, 0.3), kHeavy,
         TerrestrialFading::nakagami(1), 4.972674586639e-03, 2e-6},
    };

    for (const auto& g : goldens) {
        CAPTURE(g.name);
        const OpResult ex = op_exact(g.q, g.sr, g.fading, kMob);
        CHECK(ex.status == OpStatus::ok);
        CHECK(close(ex.value, g.want, g.tol_exact));

        const OpResult nu = op_numeric(g.q, g.sr, g.fading, kMob);
        CHECK(nu.status == OpStatus::ok);
        CHECK(close(nu.value, g.want, 1e-5));

        // The two independent evaluations agree tighter than either golden.
        CHECK(close(ex.value, nu.value, 3e-5));
    }
}

TEST_CASE("asymptotic expansion matches the exact curve at high SNR")
{
    const auto q = make_q(1.0, 1e6, 0.3, 0.3);
    const auto fading = TerrestrialFading::nakagami(1);
    const OpResult as = op_asymptotic(q, kHeavy, fading, kMob);
    const OpResult ex = op_exact(q, kHeavy, fading, kMob);
    CHECK(as.status == OpStatus::ok);
    CHECK(close(as.value, ex.value, 1e-2));

    // At low SNR the expansion exceeds 1 and must say so.
    const auto low = make_q(1.0, 10.0, 0.3, 0.3);
    const OpResult bad = op_asymptotic(low, kHeavy, fading, kMob);
    CHECK(bad.status == OpStatus::out_of_range);
    CHECK(bad.value > 1.0);
}

TEST_CASE("asymptote keeps only the slowest-decaying hop")
{
    // Under Nakagami m=3 the relay hop decays as 1/eta^3, so the asymptote is
    // the satellite term alone: it scales exactly as 1/eta and meets the
    // exact curve once the relay component has died off.
    const auto nak3 = TerrestrialFading::nakagami(3);
    const double a6 = op_asymptotic(make_q(1.0, 1e6, 0.3, 0.3), kHeavy, nak3, kMob).value;
    const double a7 = op_asymptotic(make_q(1.0, 1e7, 0.3, 0.3), kHeavy, nak3, kMob).value;
    CHECK(close(a6 / a7, 10.0, 1e-12));

    const auto far = make_q(1.0, 1e9, 0.3, 0.3);
    CHECK(close(op_asymptotic(far, kHeavy, nak3, kMob).value,
                op_exact(far, kHeavy, nak3, kMob).value, 1e-2));

    // Under Rician (any K) and Nakagami m=1 both hops are first order, so the
    // relay term must still contribute.
    const auto q = make_q(1.0, 1e6, 0.3, 0.3);
    const double rice_v = op_asymptotic(q, kHeavy, TerrestrialFading::rician(2.0), kMob).value;
    CHECK(rice_v > op_asymptotic(q, kHeavy, nak3, kMob).value * 10.0);
}

TEST_CASE("independent relays: OP with M relays is the single-relay OP cubed")
{
    auto q1 = make_q(1.0, 1e3, 0.0, 0.0);
    auto q3 = make_q(1.0, 1e3, 0.0, 0.0, 3);
    const auto fading = TerrestrialFading::nakagami(3);
    const double p1 = op_exact(q1, kHeavy, fading, kMob).value;
    const double p3 = op_exact(q3, kHeavy, fading, kMob).value;
    CHECK(close(p3, p1 * p1 * p1, 1e-12));
}

TEST_CASE("thresholds at or beyond the distortion ceiling give certain outage")
{
    const auto fading = TerrestrialFading::nakagami(1);
    const HardwareProfile hw{0.3, 0.3};

    auto at = make_q(hw.ceiling_linear(), 1e5, 0.3, 0.3);
    const OpResult r1 = op_exact(at, kHeavy, fading, kMob);
    CHECK(r1.value == 1.0);
    CHECK(r1.status == OpStatus::ceiling);

    auto above = make_q(hw.ceiling_linear() * 1.05, 1e5, 0.3, 0.3);
    CHECK(op_exact(above, kHeavy, fading, kMob).status == OpStatus::ceiling);
    CHECK(op_numeric(above, kHeavy, fading, kMob).value == 1.0);
    CHECK(op_asymptotic(above, kHeavy, fading, kMob).status == OpStatus::ceiling);

    // Just below the ceiling the probability is still strictly less than 1.
    auto below = make_q(hw.ceiling_linear() * 0.98, 1e5, 0.3, 0.3);
    const OpResult r2 = op_exact(below, kHeavy, fading, kMob);
    CHECK(r2.status == OpStatus::ok);
    CHECK(r2.value < 1.0);
    CHECK(r2.value > 0.9);
}

TEST_CASE("status names are stable")
{
    CHECK(to_string(OpStatus::ok) == "ok");
    CHECK(to_string(OpStatus::ceiling) == "ceiling");
    CHECK(to_string(OpStatus::series_capped) == "series_capped");
    CHECK(to_string(OpStatus::out_of_range) == "out_of_range");
    CHECK(to_string(OpStatus::no_convergence) == "no_convergence");
}

TEST_CASE("outage probability is monotone in threshold and impairments")
{
    const auto fading = TerrestrialFading::nakagami(2);
    double prev = 0.0;
    for (double g : {0.1, 0.5, 1.0, 2.0, 4.0}) {
        const double v = op_exact(make_q(g, 1e3, 0.1, 0.1), kHeavy, fading, kMob).value;
        CHECK(v > prev);
        prev = v;
    }

    for (double eta_db : {10.0, 20.0, 30.0, 40.0}) {
        const double eta = std::pow(10.0, eta_db / 10.0);
        const double ideal =
            op_exact(make_q(1.0, eta, 0.0, 0.0), kHeavy, fading, kMob).value;
        const double impaired =
            op_exact(make_q(1.0, eta, 0.3, 0.3), kHeavy, fading, kMob).value;
        CHECK(impaired >= ideal);
    }
}

TEST_CASE("distance-averaged relay-hop cdf: series equals direct integration")
{
    for (const auto& fading :
         {TerrestrialFading::nakagami(2), TerrestrialFading::rician(2.0)}) {
        for (double x : {0.05, 0.3, 1.0, 4.0}) {
            const double direct = relay_snr_cdf(x, 100.0, fading, kMob);
            const double series = relay_snr_cdf_series(x, 100.0, fading, kMob);
            CHECK(close(series, direct, 1e-6, 1e-9));
            CHECK(direct >= 0.0);
            CHECK(direct <= 1.0);
        }
    }
}
