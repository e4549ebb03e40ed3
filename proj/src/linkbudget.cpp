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

#include "hstn/linkbudget.hpp"

#include <cmath>

#include "hstn/specfun.hpp"

namespace hstn {

namespace {
constexpr double kBoltzmann = 1.38e-23;  // J/K
}

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

double linear_to_db(double v) { return 10.0 * std::log10(v); }

double beam_gain(double offset_deg, double width3db_deg, double rx_gain_linear)
{
    const double th = offset_deg * M_PI / 180.0;
    const double th3 = width3db_deg * M_PI / 180.0;
    if (offset_deg == 0.0)
        return rx_gain_linear;  // bracket -> 1/4 + 3/4 at boresight
    const double rho = 2.07123 * std::sin(th) / std::sin(th3);
    const double bracket =
        sf::bessel_j(1, rho) / (2.0 * rho) + 36.0 * sf::bessel_j(3, rho) / std::pow(rho, 3);
    return rx_gain_linear * bracket;
}

double free_space_scale(const SatLinkParams& p)
{
    const double g_beam =
        beam_gain(p.beam_offset_deg, p.beam_width3db_deg, db_to_linear(p.rx_gain_db));
    const double g_sat = db_to_linear(p.sat_gain_db);
    const double noise = kBoltzmann * p.noise_temp_k * p.bandwidth_hz;
    const double path = p.light_speed / (4.0 * M_PI * p.carrier_freq_hz * p.distance_m);
    return g_sat * g_beam / noise * path * path;
}

double eta_s_from_budget(const SatLinkParams& p, double power_ratio_db)
{
    return free_space_scale(p) * db_to_linear(power_ratio_db);
}

}  // namespace hstn
