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

#ifndef HSTN_LINKBUDGET_HPP
#define HSTN_LINKBUDGET_HPP

namespace hstn {

// Downlink budget of the satellite-to-UAV hop.  Maps physical parameters to
// the dimensionless scale that multiplies the transmit power-to-noise ratio
// to produce the mean hop SNR eta_s.
struct SatLinkParams {
    double noise_temp_k = 300.0;       // receiver noise temperature [K]
    double bandwidth_hz = 15e6;        // carrier bandwidth [Hz]
    double carrier_freq_hz = 2e9;      // carrier frequency [Hz]
    double distance_m = 35786e3;       // slant range [m]
    double sat_gain_db = 53.45;        // satellite antenna gain [dB]
    double rx_gain_db = 4.8;           // receiver antenna gain [dB]
    double beam_offset_deg = 0.8;      // angular separation from beam center
    double beam_width3db_deg = 0.3;    // 3 dB beamwidth
    double light_speed = 3e8;          // propagation speed [m/s]
};

// Beam gain toward a receiver offset from boresight:
//   g = g_rx * (J1(rho)/(2 rho) + 36 J3(rho)/rho^3),
// rho = 2.07123 sin(theta)/sin(theta_3dB).  The bracket tends to 1/4 + 3/4 = 1
// at boresight, so the boresight gain equals g_rx.
double beam_gain(double offset_deg, double width3db_deg, double rx_gain_linear);

// Free-space budget: g_sat * beam_gain / (k_B T W) * (c / (4 pi f d))^2.
// eta_s = scale * (P_s / sigma^2-normalized power ratio).
double free_space_scale(const SatLinkParams& p);

// Mean satellite-hop SNR for a transmit power ratio given in dB.
double eta_s_from_budget(const SatLinkParams& p, double power_ratio_db);

double db_to_linear(double db);
double linear_to_db(double v);

}  // namespace hstn

#endif  // HSTN_LINKBUDGET_HPP
