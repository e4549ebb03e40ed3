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

#ifndef HSTN_OUTAGE_HPP
#define HSTN_OUTAGE_HPP

#include <string>

#include "hstn/channel.hpp"
#include "hstn/mobility.hpp"

namespace hstn {

// Transceiver distortion levels (EVM-style aggregate impairment per hop).
struct HardwareProfile {
    double kappa_sat = 0.0;    // satellite->relay hop
    double kappa_relay = 0.0;  // relay->destination hop

    // SNDR denominator coefficients: with both hops impaired the end-to-end
    // ratio is  g1 g2 / (c_prod g1 g2 + c_sat g1 + c_relay g2 + 1).
    double prod_coeff() const
    {
        const double a = kappa_sat * kappa_sat, b = kappa_relay * kappa_relay;
        return a + b + a * b;
    }
    double sat_coeff() const { return 1.0 + kappa_sat * kappa_sat; }
    double relay_coeff() const { return 1.0 + kappa_relay * kappa_relay; }

    // Hard SNDR ceiling 1/prod_coeff: thresholds at or above it are never met.
    double ceiling_linear() const;
    double ceiling_db() const;
};

// End-to-end signal-to-noise-and-distortion ratio of one amplify-and-forward
// relay path, given the two instantaneous per-hop SNRs.
double sndr(double snr_sat, double snr_relay, const HardwareProfile& hw);

// One outage-probability evaluation point: M relays (best-path selection),
// threshold gamma_th (linear), mean per-hop SNR scales eta (linear).
struct OutageQuery {
    int relays = 1;
    double gamma_th = 1.0;
    double eta_sat = 1.0;
    double eta_relay = 1.0;
    HardwareProfile hw{};
};

enum class OpStatus {
    ok,
    ceiling,             // threshold at/above the distortion ceiling: OP = 1 exactly
    series_capped,       // internal series truncation hit its hard cap
    out_of_range,        // asymptote exceeds 1 (SNR too low for the expansion)
    no_convergence,      // quadrature failed to reach its tolerance
};

std::string to_string(OpStatus s);

struct OpResult {
    double value = 1.0;
    double err_est = 0.0;
    OpStatus status = OpStatus::ok;
};

// Closed-form outage probability: series expansion of the single-relay
// non-outage integral (satellite cdf x distance-averaged relay-hop tail),
// evaluated in log space and raised to the M-th power.
OpResult op_exact(const OutageQuery& q, const SrFadingParams& sr,
                  const TerrestrialFading& fading, const MobilityConfig& mob,
                  double path_loss_exp = 2.0);

// Reference evaluation by direct 2-D numerical integration over the relay-hop
// SNR and the relay distance, using exact conditional densities (no series
// truncation shared with op_exact).
OpResult op_numeric(const OutageQuery& q, const SrFadingParams& sr,
                    const TerrestrialFading& fading, const MobilityConfig& mob,
                    double path_loss_exp = 2.0);

// Strict high-SNR asymptote (diversity order M): only the slowest-decaying
// per-hop components survive, so the log-log slope is exactly -M.  Under
// Nakagami-m with m > 1 the relay hop decays as 1/eta^m and drops out,
// leaving the satellite hop as the bottleneck.  Values above 1 are reported
// with status out_of_range.
OpResult op_asymptotic(const OutageQuery& q, const SrFadingParams& sr,
                       const TerrestrialFading& fading, const MobilityConfig& mob,
                       double path_loss_exp = 2.0);

// Distance-averaged relay-hop SNR cdf  P(eta_relay W^-alpha |h|^2 <= x),
// computed two independent ways: exact per-distance cdf under the distance
// density, and the unified-series form used inside op_exact.
double relay_snr_cdf(double x, double eta_relay, const TerrestrialFading& fading,
                     const MobilityConfig& mob, double path_loss_exp = 2.0);
double relay_snr_cdf_series(double x, double eta_relay, const TerrestrialFading& fading,
                            const MobilityConfig& mob, double path_loss_exp = 2.0);

}  // namespace hstn

#endif  // HSTN_OUTAGE_HPP
