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

#ifndef HSTN_CHANNEL_HPP
#define HSTN_CHANNEL_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace hstn {

// Shadowed-Rician satellite fading: scattered power 2b, line-of-sight mean
// power omega, integer Nakagami shadowing severity m (smaller = heavier).
// The power pdf is alpha * sum_{k<m} zeta_k x^k e^{-(beta-delta) x}.
struct SrFadingParams {
    int m = 1;
    double b = 0.063;
    double omega = 0.0007;

    SrFadingParams() = default;
    SrFadingParams(int m_, double b_, double omega_);

    double alpha() const;  // (2bm/(2bm+omega))^m / (2b)
    double beta() const;   // 1/(2b)
    double delta() const;  // omega / (2b (2bm+omega))
    double rate() const { return beta() - delta(); }  // > 0 always

    // Kummer-expansion coefficient zeta_k = (-1)^k (1-m)_k delta^k / (k!)^2,
    // k in [0, m); all coefficients are >= 0 for integer m.
    double zeta(int k) const;
};

// pdf/cdf of the satellite-hop instantaneous SNR eta_s * |g|^2.
double sr_snr_pdf(double x, const SrFadingParams& sr, double eta_s);
double sr_snr_cdf(double x, const SrFadingParams& sr, double eta_s);

// Terrestrial (UAV-to-destination) small-scale fading family.
struct TerrestrialFading {
    enum class Family { nakagami, rician };
    Family family = Family::nakagami;
    double shape = 1.0;   // Nakagami m (integer >= 1) or Rician K (>= 0)
    double omega = 1.0;   // mean power

    static TerrestrialFading nakagami(double m, double omega = 1.0);
    static TerrestrialFading rician(double k_factor, double omega = 1.0);
};

// The two terrestrial families share one series form for the SNR pdf:
//   f(x) = sum_{r1=r_lo}^{r_hi} B_{r1} A^{r1+1} x^{r1} *
//          Int r^{(r1+1) alpha} e^{-A x r^alpha} f_W(r) dr.
// Nakagami: single term r1 = m-1, A = m/(omega eta), B = 1/Gamma(m) (exact).
// Rician: r1 = 0..R1, A = (1+K)/(omega eta), B = chi_{r1} (truncated, tight).
struct UnifiedSeries {
    int r_lo = 0;
    int r_hi = 0;
    double rate_scale = 1.0;          // A
    std::vector<double> log_coeff;    // ln B_{r1}, indexed r1 - r_lo
    bool truncation_capped = false;   // R1 hit its hard cap

    double log_b(int r1) const { return log_coeff[static_cast<size_t>(r1 - r_lo)]; }
};

// Build the series for a fading family at mean SNR eta_u.  marcum_b_scale is
// the largest Marcum b-argument the caller will evaluate (sets the Rician
// truncation bound R1 = ceil(50 max(1, a, b)) clamped to [10^4, 2*10^4], which
// keeps the truncation-induced cdf floor near 1e-7); Nakagami ignores it.
UnifiedSeries make_unified_series(const TerrestrialFading& fading, double eta_u,
                                  double marcum_b_scale);

// Conditional-on-distance terrestrial SNR cdf Pr[eta_u w^-alpha |g|^2 < x],
// exact families (regularized gamma / Marcum Q), no series truncation.
double terrestrial_snr_cdf_at_distance(double x, const TerrestrialFading& fading,
                                       double eta_u, double w, double alpha);

}  // namespace hstn

#endif  // HSTN_CHANNEL_HPP
