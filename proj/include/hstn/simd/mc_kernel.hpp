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

#ifndef HSTN_SIMD_MC_KERNEL_HPP
#define HSTN_SIMD_MC_KERNEL_HPP

#include <cstdint>

#include "hstn/simd/batch.hpp"
#include "hstn/simd/vecmath.hpp"

// The Monte Carlo trial, written once against the batch abstraction and
// instantiated by each backend.  Everything inside a trial is branch-free
// across lanes (masked selects, fixed-count loops), so every lane consumes
// the same number of uniforms and the per-trial stream addressing holds.

namespace hstn::mc {

struct KernelConfig {
    int relays = 1;

    // Relay position snapshot law (stationary mixture of the mobility model).
    double stay_prob = 0.5;
    double height = 40.0;
    double radius = 80.0;
    double path_loss_exp = 2.0;

    // Satellite hop: shadowed-Rician |sqrt(G) e^{j phi} + Z|^2 with the
    // line-of-sight power G ~ Gamma(m_sat, los_scale) and scattered component
    // sd per axis scatter_sd, scaled by the mean SNR.
    int m_sat = 1;
    double los_scale = 0.0;  // omega / m_sat
    double scatter_sd = 0.0; // sqrt(b)
    double eta_sat = 1.0;

    // Relay hop: Nakagami power (gamma of integer shape) or Rician
    // (offset complex normal), scaled by mean SNR and path gain w^-alpha.
    bool relay_nakagami = true;
    int m_relay = 1;
    double relay_gamma_scale = 1.0;  // omega / m_relay
    double rice_mu = 0.0;            // sqrt(K omega / (K+1))
    double rice_sd = 0.0;            // sqrt(omega / (2 (K+1)))
    double eta_relay = 1.0;

    // Path i is served when  snr_sat (margin snr_relay - relay_min) >=
    // g_relay snr_relay + gamma_th; this form never divides, so infinities
    // from extreme path gains propagate to the correct verdict.
    double margin = 1.0;     // 1 - prod_coeff gamma_th
    double relay_min = 0.0;  // sat_coeff gamma_th
    double g_relay = 0.0;    // relay_coeff gamma_th
    double gamma_th = 1.0;
};

// Runs one batch of trials; returns the mask of lanes whose best relay path
// met the threshold.  S::next() yields the next uniform as a batch B.
template <class B, class S>
inline typename B::Mask trial_served_mask(S& rng, const KernelConfig& kc)
{
    using M = typename B::Mask;
    M served = B::mask_none();

    for (int i = 0; i < kc.relays; ++i) {
        // --- relay-to-destination distance from the stationary law --------
        const B u_mix = rng.next();
        const B u_alt = rng.next();
        const B u_hor = rng.next();

        // Transition-phase altitude quantile: invert t^2 (3 - 2t) by
        // fixed-count bisection (branch-free, ~2^-48 accurate).
        B lo = B::splat(0.0), hi = B::splat(1.0);
        for (int it = 0; it < 48; ++it) {
            const B mid = (lo + hi) * B::splat(0.5);
            const B cdf = (mid * mid) * mul_add(mid, B::splat(-2.0), B::splat(3.0));
            const auto below = cdf < u_alt;
            lo = select(below, mid, lo);
            hi = select(below, hi, mid);
        }
        const B t_mobile = (lo + hi) * B::splat(0.5);
        const B alt =
            select(u_mix < B::splat(kc.stay_prob), u_alt, t_mobile) * B::splat(kc.height);
        const B zoff = B::splat(kc.radius) * simd::sqrt(u_hor);
        const B dist2 = mul_add(alt, alt, zoff * zoff);

        B path_gain;  // w^-alpha
        if (kc.path_loss_exp == 2.0)
            path_gain = B::splat(1.0) / dist2;
        else
            path_gain = simd::vexp(simd::vlog(dist2) * B::splat(-0.5 * kc.path_loss_exp));

        // --- satellite hop -------------------------------------------------
        B sum_log = B::splat(0.0);
        for (int j = 0; j < kc.m_sat; ++j)
            sum_log = sum_log + simd::vlog(rng.next());
        const B los_amp = simd::sqrt(sum_log * B::splat(-kc.los_scale));

        const B u_phase = rng.next();
        B sin_ph, cos_ph;
        simd::vsincos(u_phase * B::splat(simd::kTwoPi), &sin_ph, &cos_ph);

        const B u_bm1 = rng.next();
        const B u_bm2 = rng.next();
        const B bm_r = simd::sqrt(simd::vlog(u_bm1) * B::splat(-2.0));
        B bm_s, bm_c;
        simd::vsincos(u_bm2 * B::splat(simd::kTwoPi), &bm_s, &bm_c);

        const B re = mul_add(los_amp, cos_ph, B::splat(kc.scatter_sd) * (bm_r * bm_c));
        const B im = mul_add(los_amp, sin_ph, B::splat(kc.scatter_sd) * (bm_r * bm_s));
        const B snr_sat = B::splat(kc.eta_sat) * mul_add(re, re, im * im);

        // --- relay hop -----------------------------------------------------
        B fade_pow;
        if (kc.relay_nakagami) {
            B sl = B::splat(0.0);
            for (int j = 0; j < kc.m_relay; ++j)
                sl = sl + simd::vlog(rng.next());
            fade_pow = sl * B::splat(-kc.relay_gamma_scale);
        } else {
            const B v1 = rng.next();
            const B v2 = rng.next();
            const B rr = simd::sqrt(simd::vlog(v1) * B::splat(-2.0));
            B rsn, rcs;
            simd::vsincos(v2 * B::splat(simd::kTwoPi), &rsn, &rcs);
            const B g_re = mul_add(B::splat(kc.rice_sd), rr * rcs, B::splat(kc.rice_mu));
            const B g_im = B::splat(kc.rice_sd) * (rr * rsn);
            fade_pow = mul_add(g_re, g_re, g_im * g_im);
        }
        const B snr_relay = (B::splat(kc.eta_relay) * path_gain) * fade_pow;

        // --- threshold test, best path wins ---------------------------------
        const B lhs =
            snr_sat * mul_add(B::splat(kc.margin), snr_relay, B::splat(-kc.relay_min));
        const B rhs = mul_add(B::splat(kc.g_relay), snr_relay, B::splat(kc.gamma_th));
        served = B::mask_or(served, lhs >= rhs);
    }
    return served;
}

// Backend entry points: count outage trials over [trial_lo, trial_hi).
std::uint64_t run_range_scalar(const KernelConfig& kc, std::uint64_t seed,
                               std::uint64_t trial_lo, std::uint64_t trial_hi);
#if defined(HSTN_HAVE_AVX2_BACKEND)
std::uint64_t run_range_avx2(const KernelConfig& kc, std::uint64_t seed,
                             std::uint64_t trial_lo, std::uint64_t trial_hi);
#endif

// Equivalence probes for tests: evaluate the vector math / uniform stream of
// a backend so another backend's output can be compared bit for bit.
struct VecProbe {
    double log_ = 0.0;
    double exp_ = 0.0;
    double sin_ = 0.0;
    double cos_ = 0.0;
};
void vecmath_eval_scalar(const double* x, VecProbe* out, int n);
void uniform_probe_scalar(std::uint64_t seed, std::uint64_t trial, int count,
                          double* out);
#if defined(HSTN_HAVE_AVX2_BACKEND)
void vecmath_eval_avx2(const double* x, VecProbe* out, int n);
void uniform_probe_avx2(std::uint64_t seed, std::uint64_t trial, int count, double* out);
#endif

}  // namespace hstn::mc

#endif  // HSTN_SIMD_MC_KERNEL_HPP
