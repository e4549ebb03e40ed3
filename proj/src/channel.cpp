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

#include "hstn/channel.hpp"

#include <cassert>
#include <cmath>
#include <limits>

#include "hstn/specfun.hpp"

namespace hstn {

SrFadingParams::SrFadingParams(int m_, double b_, double omega_) : m(m_), b(b_), omega(omega_)
{
    if (m < 1)
        throw std::invalid_argument("shadowing severity m must be a positive integer");
    if (b <= 0.0 || omega < 0.0)
        throw std::invalid_argument("scattered power b must be > 0 and omega >= 0");
}

double SrFadingParams::alpha() const
{
    const double tbm = 2.0 * b * m;
    return std::pow(tbm / (tbm + omega), m) / (2.0 * b);
}

double SrFadingParams::beta() const { return 1.0 / (2.0 * b); }

double SrFadingParams::delta() const
{
    return omega / (2.0 * b * (2.0 * b * m + omega));
}

double SrFadingParams::zeta(int k) const
{
    assert(0 <= k && k < m);
    const double num = sf::pochhammer(1.0 - m, k) * std::pow(delta(), k);
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    const double kf = std::tgamma(k + 1.0);
    return sign * num / (kf * kf);
}

double sr_snr_pdf(double x, const SrFadingParams& sr, double eta_s)
{
    assert(eta_s > 0.0);
    if (x < 0.0)
        return 0.0;
    const double t = x / eta_s;
    double poly = 0.0;
    for (int k = sr.m - 1; k >= 0; --k)
        poly = poly * t + sr.zeta(k);
    return sr.alpha() * poly * std::exp(-sr.rate() * t) / eta_s;
}

double sr_snr_cdf(double x, const SrFadingParams& sr, double eta_s)
{
    assert(eta_s > 0.0);
    if (x <= 0.0)
        return 0.0;
    const double t = x / eta_s;
    const double c = sr.rate();
    // F = 1 - alpha e^{-c t} sum_{k<m} zeta_k sum_{p<=k} (k!/p!) c^{p-k-1} t^p.
    // All summands are >= 0, so plain accumulation is cancellation-free.
    double outer = 0.0;
    for (int k = 0; k < sr.m; ++k) {
        const double zk = sr.zeta(k);
        if (zk == 0.0)
            continue;
        // Walk p from k down to 0 so the factorial ratio k!/p! builds as
        // exact small integers.
        double fac = 1.0;
        double inner = std::pow(t, k) / c;  // p = k term
        for (int p = k - 1; p >= 0; --p) {
            fac *= (p + 1);
            inner += fac * std::pow(c, p - k - 1) * std::pow(t, p);
        }
        outer += zk * inner;
    }
    const double surv = sr.alpha() * outer * std::exp(-c * t);
    double f = 1.0 - surv;
    if (f < 0.0)
        return 0.0;
    return f > 1.0 ? 1.0 : f;
}

TerrestrialFading TerrestrialFading::nakagami(double m, double omega)
{
    if (m < 1.0 || m != std::floor(m))
        throw std::invalid_argument("Nakagami m must be an integer >= 1");
    if (omega <= 0.0)
        throw std::invalid_argument("mean power omega must be > 0");
    return {Family::nakagami, m, omega};
}

TerrestrialFading TerrestrialFading::rician(double k_factor, double omega)
{
    if (k_factor < 0.0)
        throw std::invalid_argument("Rician K must be >= 0");
    if (omega <= 0.0)
        throw std::invalid_argument("mean power omega must be > 0");
    return {Family::rician, k_factor, omega};
}

UnifiedSeries make_unified_series(const TerrestrialFading& fading, double eta_u,
                                  double marcum_b_scale)
{
    assert(eta_u > 0.0);
    UnifiedSeries s;
    if (fading.family == TerrestrialFading::Family::nakagami) {
        const int m = static_cast<int>(fading.shape);
        s.r_lo = s.r_hi = m - 1;
        s.rate_scale = m / (fading.omega * eta_u);
        s.log_coeff = {-std::lgamma(static_cast<double>(m))};
        return s;
    }
    const double k_factor = fading.shape;
    const double a = std::sqrt(2.0 * k_factor);
    // The truncated-Marcum coefficients carry a finite-length distortion of
    // relative size ~ r1^3 / (6 R1^2) per term, which leaves an absolute floor
    // ~ (2K^3 + 3K^2) / (6 R1^2) on the fitted cdf near zero.  A large floor on
    // R1 keeps that bias below ~1e-7 so high-SNR tails stay trustworthy; the
    // argument-driven rule still grows R1 when large arguments need it.
    constexpr int kFloor = 10000;
    constexpr int kCap = 20000;
    const double wanted = std::ceil(50.0 * std::max({1.0, a, marcum_b_scale}));
    const int big_r1 =
        static_cast<int>(std::min<double>(std::max<double>(wanted, kFloor), kCap));
    s.truncation_capped = wanted > kCap;
    s.r_lo = 0;
    s.r_hi = big_r1;
    s.rate_scale = (1.0 + k_factor) / (fading.omega * eta_u);
    s.log_coeff.resize(static_cast<size_t>(big_r1) + 1);
    for (int r1 = 0; r1 <= big_r1; ++r1)
        s.log_coeff[static_cast<size_t>(r1)] = sf::log_marcum_chi(r1, a, big_r1);
    return s;
}

double terrestrial_snr_cdf_at_distance(double x, const TerrestrialFading& fading,
                                       double eta_u, double w, double alpha)
{
    assert(eta_u > 0.0 && w > 0.0);
    if (x <= 0.0)
        return 0.0;
    const double wx = x * std::pow(w, alpha) / (fading.omega * eta_u);
    if (fading.family == TerrestrialFading::Family::nakagami)
        return sf::regularized_lower_gamma(fading.shape, fading.shape * wx);
    const double k_factor = fading.shape;
    return 1.0 - sf::marcum_q1(std::sqrt(2.0 * k_factor),
                               std::sqrt(2.0 * (1.0 + k_factor) * wx));
}

}  // namespace hstn
