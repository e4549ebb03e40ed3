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

#include "hstn/specfun.hpp"

#include <cassert>
#include <cmath>
#include <limits>
#include <vector>

namespace hstn::sf {

namespace {

constexpr double kEulerGamma = 0.57721566490153286060651209008240;
constexpr double kInf = std::numeric_limits<double>::infinity();

// ln(n!) table for the sizes that dominate the series loops.
constexpr int kLogFactPrecomputed = 128;

double log_fact_slow(int n) { return std::lgamma(static_cast<double>(n) + 1.0); }

}  // namespace

double pochhammer(double a, int n)
{
    assert(n >= 0);
    double p = 1.0;
    for (int i = 0; i < n; ++i)
        p *= a + i;
    return p;
}

double log_factorial(int n)
{
    assert(n >= 0);
    static const auto table = [] {
        struct Table {
            double v[kLogFactPrecomputed];
        } t{};
        for (int i = 0; i < kLogFactPrecomputed; ++i)
            t.v[i] = log_fact_slow(i);
        return t;
    }();
    if (n < kLogFactPrecomputed)
        return table.v[n];
    return log_fact_slow(n);
}

double log_binomial(int n, int k)
{
    assert(0 <= k && k <= n);
    return log_factorial(n) - log_factorial(k) - log_factorial(n - k);
}

double regularized_lower_gamma(double s, double x)
{
    assert(s > 0.0 && x >= 0.0);
    if (x == 0.0)
        return 0.0;
    const double log_x = std::log(x);
    if (x < s + 1.0) {
        // Ascending series: P = x^s e^-x / Gamma(s+1) * sum_k x^k / (s+1)...(s+k)
        double term = 1.0, sum = 1.0;
        for (int k = 1; k < 2000; ++k) {
            term *= x / (s + k);
            sum += term;
            if (term < sum * 1e-17)
                break;
        }
        return sum * std::exp(s * log_x - x - std::lgamma(s + 1.0));
    }
    // Modified Lentz continued fraction for the upper tail Q.
    const double tiny = 1e-300;
    double b = x + 1.0 - s;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < 2000; ++i) {
        const double an = -i * (i - s);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < tiny)
            d = tiny;
        c = b + an / c;
        if (std::fabs(c) < tiny)
            c = tiny;
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::fabs(delta - 1.0) < 1e-16)
            break;
    }
    const double log_q = s * log_x - x - std::lgamma(s) + std::log(h);
    return 1.0 - std::exp(log_q);
}

double log_upper_gamma_int(int n, double y)
{
    assert(n >= 0 && y >= 0.0);
    if (y == 0.0)
        return log_factorial(n);
    // Gamma(1+n, y) = n! e^-y sum_{j<=n} y^j / j!; log-sum-exp over j keeps the
    // value finite for y >> 745 where e^-y alone would underflow.
    const double log_y = std::log(y);
    const int j_peak = (y < static_cast<double>(n)) ? static_cast<int>(y) : n;
    const double log_peak = j_peak * log_y - log_factorial(j_peak);
    double sum = 0.0;
    for (int j = 0; j <= n; ++j) {
        sum += std::exp(j * log_y - log_factorial(j) - log_peak);
        // Terms are unimodal in j; once far past the peak they vanish.
        if (j > j_peak && j * log_y - log_factorial(j) - log_peak < -40.0)
            break;
    }
    return log_factorial(n) - y + log_peak + std::log(sum);
}

// ---------------------------------------------------------------------------
// Bessel J
// ---------------------------------------------------------------------------

namespace {

double bessel_j_series(int n, double x)
{
    // sum_k (-1)^k (x/2)^{n+2k} / (k! (n+k)!), fine for |x| <= 8 (worst-case
    // cancellation there costs ~3 digits).
    const double q = 0.25 * x * x;
    double term = std::exp(n * std::log(0.5 * x) - log_factorial(n));
    double sum = term;
    for (int k = 1; k < 80; ++k) {
        term *= -q / (static_cast<double>(k) * (n + k));
        sum += term;
        if (std::fabs(term) < 1e-18 * (std::fabs(sum) + 1e-300) && k > n / 2)
            break;
    }
    return sum;
}

double bessel_j_miller(int n, double x)
{
    // Downward recurrence with the normalization J_0 + 2 J_2 + 2 J_4 + ... = 1.
    const int start_raw = static_cast<int>(x + 15.0 * std::cbrt(x) + 25.0) + n;
    const int start = start_raw + (start_raw & 1);  // even start
    double jp = 0.0;       // J_{k+1} (unnormalized)
    double jc = 1e-30;     // J_k
    double norm = 0.0;
    double result = (n == start) ? jc : 0.0;
    for (int k = start; k > 0; --k) {
        double jm = (2.0 * k / x) * jc - jp;
        jp = jc;
        jc = jm;
        if ((k - 1) % 2 == 0)
            norm += (k - 1 == 0) ? jc : 2.0 * jc;
        if (k - 1 == n)
            result = jc;
        if (std::fabs(jc) > 1e250) {
            jc *= 1e-250;
            jp *= 1e-250;
            norm *= 1e-250;
            result *= 1e-250;
        }
    }
    return result / norm;
}

}  // namespace

double bessel_j(int n, double x)
{
    assert(n >= 0);
    if (x < 0.0)
        return (n % 2 == 0 ? 1.0 : -1.0) * bessel_j(n, -x);
    if (x == 0.0)
        return n == 0 ? 1.0 : 0.0;
    return (x <= 8.0) ? bessel_j_series(n, x) : bessel_j_miller(n, x);
}

// ---------------------------------------------------------------------------
// Bessel I0
// ---------------------------------------------------------------------------

namespace {

double bessel_i0_series(double x)
{
    const double q = 0.25 * x * x;
    double term = 1.0, sum = 1.0;
    for (int k = 1; k < 120; ++k) {
        term *= q / (static_cast<double>(k) * k);
        sum += term;
        if (term < sum * 1e-17)
            break;
    }
    return sum;
}

double bessel_i0_asym_scaled(double x)
{
    // e^-x I0(x) ~ (2 pi x)^{-1/2} sum_k ((2k-1)!!)^2 / (k! (8x)^k); at the
    // x >= 15 switch point the series bottoms out below 1e-16 within ~22 terms.
    double term = 1.0, sum = 1.0;
    for (int k = 1; k <= 24; ++k) {
        const double odd = 2.0 * k - 1.0;
        term *= odd * odd / (8.0 * k * x);
        sum += term;
        if (term < 1e-17)
            break;
    }
    return sum / std::sqrt(2.0 * M_PI * x);
}

}  // namespace

double bessel_i0(double x)
{
    x = std::fabs(x);
    if (x <= 15.0)
        return bessel_i0_series(x);
    return bessel_i0_asym_scaled(x) * std::exp(x);  // overflows past ~713, as I0 does
}

double bessel_i0_scaled(double x)
{
    x = std::fabs(x);
    if (x <= 15.0)
        return bessel_i0_series(x) * std::exp(-x);
    return bessel_i0_asym_scaled(x);
}

// ---------------------------------------------------------------------------
// Bessel K
// ---------------------------------------------------------------------------

namespace {

// e^x sqrt(x) K_v(x) as a polynomial in 1/x on [2,16]; generated minimax fits,
// max relative error ~4e-19 (below double rounding).  Highest degree first.
constexpr double kGapK0[22] = {
    -79.61709907128321118,   510.3421738273713693,   -1547.67475648963808,
    2956.179612195625818,    -3995.580994822503367,  4072.095077009790746,
    -3258.325211074361095,   2106.692107820222421,   -1126.097235451675862,
    508.0909886431323362,    -197.8049857129032329,  68.2482973320968454,
    -21.62871217270427708,   6.608038359396890093,   -2.068977470650276168,
    0.7098412479899568318,   -0.2841429721535437929, 0.1405368933018312984,
    -0.09179452863913529193, 0.08812362538294785347, -0.1566642667535794313,
    1.253314137312330179,
};
constexpr double kGapK1[22] = {
    88.04148100184830765,   -564.4777133171790186,  1712.344122278107715,
    -3271.873678947885579,  4424.232022139827233,   -4511.488884395178646,
    3612.543081919110983,   -2337.980974389512578,  1251.38979296239378,
    -565.6830997638258195,  220.8304623998453946,   -76.50776450243693964,
    24.40078155657472587,   -7.528707404249527881,  2.392932344228640864,
    -0.839560872532392001,  0.3473478074976978208,  -0.1806949794498179257,
    0.1285126240536489494,  -0.1468727231193181876, 0.46999280104189579,
    1.253314137318984039,
};

double poly_eval(const double* c, int n, double t)
{
    double r = c[0];
    for (int i = 1; i < n; ++i)
        r = r * t + c[i];
    return r;
}

double bessel_i1_series(double x)
{
    const double q = 0.25 * x * x;
    double term = 0.5 * x, sum = term;
    for (int k = 1; k < 120; ++k) {
        term *= q / (static_cast<double>(k) * (k + 1));
        sum += term;
        if (term < sum * 1e-17)
            break;
    }
    return sum;
}

// K0, K1 ascending series for x <= 2 (no cancellation trouble there).
double bessel_k0_small(double x)
{
    const double lhalf = std::log(0.5 * x);
    const double q = 0.25 * x * x;
    double term = 1.0, harmonic = 0.0, sum = 0.0;
    for (int k = 1; k < 60; ++k) {
        term *= q / (static_cast<double>(k) * k);
        harmonic += 1.0 / k;
        sum += term * harmonic;
        if (term * harmonic < 1e-18 * (sum + 1.0))
            break;
    }
    return -(lhalf + kEulerGamma) * bessel_i0_series(x) + sum;
}

double bessel_k1_small(double x)
{
    // K1(x) = ln(x/2) I1(x) + 1/x - (x/4) sum_k [psi(k+1)+psi(k+2)] q^k/(k!(k+1)!)
    const double lhalf = std::log(0.5 * x);
    const double q = 0.25 * x * x;
    double term = 1.0;  // q^k / (k! (k+1)!)
    double psi_sum = -2.0 * kEulerGamma + 1.0;  // psi(1) + psi(2)
    double sum = term * psi_sum;
    for (int k = 1; k < 60; ++k) {
        term *= q / (static_cast<double>(k) * (k + 1));
        psi_sum += 1.0 / k + 1.0 / (k + 1.0);
        sum += term * psi_sum;
        if (term * (std::fabs(psi_sum) + 1.0) < 1e-18)
            break;
    }
    return lhalf * bessel_i1_series(x) + 1.0 / x - 0.25 * x * sum;
}

// Asymptotic series for e^x K_v(x), x >= 16, v in {0, 1}.
double bessel_kv_asym_scaled(int v, double x)
{
    const double mu = 4.0 * v * v;
    double term = 1.0, sum = 1.0;
    for (int k = 1; k <= 22; ++k) {
        const double odd = 2.0 * k - 1.0;
        term *= (mu - odd * odd) / (8.0 * k * x);
        sum += term;
        if (std::fabs(term) < 1e-17)
            break;
    }
    return sum * std::sqrt(M_PI / (2.0 * x));
}

double bessel_k0_scaled_impl(double x)
{
    if (x <= 2.0)
        return bessel_k0_small(x) * std::exp(x);
    if (x < 16.0)
        return poly_eval(kGapK0, 22, 1.0 / x) / std::sqrt(x);
    return bessel_kv_asym_scaled(0, x);
}

double bessel_k1_scaled_impl(double x)
{
    if (x <= 2.0)
        return bessel_k1_small(x) * std::exp(x);
    if (x < 16.0)
        return poly_eval(kGapK1, 22, 1.0 / x) / std::sqrt(x);
    return bessel_kv_asym_scaled(1, x);
}

}  // namespace

double bessel_k_scaled(int v, double x)
{
    assert(v >= 0);
    assert(x > 0.0);
    double km = bessel_k0_scaled_impl(x);
    if (v == 0)
        return km;
    double kc = bessel_k1_scaled_impl(x);
    for (int j = 1; j < v; ++j) {
        const double kn = km + (2.0 * j / x) * kc;
        km = kc;
        kc = kn;
        if (kc == kInf)
            return kInf;
    }
    return kc;
}

double bessel_k(int v, double x)
{
    return bessel_k_scaled(v, x) * std::exp(-x);
}

double log_bessel_k_scaled(int v, double x)
{
    assert(v >= 0);
    assert(x > 0.0);
    double km = bessel_k0_scaled_impl(x);
    if (v == 0)
        return std::log(km);
    double kc = bessel_k1_scaled_impl(x);
    double offset = 0.0;
    // Upward recurrence grows for small x / large v; renormalize so the pair
    // never overflows and report ln(value) + offset.
    for (int j = 1; j < v; ++j) {
        const double kn = km + (2.0 * j / x) * kc;
        km = kc;
        kc = kn;
        if (kc > 1e250) {
            km *= 1e-250;
            kc *= 1e-250;
            offset += 250.0 *M_LN10;
        }
    }
    return std::log(kc) + offset;
}

// ---------------------------------------------------------------------------
// Marcum Q
// ---------------------------------------------------------------------------

double marcum_q1(double a, double b)
{
    assert(a >= 0.0 && b >= 0.0);
    if (b == 0.0)
        return 1.0;
    if (a == 0.0)
        return std::exp(-0.5 * b * b);
    const double h = 0.5 * a * a;  // Poisson rate
    const double y = 0.5 * b * b;  // Erlang tail argument
    const double log_h = std::log(h);
    const double log_y = std::log(y);

    // Start at the Poisson mode and expand in both directions.  T_k is the
    // Erlang tail Pr[Gamma(k+1) > y]; it changes by the Poisson(y) pmf term.
    const int k0 = static_cast<int>(h);
    double t_mid = 1.0 - regularized_lower_gamma(k0 + 1.0, y);
    if (t_mid < 1e-10) {
        // Deep tail (y >> k0): the complement above cancels to zero and the
        // lost anchor mass caps the relative accuracy.  Rebuild the Poisson
        // cdf directly; every term is positive, so it is well conditioned.
        double lmax = -y;  // j = 0 term
        for (int j = 1; j <= k0; ++j)
            lmax = std::max(lmax, -y + j * log_y - log_factorial(j));
        double acc = 0.0;
        for (int j = 0; j <= k0; ++j)
            acc += std::exp(-y + j * log_y - log_factorial(j) - lmax);
        t_mid = std::exp(lmax) * acc;
    }

    auto log_pois = [&](int k) { return -h + k * log_h - log_factorial(k); };
    auto pmf_y = [&](int j) { return std::exp(-y + j * log_y - log_factorial(j)); };

    double sum = std::exp(log_pois(k0)) * t_mid;
    // Upward from the mode.
    double t = t_mid;
    for (int k = k0 + 1; k < k0 + 100000; ++k) {
        t += pmf_y(k);  // T_k = T_{k-1} + e^-y y^k / k!
        if (t > 1.0)
            t = 1.0;
        const double lp = log_pois(k);
        sum += std::exp(lp) * t;
        if (lp < std::log(sum + 1e-300) - 40.0 && k > k0 + 4)
            break;
    }
    // Downward from the mode.
    t = t_mid;
    for (int k = k0 - 1; k >= 0; --k) {
        t -= pmf_y(k + 1);  // T_k = T_{k+1} - e^-y y^{k+1} / (k+1)!
        if (t < 0.0)
            t = 0.0;
        const double lp = log_pois(k);
        sum += std::exp(lp) * t;
        if (lp < std::log(sum + 1e-300) - 40.0)
            break;
    }
    return sum < 1.0 ? sum : 1.0;
}

double log_marcum_chi(int r1, double a, int big_r1)
{
    assert(r1 >= 0 && big_r1 >= 1 && a >= 0.0);
    if (a == 0.0 && r1 > 0)
        return -kInf;
    const double r = r1;
    const double big = big_r1;
    double lg = std::lgamma(big + r) + (1.0 - 2.0 * r) * std::log(big) - r * M_LN2 -
                2.0 * std::lgamma(r + 1.0) - std::lgamma(big - r + 1.0) - 0.5 * a * a;
    if (a > 0.0)
        lg += 2.0 * r * std::log(a);
    return lg;
}

double marcum_q1_truncated(double a, double b, int big_r1)
{
    assert(a >= 0.0 && b >= 0.0 && big_r1 >= 1);
    const double y = 0.5 * b * b;
    // Terms die off superexponentially past r1 ~ a^2/2; stop once they stay
    // 40 nats under the running peak, then combine with one log-sum-exp.
    std::vector<double> lts;
    lts.reserve(64);
    double log_peak = -kInf;
    for (int r1 = 0; r1 <= big_r1; ++r1) {
        const double lt = log_marcum_chi(r1, a, big_r1) + log_upper_gamma_int(r1, y);
        if (lt == -kInf)
            break;  // a == 0: only r1 = 0 contributes
        lts.push_back(lt);
        if (lt > log_peak)
            log_peak = lt;
        if (lt < log_peak - 40.0 && r1 > static_cast<int>(0.5 * a * a) + 4)
            break;
    }
    if (lts.empty() || log_peak == -kInf)
        return 0.0;
    double sum = 0.0;
    for (const double lt : lts)
        sum += std::exp(lt - log_peak);
    return std::exp(log_peak) * sum;
}

}  // namespace hstn::sf
