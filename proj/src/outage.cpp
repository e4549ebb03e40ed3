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

#include "hstn/outage.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hstn/quadrature.hpp"
#include "hstn/specfun.hpp"

namespace hstn {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

void validate_query(const OutageQuery& q, double path_loss_exp)
{
    if (q.relays < 1)
        throw std::invalid_argument("need at least one relay");
    if (!(q.gamma_th > 0.0))
        throw std::invalid_argument("threshold must be positive");
    if (!(q.eta_sat > 0.0) || !(q.eta_relay > 0.0))
        throw std::invalid_argument("mean SNRs must be positive");
    if (q.hw.kappa_sat < 0.0 || q.hw.kappa_relay < 0.0)
        throw std::invalid_argument("distortion levels must be non-negative");
    if (!(path_loss_exp > 0.0))
        throw std::invalid_argument("path-loss exponent must be positive");
}

// Coefficients of the SNDR inversion: the per-path outage event
//   sndr < gamma  <=>  snr_sat < sat_arg (1 + arg_shift / y),  y = margin*snr_relay - relay_min
// (outage is certain when y <= 0).  Valid only below the ceiling (margin > 0).
struct SndrInversion {
    double margin;      // 1 - prod_coeff * gamma
    double sat_arg;     // relay_coeff * gamma / margin
    double arg_shift;   // sat_coeff * gamma + margin / relay_coeff
    double relay_min;   // sat_coeff * gamma
};

SndrInversion make_inversion(const OutageQuery& q)
{
    SndrInversion s;
    s.margin = 1.0 - q.hw.prod_coeff() * q.gamma_th;
    s.relay_min = q.hw.sat_coeff() * q.gamma_th;
    s.sat_arg = q.hw.relay_coeff() * q.gamma_th / s.margin;
    s.arg_shift = s.relay_min + s.margin / q.hw.relay_coeff();
    return s;
}

bool at_ceiling(const OutageQuery& q)
{
    const double pc = q.hw.prod_coeff();
    return pc > 0.0 && q.gamma_th * pc >= 1.0;
}

// Satellite-hop SNR tail 1 - F(x): the positive exponential series, clamped.
double sat_snr_tail(double x, const SrFadingParams& sr, double eta_s)
{
    if (x <= 0.0)
        return 1.0;
    const double t = x / eta_s;
    const double c = sr.rate();
    const double damp = std::exp(-c * t);
    if (damp == 0.0)
        return 0.0;
    double sum = 0.0;
    for (int kap = 0; kap < sr.m; ++kap) {
        const double z = sr.zeta(kap);
        if (z <= 0.0)
            continue;
        double inner = 0.0;
        double term = std::exp(sf::log_factorial(kap) - (kap + 1) * std::log(c));
        for (int p = 0; p <= kap; ++p) {
            inner += term;
            term *= c * t / (p + 1);
        }
        sum += z * inner;
    }
    return std::min(1.0, sr.alpha() * damp * sum);
}

// ------------------------------------------------------------------------
// Distance-averaged Bessel integrals of the closed form
//
//   J(nu, t2) = Int_0^rmax r^{(alpha t2)/2} e^{-decay r^alpha}
//               K_|nu|(2 sqrt(bess r^alpha)) f_W(r) dr
//
// evaluated in log space (the Bessel factor alone can overflow by thousands
// of nats for high orders) and memoized on (|nu|, t2).
// ------------------------------------------------------------------------
struct RIntegral {
    double log_value = kNegInf;
    double rel_err = 0.0;
    bool converged = true;
};

class RIntegralTable {
  public:
    RIntegralTable(double decay, double bess, double alpha, const MobilityConfig& mob)
        : decay_(decay), bess_(bess), alpha_(alpha), mob_(mob)
    {
        breaks_ = {0.0, std::min(mob.height, mob.radius),
                   std::max(mob.height, mob.radius), max_distance(mob)};
    }

    const RIntegral& get(int nu_abs, int t2)
    {
        const auto key = std::make_pair(nu_abs, t2);
        auto it = memo_.find(key);
        if (it == memo_.end())
            it = memo_.emplace(key, compute(nu_abs, t2)).first;
        return it->second;
    }

  private:
    RIntegral compute(int nu_abs, int t2) const
    {
        const auto log_integrand = [&](double r) -> double {
            const double fw = distance_pdf(r, mob_);
            if (!(fw > 0.0) || !(r > 0.0))
                return kNegInf;
            const double ralpha = std::pow(r, alpha_);
            const double barg = 2.0 * std::sqrt(bess_ * ralpha);
            return 0.5 * alpha_ * t2 * std::log(r) - decay_ * ralpha +
                   sf::log_bessel_k_scaled(nu_abs, barg) - barg + std::log(fw);
        };

        // Locate the peak on a coarse grid so the exponentials below stay
        // representable; the grid only needs to be within a few nats.
        double offset = kNegInf;
        for (size_t piece = 0; piece + 1 < breaks_.size(); ++piece) {
            const double lo = breaks_[piece], hi = breaks_[piece + 1];
            for (int j = 1; j <= 8; ++j)
                offset = std::max(offset, log_integrand(lo + (hi - lo) * j / 9.0));
        }
        RIntegral out;
        if (offset == kNegInf)
            return out;

        const auto f = [&](double r) {
            const double g = log_integrand(r) - offset;
            return g > -700.0 ? std::exp(g) : 0.0;
        };
        const auto res = quad::integrate_pieces(f, breaks_, {1e-14, 1e-10, 48});
        if (res.value > 0.0) {
            out.log_value = offset + std::log(res.value);
            out.rel_err = res.error_estimate / res.value;
        }
        out.converged = res.converged;
        return out;
    }

    double decay_, bess_, alpha_;
    const MobilityConfig& mob_;
    std::vector<double> breaks_;
    std::map<std::pair<int, int>, RIntegral> memo_;
};

OpStatus worst_status(bool overshoot, bool quad_bad, bool capped)
{
    if (overshoot)
        return OpStatus::out_of_range;
    if (quad_bad)
        return OpStatus::no_convergence;
    if (capped)
        return OpStatus::series_capped;
    return OpStatus::ok;
}

}  // namespace

double HardwareProfile::ceiling_linear() const
{
    const double pc = prod_coeff();
    return pc > 0.0 ? 1.0 / pc : std::numeric_limits<double>::infinity();
}

double HardwareProfile::ceiling_db() const { return 10.0 * std::log10(ceiling_linear()); }

double sndr(double snr_sat, double snr_relay, const HardwareProfile& hw)
{
    const double num = snr_sat * snr_relay;
    return num / (hw.prod_coeff() * num + hw.sat_coeff() * snr_sat +
                  hw.relay_coeff() * snr_relay + 1.0);
}

std::string to_string(OpStatus s)
{
    switch (s) {
        case OpStatus::ok: return "ok";
        case OpStatus::ceiling: return "ceiling";
        case OpStatus::series_capped: return "series_capped";
        case OpStatus::out_of_range: return "out_of_range";
        case OpStatus::no_convergence: return "no_convergence";
    }
    return "unknown";
}

OpResult op_exact(const OutageQuery& q, const SrFadingParams& sr,
                  const TerrestrialFading& fading, const MobilityConfig& mob,
                  double path_loss_exp)
{
    validate_query(q, path_loss_exp);
    if (at_ceiling(q))
        return {1.0, 0.0, OpStatus::ceiling};

    const SndrInversion inv = make_inversion(q);
    const double theta = sr.rate() / q.eta_sat;
    const double rmax = max_distance(mob);

    // The relay-hop series truncation depth tracks the largest cdf argument
    // that matters for outage (the relay-side threshold at the worst distance).
    double b_scale = 0.0;
    if (fading.family == TerrestrialFading::Family::rician) {
        b_scale = std::sqrt(2.0 * (1.0 + fading.shape) * inv.sat_arg *
                            std::pow(rmax, path_loss_exp) /
                            (fading.omega * q.eta_relay));
    }
    const UnifiedSeries series = make_unified_series(fading, q.eta_relay, b_scale);

    const double log_rate_ratio = std::log(series.rate_scale / inv.margin);
    const double log_theta = std::log(theta);
    const double log_sat_arg = std::log(inv.sat_arg);
    const double log_shift = std::log(inv.arg_shift);
    const double log_relay_min = std::log(inv.relay_min);
    const double log_eta_sat = std::log(q.eta_sat);

    RIntegralTable table(series.rate_scale * inv.relay_min / inv.margin,
                         series.rate_scale * theta * inv.sat_arg * inv.arg_shift /
                             inv.margin,
                         path_loss_exp, mob);

    // Every summand of the expansion is positive, so the five nested sums are
    // collected as log-terms and collapsed with one log-sum-exp at the end.
    std::vector<double> terms;
    std::vector<double> term_err;
    bool quad_bad = false;

    const bool long_series = series.r_hi - series.r_lo > 8;
    double best_block = kNegInf;
    int faded_blocks = 0;

    for (int r1 = series.r_lo; r1 <= series.r_hi; ++r1) {
        const double log_b = series.log_b(r1);
        double block_peak = kNegInf;
        for (int kap = 0; kap < sr.m; ++kap) {
            const double zeta = sr.zeta(kap);
            if (zeta <= 0.0)
                continue;
            const double log_kap = std::log(zeta) - (kap + 1) * log_eta_sat +
                                   sf::log_factorial(kap);
            for (int p = 0; p <= kap; ++p) {
                const double log_p = log_kap - sf::log_factorial(p);
                for (int qq = 0; qq <= p; ++qq) {
                    const double log_q = log_p + sf::log_binomial(p, qq);
                    for (int n = 0; n <= r1; ++n) {
                        const int nu = n - qq + 1;       // Bessel order
                        const int t2 = 2 * r1 - n + qq + 1;  // doubled r-power
                        const RIntegral& ji = table.get(std::abs(nu), t2);
                        if (ji.log_value == kNegInf)
                            continue;
                        if (!ji.converged && ji.rel_err > 1e-6)
                            quad_bad = true;
                        const double lt =
                            log_q + log_b + sf::log_binomial(r1, n) +
                            0.5 * t2 * log_rate_ratio +
                            (0.5 * nu - (kap + 1 - p)) * log_theta +
                            (p + 0.5 * nu) * log_sat_arg +
                            0.5 * (n + qq + 1) * log_shift +
                            (r1 - n) * log_relay_min + ji.log_value;
                        terms.push_back(lt);
                        term_err.push_back(ji.rel_err);
                        block_peak = std::max(block_peak, lt);
                    }
                }
            }
        }
        best_block = std::max(best_block, block_peak);
        if (long_series) {
            // Stop once several consecutive coefficient blocks are negligible
            // against the running peak (the series decays superexponentially).
            if (block_peak < best_block - 46.0) {
                if (++faded_blocks >= 5)
                    break;
            } else {
                faded_blocks = 0;
            }
        }
    }

    double peak = kNegInf;
    for (double t : terms)
        peak = std::max(peak, t);

    double non_outage = 0.0;
    double non_outage_err = 0.0;
    if (peak != kNegInf) {
        double acc = 0.0, acc_err = 0.0;
        for (size_t i = 0; i < terms.size(); ++i) {
            const double w = std::exp(terms[i] - peak);
            acc += w;
            acc_err += w * term_err[i];
        }
        const double log_shared =
            std::log(2.0) + std::log(sr.alpha()) - theta * inv.sat_arg + peak;
        non_outage = std::exp(log_shared + std::log(acc));
        non_outage_err = std::exp(log_shared) * acc_err;
    }

    bool overshoot = false;
    if (non_outage > 1.0) {
        overshoot = non_outage > 1.0 + 1e-6;
        non_outage = 1.0;
    }

    OpResult out;
    const int m_relays = q.relays;
    out.value = std::exp(m_relays * std::log1p(-non_outage));
    out.err_est = m_relays * std::pow(1.0 - non_outage, m_relays - 1) * non_outage_err;
    out.status = worst_status(overshoot, quad_bad, series.truncation_capped);
    return out;
}

OpResult op_numeric(const OutageQuery& q, const SrFadingParams& sr,
                    const TerrestrialFading& fading, const MobilityConfig& mob,
                    double path_loss_exp)
{
    validate_query(q, path_loss_exp);
    if (at_ceiling(q))
        return {1.0, 0.0, OpStatus::ceiling};

    const SndrInversion inv = make_inversion(q);
    const double theta = sr.rate() / q.eta_sat;
    const std::vector<double> breaks = {0.0, std::min(mob.height, mob.radius),
                                        std::max(mob.height, mob.radius),
                                        max_distance(mob)};

    // Exact conditional relay-hop SNR density at distance r, log scale.
    const bool nak = fading.family == TerrestrialFading::Family::nakagami;
    const auto log_pdf_cond = [&](double z, double r) -> double {
        const double ralpha = std::pow(r, path_loss_exp);
        if (nak) {
            const double m = fading.shape;
            const double c = m * ralpha / (fading.omega * q.eta_relay);
            return m * std::log(c) + (m - 1.0) * std::log(z) - c * z - std::lgamma(m);
        }
        const double k_factor = fading.shape;
        const double rate = (1.0 + k_factor) * ralpha / (fading.omega * q.eta_relay);
        const double u = rate * z;
        const double d = std::sqrt(u) - std::sqrt(k_factor);
        const double t = 2.0 * std::sqrt(k_factor * u);
        return std::log(rate) - d * d + std::log(sf::bessel_i0_scaled(t));
    };

    const auto relay_pdf = [&](double z) -> double {
        if (!(z > 0.0))
            return 0.0;
        const auto f = [&](double r) {
            const double fw = distance_pdf(r, mob);
            if (!(fw > 0.0))
                return 0.0;
            const double g = log_pdf_cond(z, r);
            return g > -700.0 ? std::exp(g) * fw : 0.0;
        };
        return quad::integrate_pieces(f, breaks, {1e-15, 1e-9, 40}).value;
    };

    // Non-outage = (1/margin) Int_0^inf  tail_sat(sat_arg (1 + shift/y))
    //              * f_relay((y + relay_min)/margin) dy.
    const auto outer = [&](double y) -> double {
        if (!(y > 0.0))
            return 0.0;
        const double tail = sat_snr_tail(inv.sat_arg * (1.0 + inv.arg_shift / y), sr,
                                         q.eta_sat);
        if (tail <= 0.0)
            return 0.0;
        return tail * relay_pdf((y + inv.relay_min) / inv.margin) / inv.margin;
    };

    // Pivot the infinite-range fold where either factor has its mass.
    const double r_rms = std::sqrt(distance_moment(2.0, mob));
    const double z_mass =
        fading.omega * q.eta_relay / std::pow(r_rms, path_loss_exp);
    const double pivot = std::max({inv.relay_min, inv.margin * z_mass,
                                   theta * inv.sat_arg * inv.arg_shift});

    const auto res = quad::integrate_to_inf(outer, 0.0, pivot, {1e-14, 1e-8, 48});

    double non_outage = std::min(1.0, res.value);
    OpResult out;
    out.value = std::exp(q.relays * std::log1p(-non_outage));
    out.err_est = q.relays * std::pow(1.0 - non_outage, q.relays - 1) *
                  res.error_estimate;
    const bool quad_bad =
        !res.converged && res.error_estimate > 1e-6 * std::max(res.value, 1e-300);
    out.status = worst_status(res.value > 1.0 + 1e-6, quad_bad, false);
    return out;
}

OpResult op_asymptotic(const OutageQuery& q, const SrFadingParams& sr,
                       const TerrestrialFading& fading, const MobilityConfig& mob,
                       double path_loss_exp)
{
    validate_query(q, path_loss_exp);
    if (at_ceiling(q))
        return {1.0, 0.0, OpStatus::ceiling};

    const double margin = 1.0 - q.hw.prod_coeff() * q.gamma_th;
    const double sat_thresh = q.hw.sat_coeff() * q.gamma_th / margin;
    const double relay_thresh = q.hw.relay_coeff() * q.gamma_th / margin;

    const double sat_term = sr.alpha() * sat_thresh / q.eta_sat;

    // Strict joint high-SNR limit: the satellite hop decays at order 1/eta
    // always; the relay hop decays at order 1/eta^m under Nakagami-m and
    // 1/eta under Rician.  Components of order o(1/eta) vanish from the
    // asymptote, which is what pins the log-log slope to the diversity order
    // -M over any window and lets the satellite shadowing parameters surface
    // whenever the relay hop decays faster.
    double relay_term = 0.0;
    if (fading.family == TerrestrialFading::Family::nakagami) {
        const int m = static_cast<int>(fading.shape);
        if (m == 1) {
            const double rate = 1.0 / (fading.omega * q.eta_relay);
            relay_term = rate * relay_thresh * distance_moment(path_loss_exp, mob);
        }
    } else {
        // Dominant low-argument term of the truncated series: single
        // coefficient e^{-K} at order zero.
        const double k_factor = fading.shape;
        const double rate = (1.0 + k_factor) / (fading.omega * q.eta_relay);
        relay_term = std::exp(-k_factor) * rate * relay_thresh *
                     distance_moment(path_loss_exp, mob);
    }

    OpResult out;
    out.value = std::pow(sat_term + relay_term, q.relays);
    out.err_est = 0.0;
    out.status = out.value > 1.0 ? OpStatus::out_of_range : OpStatus::ok;
    return out;
}

double relay_snr_cdf(double x, double eta_relay, const TerrestrialFading& fading,
                     const MobilityConfig& mob, double path_loss_exp)
{
    if (!(x > 0.0))
        return 0.0;
    const std::vector<double> breaks = {0.0, std::min(mob.height, mob.radius),
                                        std::max(mob.height, mob.radius),
                                        max_distance(mob)};
    const auto f = [&](double r) {
        const double fw = distance_pdf(r, mob);
        if (!(fw > 0.0))
            return 0.0;
        return terrestrial_snr_cdf_at_distance(x, fading, eta_relay, r, path_loss_exp) *
               fw;
    };
    const double v = quad::integrate_pieces(f, breaks, {1e-14, 1e-11, 48}).value;
    return std::clamp(v, 0.0, 1.0);
}

double relay_snr_cdf_series(double x, double eta_relay, const TerrestrialFading& fading,
                            const MobilityConfig& mob, double path_loss_exp)
{
    if (!(x > 0.0))
        return 0.0;
    const double rmax = max_distance(mob);
    double b_scale = 0.0;
    if (fading.family == TerrestrialFading::Family::rician) {
        b_scale = std::sqrt(2.0 * (1.0 + fading.shape) * x *
                            std::pow(rmax, path_loss_exp) /
                            (fading.omega * eta_relay));
    }
    const UnifiedSeries series = make_unified_series(fading, eta_relay, b_scale);
    const std::vector<double> breaks = {0.0, std::min(mob.height, mob.radius),
                                        std::max(mob.height, mob.radius), rmax};

    // Tail = sum_r1 B_r1 Int Gamma(1+r1, A x r^alpha) f_W(r) dr; the joint
    // log keeps high-order terms finite (B_r1 shrinks as fast as the gamma
    // factor grows).
    double tail = 0.0;
    const double peak_guess = fading.family == TerrestrialFading::Family::rician
                                  ? fading.shape
                                  : 0.0;
    for (int r1 = series.r_lo; r1 <= series.r_hi; ++r1) {
        const double log_b = series.log_b(r1);
        const double bound = log_b + sf::log_factorial(r1);
        if (r1 > peak_guess + 5.0 && bound < -60.0)
            break;
        const auto f = [&](double r) {
            const double fw = distance_pdf(r, mob);
            if (!(fw > 0.0))
                return 0.0;
            const double y = series.rate_scale * x * std::pow(r, path_loss_exp);
            const double g = log_b + sf::log_upper_gamma_int(r1, y);
            return g > -700.0 ? std::exp(g) * fw : 0.0;
        };
        tail += quad::integrate_pieces(f, breaks, {1e-15, 1e-11, 48}).value;
    }
    return std::clamp(1.0 - tail, 0.0, 1.0);
}

}  // namespace hstn
