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

#include "hstn/mobility.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>

#include "hstn/quadrature.hpp"

namespace hstn {

MobilityConfig::MobilityConfig(double h, double r, double walk, double vmin, double vmax,
                               double dmin, double dmax)
    : height(h), radius(r), walk_range(walk), v_min(vmin), v_max(vmax), dwell_min(dmin),
      dwell_max(dmax)
{
    if (height <= 0.0 || radius <= 0.0)
        throw std::invalid_argument("height and radius must be positive");
    if (height > radius)
        throw std::invalid_argument(
            "the closed-form distance density requires height <= radius");
    if (walk_range <= 0.0 || walk_range > radius)
        throw std::invalid_argument("walk_range must be in (0, radius]");
    if (v_min <= 0.0 || v_max < v_min)
        throw std::invalid_argument("need 0 < v_min <= v_max");
    if (dwell_min < 0.0 || dwell_max < dwell_min)
        throw std::invalid_argument("need 0 <= dwell_min <= dwell_max");
}

double MobilityConfig::mean_move_time() const
{
    // E[|target - current|] = H/3 for uniform endpoints; speed is drawn
    // independently, so the mean duration is (H/3) E[1/v].
    const double mean_inv_v =
        (v_max == v_min) ? 1.0 / v_min : std::log(v_max / v_min) / (v_max - v_min);
    return height / 3.0 * mean_inv_v;
}

double MobilityConfig::stay_prob() const
{
    const double ts = mean_dwell_time();
    const double tm = mean_move_time();
    return ts / (ts + tm);
}

MobilityConfig MobilityConfig::with_stay_prob(double h, double r, double walk, double vmin,
                                              double vmax, double p_stay)
{
    if (!(p_stay > 0.0 && p_stay < 1.0))
        throw std::invalid_argument("stay probability must be in (0, 1)");
    MobilityConfig cfg(h, r, walk, vmin, vmax, 0.0, 1.0);
    // Only the mean dwell matters for the stationary mixture; use [0, 2*mean].
    const double mean_dwell = p_stay / (1.0 - p_stay) * cfg.mean_move_time();
    cfg.dwell_min = 0.0;
    cfg.dwell_max = 2.0 * mean_dwell;
    return cfg;
}

double altitude_pdf(double x, const MobilityConfig& cfg)
{
    const double h = cfg.height;
    if (x < 0.0 || x > h)
        return 0.0;
    const double ps = cfg.stay_prob();
    const double mobile = 6.0 * x * (h - x) / (h * h * h);
    return ps / h + (1.0 - ps) * mobile;
}

double mobile_altitude_cdf(double x, double height)
{
    if (x <= 0.0)
        return 0.0;
    if (x >= height)
        return 1.0;
    const double t = x / height;
    return t * t * (3.0 - 2.0 * t);
}

double mobile_altitude_quantile(double u, double height)
{
    assert(u >= 0.0 && u <= 1.0);
    // cdf is strictly increasing on [0, H]; fixed-count bisection is exact
    // enough (2^-60) and has no data-dependent branching.
    double lo = 0.0, hi = 1.0;
    for (int i = 0; i < 60; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double c = mid * mid * (3.0 - 2.0 * mid);
        if (c < u)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi) * height;
}

double horizontal_pdf(double z, const MobilityConfig& cfg)
{
    if (z < 0.0 || z > cfg.radius)
        return 0.0;
    return 2.0 * z / (cfg.radius * cfg.radius);
}

namespace {

// Stationary altitude cdf (mixture of dwell-uniform and transition phases).
double altitude_cdf_mix(double x, const MobilityConfig& cfg)
{
    const double h = cfg.height;
    if (x <= 0.0)
        return 0.0;
    if (x >= h)
        return 1.0;
    const double ps = cfg.stay_prob();
    return ps * (x / h) + (1.0 - ps) * mobile_altitude_cdf(x, h);
}

}  // namespace

double max_distance(const MobilityConfig& cfg)
{
    return std::hypot(cfg.height, cfg.radius);
}

double distance_pdf(double w, const MobilityConfig& cfg)
{
    const double r = cfg.radius;
    if (w <= 0.0 || w >= max_distance(cfg))
        return 0.0;
    // W = sqrt(X^2 + Z^2) with X the altitude and Z the horizontal offset;
    // because f_Z(z) z^-1 is constant, the conditional integral collapses to
    // an altitude-cdf difference.
    const double hi = std::min(w, cfg.height);
    const double lo2 = w * w - r * r;
    const double lo = lo2 > 0.0 ? std::sqrt(lo2) : 0.0;
    if (hi <= lo)
        return 0.0;
    return 2.0 * w / (r * r) * (altitude_cdf_mix(hi, cfg) - altitude_cdf_mix(lo, cfg));
}

double distance_moment(double s, const MobilityConfig& cfg)
{
    const double wmax = max_distance(cfg);
    const auto f = [&](double w) { return std::pow(w, s) * distance_pdf(w, cfg); };
    return quad::integrate_pieces(f, {0.0, cfg.height, cfg.radius, wmax},
                                  {1e-13, 1e-11, 48})
        .value;
}

double mean_ball_step(double walk_range) { return 2.0 * walk_range / 3.0; }

double sample_distance(double u_mix, double u_alt, double u_horiz,
                       const MobilityConfig& cfg)
{
    const double alt_static = u_alt * cfg.height;
    const double alt_mobile = mobile_altitude_quantile(u_alt, cfg.height);
    const double alt = (u_mix < cfg.stay_prob()) ? alt_static : alt_mobile;
    const double z = cfg.radius * std::sqrt(u_horiz);
    return std::sqrt(alt * alt + z * z);
}

// ---------------------------------------------------------------------------
// Trajectory simulation
// ---------------------------------------------------------------------------

TrajectorySimulator::TrajectorySimulator(const MobilityConfig& cfg, std::uint64_t seed,
                                         double dt)
    : cfg_(cfg), dt_(dt), rng_(seed)
{
    alt_ = unit_(rng_) * cfg_.height;
    const double ang = 2.0 * M_PI * unit_(rng_);
    const double rad = cfg_.radius * std::sqrt(unit_(rng_));
    px_ = rad * std::cos(ang);
    py_ = rad * std::sin(ang);
    begin_dwell();
}

void TrajectorySimulator::begin_dwell()
{
    dwelling_ = true;
    dwell_left_ = cfg_.dwell_min + (cfg_.dwell_max - cfg_.dwell_min) * unit_(rng_);
}

void TrajectorySimulator::begin_transition()
{
    dwelling_ = false;
    target_alt_ = unit_(rng_) * cfg_.height;
    climb_speed_ = cfg_.v_min + (cfg_.v_max - cfg_.v_min) * unit_(rng_);
}

void TrajectorySimulator::step()
{
    if (dwelling_) {
        // One horizontal decision per epoch: move with the stay-phase
        // probability; the proposal is uniform in a ball and is rejected in
        // place if it would exit the containment disk (Metropolis step, so
        // the uniform-disk horizontal law is stationary).
        if (unit_(rng_) < cfg_.stay_prob()) {
            const double ang = 2.0 * M_PI * unit_(rng_);
            const double rad = cfg_.walk_range * std::sqrt(unit_(rng_));
            const double nx = px_ + rad * std::cos(ang);
            const double ny = py_ + rad * std::sin(ang);
            if (nx * nx + ny * ny <= cfg_.radius * cfg_.radius) {
                px_ = nx;
                py_ = ny;
            }
        }
        dwell_left_ -= dt_;
        if (dwell_left_ <= 0.0)
            begin_transition();
        return;
    }
    const double dir = (target_alt_ > alt_) ? 1.0 : -1.0;
    alt_ += dir * climb_speed_ * dt_;
    if ((dir > 0.0 && alt_ >= target_alt_) || (dir < 0.0 && alt_ <= target_alt_)) {
        alt_ = target_alt_;
        begin_dwell();
    }
}

double TrajectorySimulator::ground_offset() const { return std::hypot(px_, py_); }

double TrajectorySimulator::distance() const
{
    return std::sqrt(alt_ * alt_ + px_ * px_ + py_ * py_);
}

}  // namespace hstn
