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

#ifndef HSTN_MOBILITY_HPP
#define HSTN_MOBILITY_HPP

#include <cstdint>
#include <random>

namespace hstn {

// Mixed-mobility model for relays hovering over a disk: each relay alternates
// between dwell phases (altitude fixed, horizontal random-walk steps uniform
// in a ball of radius walk_range) and vertical transitions to a uniformly
// drawn target altitude at a uniformly drawn speed.  The destination sits at
// the disk center on the ground.
struct MobilityConfig {
    double height = 40.0;       // max altitude H [m]
    double radius = 80.0;       // horizontal containment radius R [m]
    double walk_range = 40.0;   // horizontal step ball radius R' [m]
    double v_min = 0.1;         // vertical speed range [m/s]
    double v_max = 30.0;
    double dwell_min = 0.0;     // dwell duration range [s]
    double dwell_max = 5.0869854846442655;  // default tuned for stay_prob 0.5

    MobilityConfig() = default;
    MobilityConfig(double h, double r, double walk, double vmin, double vmax,
                   double dmin, double dmax);

    // Mean vertical transition time E[|h1-h0|] E[1/v] = (H/3) ln(vmax/vmin)/(vmax-vmin).
    double mean_move_time() const;
    double mean_dwell_time() const { return 0.5 * (dwell_min + dwell_max); }
    // Long-run fraction of time spent dwelling (renewal ratio).
    double stay_prob() const;

    // Build a config whose dwell range hits a requested stay probability.
    static MobilityConfig with_stay_prob(double h, double r, double walk, double vmin,
                                         double vmax, double p_stay);
};

// Stationary altitude density: mixture of uniform (dwell phases) and the
// transition-phase density 6x(H-x)/H^3, weighted by stay_prob.
double altitude_pdf(double x, const MobilityConfig& cfg);
// Transition-phase altitude cdf 3t^2 - 2t^3 (t = x/H) and its inverse.
double mobile_altitude_cdf(double x, double height);
double mobile_altitude_quantile(double u, double height);

// Horizontal offset-from-center density 2z/R^2 on [0, R].
double horizontal_pdf(double z, const MobilityConfig& cfg);

// Relay-to-destination distance density f_W(w) on [0, sqrt(R^2+H^2)]:
// piecewise closed form (2w/R^2) [F_alt(min(w,H)) - F_alt(sqrt(max(w^2-R^2,0)))].
double distance_pdf(double w, const MobilityConfig& cfg);
double max_distance(const MobilityConfig& cfg);

// E[w^s] under f_W, by adaptive piecewise quadrature.
double distance_moment(double s, const MobilityConfig& cfg);

// Mean norm of a uniform draw from a 2-D ball of radius r: 2r/3.
double mean_ball_step(double walk_range);

// One snapshot distance draw from the stationary law, from three uniforms in
// (0,1): phase mixture, altitude, horizontal offset.  This is the same
// branchless recipe the Monte Carlo kernel vectorizes.
double sample_distance(double u_mix, double u_alt, double u_horiz,
                       const MobilityConfig& cfg);

// Time-stepped trajectory: dwell countdowns, per-epoch horizontal steps
// (uniform ball proposal, rejected-in-place at the containment boundary so
// the uniform-disk law stays stationary), and constant-speed vertical
// transitions.  Used to validate that the time-average of a single trajectory
// matches the analytic snapshot densities.
class TrajectorySimulator {
  public:
    TrajectorySimulator(const MobilityConfig& cfg, std::uint64_t seed, double dt = 1.0);

    void step();
    double altitude() const { return alt_; }
    double ground_offset() const;
    double distance() const;
    bool dwelling() const { return dwelling_; }

  private:
    MobilityConfig cfg_;
    double dt_;
    std::mt19937_64 rng_;
    std::uniform_real_distribution<double> unit_{0.0, 1.0};

    bool dwelling_ = true;
    double dwell_left_ = 0.0;
    double alt_ = 0.0;
    double target_alt_ = 0.0;
    double climb_speed_ = 1.0;
    double px_ = 0.0, py_ = 0.0;

    void begin_dwell();
    void begin_transition();
};

}  // namespace hstn

#endif  // HSTN_MOBILITY_HPP
