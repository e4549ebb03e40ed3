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

#ifndef HSTN_TOOLS_RUNCONFIG_HPP
#define HSTN_TOOLS_RUNCONFIG_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hstn/channel.hpp"
#include "hstn/linkbudget.hpp"
#include "hstn/mobility.hpp"

// Experiment configuration: a JSON document describing one sweep (axis,
// scenarios, methods, mobility law).  Unknown keys are rejected everywhere so
// typos fail loudly instead of silently running defaults.

namespace hstn::cli {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Method { exact, asymptotic, numeric, montecarlo };

const char* method_name(Method m);

struct SweepAxis {
    bool gamma_axis = false;  // false: mean-SNR axis, true: threshold axis
    double start_db = 0.0;
    double stop_db = 0.0;
    double step_db = 1.0;

    const char* axis_name() const { return gamma_axis ? "gamma_th_db" : "eta_db"; }
    std::vector<double> points() const;
};

struct ScenarioConfig {
    std::string name;
    int relays = 1;
    double kappa_sat = 0.0;
    double kappa_relay = 0.0;
    double gamma_th_db = 0.0;  // fixed threshold while sweeping the SNR axis
    double eta_db = 0.0;       // fixed mean SNR while sweeping the threshold axis
                               // (given directly or resolved from the link budget)
    SrFadingParams sat_fading{1, 0.063, 0.0007};
    TerrestrialFading relay_fading = TerrestrialFading::nakagami(1, 1.0);
};

struct ExperimentConfig {
    std::uint64_t seed = 1;
    std::uint64_t trials = 1000000;  // Monte Carlo trials per point (0: adaptive)
    std::vector<Method> methods;
    SweepAxis sweep;
    MobilityConfig mobility{};
    double path_loss_exp = 2.0;
    std::optional<SatLinkParams> link_budget;  // physical-parameter entry point
    std::vector<ScenarioConfig> scenarios;
};

// Parses and validates; throws ConfigError with a "file:line field: why"
// style message on any problem.
ExperimentConfig parse_experiment_config_text(const std::string& text,
                                              const std::string& origin);
ExperimentConfig parse_experiment_config_file(const std::string& path);

// Reads just the mobility geometry.  Accepts either a full experiment config
// (its "mobility" section is used, the rest validated as usual) or a bare
// mobility object.
MobilityConfig parse_mobility_config_file(const std::string& path);

}  // namespace hstn::cli

#endif  // HSTN_TOOLS_RUNCONFIG_HPP
