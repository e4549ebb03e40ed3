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

#ifndef HSTN_MCSIM_HPP
#define HSTN_MCSIM_HPP

#include <cstdint>

#include "hstn/channel.hpp"
#include "hstn/mobility.hpp"
#include "hstn/outage.hpp"

namespace hstn {

enum class McBackend { automatic, scalar, avx2 };

struct SimPlan {
    std::uint64_t trials = 0;  // 0: grow until std_err <= p_hat/10 (capped)
    std::uint64_t seed = 1;
    OutageQuery query{};
    SrFadingParams sat_fading{};
    TerrestrialFading relay_fading{};
    MobilityConfig mobility{};
    double path_loss_exp = 2.0;
    int workers = 0;  // 0: HSTN_WORKERS env var, else 1
    McBackend backend = McBackend::automatic;
};

struct OutageEstimate {
    double p_hat = 0.0;
    double std_err = 0.0;
    double ci95 = 0.0;  // 1.96 * std_err half-width
    std::uint64_t trials = 0;
    std::uint64_t outages = 0;
    bool trials_capped = false;  // precision target unmet at the trial cap
    McBackend backend_used = McBackend::scalar;
};

// Seeded, partition-independent Monte Carlo estimate of the outage
// probability: identical seeds give identical outage counts regardless of
// worker count or instruction-set backend.
OutageEstimate estimate_outage(const SimPlan& plan);

// True when the AVX2 backend is compiled in and this CPU supports it.
bool mc_avx2_available();

}  // namespace hstn

#endif  // HSTN_MCSIM_HPP
