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

#include "hstn/mcsim.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <thread>
#include <vector>

#include "hstn/simd/mc_kernel.hpp"

namespace hstn {

namespace {

constexpr std::uint64_t kTrialCap = 100'000'000;
constexpr std::uint64_t kAutoStart = 100'000;

mc::KernelConfig build_kernel_config(const SimPlan& plan)
{
    const OutageQuery& q = plan.query;
    if (q.relays < 1)
        throw std::invalid_argument("need at least one relay");
    if (!(q.gamma_th > 0.0) || !(q.eta_sat > 0.0) || !(q.eta_relay > 0.0))
        throw std::invalid_argument("threshold and mean SNRs must be positive");
    if (!(plan.path_loss_exp > 0.0))
        throw std::invalid_argument("path-loss exponent must be positive");

    mc::KernelConfig kc;
    kc.relays = q.relays;
    kc.stay_prob = plan.mobility.stay_prob();
    kc.height = plan.mobility.height;
    kc.radius = plan.mobility.radius;
    kc.path_loss_exp = plan.path_loss_exp;

    kc.m_sat = plan.sat_fading.m;
    kc.los_scale = plan.sat_fading.omega / plan.sat_fading.m;
    kc.scatter_sd = std::sqrt(plan.sat_fading.b);
    kc.eta_sat = q.eta_sat;

    const TerrestrialFading& tf = plan.relay_fading;
    if (tf.family == TerrestrialFading::Family::nakagami) {
        kc.relay_nakagami = true;
        kc.m_relay = static_cast<int>(tf.shape);
        kc.relay_gamma_scale = tf.omega / tf.shape;
    } else {
        kc.relay_nakagami = false;
        const double k_factor = tf.shape;
        kc.rice_mu = std::sqrt(k_factor * tf.omega / (1.0 + k_factor));
        kc.rice_sd = std::sqrt(tf.omega / (2.0 * (1.0 + k_factor)));
    }
    kc.eta_relay = q.eta_relay;

    kc.gamma_th = q.gamma_th;
    kc.margin = 1.0 - q.hw.prod_coeff() * q.gamma_th;
    kc.relay_min = q.hw.sat_coeff() * q.gamma_th;
    kc.g_relay = q.hw.relay_coeff() * q.gamma_th;
    return kc;
}

int resolve_workers(int requested)
{
    if (requested > 0)
        return std::min(requested, 256);
    if (const char* env = std::getenv("HSTN_WORKERS")) {
        const int n = std::atoi(env);
        if (n > 0)
            return std::min(n, 256);
    }
    return 1;
}

McBackend resolve_backend(McBackend wanted)
{
    if (wanted == McBackend::scalar)
        return McBackend::scalar;
    const bool avail = mc_avx2_available();
    if (wanted == McBackend::avx2) {
        if (!avail)
            throw std::runtime_error("AVX2 backend is not available on this machine");
        return McBackend::avx2;
    }
    return avail ? McBackend::avx2 : McBackend::scalar;
}

std::uint64_t run_partitioned(const mc::KernelConfig& kc, std::uint64_t seed,
                              std::uint64_t lo, std::uint64_t hi, int workers,
                              McBackend backend)
{
    const auto run_one = [&](std::uint64_t a, std::uint64_t b) -> std::uint64_t {
#if defined(HSTN_HAVE_AVX2_BACKEND)
        if (backend == McBackend::avx2)
            return mc::run_range_avx2(kc, seed, a, b);
#endif
        return mc::run_range_scalar(kc, seed, a, b);
    };

    const std::uint64_t total = hi - lo;
    const std::uint64_t per =
        std::max<std::uint64_t>(1, total / static_cast<std::uint64_t>(workers));
    if (workers <= 1 || total <= per)
        return run_one(lo, hi);

    std::vector<std::uint64_t> counts;
    std::vector<std::thread> threads;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> ranges;
    for (std::uint64_t a = lo; a < hi; a += per)
        ranges.emplace_back(a, std::min(hi, a + per));
    counts.assign(ranges.size(), 0);
    threads.reserve(ranges.size());
    for (size_t i = 0; i < ranges.size(); ++i) {
        threads.emplace_back([&, i] { counts[i] = run_one(ranges[i].first, ranges[i].second); });
    }
    for (auto& t : threads)
        t.join();
    std::uint64_t sum = 0;
    for (std::uint64_t c : counts)
        sum += c;
    return sum;
}

}  // namespace

bool mc_avx2_available()
{
#if defined(HSTN_HAVE_AVX2_BACKEND)
    return __builtin_cpu_supports("avx2") != 0 && __builtin_cpu_supports("fma") != 0;
#else
    return false;
#endif
}

OutageEstimate estimate_outage(const SimPlan& plan)
{
    const mc::KernelConfig kc = build_kernel_config(plan);
    const int workers = resolve_workers(plan.workers);
    const McBackend backend = resolve_backend(plan.backend);

    OutageEstimate est;
    est.backend_used = backend;

    std::uint64_t done = 0;
    std::uint64_t outages = 0;

    const auto extend_to = [&](std::uint64_t target) {
        outages += run_partitioned(kc, plan.seed, done, target, workers, backend);
        done = target;
    };

    if (plan.trials > 0) {
        extend_to(plan.trials);
    } else {
        // Grow geometrically until the standard error is within 10% of p_hat;
        // per-trial streams let each stage extend the previous one.
        std::uint64_t target = kAutoStart;
        for (;;) {
            extend_to(std::min(target, kTrialCap));
            const double p = static_cast<double>(outages) / static_cast<double>(done);
            const double se =
                std::sqrt(p * (1.0 - p) / static_cast<double>(done));
            if (outages > 0 && p > 0.0 && se <= 0.1 * p)
                break;
            if (done >= kTrialCap) {
                est.trials_capped = true;
                break;
            }
            target = done * 4;
        }
    }

    est.trials = done;
    est.outages = outages;
    est.p_hat = static_cast<double>(outages) / static_cast<double>(done);
    est.std_err = std::sqrt(est.p_hat * (1.0 - est.p_hat) / static_cast<double>(done));
    est.ci95 = 1.96 * est.std_err;
    return est;
}

}  // namespace hstn
