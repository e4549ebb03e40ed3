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

// Compiled with -mavx2; entered only after a runtime cpuid check.

#include "hstn/simd/batch_avx2.hpp"
#include "hstn/simd/mc_kernel.hpp"

#include <algorithm>

namespace hstn::mc {

std::uint64_t run_range_avx2(const KernelConfig& kc, std::uint64_t seed,
                             std::uint64_t trial_lo, std::uint64_t trial_hi)
{
    std::uint64_t outages = 0;
    for (std::uint64_t t = trial_lo; t < trial_hi; t += 4) {
        simd::Avx2Uniforms src(seed, t);
        const auto served = trial_served_mask<simd::Avx2Batch>(src, kc);
        const int lanes = static_cast<int>(std::min<std::uint64_t>(4, trial_hi - t));
        outages += static_cast<std::uint64_t>(lanes - count_true(served, lanes));
    }
    return outages;
}

void vecmath_eval_avx2(const double* x, VecProbe* out, int n)
{
    for (int i = 0; i < n; i += 4) {
        const int lanes = std::min(4, n - i);
        alignas(32) double in[4];
        for (int j = 0; j < 4; ++j)
            in[j] = x[i + std::min(j, lanes - 1)];
        const simd::Avx2Batch b(_mm256_load_pd(in));
        simd::Avx2Batch s, c;
        simd::vsincos(b, &s, &c);
        alignas(32) double lg[4], ex[4], sn[4], cs[4];
        _mm256_store_pd(lg, simd::vlog(b).v);
        _mm256_store_pd(ex, simd::vexp(b).v);
        _mm256_store_pd(sn, s.v);
        _mm256_store_pd(cs, c.v);
        for (int j = 0; j < lanes; ++j) {
            out[i + j].log_ = lg[j];
            out[i + j].exp_ = ex[j];
            out[i + j].sin_ = sn[j];
            out[i + j].cos_ = cs[j];
        }
    }
}

void uniform_probe_avx2(std::uint64_t seed, std::uint64_t trial, int count, double* out)
{
    // Lane 0 of the four-lane source addresses exactly `trial`.
    simd::Avx2Uniforms u(seed, trial);
    for (int i = 0; i < count; ++i)
        out[i] = _mm256_cvtsd_f64(u.next().v);
}

}  // namespace hstn::mc
