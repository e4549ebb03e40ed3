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

#include "hstn/simd/batch.hpp"
#include "hstn/simd/mc_kernel.hpp"
#include "hstn/simd/philox.hpp"

namespace hstn::mc {

namespace {

struct ScalarSource {
    simd::TrialUniforms u;
    ScalarSource(std::uint64_t seed, std::uint64_t trial) : u(seed, trial) {}
    simd::ScalarBatch next() { return simd::ScalarBatch(u.next()); }
};

}  // namespace

std::uint64_t run_range_scalar(const KernelConfig& kc, std::uint64_t seed,
                               std::uint64_t trial_lo, std::uint64_t trial_hi)
{
    std::uint64_t outages = 0;
    for (std::uint64_t t = trial_lo; t < trial_hi; ++t) {
        ScalarSource src(seed, t);
        const auto served = trial_served_mask<simd::ScalarBatch>(src, kc);
        outages += 1 - count_true(served, 1);
    }
    return outages;
}

void vecmath_eval_scalar(const double* x, VecProbe* out, int n)
{
    for (int i = 0; i < n; ++i) {
        const simd::ScalarBatch b(x[i]);
        simd::ScalarBatch s, c;
        simd::vsincos(b, &s, &c);
        out[i].log_ = simd::vlog(b).v;
        out[i].exp_ = simd::vexp(b).v;
        out[i].sin_ = s.v;
        out[i].cos_ = c.v;
    }
}

void uniform_probe_scalar(std::uint64_t seed, std::uint64_t trial, int count, double* out)
{
    simd::TrialUniforms u(seed, trial);
    for (int i = 0; i < count; ++i)
        out[i] = u.next();
}

}  // namespace hstn::mc
