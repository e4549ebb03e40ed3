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

#ifndef HSTN_SIMD_PHILOX_HPP
#define HSTN_SIMD_PHILOX_HPP

#include <array>
#include <cstdint>

// Counter-based random numbers (Philox-4x32, 10 rounds).  Each Monte Carlo
// trial owns its own stream: the block counter is
//
//     (draw index, stream id, trial index low, trial index high)
//
// keyed by the 64-bit user seed.  Because a draw is addressed by (seed,
// trial, draw) alone, the sampled values do not depend on how trials are
// batched across SIMD lanes, threads, or backends — identical seeds give
// identical outage counts no matter the partitioning.

namespace hstn::simd {

inline constexpr std::uint32_t kPhiloxMul0 = 0xD2511F53u;
inline constexpr std::uint32_t kPhiloxMul1 = 0xCD9E8D57u;
inline constexpr std::uint32_t kPhiloxWeyl0 = 0x9E3779B9u;
inline constexpr std::uint32_t kPhiloxWeyl1 = 0xBB67AE85u;

inline std::array<std::uint32_t, 4> philox4x32(std::uint32_t c0, std::uint32_t c1,
                                               std::uint32_t c2, std::uint32_t c3,
                                               std::uint32_t k0, std::uint32_t k1)
{
    std::uint32_t x0 = c0, x1 = c1, x2 = c2, x3 = c3;
    for (int round = 0; round < 10; ++round) {
        const std::uint64_t p0 = static_cast<std::uint64_t>(kPhiloxMul0) * x0;
        const std::uint64_t p1 = static_cast<std::uint64_t>(kPhiloxMul1) * x2;
        const std::uint32_t lo0 = static_cast<std::uint32_t>(p0);
        const std::uint32_t hi0 = static_cast<std::uint32_t>(p0 >> 32);
        const std::uint32_t lo1 = static_cast<std::uint32_t>(p1);
        const std::uint32_t hi1 = static_cast<std::uint32_t>(p1 >> 32);
        x0 = hi1 ^ x1 ^ k0;
        x1 = lo1;
        x2 = hi0 ^ x3 ^ k1;
        x3 = lo0;
        k0 += kPhiloxWeyl0;
        k1 += kPhiloxWeyl1;
    }
    return {x0, x1, x2, x3};
}

// Strictly-interior uniform in (0, 1): the top 53 bits centered on the cell.
// The centering of the very top cell rounds to 1.0 in double precision, so it
// is pinned to the largest double below 1; every other cell is exact.
inline double u64_to_unit_double(std::uint64_t u)
{
    const double v = (static_cast<double>(u >> 11) + 0.5) * 0x1.0p-53;
    return v < 1.0 ? v : 0x1.fffffffffffffp-1;
}

// One trial's uniform stream (reference width-1 source; the AVX2 backend
// implements the identical addressing across four lanes).
class TrialUniforms {
  public:
    TrialUniforms(std::uint64_t seed, std::uint64_t trial)
        : key0_(static_cast<std::uint32_t>(seed)),
          key1_(static_cast<std::uint32_t>(seed >> 32)),
          trial_lo_(static_cast<std::uint32_t>(trial)),
          trial_hi_(static_cast<std::uint32_t>(trial >> 32))
    {
    }

    double next()
    {
        if (has_cached_) {
            has_cached_ = false;
            return cached_;
        }
        const auto b = philox4x32(draw_++, 0u, trial_lo_, trial_hi_, key0_, key1_);
        const std::uint64_t ua = (static_cast<std::uint64_t>(b[1]) << 32) | b[0];
        const std::uint64_t ub = (static_cast<std::uint64_t>(b[3]) << 32) | b[2];
        cached_ = u64_to_unit_double(ub);
        has_cached_ = true;
        return u64_to_unit_double(ua);
    }

  private:
    std::uint32_t key0_, key1_, trial_lo_, trial_hi_;
    std::uint32_t draw_ = 0;
    double cached_ = 0.0;
    bool has_cached_ = false;
};

}  // namespace hstn::simd

#endif  // HSTN_SIMD_PHILOX_HPP
