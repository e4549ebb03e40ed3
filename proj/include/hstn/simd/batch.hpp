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

#ifndef HSTN_SIMD_BATCH_HPP
#define HSTN_SIMD_BATCH_HPP

#include <bit>
#include <cmath>
#include <cstdint>

// Width-1 reference lane type.  The Monte Carlo kernel and the vector math in
// vecmath.hpp are templated over a batch type; this scalar implementation and
// the AVX2 one perform the same IEEE operations in the same order, so their
// results agree bit for bit (the build disables FP contraction; fused
// multiply-adds happen only through mul_add below).

namespace hstn::simd {

struct ScalarMask {
    bool m = false;
};

struct ScalarBatch {
    double v = 0.0;
    static constexpr int width = 1;
    using Mask = ScalarMask;

    ScalarBatch() = default;
    explicit ScalarBatch(double x) : v(x) {}
    static ScalarBatch splat(double x) { return ScalarBatch(x); }
    static ScalarMask mask_none() { return {false}; }
    static ScalarMask mask_or(ScalarMask a, ScalarMask b) { return {a.m || b.m}; }
};

inline ScalarBatch operator+(ScalarBatch a, ScalarBatch b) { return ScalarBatch(a.v + b.v); }
inline ScalarBatch operator-(ScalarBatch a, ScalarBatch b) { return ScalarBatch(a.v - b.v); }
inline ScalarBatch operator*(ScalarBatch a, ScalarBatch b) { return ScalarBatch(a.v * b.v); }
inline ScalarBatch operator/(ScalarBatch a, ScalarBatch b) { return ScalarBatch(a.v / b.v); }
inline ScalarBatch operator-(ScalarBatch a) { return ScalarBatch(-a.v); }

inline ScalarBatch mul_add(ScalarBatch a, ScalarBatch b, ScalarBatch c)
{
    return ScalarBatch(std::fma(a.v, b.v, c.v));
}

inline ScalarBatch sqrt(ScalarBatch a) { return ScalarBatch(std::sqrt(a.v)); }
inline ScalarBatch floor(ScalarBatch a) { return ScalarBatch(std::floor(a.v)); }

inline ScalarMask operator<(ScalarBatch a, ScalarBatch b) { return {a.v < b.v}; }
inline ScalarMask operator<=(ScalarBatch a, ScalarBatch b) { return {a.v <= b.v}; }
inline ScalarMask operator>(ScalarBatch a, ScalarBatch b) { return {a.v > b.v}; }
inline ScalarMask operator>=(ScalarBatch a, ScalarBatch b) { return {a.v >= b.v}; }
inline ScalarMask operator==(ScalarBatch a, ScalarBatch b) { return {a.v == b.v}; }

inline ScalarBatch select(ScalarMask m, ScalarBatch a, ScalarBatch b)
{
    return m.m ? a : b;
}

// Count set lanes among the first `limit` lanes.
inline int count_true(ScalarMask m, int limit)
{
    return (m.m && limit > 0) ? 1 : 0;
}

// --- bit-level helpers used by the vector math -----------------------------

// Biased exponent field of a finite positive double, as a double (0..2046).
inline ScalarBatch biased_exponent(ScalarBatch x)
{
    const std::uint64_t bits = std::bit_cast<std::uint64_t>(x.v);
    return ScalarBatch(static_cast<double>((bits >> 52) & 0x7FFu));
}

// Same significand with the exponent replaced by 0 (value in [1, 2)).
inline ScalarBatch mantissa_one(ScalarBatch x)
{
    std::uint64_t bits = std::bit_cast<std::uint64_t>(x.v);
    bits = (bits & 0x000FFFFFFFFFFFFFull) | 0x3FF0000000000000ull;
    return ScalarBatch(std::bit_cast<double>(bits));
}

// x * 2^k for k an integer-valued double with |k| small enough that 2^k is a
// normal number.
inline ScalarBatch scale_pow2(ScalarBatch x, ScalarBatch k)
{
    const std::int64_t ki = static_cast<std::int64_t>(k.v);
    const double p2 = std::bit_cast<double>(static_cast<std::uint64_t>(ki + 1023) << 52);
    return ScalarBatch(x.v * p2);
}

}  // namespace hstn::simd

#endif  // HSTN_SIMD_BATCH_HPP
