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

#ifndef HSTN_SIMD_BATCH_AVX2_HPP
#define HSTN_SIMD_BATCH_AVX2_HPP

// Four-lane AVX2 batch.  Only translation units compiled with -mavx2 may
// include this header; the backend is chosen at runtime by cpuid so baseline
// builds never execute these instructions.

#include <immintrin.h>

#include <cstdint>

#include "hstn/simd/philox.hpp"

namespace hstn::simd {

struct Avx2Mask {
    __m256d m;
};

struct Avx2Batch {
    __m256d v;
    static constexpr int width = 4;
    using Mask = Avx2Mask;

    Avx2Batch() : v(_mm256_setzero_pd()) {}
    explicit Avx2Batch(__m256d x) : v(x) {}
    static Avx2Batch splat(double x) { return Avx2Batch(_mm256_set1_pd(x)); }
    static Avx2Mask mask_none() { return {_mm256_setzero_pd()}; }
    static Avx2Mask mask_or(Avx2Mask a, Avx2Mask b) { return {_mm256_or_pd(a.m, b.m)}; }
};

inline Avx2Batch operator+(Avx2Batch a, Avx2Batch b) { return Avx2Batch(_mm256_add_pd(a.v, b.v)); }
inline Avx2Batch operator-(Avx2Batch a, Avx2Batch b) { return Avx2Batch(_mm256_sub_pd(a.v, b.v)); }
inline Avx2Batch operator*(Avx2Batch a, Avx2Batch b) { return Avx2Batch(_mm256_mul_pd(a.v, b.v)); }
inline Avx2Batch operator/(Avx2Batch a, Avx2Batch b) { return Avx2Batch(_mm256_div_pd(a.v, b.v)); }
inline Avx2Batch operator-(Avx2Batch a)
{
    return Avx2Batch(_mm256_xor_pd(a.v, _mm256_set1_pd(-0.0)));
}

inline Avx2Batch mul_add(Avx2Batch a, Avx2Batch b, Avx2Batch c)
{
    return Avx2Batch(_mm256_fmadd_pd(a.v, b.v, c.v));
}

inline Avx2Batch sqrt(Avx2Batch a) { return Avx2Batch(_mm256_sqrt_pd(a.v)); }
inline Avx2Batch floor(Avx2Batch a) { return Avx2Batch(_mm256_floor_pd(a.v)); }

inline Avx2Mask operator<(Avx2Batch a, Avx2Batch b) { return {_mm256_cmp_pd(a.v, b.v, _CMP_LT_OQ)}; }
inline Avx2Mask operator<=(Avx2Batch a, Avx2Batch b) { return {_mm256_cmp_pd(a.v, b.v, _CMP_LE_OQ)}; }
inline Avx2Mask operator>(Avx2Batch a, Avx2Batch b) { return {_mm256_cmp_pd(a.v, b.v, _CMP_GT_OQ)}; }
inline Avx2Mask operator>=(Avx2Batch a, Avx2Batch b) { return {_mm256_cmp_pd(a.v, b.v, _CMP_GE_OQ)}; }
inline Avx2Mask operator==(Avx2Batch a, Avx2Batch b) { return {_mm256_cmp_pd(a.v, b.v, _CMP_EQ_OQ)}; }

inline Avx2Batch select(Avx2Mask m, Avx2Batch a, Avx2Batch b)
{
    return Avx2Batch(_mm256_blendv_pd(b.v, a.v, m.m));
}

inline int count_true(Avx2Mask m, int limit)
{
    const int bits = _mm256_movemask_pd(m.m) & ((1 << limit) - 1);
    return __builtin_popcount(static_cast<unsigned>(bits));
}

namespace detail_avx2 {

// Exact int64->double for lane values below 2^52 (0x433 exponent trick).
inline __m256d small_u64_to_double(__m256i v)
{
    const __m256d magic = _mm256_set1_pd(0x1.0p52);
    const __m256d d =
        _mm256_castsi256_pd(_mm256_or_si256(v, _mm256_castpd_si256(magic)));
    return _mm256_sub_pd(d, magic);
}

}  // namespace detail_avx2

inline Avx2Batch biased_exponent(Avx2Batch x)
{
    const __m256i bits = _mm256_castpd_si256(x.v);
    const __m256i e =
        _mm256_and_si256(_mm256_srli_epi64(bits, 52), _mm256_set1_epi64x(0x7FF));
    return Avx2Batch(detail_avx2::small_u64_to_double(e));
}

inline Avx2Batch mantissa_one(Avx2Batch x)
{
    __m256i bits = _mm256_castpd_si256(x.v);
    bits = _mm256_and_si256(bits, _mm256_set1_epi64x(0x000FFFFFFFFFFFFFll));
    bits = _mm256_or_si256(bits, _mm256_set1_epi64x(0x3FF0000000000000ll));
    return Avx2Batch(_mm256_castsi256_pd(bits));
}

inline Avx2Batch scale_pow2(Avx2Batch x, Avx2Batch k)
{
    // Round-trip k through the 1.5*2^52 magic constant to get exact int64
    // lanes, then build 2^k in the exponent field.
    const __m256d magic = _mm256_set1_pd(0x1.8p52);
    const __m256i ki = _mm256_sub_epi64(_mm256_castpd_si256(_mm256_add_pd(k.v, magic)),
                                        _mm256_castpd_si256(magic));
    const __m256i expo =
        _mm256_slli_epi64(_mm256_add_epi64(ki, _mm256_set1_epi64x(1023)), 52);
    return Avx2Batch(_mm256_mul_pd(x.v, _mm256_castsi256_pd(expo)));
}

// --- four-lane Philox uniform source ---------------------------------------

class Avx2Uniforms {
  public:
    // Lanes address trials trial_base .. trial_base+3.
    Avx2Uniforms(std::uint64_t seed, std::uint64_t trial_base)
    {
        alignas(32) long long lo[4], hi[4];
        for (int i = 0; i < 4; ++i) {
            const std::uint64_t t = trial_base + static_cast<std::uint64_t>(i);
            lo[i] = static_cast<long long>(t & 0xFFFFFFFFu);
            hi[i] = static_cast<long long>(t >> 32);
        }
        trial_lo_ = _mm256_load_si256(reinterpret_cast<const __m256i*>(lo));
        trial_hi_ = _mm256_load_si256(reinterpret_cast<const __m256i*>(hi));
        key0_ = _mm256_set1_epi64x(static_cast<long long>(seed & 0xFFFFFFFFu));
        key1_ = _mm256_set1_epi64x(static_cast<long long>(seed >> 32));
    }

    Avx2Batch next()
    {
        if (has_cached_) {
            has_cached_ = false;
            return cached_;
        }
        const __m256i mask32 = _mm256_set1_epi64x(0xFFFFFFFFll);
        __m256i x0 = _mm256_set1_epi64x(static_cast<long long>(draw_++));
        __m256i x1 = _mm256_setzero_si256();
        __m256i x2 = trial_lo_;
        __m256i x3 = trial_hi_;
        __m256i k0 = key0_;
        __m256i k1 = key1_;
        const __m256i m0 = _mm256_set1_epi64x(kPhiloxMul0);
        const __m256i m1 = _mm256_set1_epi64x(kPhiloxMul1);
        const __m256i w0 = _mm256_set1_epi64x(kPhiloxWeyl0);
        const __m256i w1 = _mm256_set1_epi64x(kPhiloxWeyl1);
        for (int round = 0; round < 10; ++round) {
            const __m256i p0 = _mm256_mul_epu32(m0, x0);
            const __m256i p1 = _mm256_mul_epu32(m1, x2);
            const __m256i lo0 = _mm256_and_si256(p0, mask32);
            const __m256i hi0 = _mm256_srli_epi64(p0, 32);
            const __m256i lo1 = _mm256_and_si256(p1, mask32);
            const __m256i hi1 = _mm256_srli_epi64(p1, 32);
            x0 = _mm256_xor_si256(_mm256_xor_si256(hi1, x1), k0);
            x1 = lo1;
            x2 = _mm256_xor_si256(_mm256_xor_si256(hi0, x3), k1);
            x3 = lo0;
            k0 = _mm256_and_si256(_mm256_add_epi64(k0, w0), mask32);
            k1 = _mm256_and_si256(_mm256_add_epi64(k1, w1), mask32);
        }
        const __m256i ua = _mm256_or_si256(_mm256_slli_epi64(x1, 32), x0);
        const __m256i ub = _mm256_or_si256(_mm256_slli_epi64(x3, 32), x2);
        cached_ = to_unit(ub);
        has_cached_ = true;
        return to_unit(ua);
    }

  private:
    static Avx2Batch to_unit(__m256i u)
    {
        // (double)(u >> 11) computed exactly via a 21/32-bit split, then the
        // same centering as the scalar conversion.
        const __m256i mask32 = _mm256_set1_epi64x(0xFFFFFFFFll);
        const __m256d upper = detail_avx2::small_u64_to_double(_mm256_srli_epi64(u, 43));
        const __m256d lower = detail_avx2::small_u64_to_double(
            _mm256_and_si256(_mm256_srli_epi64(u, 11), mask32));
        const __m256d dk =
            _mm256_add_pd(_mm256_mul_pd(upper, _mm256_set1_pd(0x1.0p32)), lower);
        const __m256d v = _mm256_mul_pd(_mm256_add_pd(dk, _mm256_set1_pd(0.5)),
                                        _mm256_set1_pd(0x1.0p-53));
        // Same top-cell pin as the scalar conversion (1.0 never escapes).
        return Avx2Batch(_mm256_min_pd(v, _mm256_set1_pd(0x1.fffffffffffffp-1)));
    }

    __m256i trial_lo_, trial_hi_, key0_, key1_;
    std::uint32_t draw_ = 0;
    Avx2Batch cached_;
    bool has_cached_ = false;
};

}  // namespace hstn::simd

#endif  // HSTN_SIMD_BATCH_AVX2_HPP
