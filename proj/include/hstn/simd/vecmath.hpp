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

#ifndef HSTN_SIMD_VECMATH_HPP
#define HSTN_SIMD_VECMATH_HPP

// Branch-free elementary functions over a batch type (see batch.hpp).  The
// same template instantiates for the scalar and AVX2 lanes, which is what
// makes the two Monte Carlo backends bit-identical: every lane performs the
// same IEEE operations in the same order, with fused multiply-adds only where
// mul_add is spelled out.
//
// Domains are what the sampling kernel needs: vlog for finite positive
// normals, vexp for |x| < 708, vsincos for 0 <= x < a few multiples of 2*pi.
// Accuracy is a few ulp, ample for Monte Carlo estimates.

namespace hstn::simd {

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

namespace detail {
inline constexpr double kSqrt2 = 1.41421356237309514547462185873883;
inline constexpr double kLn2Hi = 6.93147180369123816490e-01;   // 33 high bits of ln 2
inline constexpr double kLn2Lo = 1.90821492927058770002e-10;   // ln 2 - kLn2Hi
inline constexpr double kLog2E = 1.44269504088896340736;
inline constexpr double kPio2Hi = 1.57079632673412561417e+00;  // 33 high bits of pi/2
inline constexpr double kPio2Lo = 6.07710050650619224932e-11;  // pi/2 - kPio2Hi
}  // namespace detail

// Natural logarithm.
template <class B>
inline B vlog(B x)
{
    using namespace detail;
    // x = 2^e * m with m in [sqrt(1/2), sqrt(2)) keeps |t| below 0.1716.
    B m = mantissa_one(x);
    const auto shift = m > B::splat(kSqrt2);
    m = select(shift, m * B::splat(0.5), m);
    const B e = biased_exponent(x) - B::splat(1023.0) +
                select(shift, B::splat(1.0), B::splat(0.0));

    // ln m = 2 atanh(t), t = (m-1)/(m+1); odd series in t with r = t^2 < 0.0295.
    const B t = (m - B::splat(1.0)) / (m + B::splat(1.0));
    const B r = t * t;
    B p = B::splat(1.0 / 21.0);
    p = mul_add(p, r, B::splat(1.0 / 19.0));
    p = mul_add(p, r, B::splat(1.0 / 17.0));
    p = mul_add(p, r, B::splat(1.0 / 15.0));
    p = mul_add(p, r, B::splat(1.0 / 13.0));
    p = mul_add(p, r, B::splat(1.0 / 11.0));
    p = mul_add(p, r, B::splat(1.0 / 9.0));
    p = mul_add(p, r, B::splat(1.0 / 7.0));
    p = mul_add(p, r, B::splat(1.0 / 5.0));
    p = mul_add(p, r, B::splat(1.0 / 3.0));
    const B two_t = t + t;

    B res = mul_add(e, B::splat(kLn2Hi), two_t);
    res = res + mul_add(e, B::splat(kLn2Lo), (two_t * r) * p);
    return res;
}

// Exponential.
template <class B>
inline B vexp(B x)
{
    using namespace detail;
    const B k = floor(mul_add(x, B::splat(kLog2E), B::splat(0.5)));
    B r = mul_add(k, B::splat(-kLn2Hi), x);
    r = mul_add(k, B::splat(-kLn2Lo), r);

    // e^r on |r| <= (ln 2)/2 by its 13th-order Taylor polynomial.
    B p = B::splat(1.0 / 6227020800.0);
    p = mul_add(p, r, B::splat(1.0 / 479001600.0));
    p = mul_add(p, r, B::splat(1.0 / 39916800.0));
    p = mul_add(p, r, B::splat(1.0 / 3628800.0));
    p = mul_add(p, r, B::splat(1.0 / 362880.0));
    p = mul_add(p, r, B::splat(1.0 / 40320.0));
    p = mul_add(p, r, B::splat(1.0 / 5040.0));
    p = mul_add(p, r, B::splat(1.0 / 720.0));
    p = mul_add(p, r, B::splat(1.0 / 120.0));
    p = mul_add(p, r, B::splat(1.0 / 24.0));
    p = mul_add(p, r, B::splat(1.0 / 6.0));
    p = mul_add(p, r, B::splat(0.5));
    p = mul_add(p, r, B::splat(1.0));
    p = mul_add(p, r, B::splat(1.0));
    return scale_pow2(p, k);
}

// Simultaneous sine and cosine.
template <class B>
inline void vsincos(B x, B* sin_out, B* cos_out)
{
    using namespace detail;
    const B kd = floor(mul_add(x, B::splat(2.0 / 3.14159265358979323846), B::splat(0.5)));
    B r = mul_add(kd, B::splat(-kPio2Hi), x);
    r = mul_add(kd, B::splat(-kPio2Lo), r);
    const B r2 = r * r;

    // sin(r) = r + r^3 P(r^2), cos(r) = 1 + r^2 Q(r^2) on |r| <= pi/4.
    B ps = B::splat(-1.0 / 1307674368000.0);
    ps = mul_add(ps, r2, B::splat(1.0 / 6227020800.0));
    ps = mul_add(ps, r2, B::splat(-1.0 / 39916800.0));
    ps = mul_add(ps, r2, B::splat(1.0 / 362880.0));
    ps = mul_add(ps, r2, B::splat(-1.0 / 5040.0));
    ps = mul_add(ps, r2, B::splat(1.0 / 120.0));
    ps = mul_add(ps, r2, B::splat(-1.0 / 6.0));
    const B sin_r = mul_add(ps * r2, r, r);

    B pc = B::splat(1.0 / 20922789888000.0);
    pc = mul_add(pc, r2, B::splat(-1.0 / 87178291200.0));
    pc = mul_add(pc, r2, B::splat(1.0 / 479001600.0));
    pc = mul_add(pc, r2, B::splat(-1.0 / 3628800.0));
    pc = mul_add(pc, r2, B::splat(1.0 / 40320.0));
    pc = mul_add(pc, r2, B::splat(-1.0 / 720.0));
    pc = mul_add(pc, r2, B::splat(1.0 / 24.0));
    pc = mul_add(pc, r2, B::splat(-0.5));
    const B cos_r = mul_add(pc, r2, B::splat(1.0));

    // Quadrant rotation, q = kd mod 4 (kd is a small exact integer).
    const B q = mul_add(floor(kd * B::splat(0.25)), B::splat(-4.0), kd);
    const auto q1 = q == B::splat(1.0);
    const auto q2 = q == B::splat(2.0);
    const auto q3 = q == B::splat(3.0);
    *sin_out = select(q1, cos_r, select(q2, -sin_r, select(q3, -cos_r, sin_r)));
    *cos_out = select(q1, -sin_r, select(q2, -cos_r, select(q3, sin_r, cos_r)));
}

}  // namespace hstn::simd

#endif  // HSTN_SIMD_VECMATH_HPP
