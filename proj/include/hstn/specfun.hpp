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

#ifndef HSTN_SPECFUN_HPP
#define HSTN_SPECFUN_HPP

// Self-contained special-function kernel used by the fading and outage code.
// Everything here is plain scalar double math with documented accuracy targets;
// the only <cmath> dependencies beyond elementary functions are lgamma/tgamma.

namespace hstn::sf {

// Rising factorial (a)_n = a (a+1) ... (a+n-1); (a)_0 = 1.
double pochhammer(double a, int n);

// ln(n!) with a cached table for small n.
double log_factorial(int n);

// ln C(n, k); requires 0 <= k <= n.
double log_binomial(int n, int k);

// Regularized lower incomplete gamma P(s, x) = gamma(s,x)/Gamma(s), s > 0,
// x >= 0.  Series for x < s+1, Lentz continued fraction otherwise; relative
// accuracy ~1e-14.
double regularized_lower_gamma(double s, double x);

// ln Gamma(1+n, y) for integer n >= 0, y >= 0 (upper incomplete gamma of
// integer shape), evaluated as a log-sum-exp over the finite Poisson tail so
// it stays finite for y far beyond the double underflow range.
double log_upper_gamma_int(int n, double y);

// Bessel J_n(x) for integer n >= 0.  Ascending series for |x| <= 8, Miller
// downward recurrence with normalization above; relative accuracy ~1e-12.
double bessel_j(int n, double x);

// Modified Bessel I_0(x), x >= 0, and its scaled variant e^{-x} I_0(x).
double bessel_i0(double x);
double bessel_i0_scaled(double x);

// Modified Bessel K_v(x) for integer v >= 0, x > 0, plus the scaled variant
// e^{x} K_v(x).  K_0/K_1 use an ascending series for x <= 2, a generated
// minimax polynomial in 1/x on (2,16), and the asymptotic series beyond;
// higher orders use the (stable) upward recurrence.  bessel_k can overflow
// for large v at small x; log_bessel_k_scaled carries the recurrence in log
// space and never does.
double bessel_k(int v, double x);
double bessel_k_scaled(int v, double x);
double log_bessel_k_scaled(int v, double x);  // ln(e^x K_v(x))

// First-order Marcum Q function Q_1(a, b), a, b >= 0, evaluated as the
// Poisson-weighted mixture of Erlang tail probabilities (the term-by-term
// rearrangement of the canonical I0-series definition; every term positive).
// Relative accuracy better than 1e-12.
double marcum_q1(double a, double b);

// Truncated Marcum approximation: sum_{r1=0}^{R1} chi_r1(a, R1) *
// Gamma(1+r1, b^2/2), where chi_r1 = Gamma(R1+r1) R1^{1-2 r1} a^{2 r1} 2^{-r1}
// / (Gamma(r1+1)^2 Gamma(R1-r1+1) e^{a^2/2}).  Converges to Q_1(a, b) as R1
// grows; R1 is chosen by callers as ceil(50 max(1, a, b)).
double marcum_q1_truncated(double a, double b, int big_r1);

// ln chi_r1(a, R1) for the truncated series above (also the coefficient set
// of the unified terrestrial fading series).  chi_0 = e^{-a^2/2} exactly.
double log_marcum_chi(int r1, double a, int big_r1);

}  // namespace hstn::sf

#endif  // HSTN_SPECFUN_HPP
