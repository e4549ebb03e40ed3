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

#ifndef HSTN_QUADRATURE_HPP
#define HSTN_QUADRATURE_HPP

#include <functional>
#include <initializer_list>
#include <vector>

namespace hstn::quad {

struct Result {
    double value = 0.0;
    double error_estimate = 0.0;
    long evaluations = 0;
    bool converged = false;
};

struct Options {
    double abs_tol = 1e-12;
    double rel_tol = 1e-10;
    int max_depth = 48;
};

using Fn = std::function<double(double)>;

// Adaptive integration of f over [a, b]: 15-point Gauss-Legendre panels with
// recursive bisection; a panel is accepted when whole vs sum-of-halves agree
// within the locally apportioned tolerance.
Result integrate(const Fn& f, double a, double b, const Options& opt = {});

// Same, but with interior breakpoints (piecewise-defined integrands put their
// seams here so no panel straddles a kink).
Result integrate_pieces(const Fn& f, const std::vector<double>& points,
                        const Options& opt = {});

// Integral of f over [a, inf): the tail beyond a+scale is folded to (0,1] with
// the substitution y = a + scale*(1-u)/u.  scale sets where resolution is
// spent; pick it near the integrand's decay scale.
Result integrate_to_inf(const Fn& f, double a, double scale, const Options& opt = {});

}  // namespace hstn::quad

#endif  // HSTN_QUADRATURE_HPP
