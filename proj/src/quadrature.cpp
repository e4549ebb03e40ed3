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

#include "hstn/quadrature.hpp"

#include <algorithm>
#include <cmath>

namespace hstn::quad {

namespace {

constexpr int kOrder = 15;

struct GaussRule {
    double node[kOrder];    // on [-1, 1]
    double weight[kOrder];
};

// Gauss-Legendre nodes/weights by Newton iteration on P_n; machine precision,
// no magic tables.
GaussRule make_rule()
{
    GaussRule r{};
    const int n = kOrder;
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
            }
            pp = n * (x * p0 - p1) / (x * x - 1.0);
            const double dx = p0 / pp;
            x -= dx;
            if (std::fabs(dx) < 1e-16)
                break;
        }
        r.node[i] = -x;
        r.node[n - 1 - i] = x;
        r.weight[i] = 2.0 / ((1.0 - x * x) * pp * pp);
        r.weight[n - 1 - i] = r.weight[i];
    }
    return r;
}

const GaussRule& rule()
{
    static const GaussRule r = make_rule();
    return r;
}

double panel(const Fn& f, double a, double b, long& evals)
{
    const GaussRule& r = rule();
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double s = 0.0;
    for (int i = 0; i < kOrder; ++i)
        s += r.weight[i] * f(mid + half * r.node[i]);
    evals += kOrder;
    return s * half;
}

struct Worker {
    const Fn& f;
    const Options& opt;
    long evals = 0;
    double err_sum = 0.0;
    bool ok = true;

    double refine(double a, double b, double whole, double tol, int depth)
    {
        const double mid = 0.5 * (a + b);
        const double left = panel(f, a, mid, evals);
        const double right = panel(f, mid, b, evals);
        const double diff = std::fabs(left + right - whole);
        if (diff <= tol || depth >= opt.max_depth) {
            if (diff > tol)
                ok = false;
            err_sum += diff;
            return left + right;
        }
        return refine(a, mid, left, 0.5 * tol, depth + 1) +
               refine(mid, b, right, 0.5 * tol, depth + 1);
    }
};

}  // namespace

Result integrate(const Fn& f, double a, double b, const Options& opt)
{
    Result res;
    if (!(a < b)) {
        res.converged = true;
        return res;
    }
    Worker w{f, opt};
    const double whole = panel(f, a, b, w.evals);
    // Tolerance: the coarse pass sets the magnitude scale for rel_tol.
    const double tol = std::max(opt.abs_tol, opt.rel_tol * std::fabs(whole));
    res.value = w.refine(a, b, whole, tol, 0);
    res.error_estimate = w.err_sum;
    res.evaluations = w.evals;
    res.converged = w.ok;
    return res;
}

Result integrate_pieces(const Fn& f, const std::vector<double>& points, const Options& opt)
{
    Result total;
    total.converged = true;
    for (size_t i = 0; i + 1 < points.size(); ++i) {
        const Result r = integrate(f, points[i], points[i + 1], opt);
        total.value += r.value;
        total.error_estimate += r.error_estimate;
        total.evaluations += r.evaluations;
        total.converged = total.converged && r.converged;
    }
    return total;
}

Result integrate_to_inf(const Fn& f, double a, double scale, const Options& opt)
{
    // y = a + scale (1-u)/u maps u in (0,1] to [a, inf); dy = -scale/u^2 du.
    const auto g = [&](double u) {
        const double y = a + scale * (1.0 - u) / u;
        return f(y) * scale / (u * u);
    };
    // u -> 0 is the far tail; start a hair above zero to dodge overflow in y.
    return integrate(g, 1e-9, 1.0, opt);
}

}  // namespace hstn::quad
