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

// End-to-end acceptance gate.  Each numbered check prints one PASS/FAIL line
// with its measured values; the process exits nonzero if any check fails.
// argv[1] must be the path to the hstn command-line binary, which several of
// the checks drive as a subprocess exactly the way a user would.

#include <cctype>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <string>
#include <vector>

#include "hstn/channel.hpp"
#include "hstn/linkbudget.hpp"
#include "hstn/mcsim.hpp"
#include "hstn/mobility.hpp"
#include "hstn/outage.hpp"
#include "hstn/quadrature.hpp"
#include "hstn/specfun.hpp"

using namespace hstn;
using namespace hstn::sf;

namespace {

int g_failures = 0;

void report(int num, const char* name, bool ok, const std::string& detail)
{
    std::printf("%s: %2d %-34s %s\n", ok ? "PASS" : "FAIL", num, name,
                detail.c_str());
    std::fflush(stdout);
    if (!ok)
        ++g_failures;
}

std::string fmt(const char* f, ...)
{
    char buf[512];
    va_list ap;
    va_start(ap, f);
    std::vsnprintf(buf, sizeof buf, f, ap);
    va_end(ap);
    return buf;
}

// Runs a command, captures combined stdout/stderr, returns exit status.
int run_capture(const std::string& cmd, std::string* out)
{
    out->clear();
    FILE* p = popen((cmd + " 2>&1").c_str(), "r");
    if (!p)
        return -1;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0)
        out->append(buf, n);
    return pclose(p);
}

// Pulls the first double following `key` in `text`; NaN when absent.
double scan_after(const std::string& text, const std::string& key)
{
    const auto pos = text.find(key);
    if (pos == std::string::npos)
        return std::nan("");
    return std::strtod(text.c_str() + pos + key.size(), nullptr);
}

std::string scan_token_after(const std::string& text, const std::string& key)
{
    const auto pos = text.find(key);
    if (pos == std::string::npos)
        return {};
    const auto start = pos + key.size();
    auto end = start;
    while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end])))
        ++end;
    return text.substr(start, end - start);
}

const SrFadingParams kHeavy{1, 0.063, 0.0007};
const SrFadingParams kAverage{5, 0.251, 0.279};
const SrFadingParams kLight{10, 0.158, 1.29};
const MobilityConfig kMob{};

OutageQuery make_q(double gamma, double eta_db, double kappa, int relays)
{
    OutageQuery q;
    q.relays = relays;
    q.gamma_th = gamma;
    q.eta_sat = q.eta_relay = db_to_linear(eta_db);
    q.hw = HardwareProfile{kappa, kappa};
    return q;
}

// Least-squares slope of log10(op) against decades of mean SNR.
double op_slope_db(const std::vector<double>& eta_db,
                   const std::vector<double>& op)
{
    const size_t n = eta_db.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (size_t i = 0; i < n; ++i) {
        const double x = eta_db[i] / 10.0;
        const double y = std::log10(op[i]);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

// ---------------------------------------------------------------------------

double parse_ceiling_db(const std::string& out)
{
    // "SNDR ceiling: <linear> (<db> dB)"
    const auto pos = out.find("SNDR ceiling:");
    if (pos == std::string::npos)
        return std::nan("");
    return scan_after(out.substr(pos), "(");
}

void check_1_ceiling_values(const std::string& cli)
{
    std::string out1, out2;
    run_capture(cli + " ceiling 0.1 0.1", &out1);
    run_capture(cli + " ceiling 0.3 0.3", &out2);
    const double db1 = parse_ceiling_db(out1);
    const double db2 = parse_ceiling_db(out2);
    const bool ok = std::fabs(db1 - 16.9) < 0.1 && std::fabs(db2 - 7.23) < 0.1;
    report(1, "distortion ceiling values", ok,
           fmt("kappa 0.1 -> %.4f dB (ref 16.9), kappa 0.3 -> %.4f dB (ref 7.23)",
               db1, db2));
}

void check_2_ceiling_wall()
{
    const auto fading = TerrestrialFading::nakagami(1);
    const auto above = op_exact(make_q(db_to_linear(7.3), 50.0, 0.3, 1), kHeavy,
                                fading, kMob);
    const auto below = op_exact(make_q(db_to_linear(7.0), 50.0, 0.3, 1), kHeavy,
                                fading, kMob);
    const bool ok = above.value == 1.0 && above.status == OpStatus::ceiling &&
                    below.status == OpStatus::ok && below.value < 1.0;
    report(2, "outage wall at the ceiling", ok,
           fmt("op(7.3 dB) = %.12g [%s], op(7.0 dB) = %.12g [%s]", above.value,
               to_string(above.status).c_str(), below.value,
               to_string(below.status).c_str()));
}

void check_3_triple_agreement()
{
    bool ok = true;
    std::string worst;
    double worst_gap = 0.0, worst_z = 0.0;
    for (double eta_db : {10.0, 20.0, 30.0}) {
        for (int relays : {1, 3}) {
            for (int rice = 0; rice < 2; ++rice) {
                const auto fading = rice ? TerrestrialFading::rician(2.0)
                                         : TerrestrialFading::nakagami(1);
                const auto q = make_q(1.0, eta_db, 0.3, relays);
                const double ex = op_exact(q, kHeavy, fading, kMob).value;
                const double nu = op_numeric(q, kHeavy, fading, kMob).value;
                const double gap = std::fabs(ex - nu) / ex;
                const double gap_tol = rice ? 1e-2 : 1e-3;
                if (gap > worst_gap)
                    worst_gap = gap;
                if (gap > gap_tol)
                    ok = false;

                SimPlan plan;
                plan.trials = 10000000;
                plan.seed = 11;
                plan.query = q;
                plan.sat_fading = kHeavy;
                plan.relay_fading = fading;
                plan.mobility = kMob;
                plan.workers = 1;
                const auto est = estimate_outage(plan);
                const double se = std::max(est.std_err, 1e-12);
                const double z = std::fabs(est.p_hat - ex) / se;
                if (z > worst_z) {
                    worst_z = z;
                    worst = fmt("eta %.0f dB M=%d %s", eta_db, relays,
                                rice ? "rice" : "nak");
                }
                if (z > 3.0)
                    ok = false;
            }
        }
    }
    report(3, "closed form = quadrature = MC", ok,
           fmt("worst exact/numeric gap %.2e, worst MC z-score %.2f (%s, 1e7 "
               "trials each)",
               worst_gap, worst_z, worst.c_str()));
}

void check_4_diversity_order()
{
    bool ok = true;
    std::string detail;
    const std::vector<double> grid{40, 45, 50, 55, 60};
    for (int relays : {1, 2, 3}) {
        for (int rice = 0; rice < 2; ++rice) {
            const auto fading = rice ? TerrestrialFading::rician(2.0)
                                     : TerrestrialFading::nakagami(2);
            std::vector<double> ops;
            for (double e : grid)
                ops.push_back(
                    op_asymptotic(make_q(1.0, e, 0.3, relays), kHeavy, fading, kMob)
                        .value);
            const double slope = op_slope_db(grid, ops);
            if (std::fabs(slope + relays) > 0.05 * relays)
                ok = false;
            if (relays == 3)
                detail += fmt("%sM3 %s slope %.4f", detail.empty() ? "" : ", ",
                              rice ? "rice" : "nak", slope);
        }
    }
    report(4, "high-SNR slope equals -M", ok, detail + " (M in {1,2,3}, both families)");
}

void check_5_family_invariant_slope()
{
    const std::vector<double> grid{40, 45, 50, 55, 60};
    std::vector<double> slopes;
    for (const auto& fading :
         {TerrestrialFading::nakagami(1), TerrestrialFading::nakagami(3),
          TerrestrialFading::rician(0.0), TerrestrialFading::rician(2.0)}) {
        std::vector<double> ops;
        for (double e : grid)
            ops.push_back(
                op_asymptotic(make_q(1.0, e, 0.3, 1), kHeavy, fading, kMob).value);
        slopes.push_back(op_slope_db(grid, ops));
    }
    double lo = slopes[0], hi = slopes[0];
    for (double s : slopes) {
        lo = std::min(lo, s);
        hi = std::max(hi, s);
    }
    const bool ok = (hi - lo) / std::fabs(hi) < 0.05;

    // The exact curves converge to the same slope further out; shown for
    // context, not gated (the finite-SNR transition is physical).
    const std::vector<double> far{70, 80, 90};
    std::string extra;
    for (const auto& fading :
         {TerrestrialFading::nakagami(1), TerrestrialFading::nakagami(3)}) {
        std::vector<double> ops;
        for (double e : far)
            ops.push_back(op_exact(make_q(1.0, e, 0.3, 1), kHeavy, fading, kMob).value);
        extra += fmt(" %.3f", op_slope_db(far, ops));
    }
    report(5, "slope independent of relay fading", ok,
           fmt("asymptote slopes m=1/m=3/K=0/K=2: %.4f %.4f %.4f %.4f; exact "
               "70-90 dB:%s",
               slopes[0], slopes[1], slopes[2], slopes[3], extra.c_str()));
}

void check_6_impairment_ordering()
{
    bool ok = true;
    double min_margin = 1e300;
    for (int relays : {1, 3}) {
        for (double e = 0.0; e <= 60.0; e += 5.0) {
            const auto fading = TerrestrialFading::nakagami(1);
            const double ideal =
                op_exact(make_q(1.0, e, 0.0, relays), kHeavy, fading, kMob).value;
            const double rough =
                op_exact(make_q(1.0, e, 0.3, relays), kHeavy, fading, kMob).value;
            min_margin = std::min(min_margin, rough - ideal);
            if (rough < ideal)
                ok = false;
        }
    }
    report(6, "impairments never help", ok,
           fmt("min op(k=0.3) - op(k=0) over 26 grid points = %.3e", min_margin));
}

void check_7_shadowing_bottleneck()
{
    const auto rice = TerrestrialFading::rician(2.0);
    std::vector<double> rv;
    for (const auto& sr : {kHeavy, kAverage, kLight})
        rv.push_back(op_asymptotic(make_q(1.0, 50.0, 0.3, 1), sr, rice, kMob).value);
    double lo = rv[0], hi = rv[0];
    for (double v : rv) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    const double spread = (hi - lo) / lo;

    const auto nak3 = TerrestrialFading::nakagami(3);
    const double nh =
        op_asymptotic(make_q(1.0, 50.0, 0.3, 1), kHeavy, nak3, kMob).value;
    const double nl =
        op_asymptotic(make_q(1.0, 50.0, 0.3, 1), kLight, nak3, kMob).value;
    const double ratio = nh / nl;

    const bool ok = spread < 0.15 && ratio > 2.0;
    report(7, "relay-limited shadowing bottleneck", ok,
           fmt("rician spread %.2f%% (<15%%), nakagami heavy/light ratio %.1fx "
               "(>2x) at 50 dB",
               100.0 * spread, ratio));
}

void check_8_mobility_laws(const std::string& cli, const std::string& scratch)
{
    std::string out;
    run_capture(cli + " mobility-check --samples 1000000 --seed 1 --out " +
                    scratch + "/mobility.csv",
                &out);
    double d_snap = std::nan(""), d_traj = std::nan("");
    const auto pos = out.find("L1 distance");
    if (pos != std::string::npos) {
        const std::string line = out.substr(pos, out.find('\n', pos) - pos);
        d_snap = scan_after(line, "snapshot=");
        d_traj = scan_after(line, "trajectory=");
    }

    auto norm = quad::integrate_pieces(
        [&](double w) { return distance_pdf(w, kMob); },
        {0.0, kMob.height, kMob.radius, max_distance(kMob)});
    const bool ok = d_snap < 0.05 && d_traj < 0.05 &&
                    std::fabs(norm.value - 1.0) < 1e-8;
    report(8, "sampled mobility matches its law", ok,
           fmt("distance L1: snapshot %.4f, trajectory %.4f (<0.05); pdf "
               "normalization |1-%.10f| < 1e-8",
               d_snap, d_traj, norm.value));
}

void check_9_family_unification()
{
    bool ok = true;
    double worst = 0.0;
    for (double e = 0.0; e <= 60.0; e += 5.0) {
        const double nak =
            op_exact(make_q(1.0, e, 0.3, 1), kHeavy, TerrestrialFading::nakagami(1),
                     kMob)
                .value;
        const double ric =
            op_exact(make_q(1.0, e, 0.3, 1), kHeavy,
                     TerrestrialFading::rician(0.0), kMob)
                .value;
        const double gap = std::fabs(nak - ric) / nak;
        worst = std::max(worst, gap);
        if (gap > 1e-3)
            ok = false;
    }
    report(9, "Rician K=0 collapses to Rayleigh", ok,
           fmt("max relative gap %.2e over the 13-point sweep (<1e-3)", worst));
}

void check_10_worker_determinism(const std::string& cli, const std::string& scratch)
{
    std::string out1, out4;
    const int rc1 = run_capture(
        cli + " reproduce fig1 --out " + scratch + "/rep1 --workers 1", &out1);
    const int rc4 = run_capture(
        cli + " reproduce fig1 --out " + scratch + "/rep4 --workers 4", &out4);
    const std::string h1 = scan_token_after(out1, "determinism_hash=");
    const std::string h4 = scan_token_after(out4, "determinism_hash=");
    const bool ok = rc1 == 0 && rc4 == 0 && !h1.empty() && h1 == h4;
    report(10, "hash stable across worker counts", ok,
           fmt("1 worker: %s, 4 workers: %s", h1.c_str(), h4.c_str()));
}

void check_11_special_function_suite()
{
    double marcum_worst = 0.0;
    for (double a : {0.5, 1.0, 2.0, 3.0})
        for (double b : {0.5, 1.0, 2.0, 4.0, 8.0})
            marcum_worst = std::max(
                marcum_worst,
                std::fabs(marcum_q1_truncated(a, b, 100) - marcum_q1(a, b)));

    double bessel_worst = 0.0;
    for (double x : {0.7, 3.7, 12.3})
        for (int n = 1; n <= 6; ++n) {
            const double lhs = bessel_j(n - 1, x) + bessel_j(n + 1, x);
            const double rhs = 2.0 * n / x * bessel_j(n, x);
            bessel_worst = std::max(
                bessel_worst, std::fabs(lhs - rhs) /
                                  std::max({std::fabs(lhs), std::fabs(rhs), 1e-30}));
        }

    double gamma_worst = 0.0;
    for (int n = 1; n <= 8; ++n)
        for (double x : {0.3, 2.0, 9.5}) {
            const double p = regularized_lower_gamma(n, x);
            const double q =
                std::exp(log_upper_gamma_int(n - 1, x) - std::lgamma(n));
            gamma_worst = std::max(gamma_worst, std::fabs(p + q - 1.0));
        }

    const bool ok = marcum_worst < 1e-2 && bessel_worst < 1e-8 &&
                    gamma_worst < 1e-12;
    report(11, "special-function cross-identities", ok,
           fmt("truncated-Marcum err %.2e (<1e-2), recurrence err %.2e (<1e-8), "
               "gamma complement err %.2e (<1e-12)",
               marcum_worst, bessel_worst, gamma_worst));
}

}  // namespace

int main(int argc, char** argv)
{
    if (argc < 2) {
        std::fprintf(stderr, "usage: %s <path-to-hstn-cli>\n", argv[0]);
        return 2;
    }
    const std::string cli = argv[1];

    std::error_code ec;
    const auto scratch_path =
        std::filesystem::temp_directory_path(ec) / "hstn_acceptance";
    std::filesystem::create_directories(scratch_path, ec);
    const std::string scratch = scratch_path.string();

    check_1_ceiling_values(cli);
    check_2_ceiling_wall();
    check_3_triple_agreement();
    check_4_diversity_order();
    check_5_family_invariant_slope();
    check_6_impairment_ordering();
    check_7_shadowing_bottleneck();
    check_8_mobility_laws(cli, scratch);
    check_9_family_unification();
    check_10_worker_determinism(cli, scratch);
    check_11_special_function_suite();

    std::printf("%d of 11 checks passed\n", 11 - g_failures);
    return g_failures == 0 ? 0 : 1;
}
