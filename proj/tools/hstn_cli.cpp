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

// Command-line front end.  Subcommands: sweep, mobility-check, ceiling, plot,
// reproduce <fig1|fig2|fig3>.  Exit codes: 0 success, 1 configuration or
// input error, 2 numerical failure at every sweep point, 3 I/O error.

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "hstn/linkbudget.hpp"
#include "hstn/mcsim.hpp"
#include "hstn/mobility.hpp"
#include "hstn/outage.hpp"
#include "hstn/simd/philox.hpp"

#include "csvio.hpp"
#include "runconfig.hpp"
#include "svgplot.hpp"

#ifndef HSTN_DEFAULT_CONFIG_DIR
#define HSTN_DEFAULT_CONFIG_DIR "configs"
#endif

namespace {

using namespace hstn;
using namespace hstn::cli;

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void write_file(const std::string& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw IoError(path + ": cannot open for writing");
    out << text;
    out.flush();
    if (!out)
        throw IoError(path + ": write failed");
}

int resolve_workers(int flag_value)
{
    if (flag_value > 0)
        return flag_value;
    if (const char* env = std::getenv("HSTN_WORKERS")) {
        const int v = std::atoi(env);
        if (v > 0)
            return v;
    }
    return 1;
}

bool failed_row(const SweepRow& r)
{
    return r.status == "out_of_range" || r.status == "no_convergence" ||
           r.status == "error";
}

// ---------------------------------------------------------------------------
// sweep

struct Job {
    size_t scenario = 0;
    double x_db = 0.0;
    Method method = Method::exact;
};

SweepRow compute_row(const ExperimentConfig& cfg, const Job& job)
{
    const ScenarioConfig& s = cfg.scenarios[job.scenario];
    SweepRow row;
    row.scenario = s.name;
    row.method = method_name(job.method);
    row.x_axis_name = cfg.sweep.axis_name();
    row.x_value_db = job.x_db;

    OutageQuery q;
    q.relays = s.relays;
    q.hw = HardwareProfile{s.kappa_sat, s.kappa_relay};
    const double gamma_db = cfg.sweep.gamma_axis ? job.x_db : s.gamma_th_db;
    const double eta_db = cfg.sweep.gamma_axis ? s.eta_db : job.x_db;
    q.gamma_th = db_to_linear(gamma_db);
    q.eta_sat = q.eta_relay = db_to_linear(eta_db);

    const auto t0 = std::chrono::steady_clock::now();
    try {
        if (job.method == Method::montecarlo) {
            SimPlan plan;
            plan.trials = cfg.trials;
            plan.seed = cfg.seed;
            plan.query = q;
            plan.sat_fading = s.sat_fading;
            plan.relay_fading = s.relay_fading;
            plan.mobility = cfg.mobility;
            plan.path_loss_exp = cfg.path_loss_exp;
            plan.workers = 1;  // sweep-level pool provides the parallelism
            const OutageEstimate est = estimate_outage(plan);
            row.op_value = est.p_hat;
            row.has_std_err = true;
            row.std_err = est.std_err;
            row.has_trials = true;
            row.trials = est.trials;
            row.status = est.trials_capped ? "trials_capped" : "ok";
        } else {
            OpResult r;
            if (job.method == Method::exact)
                r = op_exact(q, s.sat_fading, s.relay_fading, cfg.mobility,
                             cfg.path_loss_exp);
            else if (job.method == Method::asymptotic)
                r = op_asymptotic(q, s.sat_fading, s.relay_fading, cfg.mobility,
                                  cfg.path_loss_exp);
            else
                r = op_numeric(q, s.sat_fading, s.relay_fading, cfg.mobility,
                               cfg.path_loss_exp);
            row.op_value = r.value;
            row.status = to_string(r.status);
        }
    } catch (const std::exception& e) {
        row.op_value = std::nan("");
        row.status = "error";
        std::fprintf(stderr, "warning: %s %s at %s=%g failed: %s\n",
                     row.scenario.c_str(), row.method.c_str(),
                     row.x_axis_name.c_str(), row.x_value_db, e.what());
    }
    const auto t1 = std::chrono::steady_clock::now();
    row.wall_time_ms =
        std::chrono::duration_cast<std::chrono::duration<double, std::milli>>(t1 - t0)
            .count();
    return row;
}

std::vector<SweepRow> run_sweep_rows(const ExperimentConfig& cfg, int workers)
{
    std::vector<Job> jobs;
    const std::vector<double> xs = cfg.sweep.points();
    for (size_t si = 0; si < cfg.scenarios.size(); ++si)
        for (double x : xs)
            for (Method m : cfg.methods)
                jobs.push_back(Job{si, x, m});

    std::vector<SweepRow> rows(jobs.size());
    std::atomic<size_t> next{0};
    auto work = [&] {
        for (size_t i; (i = next.fetch_add(1)) < jobs.size();)
            rows[i] = compute_row(cfg, jobs[i]);
    };
    const size_t nthreads =
        std::min<size_t>(static_cast<size_t>(workers), jobs.size());
    if (nthreads <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(nthreads);
        for (size_t t = 0; t < nthreads; ++t)
            pool.emplace_back(work);
        for (auto& th : pool)
            th.join();
    }
    return rows;
}

// Returns the process exit code for a finished row set.
int finish_sweep(const std::vector<SweepRow>& rows, const std::string& out_path)
{
    write_file(out_path, format_sweep_csv(rows));
    size_t failed = 0;
    for (const SweepRow& r : rows)
        if (failed_row(r))
            ++failed;
    std::printf("wrote %s (%zu rows, %zu failed)\n", out_path.c_str(), rows.size(),
                failed);
    std::printf("determinism_hash=%s\n", hash_hex(determinism_hash(rows)).c_str());
    if (!rows.empty() && failed == rows.size()) {
        std::fprintf(stderr, "error: every sweep point failed numerically\n");
        return 2;
    }
    return 0;
}

// ---------------------------------------------------------------------------
// mobility-check

struct Hist {
    double lo = 0.0, hi = 1.0;
    std::vector<double> count;
    Hist(double l, double h, int n) : lo(l), hi(h), count(static_cast<size_t>(n), 0.0)
    {
    }
    void add(double x)
    {
        auto i = static_cast<long>((x - lo) / (hi - lo) *
                                   static_cast<double>(count.size()));
        if (i < 0)
            i = 0;
        if (i >= static_cast<long>(count.size()))
            i = static_cast<long>(count.size()) - 1;
        count[static_cast<size_t>(i)] += 1.0;
    }
};

// L1 distance between the histogram density and pdf, and the table rows.
template <class Pdf>
double emit_hist(std::string& csv, const char* table, const char* source,
                 const Hist& h, double n, Pdf pdf)
{
    const double w = (h.hi - h.lo) / static_cast<double>(h.count.size());
    double l1 = 0.0;
    for (size_t i = 0; i < h.count.size(); ++i) {
        const double mid = h.lo + (static_cast<double>(i) + 0.5) * w;
        const double dens = h.count[i] / (n * w);
        const double ana = pdf(mid);
        l1 += std::fabs(dens - ana) * w;
        char buf[256];
        std::snprintf(buf, sizeof buf, "%s,%s,%.10g,%.10g,%.0f,%.8g,%.8g\n", table,
                      source, h.lo + static_cast<double>(i) * w,
                      h.lo + static_cast<double>(i + 1) * w, h.count[i], dens, ana);
        csv += buf;
    }
    return l1;
}

int cmd_mobility_check(const MobilityConfig& mob, std::uint64_t samples,
                       std::uint64_t seed, const std::string& out_path)
{
    const int nbins = 40;
    const double h_top = mob.height, r_top = mob.radius, w_top = max_distance(mob);

    Hist sa(0, h_top, nbins), sh(0, r_top, nbins), sd(0, w_top, nbins);
    simd::TrialUniforms uni(seed, 0);
    for (std::uint64_t i = 0; i < samples; ++i) {
        const double um = uni.next(), ua = uni.next(), uh = uni.next();
        const double alt = (um < mob.stay_prob())
                               ? ua * mob.height
                               : mobile_altitude_quantile(ua, mob.height);
        const double ground = mob.radius * std::sqrt(uh);
        sa.add(alt);
        sh.add(ground);
        sd.add(std::sqrt(alt * alt + ground * ground));
    }

    // Time-averaged trajectory at a quarter-second step after burn-in; the
    // stationary laws are time averages, so fine steps reduce the phase
    // quantization at epoch boundaries.
    Hist ta(0, h_top, nbins), th(0, r_top, nbins), td(0, w_top, nbins);
    TrajectorySimulator sim(mob, seed, 0.5);
    for (int i = 0; i < 20000; ++i)
        sim.step();
    for (std::uint64_t i = 0; i < samples; ++i) {
        sim.step();
        ta.add(sim.altitude());
        th.add(sim.ground_offset());
        td.add(sim.distance());
    }

    std::string csv;
    csv += "# hstn-mobility-csv v1\n";
    csv += "table,source,bin_lo,bin_hi,count,density,analytic_density\n";
    const double n = static_cast<double>(samples);
    auto apdf = [&](double x) { return altitude_pdf(x, mob); };
    auto hpdf = [&](double z) { return horizontal_pdf(z, mob); };
    auto dpdf = [&](double w) { return distance_pdf(w, mob); };
    const double l1_alt_s = emit_hist(csv, "altitude", "snapshot", sa, n, apdf);
    const double l1_alt_t = emit_hist(csv, "altitude", "trajectory", ta, n, apdf);
    const double l1_hor_s = emit_hist(csv, "horizontal", "snapshot", sh, n, hpdf);
    const double l1_hor_t = emit_hist(csv, "horizontal", "trajectory", th, n, hpdf);
    const double l1_dis_s = emit_hist(csv, "distance", "snapshot", sd, n, dpdf);
    const double l1_dis_t = emit_hist(csv, "distance", "trajectory", td, n, dpdf);
    write_file(out_path, csv);

    std::printf("stay_prob=%.6f mean_move_time=%.6f s mean_dwell_time=%.6f s "
                "max_distance=%.6f m\n",
                mob.stay_prob(), mob.mean_move_time(), mob.mean_dwell_time(),
                max_distance(mob));
    std::printf("L1 altitude   snapshot=%.4f trajectory=%.4f\n", l1_alt_s, l1_alt_t);
    std::printf("L1 horizontal snapshot=%.4f trajectory=%.4f\n", l1_hor_s, l1_hor_t);
    std::printf("L1 distance   snapshot=%.4f trajectory=%.4f\n", l1_dis_s, l1_dis_t);
    std::printf("wrote %s\n", out_path.c_str());
    return 0;
}

// ---------------------------------------------------------------------------
// ceiling

int cmd_ceiling(double kappa_sat, double kappa_relay)
{
    const HardwareProfile hw{kappa_sat, kappa_relay};
    std::printf("kappa_sat=%g kappa_relay=%g\n", kappa_sat, kappa_relay);
    std::printf("lambda1 (distortion product)  = %.9g\n", hw.prod_coeff());
    std::printf("lambda2 (satellite-side 1+k^2) = %.9g\n", hw.sat_coeff());
    std::printf("lambda3 (relay-side 1+k^2)     = %.9g\n", hw.relay_coeff());
    if (hw.prod_coeff() <= 0.0) {
        std::printf("SNDR ceiling: infinite (no ceiling)\n");
    } else {
        std::printf("SNDR ceiling: %.9g (%.6f dB)\n", hw.ceiling_linear(),
                    hw.ceiling_db());
        std::printf("thresholds at or above the ceiling force outage "
                    "probability 1\n");
    }
    return 0;
}

}  // namespace

// ---------------------------------------------------------------------------

int main(int argc, char** argv)
{
    CLI::App app{"outage analysis for UAV-relayed hybrid satellite-terrestrial "
                 "networks"};
    app.require_subcommand(1);

    // --- sweep ---------------------------------------------------------------
    auto* sweep = app.add_subcommand("sweep", "run a config-driven sweep, write CSV");
    std::string sw_config, sw_out = "sweep.csv";
    std::uint64_t sw_seed = 0, sw_trials = 0;
    int sw_workers = 0;
    sweep->add_option("--config", sw_config, "experiment config (JSON)")->required();
    sweep->add_option("--out", sw_out, "output CSV path");
    auto* sw_seed_opt = sweep->add_option("--seed", sw_seed, "override config seed");
    auto* sw_trials_opt =
        sweep->add_option("--trials", sw_trials, "override Monte Carlo trials");
    sweep->add_option("--workers", sw_workers,
                      "worker threads (default: HSTN_WORKERS env or 1)");

    // --- mobility-check -------------------------------------------------------
    auto* mob = app.add_subcommand(
        "mobility-check", "compare samplers against the analytic mobility laws");
    std::string mb_config, mb_out = "mobility.csv";
    std::uint64_t mb_samples = 1000000, mb_seed = 1;
    mob->add_option("--config", mb_config,
                    "config with a mobility section (default: built-in geometry)");
    mob->add_option("--samples", mb_samples, "sample count per table");
    mob->add_option("--seed", mb_seed, "sampler seed");
    mob->add_option("--out", mb_out, "output CSV path");

    // --- ceiling ---------------------------------------------------------------
    auto* ceil_cmd =
        app.add_subcommand("ceiling", "print the impairment-imposed SNDR ceiling");
    double ce_ks = 0.0, ce_ku = 0.0;
    ceil_cmd->add_option("kappa_sat", ce_ks, "satellite-hop impairment level")
        ->required();
    ceil_cmd->add_option("kappa_relay", ce_ku, "relay-hop impairment level")
        ->required();

    // --- plot -------------------------------------------------------------------
    auto* plot = app.add_subcommand("plot", "render a sweep CSV as an SVG chart");
    std::string pl_in, pl_out = "sweep.svg", pl_title = "outage sweep";
    plot->add_option("csv", pl_in, "input CSV from the sweep command")->required();
    plot->add_option("--out", pl_out, "output SVG path");
    plot->add_option("--title", pl_title, "chart title");

    // --- reproduce ---------------------------------------------------------------
    auto* rep = app.add_subcommand("reproduce",
                                   "run a shipped figure recipe end to end");
    std::string rp_fig, rp_config, rp_out = "out";
    std::uint64_t rp_seed = 0, rp_trials = 0;
    int rp_workers = 0;
    rep->add_option("figure", rp_fig, "fig1 | fig2 | fig3")->required();
    rep->add_option("--config", rp_config, "override the shipped recipe path");
    rep->add_option("--out", rp_out, "output directory");
    auto* rp_seed_opt = rep->add_option("--seed", rp_seed, "override config seed");
    auto* rp_trials_opt =
        rep->add_option("--trials", rp_trials, "override Monte Carlo trials");
    rep->add_option("--workers", rp_workers,
                    "worker threads (default: HSTN_WORKERS env or 1)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        if (sweep->parsed()) {
            ExperimentConfig cfg = parse_experiment_config_file(sw_config);
            if (sw_seed_opt->count())
                cfg.seed = sw_seed;
            if (sw_trials_opt->count())
                cfg.trials = sw_trials;
            const auto rows = run_sweep_rows(cfg, resolve_workers(sw_workers));
            return finish_sweep(rows, sw_out);
        }
        if (mob->parsed()) {
            if (mb_samples == 0) {
                std::fprintf(stderr, "error: --samples must be > 0\n");
                return 1;
            }
            const MobilityConfig m = mb_config.empty()
                                         ? MobilityConfig{}
                                         : parse_mobility_config_file(mb_config);
            return cmd_mobility_check(m, mb_samples, mb_seed, mb_out);
        }
        if (ceil_cmd->parsed()) {
            if (ce_ks < 0.0 || ce_ku < 0.0) {
                std::fprintf(stderr, "error: impairment levels must be >= 0\n");
                return 1;
            }
            return cmd_ceiling(ce_ks, ce_ku);
        }
        if (plot->parsed()) {
            const auto rows = read_sweep_csv(pl_in);
            PlotOptions po;
            po.title = pl_title;
            write_file(pl_out, render_sweep_svg(rows, po));
            std::printf("wrote %s\n", pl_out.c_str());
            return 0;
        }
        if (rep->parsed()) {
            if (rp_fig != "fig1" && rp_fig != "fig2" && rp_fig != "fig3") {
                std::fprintf(stderr, "error: figure must be fig1, fig2, or fig3\n");
                return 1;
            }
            const std::string cfg_path =
                rp_config.empty() ? std::string(HSTN_DEFAULT_CONFIG_DIR) + "/" +
                                        rp_fig + ".json"
                                  : rp_config;
            ExperimentConfig cfg = parse_experiment_config_file(cfg_path);
            if (rp_seed_opt->count())
                cfg.seed = rp_seed;
            if (rp_trials_opt->count())
                cfg.trials = rp_trials;
            std::error_code ec;
            std::filesystem::create_directories(rp_out, ec);
            if (ec)
                throw IoError(rp_out + ": cannot create output directory (" +
                              ec.message() + ")");
            const auto rows = run_sweep_rows(cfg, resolve_workers(rp_workers));
            const int rc = finish_sweep(rows, rp_out + "/" + rp_fig + ".csv");
            PlotOptions po;
            po.title = rp_fig;
            write_file(rp_out + "/" + rp_fig + ".svg", render_sweep_svg(rows, po));
            std::printf("wrote %s/%s.svg\n", rp_out.c_str(), rp_fig.c_str());
            return rc;
        }
    } catch (const ConfigError& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return 1;
    } catch (const CsvError& e) {
        std::fprintf(stderr, "input error: %s\n", e.what());
        return 1;
    } catch (const IoError& e) {
        std::fprintf(stderr, "i/o error: %s\n", e.what());
        return 3;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
