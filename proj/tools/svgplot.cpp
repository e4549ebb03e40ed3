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

#include "svgplot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>

namespace hstn::cli {

namespace {

constexpr double kW = 980, kH = 640;
constexpr double kPlotL = 72, kPlotR = 700, kPlotT = 48, kPlotB = 560;

const char* kPalette[8] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                           "#ff7f0e", "#17becf", "#8c564b", "#e377c2"};

bool failed_status(const std::string& s)
{
    return s == "out_of_range" || s == "no_convergence" || s == "error";
}

std::string f2(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string gnum(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

std::string esc(const std::string& s)
{
    std::string o;
    for (char c : s) {
        if (c == '&') o += "&amp;";
        else if (c == '<') o += "&lt;";
        else if (c == '>') o += "&gt;";
        else o += c;
    }
    return o;
}

struct Series {
    std::string scenario, method;
    int color_idx = 0;
    std::vector<const SweepRow*> pts;
};

// Choose a tick step of the form {1,2,5} * 10^k giving at most 8 intervals.
double nice_step(double range)
{
    if (!(range > 0.0))
        return 1.0;
    const double raw = range / 8.0;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    for (double m : {1.0, 2.0, 5.0, 10.0}) {
        if (m * mag >= raw)
            return m * mag;
    }
    return 10.0 * mag;
}

std::string axis_label(const std::string& axis)
{
    if (axis == "eta_db")
        return "average SNR [dB]";
    if (axis == "gamma_th_db")
        return "SNDR threshold [dB]";
    return axis;
}

}  // namespace

std::string render_sweep_svg(const std::vector<SweepRow>& rows, const PlotOptions& opt)
{
    // --- partition rows into drawable series and the omission tally --------
    std::vector<Series> series;
    std::vector<std::string> scen_order;
    std::map<std::string, int> omitted;
    std::string axis_name;

    for (const SweepRow& r : rows) {
        if (failed_status(r.status)) {
            ++omitted["status=" + r.status];
            continue;
        }
        if (!(r.op_value > 0.0) || !std::isfinite(r.op_value)) {
            ++omitted["non-positive op"];
            continue;
        }
        if (axis_name.empty())
            axis_name = r.x_axis_name;
        auto it = std::find_if(series.begin(), series.end(), [&](const Series& s) {
            return s.scenario == r.scenario && s.method == r.method;
        });
        if (it == series.end()) {
            Series s;
            s.scenario = r.scenario;
            s.method = r.method;
            auto sit = std::find(scen_order.begin(), scen_order.end(), r.scenario);
            if (sit == scen_order.end()) {
                scen_order.push_back(r.scenario);
                sit = scen_order.end() - 1;
            }
            s.color_idx = static_cast<int>((sit - scen_order.begin()) % 8);
            series.push_back(std::move(s));
            it = series.end() - 1;
        }
        it->pts.push_back(&r);
    }
    for (Series& s : series)
        std::sort(s.pts.begin(), s.pts.end(),
                  [](const SweepRow* a, const SweepRow* b) {
                      return a->x_value_db < b->x_value_db;
                  });

    // --- ranges -------------------------------------------------------------
    double xmin = 0, xmax = 1, opmin = 1;
    bool any = false;
    for (const Series& s : series)
        for (const SweepRow* p : s.pts) {
            if (!any) {
                xmin = xmax = p->x_value_db;
                any = true;
            }
            xmin = std::min(xmin, p->x_value_db);
            xmax = std::max(xmax, p->x_value_db);
            opmin = std::min(opmin, p->op_value);
        }
    if (xmax == xmin) {
        xmin -= 1;
        xmax += 1;
    }
    double ylo = std::floor(std::log10(std::max(opmin, 1e-12)));
    if (ylo > -1)
        ylo = -1;

    auto xmap = [&](double x) {
        return kPlotL + (x - xmin) / (xmax - xmin) * (kPlotR - kPlotL);
    };
    auto ymap = [&](double op) {
        const double l = std::max(std::log10(op), ylo);
        return kPlotB - (l - ylo) / (0.0 - ylo) * (kPlotB - kPlotT);
    };

    // --- document -----------------------------------------------------------
    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + gnum(kW) +
           "\" height=\"" + gnum(kH) + "\" viewBox=\"0 0 " + gnum(kW) + " " +
           gnum(kH) + "\">\n";
    svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    svg += "<text x=\"" + f2((kPlotL + kPlotR) / 2) +
           "\" y=\"26\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"17\" fill=\"#222\">" +
           esc(opt.title) + "</text>\n";

    // gridlines + ticks
    const double xstep = nice_step(xmax - xmin);
    const double x0 = std::ceil(xmin / xstep) * xstep;
    for (double x = x0; x <= xmax + 1e-9 * xstep; x += xstep) {
        const double px = xmap(x);
        svg += "<line x1=\"" + f2(px) + "\" y1=\"" + f2(kPlotT) + "\" x2=\"" + f2(px) +
               "\" y2=\"" + f2(kPlotB) + "\" stroke=\"#e0e0e0\" stroke-width=\"1\"/>\n";
        svg += "<text x=\"" + f2(px) + "\" y=\"" + f2(kPlotB + 20) +
               "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\" "
               "fill=\"#333\">" +
               gnum(x) + "</text>\n";
    }
    for (int k = static_cast<int>(ylo); k <= 0; ++k) {
        const double py = ymap(std::pow(10.0, k));
        svg += "<line x1=\"" + f2(kPlotL) + "\" y1=\"" + f2(py) + "\" x2=\"" +
               f2(kPlotR) + "\" y2=\"" + f2(py) +
               "\" stroke=\"#e0e0e0\" stroke-width=\"1\"/>\n";
        svg += "<text x=\"" + f2(kPlotL - 8) + "\" y=\"" + f2(py + 4) +
               "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"12\" "
               "fill=\"#333\">1e" +
               std::to_string(k) + "</text>\n";
    }
    // frame + axis labels
    svg += "<rect x=\"" + f2(kPlotL) + "\" y=\"" + f2(kPlotT) + "\" width=\"" +
           f2(kPlotR - kPlotL) + "\" height=\"" + f2(kPlotB - kPlotT) +
           "\" fill=\"none\" stroke=\"#444\" stroke-width=\"1.2\"/>\n";
    svg += "<text x=\"" + f2((kPlotL + kPlotR) / 2) + "\" y=\"" + f2(kPlotB + 44) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\" "
           "fill=\"#222\">" +
           esc(axis_label(axis_name.empty() ? "x" : axis_name)) + "</text>\n";
    svg += "<text x=\"20\" y=\"" + f2((kPlotT + kPlotB) / 2) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\" "
           "fill=\"#222\" transform=\"rotate(-90 20 " +
           f2((kPlotT + kPlotB) / 2) + ")\">outage probability</text>\n";

    // --- series -------------------------------------------------------------
    for (const Series& s : series) {
        const char* color = kPalette[s.color_idx];
        const bool markers = s.method == "montecarlo";
        std::string dash;
        if (s.method == "asymptotic")
            dash = " stroke-dasharray=\"9,6\"";
        else if (s.method == "numeric")
            dash = " stroke-dasharray=\"2.5,4.5\"";
        if (!markers && s.pts.size() > 1) {
            std::string poly;
            for (const SweepRow* p : s.pts)
                poly += f2(xmap(p->x_value_db)) + "," + f2(ymap(p->op_value)) + " ";
            svg += "<polyline points=\"" + poly + "\" fill=\"none\" stroke=\"" +
                   std::string(color) + "\" stroke-width=\"2\"" + dash + "/>\n";
        }
        if (markers) {
            for (const SweepRow* p : s.pts) {
                const double px = xmap(p->x_value_db), py = ymap(p->op_value);
                if (p->has_std_err && p->std_err > 0.0) {
                    const double lo = p->op_value - 1.96 * p->std_err;
                    const double hi = std::min(1.0, p->op_value + 1.96 * p->std_err);
                    if (lo > 0.0)
                        svg += "<line x1=\"" + f2(px) + "\" y1=\"" + f2(ymap(lo)) +
                               "\" x2=\"" + f2(px) + "\" y2=\"" + f2(ymap(hi)) +
                               "\" stroke=\"" + std::string(color) +
                               "\" stroke-width=\"1.2\"/>\n";
                }
                svg += "<circle cx=\"" + f2(px) + "\" cy=\"" + f2(py) +
                       "\" r=\"4\" fill=\"white\" stroke=\"" + std::string(color) +
                       "\" stroke-width=\"1.8\"/>\n";
            }
        } else if (s.pts.size() == 1) {
            svg += "<circle cx=\"" + f2(xmap(s.pts[0]->x_value_db)) + "\" cy=\"" +
                   f2(ymap(s.pts[0]->op_value)) + "\" r=\"3\" fill=\"" +
                   std::string(color) + "\"/>\n";
        }
    }

    // --- legend -------------------------------------------------------------
    double ly = kPlotT + 6;
    for (const Series& s : series) {
        if (ly > kPlotB - 10) {
            svg += "<text x=\"712\" y=\"" + f2(ly + 4) +
                   "\" font-family=\"sans-serif\" font-size=\"11\" fill=\"#555\">(more "
                   "series not listed)</text>\n";
            break;
        }
        const char* color = kPalette[s.color_idx];
        if (s.method == "montecarlo") {
            svg += "<circle cx=\"726\" cy=\"" + f2(ly) +
                   "\" r=\"4\" fill=\"white\" stroke=\"" + std::string(color) +
                   "\" stroke-width=\"1.8\"/>\n";
        } else {
            std::string dash;
            if (s.method == "asymptotic")
                dash = " stroke-dasharray=\"9,6\"";
            else if (s.method == "numeric")
                dash = " stroke-dasharray=\"2.5,4.5\"";
            svg += "<line x1=\"712\" y1=\"" + f2(ly) + "\" x2=\"740\" y2=\"" + f2(ly) +
                   "\" stroke=\"" + std::string(color) + "\" stroke-width=\"2\"" +
                   dash + "/>\n";
        }
        svg += "<text x=\"748\" y=\"" + f2(ly + 4) +
               "\" font-family=\"sans-serif\" font-size=\"11\" fill=\"#222\">" +
               esc(s.scenario + " | " + s.method) + "</text>\n";
        ly += 18;
    }

    // --- caption ------------------------------------------------------------
    if (series.empty()) {
        svg += "<text x=\"" + f2((kPlotL + kPlotR) / 2) + "\" y=\"" +
               f2((kPlotT + kPlotB) / 2) +
               "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\" "
               "fill=\"#777\">no drawable rows</text>\n";
    }
    if (!omitted.empty()) {
        std::string note = "omitted rows: ";
        bool first = true;
        for (const auto& [why, n] : omitted) {
            if (!first)
                note += ", ";
            note += std::to_string(n) + " (" + why + ")";
            first = false;
        }
        svg += "<text x=\"" + f2(kPlotL) + "\" y=\"" + f2(kH - 14) +
               "\" font-family=\"sans-serif\" font-size=\"12\" fill=\"#777\">" +
               esc(note) + "</text>\n";
    }
    svg += "</svg>\n";
    return svg;
}

}  // namespace hstn::cli
