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

#include "runconfig.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace hstn::cli {

using nlohmann::json;

const char* method_name(Method m)
{
    switch (m) {
        case Method::exact: return "exact";
        case Method::asymptotic: return "asymptotic";
        case Method::numeric: return "numeric";
        case Method::montecarlo: return "montecarlo";
    }
    return "?";
}

std::vector<double> SweepAxis::points() const
{
    std::vector<double> xs;
    // Half-step slack so stop_db itself is always included despite rounding.
    for (double x = start_db; x <= stop_db + 0.5 * step_db; x += step_db)
        xs.push_back(std::min(x, stop_db));
    return xs;
}

namespace {

[[noreturn]] void fail(const std::string& ctx, const std::string& why)
{
    throw ConfigError(ctx + ": " + why);
}

// Rejects keys outside the allowed set so mistyped fields never pass silently.
void check_keys(const json& obj, const std::string& ctx,
                std::initializer_list<const char*> allowed)
{
    for (const auto& item : obj.items()) {
        if (std::find_if(allowed.begin(), allowed.end(), [&](const char* k) {
                return item.key() == k;
            }) == allowed.end()) {
            std::string known;
            for (const char* k : allowed)
                known += std::string(known.empty() ? "" : ", ") + k;
            fail(ctx, "unknown key \"" + item.key() + "\" (known keys: " + known + ")");
        }
    }
}

const json& require(const json& obj, const std::string& ctx, const char* key)
{
    const auto it = obj.find(key);
    if (it == obj.end())
        fail(ctx, std::string("missing required key \"") + key + "\"");
    return *it;
}

double get_number(const json& obj, const std::string& ctx, const char* key)
{
    const json& v = require(obj, ctx, key);
    if (!v.is_number())
        fail(ctx + "." + key, "expected a number");
    return v.get<double>();
}

double get_number_or(const json& obj, const std::string& ctx, const char* key,
                     double fallback)
{
    if (!obj.contains(key))
        return fallback;
    return get_number(obj, ctx, key);
}

int get_int(const json& obj, const std::string& ctx, const char* key)
{
    const json& v = require(obj, ctx, key);
    if (!v.is_number_integer())
        fail(ctx + "." + key, "expected an integer");
    return v.get<int>();
}

std::uint64_t get_u64_or(const json& obj, const std::string& ctx, const char* key,
                         std::uint64_t fallback)
{
    if (!obj.contains(key))
        return fallback;
    const json& v = obj.at(key);
    if (!v.is_number_unsigned())
        fail(ctx + "." + key, "expected a non-negative integer");
    return v.get<std::uint64_t>();
}

std::string get_string(const json& obj, const std::string& ctx, const char* key)
{
    const json& v = require(obj, ctx, key);
    if (!v.is_string())
        fail(ctx + "." + key, "expected a string");
    return v.get<std::string>();
}

void require_finite(double v, const std::string& ctx)
{
    if (!std::isfinite(v))
        fail(ctx, "value must be finite");
}

MobilityConfig parse_mobility(const json& obj, const std::string& ctx)
{
    if (!obj.is_object())
        fail(ctx, "expected an object");
    check_keys(obj, ctx,
               {"height", "radius", "walk_range", "v_min", "v_max", "stay_prob",
                "dwell_min", "dwell_max"});
    const MobilityConfig d{};
    const double h = get_number_or(obj, ctx, "height", d.height);
    const double r = get_number_or(obj, ctx, "radius", d.radius);
    const double walk = get_number_or(obj, ctx, "walk_range", d.walk_range);
    const double vmin = get_number_or(obj, ctx, "v_min", d.v_min);
    const double vmax = get_number_or(obj, ctx, "v_max", d.v_max);
    const bool has_ps = obj.contains("stay_prob");
    const bool has_dwell = obj.contains("dwell_min") || obj.contains("dwell_max");
    if (has_ps && has_dwell)
        fail(ctx, "give either stay_prob or dwell_min/dwell_max, not both");
    try {
        if (has_dwell) {
            const double dmin = get_number_or(obj, ctx, "dwell_min", 0.0);
            const double dmax = get_number(obj, ctx, "dwell_max");
            return MobilityConfig{h, r, walk, vmin, vmax, dmin, dmax};
        }
        const double ps = get_number_or(obj, ctx, "stay_prob", 0.5);
        return MobilityConfig::with_stay_prob(h, r, walk, vmin, vmax, ps);
    } catch (const std::invalid_argument& e) {
        fail(ctx, e.what());
    }
}

SatLinkParams parse_link_budget(const json& obj, const std::string& ctx)
{
    if (!obj.is_object())
        fail(ctx, "expected an object");
    check_keys(obj, ctx,
               {"noise_temp_k", "bandwidth_hz", "carrier_freq_hz", "distance_m",
                "sat_gain_db", "rx_gain_db", "beam_offset_deg", "beam_width3db_deg",
                "light_speed"});
    SatLinkParams p;
    p.noise_temp_k = get_number_or(obj, ctx, "noise_temp_k", p.noise_temp_k);
    p.bandwidth_hz = get_number_or(obj, ctx, "bandwidth_hz", p.bandwidth_hz);
    p.carrier_freq_hz = get_number_or(obj, ctx, "carrier_freq_hz", p.carrier_freq_hz);
    p.distance_m = get_number_or(obj, ctx, "distance_m", p.distance_m);
    p.sat_gain_db = get_number_or(obj, ctx, "sat_gain_db", p.sat_gain_db);
    p.rx_gain_db = get_number_or(obj, ctx, "rx_gain_db", p.rx_gain_db);
    p.beam_offset_deg = get_number_or(obj, ctx, "beam_offset_deg", p.beam_offset_deg);
    p.beam_width3db_deg =
        get_number_or(obj, ctx, "beam_width3db_deg", p.beam_width3db_deg);
    p.light_speed = get_number_or(obj, ctx, "light_speed", p.light_speed);
    for (double v : {p.noise_temp_k, p.bandwidth_hz, p.carrier_freq_hz, p.distance_m,
                     p.beam_width3db_deg, p.light_speed}) {
        if (!(v > 0.0) || !std::isfinite(v))
            fail(ctx, "physical link parameters must be positive and finite");
    }
    if (p.beam_offset_deg < 0.0)
        fail(ctx, "beam_offset_deg must be >= 0");
    return p;
}

SrFadingParams parse_sat_fading(const json& obj, const std::string& ctx)
{
    if (!obj.is_object())
        fail(ctx, "expected an object");
    check_keys(obj, ctx, {"m", "b", "omega"});
    SrFadingParams sr{};
    sr.m = get_int(obj, ctx, "m");
    sr.b = get_number(obj, ctx, "b");
    sr.omega = get_number(obj, ctx, "omega");
    if (sr.m < 1)
        fail(ctx + ".m", "line-of-sight order must be a positive integer");
    if (!(sr.b > 0.0) || !(sr.omega > 0.0))
        fail(ctx, "b and omega must be > 0");
    require_finite(sr.b, ctx + ".b");
    require_finite(sr.omega, ctx + ".omega");
    return sr;
}

TerrestrialFading parse_relay_fading(const json& obj, const std::string& ctx)
{
    if (!obj.is_object())
        fail(ctx, "expected an object");
    const std::string family = get_string(obj, ctx, "family");
    try {
        if (family == "nakagami") {
            check_keys(obj, ctx, {"family", "m", "omega"});
            return TerrestrialFading::nakagami(get_int(obj, ctx, "m"),
                                               get_number_or(obj, ctx, "omega", 1.0));
        }
        if (family == "rician") {
            check_keys(obj, ctx, {"family", "k_factor", "omega"});
            return TerrestrialFading::rician(get_number(obj, ctx, "k_factor"),
                                             get_number_or(obj, ctx, "omega", 1.0));
        }
    } catch (const std::invalid_argument& e) {
        fail(ctx, e.what());
    }
    fail(ctx + ".family", "expected \"nakagami\" or \"rician\"");
}

// Scenario names flow into CSV fields and SVG labels unquoted, so keep them
// to a safe alphabet.
void validate_name(const std::string& name, const std::string& ctx)
{
    if (name.empty())
        fail(ctx, "name must not be empty");
    for (char c : name) {
        const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                        (c >= '0' && c <= '9') || c == ' ' || c == '_' || c == '-' ||
                        c == '.' || c == '=' || c == '+' || c == '/';
        if (!ok)
            fail(ctx, "name may use letters, digits, and \" _-.=+/\" only");
    }
}

ScenarioConfig parse_scenario(const json& obj, const std::string& ctx,
                              const SweepAxis& axis,
                              const std::optional<SatLinkParams>& budget)
{
    if (!obj.is_object())
        fail(ctx, "expected an object");
    check_keys(obj, ctx,
               {"name", "relays", "kappa_sat", "kappa_relay", "gamma_th_db", "eta_db",
                "eta_power_ratio_db", "sat_fading", "relay_fading"});
    ScenarioConfig s;
    s.name = get_string(obj, ctx, "name");
    validate_name(s.name, ctx + ".name");
    s.relays = obj.contains("relays") ? get_int(obj, ctx, "relays") : 1;
    if (s.relays < 1)
        fail(ctx + ".relays", "must be >= 1");
    s.kappa_sat = get_number_or(obj, ctx, "kappa_sat", 0.0);
    s.kappa_relay = get_number_or(obj, ctx, "kappa_relay", 0.0);
    if (s.kappa_sat < 0.0 || s.kappa_relay < 0.0)
        fail(ctx, "impairment levels must be >= 0");
    s.sat_fading = parse_sat_fading(require(obj, ctx, "sat_fading"), ctx + ".sat_fading");
    s.relay_fading =
        parse_relay_fading(require(obj, ctx, "relay_fading"), ctx + ".relay_fading");

    const bool has_eta = obj.contains("eta_db");
    const bool has_ratio = obj.contains("eta_power_ratio_db");
    if (axis.gamma_axis) {
        if (obj.contains("gamma_th_db"))
            fail(ctx, "gamma_th_db comes from the sweep axis; remove it here");
        if (has_eta == has_ratio)
            fail(ctx, "threshold sweeps need exactly one of eta_db or "
                      "eta_power_ratio_db");
        if (has_ratio) {
            if (!budget)
                fail(ctx, "eta_power_ratio_db needs a top-level link_budget section");
            s.eta_db = linear_to_db(
                eta_s_from_budget(*budget, get_number(obj, ctx, "eta_power_ratio_db")));
        } else {
            s.eta_db = get_number(obj, ctx, "eta_db");
        }
        require_finite(s.eta_db, ctx + ".eta_db");
    } else {
        if (has_eta || has_ratio)
            fail(ctx, "the mean SNR comes from the sweep axis; remove eta_db / "
                      "eta_power_ratio_db");
        s.gamma_th_db = get_number(obj, ctx, "gamma_th_db");
        require_finite(s.gamma_th_db, ctx + ".gamma_th_db");
    }
    return s;
}

SweepAxis parse_sweep(const json& obj, const std::string& ctx)
{
    if (!obj.is_object())
        fail(ctx, "expected an object");
    check_keys(obj, ctx, {"axis", "start_db", "stop_db", "step_db"});
    SweepAxis a;
    const std::string axis = get_string(obj, ctx, "axis");
    if (axis == "eta_db")
        a.gamma_axis = false;
    else if (axis == "gamma_th_db")
        a.gamma_axis = true;
    else
        fail(ctx + ".axis", "expected \"eta_db\" or \"gamma_th_db\"");
    a.start_db = get_number(obj, ctx, "start_db");
    a.stop_db = get_number(obj, ctx, "stop_db");
    a.step_db = get_number(obj, ctx, "step_db");
    require_finite(a.start_db, ctx + ".start_db");
    require_finite(a.stop_db, ctx + ".stop_db");
    require_finite(a.step_db, ctx + ".step_db");
    if (!(a.step_db > 0.0))
        fail(ctx + ".step_db", "must be > 0");
    if (a.stop_db < a.start_db)
        fail(ctx, "stop_db must be >= start_db");
    return a;
}

std::vector<Method> parse_methods(const json& arr, const std::string& ctx)
{
    if (!arr.is_array() || arr.empty())
        fail(ctx, "expected a non-empty array of method names");
    std::vector<Method> out;
    std::set<std::string> seen;
    for (size_t i = 0; i < arr.size(); ++i) {
        const json& v = arr.at(i);
        const std::string ictx = ctx + "[" + std::to_string(i) + "]";
        if (!v.is_string())
            fail(ictx, "expected a string");
        const std::string name = v.get<std::string>();
        if (!seen.insert(name).second)
            fail(ictx, "method \"" + name + "\" listed twice");
        if (name == "exact")
            out.push_back(Method::exact);
        else if (name == "asymptotic")
            out.push_back(Method::asymptotic);
        else if (name == "numeric")
            out.push_back(Method::numeric);
        else if (name == "montecarlo")
            out.push_back(Method::montecarlo);
        else
            fail(ictx, "unknown method \"" + name +
                           "\" (exact | asymptotic | numeric | montecarlo)");
    }
    return out;
}

}  // namespace

// Byte offset -> line number for the diagnostic.
static std::string locate_parse_error(const std::string& text,
                                      const std::string& origin,
                                      const json::parse_error& e)
{
    size_t line = 1;
    for (size_t i = 0; i < text.size() && i + 1 < e.byte; ++i)
        if (text[i] == '\n')
            ++line;
    return origin + ":" + std::to_string(line) + ": " + e.what();
}

ExperimentConfig parse_experiment_config_text(const std::string& text,
                                              const std::string& origin)
{
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError(locate_parse_error(text, origin, e));
    }
    if (!root.is_object())
        fail(origin, "top level must be an object");
    check_keys(root, origin,
               {"seed", "trials", "methods", "sweep", "mobility", "path_loss_exp",
                "link_budget", "scenarios"});

    ExperimentConfig cfg;
    cfg.seed = get_u64_or(root, origin, "seed", 1);
    cfg.trials = get_u64_or(root, origin, "trials", 1000000);
    cfg.methods = parse_methods(require(root, origin, "methods"), origin + ".methods");
    cfg.sweep = parse_sweep(require(root, origin, "sweep"), origin + ".sweep");
    if (root.contains("mobility"))
        cfg.mobility = parse_mobility(root.at("mobility"), origin + ".mobility");
    cfg.path_loss_exp = get_number_or(root, origin, "path_loss_exp", 2.0);
    if (!(cfg.path_loss_exp > 0.0) || !std::isfinite(cfg.path_loss_exp))
        fail(origin + ".path_loss_exp", "must be positive and finite");
    if (root.contains("link_budget"))
        cfg.link_budget =
            parse_link_budget(root.at("link_budget"), origin + ".link_budget");

    const json& scen = require(root, origin, "scenarios");
    if (!scen.is_array() || scen.empty())
        fail(origin + ".scenarios", "expected a non-empty array");
    std::set<std::string> names;
    for (size_t i = 0; i < scen.size(); ++i) {
        const std::string ctx = origin + ".scenarios[" + std::to_string(i) + "]";
        ScenarioConfig s = parse_scenario(scen.at(i), ctx, cfg.sweep, cfg.link_budget);
        if (!names.insert(s.name).second)
            fail(ctx + ".name", "duplicate scenario name \"" + s.name + "\"");
        cfg.scenarios.push_back(std::move(s));
    }
    return cfg;
}

ExperimentConfig parse_experiment_config_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ConfigError(path + ": cannot open config file");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_experiment_config_text(ss.str(), path);
}

MobilityConfig parse_mobility_config_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ConfigError(path + ": cannot open config file");
    std::ostringstream ss;
    ss << in.rdbuf();
    const std::string text = ss.str();

    // A document with experiment-level keys is a full config; validate it all
    // so broken recipes are caught here too.  Otherwise treat the root object
    // as the mobility section itself.
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError(locate_parse_error(text, path, e));
    }
    if (!root.is_object())
        fail(path, "top level must be a JSON object");
    if (root.contains("scenarios") || root.contains("sweep") ||
        root.contains("methods"))
        return parse_experiment_config_text(text, path).mobility;
    if (root.contains("mobility"))
        return parse_mobility(root.at("mobility"), path + ".mobility");
    return parse_mobility(root, path);
}

}  // namespace hstn::cli
