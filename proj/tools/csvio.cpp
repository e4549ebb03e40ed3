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

#include "csvio.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace hstn::cli {

namespace {

constexpr const char* kHeader =
    "scenario,method,x_axis_name,x_value_db,op_value,std_err,trials,wall_time_ms,"
    "status";

std::string fmt(const char* spec, double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, spec, v);
    return buf;
}

// Canonical field list; wall time is the only field a rerun may legitimately
// change, so the hash path leaves it out.
std::string row_text(const SweepRow& r, bool with_wall)
{
    std::string s;
    s += r.scenario;
    s += ',';
    s += r.method;
    s += ',';
    s += r.x_axis_name;
    s += ',';
    s += fmt("%.10g", r.x_value_db);
    s += ',';
    s += fmt("%.12g", r.op_value);
    s += ',';
    if (r.has_std_err)
        s += fmt("%.6g", r.std_err);
    s += ',';
    if (r.has_trials)
        s += std::to_string(r.trials);
    s += ',';
    if (with_wall)
        s += fmt("%.3f", r.wall_time_ms);
    s += ',';
    s += r.status;
    return s;
}

}  // namespace

std::uint64_t determinism_hash(const std::vector<SweepRow>& rows)
{
    std::uint64_t h = 1469598103934665603ull;  // FNV-1a 64 offset basis
    auto mix = [&h](const std::string& s) {
        for (unsigned char c : s) {
            h ^= c;
            h *= 1099511628211ull;
        }
        h ^= static_cast<unsigned char>('\n');
        h *= 1099511628211ull;
    };
    for (const SweepRow& r : rows)
        mix(row_text(r, /*with_wall=*/false));
    return h;
}

std::string hash_hex(std::uint64_t h)
{
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string format_sweep_csv(const std::vector<SweepRow>& rows)
{
    std::string out;
    out += "# hstn-sweep-csv v1\n";
    out += kHeader;
    out += '\n';
    for (const SweepRow& r : rows) {
        out += row_text(r, /*with_wall=*/true);
        out += '\n';
    }
    out += "# determinism_hash=" + hash_hex(determinism_hash(rows)) + "\n";
    return out;
}

std::vector<SweepRow> read_sweep_csv(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw CsvError(path + ": cannot open");

    std::vector<SweepRow> rows;
    std::string line;
    size_t lineno = 0;
    std::vector<std::string> header;
    auto split = [](const std::string& s) {
        std::vector<std::string> f;
        std::string cur;
        for (char c : s) {
            if (c == ',') {
                f.push_back(cur);
                cur.clear();
            } else if (c != '\r') {
                cur += c;
            }
        }
        f.push_back(cur);
        return f;
    };
    auto where = [&] { return path + ":" + std::to_string(lineno); };

    int col[9];
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#')
            continue;
        if (header.empty()) {
            header = split(line);
            const char* names[9] = {"scenario", "method",       "x_axis_name",
                                    "x_value_db", "op_value",   "std_err",
                                    "trials",     "wall_time_ms", "status"};
            for (int i = 0; i < 9; ++i) {
                col[i] = -1;
                for (size_t j = 0; j < header.size(); ++j)
                    if (header[j] == names[i])
                        col[i] = static_cast<int>(j);
                if (col[i] < 0)
                    throw CsvError(where() + ": missing column \"" +
                                   std::string(names[i]) + "\"");
            }
            continue;
        }
        const auto f = split(line);
        if (f.size() < header.size())
            throw CsvError(where() + ": expected " + std::to_string(header.size()) +
                           " fields, got " + std::to_string(f.size()));
        auto num = [&](int c, const char* what) {
            try {
                size_t used = 0;
                const double v = std::stod(f[static_cast<size_t>(col[c])], &used);
                if (used != f[static_cast<size_t>(col[c])].size())
                    throw std::invalid_argument("trailing junk");
                return v;
            } catch (const std::exception&) {
                throw CsvError(where() + ": bad " + std::string(what) + " value \"" +
                               f[static_cast<size_t>(col[c])] + "\"");
            }
        };
        SweepRow r;
        r.scenario = f[static_cast<size_t>(col[0])];
        r.method = f[static_cast<size_t>(col[1])];
        r.x_axis_name = f[static_cast<size_t>(col[2])];
        r.x_value_db = num(3, "x_value_db");
        r.op_value = num(4, "op_value");
        const std::string& se = f[static_cast<size_t>(col[5])];
        if (!se.empty()) {
            r.has_std_err = true;
            r.std_err = num(5, "std_err");
        }
        const std::string& tr = f[static_cast<size_t>(col[6])];
        if (!tr.empty()) {
            r.has_trials = true;
            try {
                r.trials = std::stoull(tr);
            } catch (const std::exception&) {
                throw CsvError(where() + ": bad trials value \"" + tr + "\"");
            }
        }
        const std::string& wt = f[static_cast<size_t>(col[7])];
        if (!wt.empty())
            r.wall_time_ms = num(7, "wall_time_ms");
        r.status = f[static_cast<size_t>(col[8])];
        rows.push_back(std::move(r));
    }
    if (header.empty())
        throw CsvError(path + ": no header row found");
    return rows;
}

}  // namespace hstn::cli
