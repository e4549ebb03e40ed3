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

#ifndef HSTN_TOOLS_CSVIO_HPP
#define HSTN_TOOLS_CSVIO_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

// Sweep result table.  Serialization is canonical: a given row vector always
// produces the same bytes, and the determinism hash covers every field except
// wall_time_ms so reruns can be compared across machines and worker counts.

namespace hstn::cli {

struct CsvError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SweepRow {
    std::string scenario;
    std::string method;
    std::string x_axis_name;
    double x_value_db = 0.0;
    double op_value = 0.0;
    bool has_std_err = false;
    double std_err = 0.0;
    bool has_trials = false;
    std::uint64_t trials = 0;
    double wall_time_ms = 0.0;
    std::string status = "ok";
};

// FNV-1a over the canonical serialization of all rows, wall time excluded.
std::uint64_t determinism_hash(const std::vector<SweepRow>& rows);
std::string hash_hex(std::uint64_t h);

// Full file text: schema comment, header row, data rows, and a trailing
// determinism-hash comment (hash-stable because the hash ignores wall time).
std::string format_sweep_csv(const std::vector<SweepRow>& rows);

// Reads a file produced by format_sweep_csv; tolerates unknown extra columns
// but requires the canonical ones.  Throws CsvError with a line diagnostic.
std::vector<SweepRow> read_sweep_csv(const std::string& path);

}  // namespace hstn::cli

#endif  // HSTN_TOOLS_CSVIO_HPP
