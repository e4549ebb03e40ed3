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

#ifndef HSTN_TOOLS_SVGPLOT_HPP
#define HSTN_TOOLS_SVGPLOT_HPP

#include <string>
#include <vector>

#include "csvio.hpp"

// Semilog-y outage chart: series are (scenario, method) pairs; scenarios pick
// the color, methods pick the stroke style (exact solid, asymptotic dashed,
// numeric dotted, montecarlo markers with error bars).  Rows whose status
// marks a numerical failure are left out of the series and tallied in a
// caption note.  Output depends only on the row values, so a rerun with the
// same data yields byte-identical SVG.

namespace hstn::cli {

struct PlotOptions {
    std::string title = "outage sweep";
};

std::string render_sweep_svg(const std::vector<SweepRow>& rows,
                             const PlotOptions& opt);

}  // namespace hstn::cli

#endif  // HSTN_TOOLS_SVGPLOT_HPP
