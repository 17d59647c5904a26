// SPDX-License-Identifier: Apache-2.0
//
// riscope: deterministic urban coverage simulation with reflecting surfaces
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef RISCOPE_SWEEP_HPP
#define RISCOPE_SWEEP_HPP

#include "riscope/engine.hpp"
#include "riscope/metrics.hpp"

#include <span>
#include <stdexcept>
#include <vector>

namespace riscope {

inline Scene apply_height_offset(const Scene& scene, double offset_m)
{
    return apply_height_case(scene, make_height_case(global_bs_height(scene), offset_m));
}

struct HeightSweep {
    SweepReport report;
    CoverageMap baseline;
    std::vector<HeightCase> cases;
    std::vector<CoverageMap> maps;  // parallel to cases
};

// Baseline without reflection once, then one reflected sweep per panel height.
inline HeightSweep height_sweep(const Scene& scene, std::span<const double> offsets_m, SweepOptions options = {})
{
    if (offsets_m.empty()) {
        throw std::invalid_argument("height sweep needs at least one offset");
    }
    const double h_bs = global_bs_height(scene);
    HeightSweep out;
    for (double offset : offsets_m) {
        out.cases.push_back(make_height_case(h_bs, offset));
    }

    out.baseline = sweep_grid(scene, false, options);
    out.report.baseline = cdf_stats(out.baseline);

    for (const auto& hc : out.cases) {
        const Scene lowered = apply_height_case(scene, hc);
        CoverageMap map = sweep_grid(lowered, true, options);
        CdfStats stats = cdf_stats(map);
        out.report.rows.push_back({hc.offset_m, hc.ris_height_m, delta_pl_mean(map, out.baseline),
                                   delta_pl_mean_linear(map, out.baseline), stats.mean_db, stats.std_db});
        out.report.cases.push_back(std::move(stats));
        out.maps.push_back(std::move(map));
    }
    return out;
}

}  // namespace riscope

#endif  // RISCOPE_SWEEP_HPP
