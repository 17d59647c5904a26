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

#ifndef RISCOPE_METRICS_HPP
#define RISCOPE_METRICS_HPP

#include "riscope/engine.hpp"

#include <algorithm>
#include <cmath>
#include <span>
#include <stdexcept>
#include <vector>

namespace riscope {

namespace detail {

inline void require_same_support(const CoverageMap& a, const CoverageMap& b)
{
    if (!(a.grid == b.grid) || a.winners.size() != b.winners.size()) {
        throw std::invalid_argument("coverage maps are defined on different grids");
    }
    for (std::size_t i = 0; i < a.winners.size(); ++i) {
        if (a.winners[i].has_value() != b.winners[i].has_value()) {
            throw std::invalid_argument("coverage maps have different masks (first mismatch at index " +
                                        std::to_string(i) + ")");
        }
    }
}

}  // namespace detail

// Gain of enabling reflection, [1 - sum PL_ris / sum PL_nris] * 100, summed over
// unmasked dB values in index order. Evaluated as a difference over the reference
// sum, which is exact whenever the two sums are equal.
inline double delta_pl_mean(const CoverageMap& map_ris, const CoverageMap& map_nris)
{
    detail::require_same_support(map_ris, map_nris);
    double sum_ris = 0.0;
    double sum_nris = 0.0;
    for (std::size_t i = 0; i < map_ris.winners.size(); ++i) {
        if (map_ris.winners[i]) {
            sum_ris += map_ris.winners[i]->pl_db;
            sum_nris += map_nris.winners[i]->pl_db;
        }
    }
    if (sum_nris == 0.0) {
        throw std::invalid_argument("reference map has zero summed path loss");
    }
    return 100.0 * (sum_nris - sum_ris) / sum_nris;
}

// Same ratio with each point's path loss converted to linear power ratio first.
// Supplementary; the dB form above is the reported figure.
inline double delta_pl_mean_linear(const CoverageMap& map_ris, const CoverageMap& map_nris)
{
    detail::require_same_support(map_ris, map_nris);
    double sum_ris = 0.0;
    double sum_nris = 0.0;
    for (std::size_t i = 0; i < map_ris.winners.size(); ++i) {
        if (map_ris.winners[i]) {
            sum_ris += std::pow(10.0, map_ris.winners[i]->pl_db / 10.0);
            sum_nris += std::pow(10.0, map_nris.winners[i]->pl_db / 10.0);
        }
    }
    if (sum_nris == 0.0) {
        throw std::invalid_argument("reference map has zero summed path loss");
    }
    return 100.0 * (sum_nris - sum_ris) / sum_nris;
}

struct CdfPoint {
    double pl_db = 0.0;
    double cum_prob = 0.0;

    friend bool operator==(const CdfPoint&, const CdfPoint&) = default;
};

struct CdfStats {
    double mean_db = 0.0;
    double std_db = 0.0;  // population standard deviation
    std::size_t count = 0;
    std::vector<CdfPoint> cdf;  // one step per distinct value, ascending
};

inline CdfStats cdf_stats(std::span<const double> values)
{
    if (values.empty()) {
        throw std::invalid_argument("no unmasked points to summarize");
    }
    CdfStats out;
    out.count = values.size();
    const double n = static_cast<double>(values.size());

    double sum = 0.0;
    for (double v : values) {
        sum += v;
    }
    out.mean_db = sum / n;
    double ss = 0.0;
    for (double v : values) {
        const double d = v - out.mean_db;
        ss += d * d;
    }
    out.std_db = std::sqrt(ss / n);

    std::vector<double> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (i + 1 < sorted.size() && sorted[i + 1] == sorted[i]) {
            continue;
        }
        const double p = (i + 1 == sorted.size()) ? 1.0 : static_cast<double>(i + 1) / n;
        out.cdf.push_back({sorted[i], p});
    }
    return out;
}

inline CdfStats cdf_stats(const CoverageMap& map)
{
    const auto values = map.unmasked_values();
    return cdf_stats(values);
}

struct SweepRow {
    double offset_m = 0.0;
    double ris_height_m = 0.0;
    double delta_pl_pct = 0.0;
    double delta_pl_linear_pct = 0.0;
    double mean_db = 0.0;
    double std_db = 0.0;
};

struct SweepReport {
    std::vector<SweepRow> rows;
    CdfStats baseline;
    std::vector<CdfStats> cases;  // parallel to rows
};

}  // namespace riscope

#endif  // RISCOPE_METRICS_HPP
