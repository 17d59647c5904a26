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

#ifndef RISCOPE_PROPAGATION_HPP
#define RISCOPE_PROPAGATION_HPP

// 3GPP TR 38.901 Urban Macro (UMa) path loss, LOS and NLOS, plus a simple link budget.

#include "riscope/errors.hpp"
#include "riscope/scene.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace riscope {

inline constexpr double speed_of_light_mps = 299792458.0;

namespace uma {

inline constexpr double min_distance_2d_m = 10.0;
inline constexpr double max_distance_2d_m = 5000.0;
inline constexpr double effective_environment_height_m = 1.0;
inline constexpr double nlos_min_ut_height_m = 1.5;
inline constexpr double nlos_max_ut_height_m = 22.5;

namespace detail {

inline void check_heights(double h_bs_m, double h_ut_m)
{
    if (!(h_bs_m > effective_environment_height_m) || !(h_ut_m > effective_environment_height_m)) {
        throw ModelRangeError("UMa requires antenna heights above 1 m (h_BS = " + std::to_string(h_bs_m) +
                              ", h_UT = " + std::to_string(h_ut_m) + ")");
    }
}

inline void check_frequency(double frequency_hz)
{
    if (!(frequency_hz > 0.0) || !std::isfinite(frequency_hz)) {
        throw ModelRangeError("frequency must be positive and finite");
    }
}

inline double checked_distance_2d(double d2d_m)
{
    if (!(d2d_m >= 0.0)) {
        throw ModelRangeError("negative or NaN 2D distance");
    }
    if (d2d_m > max_distance_2d_m) {
        throw ModelRangeError("2D distance " + std::to_string(d2d_m) + " m exceeds the 5000 m UMa limit");
    }
    return std::max(d2d_m, min_distance_2d_m);
}

inline double distance_3d(double d2d_m, double h_bs_m, double h_ut_m)
{
    const double dh = h_bs_m - h_ut_m;
    return std::sqrt(d2d_m * d2d_m + dh * dh);
}

inline double los_near(double d3d_m, double f_ghz) { return 28.0 + 22.0 * std::log10(d3d_m) + 20.0 * std::log10(f_ghz); }

inline double los_far(double d3d_m, double f_ghz, double breakpoint_m, double h_bs_m, double h_ut_m)
{
    const double dh = h_bs_m - h_ut_m;
    return 28.0 + 40.0 * std::log10(d3d_m) + 20.0 * std::log10(f_ghz) -
           9.0 * std::log10(breakpoint_m * breakpoint_m + dh * dh);
}

}  // namespace detail

// d'_BP = 4 (h_BS - h_E)(h_UT - h_E) f / c with h_E = 1 m.
inline double breakpoint_distance(double h_bs_m, double h_ut_m, double frequency_hz)
{
    detail::check_heights(h_bs_m, h_ut_m);
    detail::check_frequency(frequency_hz);
    return 4.0 * (h_bs_m - effective_environment_height_m) * (h_ut_m - effective_environment_height_m) *
           frequency_hz / speed_of_light_mps;
}

// The two LOS branches evaluated at an explicit 2D distance, without the
// breakpoint switch. Exposed for continuity checks.
inline double los_pl_near_branch(double d2d_m, double h_bs_m, double h_ut_m, double frequency_hz)
{
    return detail::los_near(detail::distance_3d(d2d_m, h_bs_m, h_ut_m), frequency_hz / 1e9);
}

inline double los_pl_far_branch(double d2d_m, double h_bs_m, double h_ut_m, double frequency_hz)
{
    return detail::los_far(detail::distance_3d(d2d_m, h_bs_m, h_ut_m), frequency_hz / 1e9,
                           breakpoint_distance(h_bs_m, h_ut_m, frequency_hz), h_bs_m, h_ut_m);
}

inline double los_pl(double d2d_m, double h_bs_m, double h_ut_m, double frequency_hz)
{
    const double d2d = detail::checked_distance_2d(d2d_m);
    const double breakpoint = breakpoint_distance(h_bs_m, h_ut_m, frequency_hz);
    const double d3d = detail::distance_3d(d2d, h_bs_m, h_ut_m);
    const double f_ghz = frequency_hz / 1e9;
    return d2d <= breakpoint ? detail::los_near(d3d, f_ghz) : detail::los_far(d3d, f_ghz, breakpoint, h_bs_m, h_ut_m);
}

// The NLOS fit alone, before taking the maximum with LOS. h_UT is clamped to [1.5, 22.5] m.
inline double nlos_pl_prime(double d2d_m, double h_bs_m, double h_ut_m, double frequency_hz)
{
    const double d2d = detail::checked_distance_2d(d2d_m);
    const double d3d = detail::distance_3d(d2d, h_bs_m, h_ut_m);
    const double h_ut_fit = std::clamp(h_ut_m, nlos_min_ut_height_m, nlos_max_ut_height_m);
    return 13.54 + 39.08 * std::log10(d3d) + 20.0 * std::log10(frequency_hz / 1e9) - 0.6 * (h_ut_fit - 1.5);
}

inline double nlos_pl(double d2d_m, double h_bs_m, double h_ut_m, double frequency_hz)
{
    return std::max(los_pl(d2d_m, h_bs_m, h_ut_m, frequency_hz), nlos_pl_prime(d2d_m, h_bs_m, h_ut_m, frequency_hz));
}

}  // namespace uma

struct DirectPathLoss {
    double los_db = 0.0;
    double nlos_db = 0.0;
    double distance_2d_m = 0.0;
    double distance_3d_m = 0.0;
    bool distance_clamped = false;   // d2D raised to the 10 m floor
    bool ut_height_clamped = false;  // h_UT outside the NLOS fit range
};

// Both direct-path models for a site/receiver pair.
inline DirectPathLoss direct_path_loss(const Point3& site, const Point3& rx, double frequency_hz)
{
    const double d2d = norm(site.xy() - rx.xy());
    const double h_bs = site.z;
    const double h_ut = rx.z;
    DirectPathLoss out;
    out.los_db = uma::los_pl(d2d, h_bs, h_ut, frequency_hz);
    out.nlos_db = std::max(out.los_db, uma::nlos_pl_prime(d2d, h_bs, h_ut, frequency_hz));
    out.distance_2d_m = d2d;
    out.distance_3d_m = norm(site - rx);
    out.distance_clamped = d2d < uma::min_distance_2d_m;
    out.ut_height_clamped = h_ut < uma::nlos_min_ut_height_m || h_ut > uma::nlos_max_ut_height_m;
    return out;
}

// P_TX + G_a - L_f - PL, optionally less the cell's fixed margins.
inline double received_power_dbm(const CellConfig& cell, double pl_db, bool apply_margins)
{
    double p = cell.tx_power_dbm + cell.antenna_gain_dbi - cell.feeder_loss_db - pl_db;
    if (apply_margins) {
        p -= cell.margins.total_db();
    }
    return p;
}

}  // namespace riscope

#endif  // RISCOPE_PROPAGATION_HPP
