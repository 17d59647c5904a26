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

#ifndef RISCOPE_RIS_HPP
#define RISCOPE_RIS_HPP

#include "riscope/scene.hpp"

#include <cmath>
#include <numbers>
#include <optional>

namespace riscope::ris {

/**
 * Far-field beamforming path loss through a passive reflecting array.
 *
 *   PL = 64 pi^3 (d1 d2)^2 / (Gt Gr G M^2 N^2 dx dy lambda^2 F(theta_t) F(theta_r) A^2)
 *
 * with d1 the transmitter-panel distance, d2 the panel-receiver distance,
 * M x N elements of pitch dx x dy, unit-cell gain G, element power pattern F
 * and reflection amplitude A. Phase control is assumed ideal, so the M^2 N^2
 * coherent-combining term is applied directly.
 */
struct RisPathLoss {
    double pl_db = 0.0;
    double d1_m = 0.0;
    double d2_m = 0.0;
    double theta_t = 0.0;
    double theta_r = 0.0;
};

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
inline double linear_to_db(double lin) { return 10.0 * std::log10(lin); }

// Aperture gain of one unit cell, 4 pi dx dy / lambda^2.
inline double unit_cell_gain(double pitch_row_m, double pitch_col_m, double wavelength_m)
{
    return 4.0 * std::numbers::pi * pitch_row_m * pitch_col_m / (wavelength_m * wavelength_m);
}

// cos^q(theta) over the front hemisphere, zero behind the panel.
inline double element_pattern(double theta, double q)
{
    if (!(theta < std::numbers::pi / 2.0)) {
        return 0.0;
    }
    return std::pow(std::cos(theta), q);
}

// Linear-domain path loss; nullopt when the panel faces away from either end.
inline std::optional<double> ffbc_path_loss_linear(const RisPanel& panel, double tx_gain_dbi, double rx_gain_dbi,
                                                   const RisGeometry& geometry, double wavelength_m,
                                                   std::optional<double> unit_gain_override = std::nullopt)
{
    const double f_t = element_pattern(geometry.theta_t, panel.pattern_exponent);
    const double f_r = element_pattern(geometry.theta_r, panel.pattern_exponent);
    if (f_t * f_r == 0.0) {
        return std::nullopt;
    }
    const double g = unit_gain_override.value_or(unit_cell_gain(panel.pitch_row_m, panel.pitch_col_m, wavelength_m));
    const double pi = std::numbers::pi;
    const double m = panel.rows;
    const double n = panel.cols;
    const double dd = geometry.d1_m * geometry.d2_m;
    const double numerator = 64.0 * pi * pi * pi * dd * dd;
    const double denominator = db_to_linear(tx_gain_dbi) * db_to_linear(rx_gain_dbi) * g * m * m * n * n *
                               panel.pitch_row_m * panel.pitch_col_m * wavelength_m * wavelength_m * (f_t * f_r) *
                               panel.amplitude * panel.amplitude;
    return numerator / denominator;
}

inline std::optional<RisPathLoss> ffbc_path_loss(const RisPanel& panel, double tx_gain_dbi, double rx_gain_dbi,
                                                 const RisGeometry& geometry, double wavelength_m,
                                                 std::optional<double> unit_gain_override = std::nullopt)
{
    const auto lin = ffbc_path_loss_linear(panel, tx_gain_dbi, rx_gain_dbi, geometry, wavelength_m, unit_gain_override);
    if (!lin) {
        return std::nullopt;
    }
    return RisPathLoss{linear_to_db(*lin), geometry.d1_m, geometry.d2_m, geometry.theta_t, geometry.theta_r};
}

}  // namespace riscope::ris

#endif  // RISCOPE_RIS_HPP
