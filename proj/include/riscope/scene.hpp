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

#ifndef RISCOPE_SCENE_HPP
#define RISCOPE_SCENE_HPP

#include "riscope/geometry.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace riscope {

// Vertical prism: a simple counter-clockwise footprint extruded from z = 0 to `height_m`.
class Building {
public:
    Building(int id, std::vector<Vec2> footprint, double height_m)
        : id_(id), footprint_(std::move(footprint)), height_m_(height_m), bounds_(bounding_box(footprint_))
    {
    }

    int id() const noexcept { return id_; }
    std::span<const Vec2> footprint() const noexcept { return footprint_; }
    double height_m() const noexcept { return height_m_; }
    const Box2& bounds() const noexcept { return bounds_; }

private:
    int id_;
    std::vector<Vec2> footprint_;
    double height_m_;
    Box2 bounds_;
};

struct LinkMargins {
    double interference_db = 0.0;
    double doppler_db = 0.0;
    double fade_db = 0.0;
    double shadow_db = 0.0;
    double implementation_db = 0.0;

    double total_db() const { return interference_db + doppler_db + fade_db + shadow_db + implementation_db; }
    friend bool operator==(const LinkMargins&, const LinkMargins&) = default;
};

// Capacity-planning parameters carried through verbatim; no computation reads them.
struct CellPassthrough {
    double bandwidth_hz = 0.0;
    double used_subcarriers = 0.0;
    double total_subcarriers = 0.0;
    double sampling_factor = 0.0;
    double reuse_factor = 0.0;
    double coherence_time_s = 0.0;
    double coherence_bandwidth_hz = 0.0;
    double spatial_duty_cycle_pct = 0.0;
    double noise_factor_db = 0.0;

    friend bool operator==(const CellPassthrough&, const CellPassthrough&) = default;
};

struct CellConfig {
    int id = 0;
    Point3 site_position;  // z is the antenna height
    double frequency_hz = 0.0;
    double tx_power_dbm = 0.0;
    double antenna_gain_dbi = 0.0;
    double feeder_loss_db = 0.0;
    int antenna_elements = 1;
    LinkMargins margins;
    CellPassthrough passthrough;

    friend bool operator==(const CellConfig&, const CellConfig&) = default;
};

struct RisPanel {
    int id = 0;
    Point3 center;  // z is the suspension height
    Vec3 unit_normal{1.0, 0.0, 0.0};
    int rows = 1;
    int cols = 1;
    double pitch_row_m = 0.01;
    double pitch_col_m = 0.01;
    double amplitude = 1.0;
    double pattern_exponent = 1.0;

    friend bool operator==(const RisPanel&, const RisPanel&) = default;
};

struct GridSpec {
    Vec2 origin;
    double cell_size_m = 1.0;
    std::size_t nx = 1;
    std::size_t ny = 1;
    double receiver_height_m = 1.5;

    std::size_t size() const noexcept { return nx * ny; }
    friend bool operator==(const GridSpec&, const GridSpec&) = default;
};

struct ModelOptions {
    std::optional<double> unit_cell_gain_override;
    double pattern_exponent_default = 1.0;
    double ris_rx_gain_dbi = 0.0;
    // Global antenna height used by height sweeps; falls back to the common cell height.
    std::optional<double> bs_height_m;

    friend bool operator==(const ModelOptions&, const ModelOptions&) = default;
};

struct SceneMeta {
    std::string name;
    std::string description;
    std::string determinism;

    friend bool operator==(const SceneMeta&, const SceneMeta&) = default;
};

struct Scene {
    SceneMeta meta;
    std::vector<Building> buildings;
    std::vector<CellConfig> cells;
    std::vector<RisPanel> ris_panels;
    GridSpec grid;
    ModelOptions options;
};

// Tolerance below which a point counts as lying on a building surface.
inline constexpr double surface_tolerance_m = 1e-9;

namespace detail {

inline Vec2 lerp(Vec2 a, Vec2 d, double t) { return a + t * d; }

// Does the open segment a->b pass through the open interior of the prism?
inline bool segment_enters_prism(const Point3& a, const Point3& b, const Building& building)
{
    const double h = building.height_m();
    const double tol = surface_tolerance_m;
    double t0 = 0.0;
    double t1 = 1.0;

    const double dz = b.z - a.z;
    if (dz == 0.0) {
        if (a.z <= tol || a.z >= h - tol) {
            return false;
        }
    } else {
        const double ta = (tol - a.z) / dz;
        const double tb = (h - tol - a.z) / dz;
        t0 = std::max(t0, std::min(ta, tb));
        t1 = std::min(t1, std::max(ta, tb));
        if (t0 >= t1) {
            return false;
        }
    }

    const Vec2 a2 = a.xy();
    const Vec2 d2 = b.xy() - a2;
    const Vec2 p0 = lerp(a2, d2, t0);
    const Vec2 p1 = lerp(a2, d2, t1);
    const Box2 span_box{{std::min(p0.x, p1.x), std::min(p0.y, p1.y)}, {std::max(p0.x, p1.x), std::max(p0.y, p1.y)}};
    if (!span_box.overlaps(building.bounds())) {
        return false;
    }

    const auto ring = building.footprint();
    if (d2.x == 0.0 && d2.y == 0.0) {
        return polygon::strictly_inside(ring, a2, tol);
    }

    // Split [t0, t1] at every crossing with a footprint edge; on each piece the
    // segment is either wholly inside or wholly outside, so one midpoint decides.
    std::vector<double> cuts{t0, t1};
    const double dd = dot(d2, d2);
    const std::size_t n = ring.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2 p = ring[i];
        const Vec2 e = ring[(i + 1) % n] - p;
        const double denom = cross(d2, e);
        const Vec2 ap = p - a2;
        if (denom != 0.0) {
            const double s = cross(ap, d2) / denom;
            if (s >= 0.0 && s <= 1.0) {
                cuts.push_back(cross(ap, e) / denom);
            }
        } else {
            cuts.push_back(dot(ap, d2) / dd);
            cuts.push_back(dot(ap + e, d2) / dd);
        }
    }
    std::sort(cuts.begin(), cuts.end());
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const double lo = std::max(cuts[i], t0);
        const double hi = std::min(cuts[i + 1], t1);
        if (hi <= lo) {
            continue;
        }
        if (polygon::strictly_inside(ring, lerp(a2, d2, 0.5 * (lo + hi)), tol)) {
            return true;
        }
    }
    return false;
}

}  // namespace detail

// True iff the open segment (a, b) misses every building interior.
// Touching a face, edge or roof does not occlude.
inline bool los_visible(const Point3& a, const Point3& b, std::span<const Building> buildings)
{
    // Fixed endpoint order makes the answer exactly symmetric under swapping.
    const bool swap = std::tie(b.x, b.y, b.z) < std::tie(a.x, a.y, a.z);
    const Point3& from = swap ? b : a;
    const Point3& to = swap ? a : b;
    for (const auto& building : buildings) {
        if (detail::segment_enters_prism(from, to, building)) {
            return false;
        }
    }
    return true;
}

inline bool los_visible(const Point3& a, const Point3& b, const Scene& scene)
{
    return los_visible(a, b, std::span<const Building>(scene.buildings));
}

inline bool point_in_building(const Point3& p, std::span<const Building> buildings)
{
    for (const auto& building : buildings) {
        if (p.z > 0.0 && p.z < building.height_m() &&
            polygon::strictly_inside(building.footprint(), p.xy(), surface_tolerance_m)) {
            return true;
        }
    }
    return false;
}

inline bool point_in_building(const Point3& p, const Scene& scene)
{
    return point_in_building(p, std::span<const Building>(scene.buildings));
}

// Cell-center position of grid index (x, y) at receiver height.
inline Point3 grid_point_position(const GridSpec& grid, std::size_t x, std::size_t y)
{
    if (x >= grid.nx || y >= grid.ny) {
        throw std::out_of_range("grid index (" + std::to_string(x) + ", " + std::to_string(y) +
                                ") outside " + std::to_string(grid.nx) + "x" + std::to_string(grid.ny));
    }
    return {grid.origin.x + (static_cast<double>(x) + 0.5) * grid.cell_size_m,
            grid.origin.y + (static_cast<double>(y) + 0.5) * grid.cell_size_m, grid.receiver_height_m};
}

// Reflection geometry at a panel: leg lengths and departure angles from the panel normal.
struct RisGeometry {
    double d1_m = 0.0;
    double d2_m = 0.0;
    double theta_t = 0.0;
    double theta_r = 0.0;
};

inline RisGeometry ris_angles(const Point3& tx, const RisPanel& panel, const Point3& rx)
{
    const Vec3 to_tx = tx - panel.center;
    const Vec3 to_rx = rx - panel.center;
    return {norm(to_tx), norm(to_rx), angle_between(panel.unit_normal, to_tx),
            angle_between(panel.unit_normal, to_rx)};
}

// Antenna height shared by all cells, used as the reference for panel height offsets.
inline double global_bs_height(const Scene& scene)
{
    if (scene.options.bs_height_m) {
        return *scene.options.bs_height_m;
    }
    if (scene.cells.empty()) {
        throw std::invalid_argument("scene has no cells to derive an antenna height from");
    }
    const double h = scene.cells.front().site_position.z;
    for (const auto& cell : scene.cells) {
        if (cell.site_position.z != h) {
            throw std::invalid_argument("cells have differing antenna heights; set model_options.bs_height_m");
        }
    }
    return h;
}

}  // namespace riscope

#endif  // RISCOPE_SCENE_HPP
