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

#ifndef RISCOPE_TESTS_ORACLES_HPP
#define RISCOPE_TESTS_ORACLES_HPP

// Test-only reference implementations. Nothing here calls into the library's
// geometry, propagation or engine code; only plain data types are shared.

#include "riscope/scene.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

namespace oracle {

struct Box {
    double x0, y0, x1, y1, h;
};

inline bool strictly_in_box(const Box& b, double x, double y, double z)
{
    return x > b.x0 && x < b.x1 && y > b.y0 && y < b.y1 && z > 0.0 && z < b.h;
}

// Even-odd test on a polygon footprint, strict on edges that are hit exactly.
inline bool in_polygon(const std::vector<riscope::Vec2>& ring, double x, double y)
{
    bool inside = false;
    const std::size_t n = ring.size();
    for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
        const auto& a = ring[i];
        const auto& b = ring[j];
        if (((a.y > y) != (b.y > y)) && (x < (b.x - a.x) * (y - a.y) / (b.y - a.y) + a.x)) {
            inside = !inside;
        }
    }
    return inside;
}

// Dense sampling along the open segment, `samples` interior points.
inline bool sampled_visible(const riscope::Point3& a, const riscope::Point3& b, const std::vector<Box>& boxes,
                            int samples = 10000)
{
    for (int k = 1; k <= samples; ++k) {
        const double t = static_cast<double>(k) / (samples + 1);
        const double x = a.x + t * (b.x - a.x);
        const double y = a.y + t * (b.y - a.y);
        const double z = a.z + t * (b.z - a.z);
        for (const auto& box : boxes) {
            if (strictly_in_box(box, x, y, z)) {
                return false;
            }
        }
    }
    return true;
}

inline bool sampled_visible_polygon(const riscope::Point3& a, const riscope::Point3& b,
                                    const std::vector<riscope::Vec2>& ring, double height, int samples = 10000)
{
    for (int k = 1; k <= samples; ++k) {
        const double t = static_cast<double>(k) / (samples + 1);
        const double x = a.x + t * (b.x - a.x);
        const double y = a.y + t * (b.y - a.y);
        const double z = a.z + t * (b.z - a.z);
        if (z > 0.0 && z < height && in_polygon(ring, x, y)) {
            return false;
        }
    }
    return true;
}

// Exact slab test of the open segment against the open box.
inline bool slab_visible(const riscope::Point3& a, const riscope::Point3& b, const std::vector<Box>& boxes)
{
    for (const auto& box : boxes) {
        double enter = 0.0;
        double exit = 1.0;
        bool miss = false;
        const double lo[3] = {box.x0, box.y0, 0.0};
        const double hi[3] = {box.x1, box.y1, box.h};
        const double o[3] = {a.x, a.y, a.z};
        const double d[3] = {b.x - a.x, b.y - a.y, b.z - a.z};
        for (int k = 0; k < 3 && !miss; ++k) {
            if (d[k] == 0.0) {
                miss = !(o[k] > lo[k] && o[k] < hi[k]);
            } else {
                double t0 = (lo[k] - o[k]) / d[k];
                double t1 = (hi[k] - o[k]) / d[k];
                if (t0 > t1) {
                    std::swap(t0, t1);
                }
                enter = std::max(enter, t0);
                exit = std::min(exit, t1);
                miss = !(enter < exit);
            }
        }
        if (!miss) {
            return false;
        }
    }
    return true;
}

// Largest signed depth the segment reaches inside the box (negative: clearance).
// The depth is concave along the segment, so a ternary search finds the peak.
inline double max_penetration(const riscope::Point3& a, const riscope::Point3& b, const Box& box)
{
    auto depth = [&](double t) {
        const double x = a.x + t * (b.x - a.x);
        const double y = a.y + t * (b.y - a.y);
        const double z = a.z + t * (b.z - a.z);
        return std::min({x - box.x0, box.x1 - x, y - box.y0, box.y1 - y, z, box.h - z});
    };
    double lo = 0.0;
    double hi = 1.0;
    for (int it = 0; it < 300; ++it) {
        const double m1 = lo + (hi - lo) / 3.0;
        const double m2 = hi - (hi - lo) / 3.0;
        if (depth(m1) < depth(m2)) {
            lo = m1;
        } else {
            hi = m2;
        }
    }
    return depth(0.5 * (lo + hi));
}

inline riscope::Building to_building(int id, const Box& b)
{
    return riscope::Building(id, {{b.x0, b.y0}, {b.x1, b.y0}, {b.x1, b.y1}, {b.x0, b.y1}}, b.h);
}

// ---------------------------------------------------------------------------
// Hand formulas

inline double uma_los(double d2d, double hbs, double hut, double f_hz)
{
    const double c = 299792458.0;
    if (d2d < 10.0) {
        d2d = 10.0;
    }
    const double dh = hbs - hut;
    const double d3d = std::sqrt(d2d * d2d + dh * dh);
    const double fg = f_hz / 1e9;
    const double dbp = 4.0 * (hbs - 1.0) * (hut - 1.0) * f_hz / c;
    if (d2d <= dbp) {
        return 28.0 + 22.0 * std::log10(d3d) + 20.0 * std::log10(fg);
    }
    return 28.0 + 40.0 * std::log10(d3d) + 20.0 * std::log10(fg) - 9.0 * std::log10(dbp * dbp + dh * dh);
}

inline double uma_nlos(double d2d, double hbs, double hut, double f_hz)
{
    const double los = uma_los(d2d, hbs, hut, f_hz);
    if (d2d < 10.0) {
        d2d = 10.0;
    }
    const double dh = hbs - hut;
    const double d3d = std::sqrt(d2d * d2d + dh * dh);
    const double h = std::min(std::max(hut, 1.5), 22.5);
    const double nlos = 13.54 + 39.08 * std::log10(d3d) + 20.0 * std::log10(f_hz / 1e9) - 0.6 * (h - 1.5);
    return los > nlos ? los : nlos;
}

// Far-field reflected path loss in dB, straight from the closed form.
inline std::optional<double> ffbc_db(double gt_dbi, double gr_dbi, double gain, int m, int n, double dm, double dn,
                                     double lambda, double ft, double fr, double amp, double d1, double d2)
{
    if (ft * fr == 0.0) {
        return std::nullopt;
    }
    const double pi = 3.14159265358979323846;
    const double gt = std::pow(10.0, gt_dbi / 10.0);
    const double gr = std::pow(10.0, gr_dbi / 10.0);
    const double dd = d1 * d2;
    const double num = 64.0 * pi * pi * pi * dd * dd;
    const double den = gt * gr * gain * double(m) * double(m) * double(n) * double(n) * dm * dn * lambda * lambda *
                       (ft * fr) * amp * amp;
    return 10.0 * std::log10(num / den);
}

// ---------------------------------------------------------------------------
// Naive evaluator over box scenes

struct Site {
    int id;
    riscope::Point3 pos;
    double f_hz;
    double gain_dbi;
};

struct Panel {
    int id;
    riscope::Point3 c;
    riscope::Vec3 n;
    int rows, cols;
    double dm, dn, amp, q;
};

struct BoxScene {
    std::vector<Box> boxes;
    std::vector<Site> sites;
    std::vector<Panel> panels;
    double x0, y0, cell;
    int nx, ny;
    double hut;
};

struct Winner {
    int kind;  // 0 los, 1 nlos, 2 reflected
    int cell;
    int ris;   // -1 when direct
    double pl;
};

inline double angle(riscope::Vec3 u, riscope::Vec3 v)
{
    const double cx = u.y * v.z - u.z * v.y;
    const double cy = u.z * v.x - u.x * v.z;
    const double cz = u.x * v.y - u.y * v.x;
    return std::atan2(std::sqrt(cx * cx + cy * cy + cz * cz), u.x * v.x + u.y * v.y + u.z * v.z);
}

inline double pattern(double theta, double q)
{
    const double half_pi = 1.57079632679489661923;
    return theta < half_pi ? std::pow(std::cos(theta), q) : 0.0;
}

inline bool lex_less(const Winner& a, const Winner& b)
{
    if (a.pl != b.pl) {
        return a.pl < b.pl;
    }
    if (a.kind != b.kind) {
        return a.kind < b.kind;
    }
    if (a.cell != b.cell) {
        return a.cell < b.cell;
    }
    return a.ris < b.ris;
}

// Returns one entry per grid point in row-major order; nullopt when indoor.
inline std::vector<std::optional<Winner>> naive_sweep(const BoxScene& s, bool ris)
{
    std::vector<std::optional<Winner>> out;
    const double c = 299792458.0;
    for (int y = 0; y < s.ny; ++y) {
        for (int x = 0; x < s.nx; ++x) {
            const riscope::Point3 p{s.x0 + (x + 0.5) * s.cell, s.y0 + (y + 0.5) * s.cell, s.hut};
            bool indoor = false;
            for (const auto& b : s.boxes) {
                indoor = indoor || strictly_in_box(b, p.x, p.y, p.z);
            }
            if (indoor) {
                out.emplace_back();
                continue;
            }
            std::vector<Winner> all;
            for (const auto& site : s.sites) {
                const double d2d = std::hypot(site.pos.x - p.x, site.pos.y - p.y);
                if (slab_visible(site.pos, p, s.boxes)) {
                    all.push_back({0, site.id, -1, uma_los(d2d, site.pos.z, p.z, site.f_hz)});
                } else {
                    all.push_back({1, site.id, -1, uma_nlos(d2d, site.pos.z, p.z, site.f_hz)});
                }
            }
            if (ris) {
                for (const auto& site : s.sites) {
                    for (const auto& panel : s.panels) {
                        if (!slab_visible(site.pos, panel.c, s.boxes) || !slab_visible(panel.c, p, s.boxes)) {
                            continue;
                        }
                        const riscope::Vec3 vt = site.pos - panel.c;
                        const riscope::Vec3 vr = p - panel.c;
                        const double d1 = std::sqrt(vt.x * vt.x + vt.y * vt.y + vt.z * vt.z);
                        const double d2 = std::sqrt(vr.x * vr.x + vr.y * vr.y + vr.z * vr.z);
                        const double lambda = c / site.f_hz;
                        const double gain = 4.0 * 3.14159265358979323846 * panel.dm * panel.dn / (lambda * lambda);
                        const auto pl = ffbc_db(site.gain_dbi, 0.0, gain, panel.rows, panel.cols, panel.dm, panel.dn,
                                                lambda, pattern(angle(panel.n, vt), panel.q),
                                                pattern(angle(panel.n, vr), panel.q), panel.amp, d1, d2);
                        if (pl) {
                            all.push_back({2, site.id, panel.id, *pl});
                        }
                    }
                }
            }
            Winner best = all.front();
            for (const auto& w : all) {
                if (lex_less(w, best)) {
                    best = w;
                }
            }
            out.emplace_back(best);
        }
    }
    return out;
}

// Translates a box scene into the library's Scene.
inline riscope::Scene to_scene(const BoxScene& s)
{
    riscope::Scene scene;
    for (std::size_t i = 0; i < s.boxes.size(); ++i) {
        scene.buildings.push_back(to_building(static_cast<int>(i), s.boxes[i]));
    }
    for (const auto& site : s.sites) {
        riscope::CellConfig cell;
        cell.id = site.id;
        cell.site_position = site.pos;
        cell.frequency_hz = site.f_hz;
        cell.antenna_gain_dbi = site.gain_dbi;
        scene.cells.push_back(cell);
    }
    for (const auto& p : s.panels) {
        riscope::RisPanel panel;
        panel.id = p.id;
        panel.center = p.c;
        panel.unit_normal = p.n;
        panel.rows = p.rows;
        panel.cols = p.cols;
        panel.pitch_row_m = p.dm;
        panel.pitch_col_m = p.dn;
        panel.amplitude = p.amp;
        panel.pattern_exponent = p.q;
        scene.ris_panels.push_back(panel);
    }
    scene.grid.origin = {s.x0, s.y0};
    scene.grid.cell_size_m = s.cell;
    scene.grid.nx = static_cast<std::size_t>(s.nx);
    scene.grid.ny = static_cast<std::size_t>(s.ny);
    scene.grid.receiver_height_m = s.hut;
    return scene;
}

inline Box random_box(std::mt19937_64& rng, double extent)
{
    std::uniform_real_distribution<double> pos(0.0, extent);
    std::uniform_real_distribution<double> size(5.0, extent / 3.0);
    std::uniform_real_distribution<double> height(4.0, 45.0);
    const double x0 = pos(rng);
    const double y0 = pos(rng);
    return {x0, y0, x0 + size(rng), y0 + size(rng), height(rng)};
}

// Small random scene: up to 3 cells, 2 panels, 4 boxes, 5 x 5 grid.
inline BoxScene random_box_scene(std::mt19937_64& rng)
{
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::uniform_int_distribution<int> nbox(0, 4);
    std::uniform_int_distribution<int> ncell(1, 3);
    std::uniform_int_distribution<int> npanel(0, 2);
    const double freqs[3] = {800e6, 2100e6, 3500e6};
    const double gains[3] = {16.0, 18.0, 24.0};

    BoxScene s;
    const double extent = 150.0;
    for (int i = 0, n = nbox(rng); i < n; ++i) {
        s.boxes.push_back(random_box(rng, extent));
    }
    for (int i = 0, n = ncell(rng); i < n; ++i) {
        const int type = static_cast<int>(u(rng) * 3.0) % 3;
        s.sites.push_back({i, {u(rng) * extent, u(rng) * extent, 20.0 + 30.0 * u(rng)}, freqs[type], gains[type]});
    }
    for (int j = 0, n = npanel(rng); j < n; ++j) {
        const double az = u(rng) * 2.0 * 3.14159265358979323846;
        const double el = (u(rng) - 0.5) * 0.6;
        const riscope::Vec3 normal{std::cos(el) * std::cos(az), std::cos(el) * std::sin(az), std::sin(el)};
        s.panels.push_back({j, {u(rng) * extent, u(rng) * extent, 10.0 + 35.0 * u(rng)}, normal, 102, 100, 0.01, 0.01,
                            0.9, u(rng) < 0.5 ? 1.0 : 2.0});
    }
    s.x0 = u(rng) * 20.0;
    s.y0 = u(rng) * 20.0;
    s.cell = 20.0 + 10.0 * u(rng);
    s.nx = 5;
    s.ny = 5;
    s.hut = 1.5;
    return s;
}

// Two-pass mean and population standard deviation in long double.
struct Moments {
    double mean;
    double std;
};

inline Moments two_pass(const std::vector<double>& v)
{
    long double sum = 0.0L;
    for (double x : v) {
        sum += x;
    }
    const long double mean = sum / static_cast<long double>(v.size());
    long double ss = 0.0L;
    for (double x : v) {
        ss += (x - mean) * (x - mean);
    }
    return {static_cast<double>(mean), static_cast<double>(std::sqrt(ss / static_cast<long double>(v.size())))};
}

}  // namespace oracle

#endif  // RISCOPE_TESTS_ORACLES_HPP
