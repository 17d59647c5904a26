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

#ifndef RISCOPE_ENGINE_HPP
#define RISCOPE_ENGINE_HPP

#include "riscope/errors.hpp"
#include "riscope/propagation.hpp"
#include "riscope/ris.hpp"
#include "riscope/scene.hpp"

#include <algorithm>
#include <cstdint>
#include <exception>
#include <optional>
#include <string_view>
#include <thread>
#include <tuple>
#include <vector>

namespace riscope {

// Declaration order is the tie-break order.
enum class PathKind : std::uint8_t { direct_los, direct_nlos, ris_reflected };

inline constexpr std::string_view to_string(PathKind kind)
{
    switch (kind) {
    case PathKind::direct_los:
        return "direct_los";
    case PathKind::direct_nlos:
        return "direct_nlos";
    case PathKind::ris_reflected:
        return "ris_reflected";
    }
    return "unknown";
}

struct PathCandidate {
    PathKind kind = PathKind::direct_los;
    int cell_id = 0;
    std::optional<int> ris_id;  // set iff kind == ris_reflected
    double pl_db = 0.0;

    friend bool operator==(const PathCandidate&, const PathCandidate&) = default;
};

// Strict weak order: lower path loss first, then kind, cell id, panel id.
inline bool better_candidate(const PathCandidate& a, const PathCandidate& b)
{
    const int ra = a.ris_id.value_or(-1);
    const int rb = b.ris_id.value_or(-1);
    return std::tie(a.pl_db, a.kind, a.cell_id, ra) < std::tie(b.pl_db, b.kind, b.cell_id, rb);
}

struct PointEvaluation {
    std::vector<PathCandidate> candidates;
    PathCandidate min;
    std::uint32_t clamped_evaluations = 0;
    std::uint32_t ut_height_clamps = 0;
};

/**
 * Enumerates candidate paths for receiver points of one scene.
 *
 * Each cell contributes exactly one direct candidate: the LOS model when the
 * site sees the point, the NLOS model otherwise. With reflection enabled, each
 * (cell, panel) pair whose both legs are unobstructed and whose panel faces
 * both ends contributes a reflected candidate. Site-to-panel visibility does
 * not depend on the receiver and is resolved once at construction.
 */
class PathEvaluator {
public:
    PathEvaluator(const Scene& scene, bool ris_enabled) : scene_(scene), ris_enabled_(ris_enabled)
    {
        if (!ris_enabled_) {
            return;
        }
        const std::size_t np = scene.ris_panels.size();
        feed_visible_.resize(scene.cells.size() * np);
        for (std::size_t i = 0; i < scene.cells.size(); ++i) {
            for (std::size_t j = 0; j < np; ++j) {
                feed_visible_[i * np + j] = los_visible(scene.cells[i].site_position, scene.ris_panels[j].center, scene);
            }
        }
    }

    // When a model range error escapes, `failing_cell` receives the offending cell id.
    PointEvaluation evaluate(const Point3& p, int* failing_cell = nullptr) const
    {
        PointEvaluation out;
        const auto& cells = scene_.cells;
        const auto& panels = scene_.ris_panels;
        out.candidates.reserve(cells.size() * (1 + (ris_enabled_ ? panels.size() : 0)));

        for (const auto& cell : cells) {
            const bool visible = los_visible(cell.site_position, p, scene_);
            DirectPathLoss direct;
            try {
                direct = direct_path_loss(cell.site_position, p, cell.frequency_hz);
            } catch (const ModelRangeError&) {
                if (failing_cell) {
                    *failing_cell = cell.id;
                }
                throw;
            }
            out.clamped_evaluations += direct.distance_clamped ? 1 : 0;
            out.ut_height_clamps += (!visible && direct.ut_height_clamped) ? 1 : 0;
            out.candidates.push_back({visible ? PathKind::direct_los : PathKind::direct_nlos, cell.id, std::nullopt,
                                      visible ? direct.los_db : direct.nlos_db});
        }

        if (ris_enabled_) {
            const std::size_t np = panels.size();
            for (std::size_t j = 0; j < np; ++j) {
                const auto& panel = panels[j];
                if (!los_visible(panel.center, p, scene_)) {
                    continue;
                }
                for (std::size_t i = 0; i < cells.size(); ++i) {
                    if (!feed_visible_[i * np + j]) {
                        continue;
                    }
                    const auto& cell = cells[i];
                    const auto geometry = ris_angles(cell.site_position, panel, p);
                    const auto pl = ris::ffbc_path_loss(panel, cell.antenna_gain_dbi, scene_.options.ris_rx_gain_dbi,
                                                        geometry, speed_of_light_mps / cell.frequency_hz,
                                                        scene_.options.unit_cell_gain_override);
                    if (pl) {
                        out.candidates.push_back({PathKind::ris_reflected, cell.id, panel.id, pl->pl_db});
                    }
                }
            }
        }

        out.min = *std::min_element(out.candidates.begin(), out.candidates.end(), better_candidate);
        return out;
    }

private:
    const Scene& scene_;
    bool ris_enabled_;
    std::vector<char> feed_visible_;  // [cell][panel]
};

inline PointEvaluation evaluate_point(const Point3& p, const Scene& scene, bool ris_enabled)
{
    return PathEvaluator(scene, ris_enabled).evaluate(p);
}

// Per-point minimum path loss over a grid; masked (indoor) points hold nullopt.
struct CoverageMap {
    GridSpec grid;
    bool ris_enabled = false;
    std::vector<std::optional<PathCandidate>> winners;  // row-major, index y * nx + x
    std::uint64_t clamped_evaluations = 0;
    std::uint64_t ut_height_clamps = 0;

    const std::optional<PathCandidate>& at(std::size_t x, std::size_t y) const { return winners.at(y * grid.nx + x); }
    bool masked(std::size_t x, std::size_t y) const { return !at(x, y).has_value(); }

    std::optional<double> pl_min_db(std::size_t x, std::size_t y) const
    {
        const auto& w = at(x, y);
        return w ? std::optional<double>(w->pl_db) : std::nullopt;
    }

    // Unmasked values in index order.
    std::vector<double> unmasked_values() const
    {
        std::vector<double> v;
        v.reserve(winners.size());
        for (const auto& w : winners) {
            if (w) {
                v.push_back(w->pl_db);
            }
        }
        return v;
    }
};

struct SweepOptions {
    unsigned workers = 1;
};

/**
 * Evaluates every unmasked grid point. Rows are dealt to workers round-robin
 * and every point writes only its own slot, so the result does not depend on
 * the worker count. On a model range error the lowest failing index wins.
 */
inline CoverageMap sweep_grid(const Scene& scene, bool ris_enabled, SweepOptions options = {})
{
    const GridSpec& grid = scene.grid;
    const std::size_t total = grid.size();
    const unsigned workers = std::max(1u, std::min<unsigned>(options.workers, static_cast<unsigned>(grid.ny)));

    CoverageMap map;
    map.grid = grid;
    map.ris_enabled = ris_enabled;
    map.winners.assign(total, std::nullopt);
    std::vector<std::uint32_t> clamped(total, 0);
    std::vector<std::uint32_t> height_clamps(total, 0);

    const PathEvaluator evaluator(scene, ris_enabled);

    struct Failure {
        std::size_t index = 0;
        std::exception_ptr error;
    };
    std::vector<std::optional<Failure>> failures(workers);

    auto run = [&](unsigned w) {
        for (std::size_t y = w; y < grid.ny; y += workers) {
            for (std::size_t x = 0; x < grid.nx; ++x) {
                const std::size_t idx = y * grid.nx + x;
                const Point3 p = grid_point_position(grid, x, y);
                if (point_in_building(p, scene)) {
                    continue;
                }
                int cell = -1;
                try {
                    auto eval = evaluator.evaluate(p, &cell);
                    map.winners[idx] = eval.min;
                    clamped[idx] = eval.clamped_evaluations;
                    height_clamps[idx] = eval.ut_height_clamps;
                } catch (const ModelRangeError& e) {
                    failures[w] = Failure{idx, std::make_exception_ptr(SweepPointError(x, y, cell, e.what()))};
                    return;
                } catch (...) {
                    failures[w] = Failure{idx, std::current_exception()};
                    return;
                }
            }
        }
    };

    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back(run, w);
        }
        for (auto& t : pool) {
            t.join();
        }
    }

    const Failure* first = nullptr;
    for (const auto& f : failures) {
        if (f && (!first || f->index < first->index)) {
            first = &*f;
        }
    }
    if (first) {
        std::rethrow_exception(first->error);
    }

    for (std::size_t i = 0; i < total; ++i) {
        map.clamped_evaluations += clamped[i];
        map.ut_height_clamps += height_clamps[i];
    }
    return map;
}

struct HeightCase {
    double offset_m = 0.0;
    double ris_height_m = 0.0;
};

// h_RIS = h_BS - offset.
inline HeightCase make_height_case(double bs_height_m, double offset_m)
{
    const double h = bs_height_m - offset_m;
    if (!(h > 0.0)) {
        throw std::invalid_argument("height offset " + std::to_string(offset_m) + " m leaves panels at " +
                                    std::to_string(h) + " m; heights must be positive");
    }
    return {offset_m, h};
}

inline Scene apply_height_case(const Scene& scene, const HeightCase& hc)
{
    if (!(hc.ris_height_m > 0.0)) {
        throw std::invalid_argument("panel height must be positive");
    }
    Scene out = scene;
    for (auto& panel : out.ris_panels) {
        panel.center.z = hc.ris_height_m;
    }
    return out;
}

}  // namespace riscope

#endif  // RISCOPE_ENGINE_HPP
