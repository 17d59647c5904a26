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

#ifndef RISCOPE_OUTPUT_HPP
#define RISCOPE_OUTPUT_HPP

// Plot-ready writers: coverage CSV, CDF CSV, sweep table, JSON summaries.

#include "riscope/engine.hpp"
#include "riscope/metrics.hpp"
#include "riscope/scene.hpp"
#include "riscope/sweep.hpp"

#include <nlohmann/json.hpp>

#include <charconv>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>
#include <system_error>

namespace riscope::output {

inline constexpr std::string_view pl_map_header = "x,y,easting_m,northing_m,pl_min_db,winner_kind,cell_id,ris_id";
inline constexpr std::string_view cdf_header = "pl_db,cum_prob";
inline constexpr std::string_view sweep_header = "offset_m,ris_height_m,delta_pl_pct,mean_db,std_db";

// Shortest representation that round-trips; locale independent.
inline std::string format_number(double v)
{
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

inline std::string pl_map_csv(const CoverageMap& map)
{
    std::string out(pl_map_header);
    out += '\n';
    for (std::size_t y = 0; y < map.grid.ny; ++y) {
        for (std::size_t x = 0; x < map.grid.nx; ++x) {
            const auto& w = map.at(x, y);
            if (!w) {
                continue;
            }
            const Point3 p = grid_point_position(map.grid, x, y);
            out += std::to_string(x);
            out += ',';
            out += std::to_string(y);
            out += ',';
            out += format_number(p.x);
            out += ',';
            out += format_number(p.y);
            out += ',';
            out += format_number(w->pl_db);
            out += ',';
            out += to_string(w->kind);
            out += ',';
            out += std::to_string(w->cell_id);
            out += ',';
            if (w->ris_id) {
                out += std::to_string(*w->ris_id);
            }
            out += '\n';
        }
    }
    return out;
}

inline std::string cdf_csv(const CdfStats& stats)
{
    std::string out(cdf_header);
    out += '\n';
    for (const auto& pt : stats.cdf) {
        out += format_number(pt.pl_db);
        out += ',';
        out += format_number(pt.cum_prob);
        out += '\n';
    }
    return out;
}

inline std::string sweep_csv(const SweepReport& report)
{
    std::string out(sweep_header);
    out += '\n';
    for (const auto& r : report.rows) {
        out += format_number(r.offset_m) + ',' + format_number(r.ris_height_m) + ',' + format_number(r.delta_pl_pct) +
               ',' + format_number(r.mean_db) + ',' + format_number(r.std_db) + '\n';
    }
    return out;
}

inline nlohmann::json scene_echo(const Scene& scene)
{
    const auto& g = scene.grid;
    return {{"name", scene.meta.name},
            {"buildings", scene.buildings.size()},
            {"cells", scene.cells.size()},
            {"ris_panels", scene.ris_panels.size()},
            {"grid",
             {{"origin", {g.origin.x, g.origin.y}},
              {"cell_size_m", g.cell_size_m},
              {"nx", g.nx},
              {"ny", g.ny},
              {"receiver_height_m", g.receiver_height_m}}},
            {"unit_cell_gain_override",
             scene.options.unit_cell_gain_override ? nlohmann::json(*scene.options.unit_cell_gain_override)
                                                   : nlohmann::json(nullptr)},
            {"ris_rx_gain_dbi", scene.options.ris_rx_gain_dbi}};
}

inline nlohmann::json map_summary(const CoverageMap& map, const CdfStats& stats)
{
    std::size_t los = 0;
    std::size_t nlos = 0;
    std::size_t reflected = 0;
    for (const auto& w : map.winners) {
        if (!w) {
            continue;
        }
        switch (w->kind) {
        case PathKind::direct_los:
            ++los;
            break;
        case PathKind::direct_nlos:
            ++nlos;
            break;
        case PathKind::ris_reflected:
            ++reflected;
            break;
        }
    }
    return {{"ris_enabled", map.ris_enabled},
            {"points_total", map.winners.size()},
            {"points_unmasked", stats.count},
            {"points_masked", map.winners.size() - stats.count},
            {"mean_db", stats.mean_db},
            {"std_db", stats.std_db},
            {"std_kind", "population"},
            {"clamped_distance_evaluations", map.clamped_evaluations},
            {"nlos_ut_height_clamps", map.ut_height_clamps},
            {"winner_counts", {{"direct_los", los}, {"direct_nlos", nlos}, {"ris_reflected", reflected}}}};
}

inline std::string simulate_summary_json(const Scene& scene, const CoverageMap& map, const CdfStats& stats)
{
    nlohmann::json doc = map_summary(map, stats);
    doc["scenario"] = scene_echo(scene);
    return doc.dump(2) + "\n";
}

inline std::string sweep_summary_json(const Scene& scene, const HeightSweep& sweep)
{
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < sweep.report.rows.size(); ++i) {
        const auto& r = sweep.report.rows[i];
        nlohmann::json row = map_summary(sweep.maps[i], sweep.report.cases[i]);
        row["offset_m"] = r.offset_m;
        row["ris_height_m"] = r.ris_height_m;
        row["delta_pl_pct"] = r.delta_pl_pct;
        row["delta_pl_linear_pct"] = r.delta_pl_linear_pct;
        rows.push_back(row);
    }
    nlohmann::json doc;
    doc["scenario"] = scene_echo(scene);
    doc["bs_height_m"] = global_bs_height(scene);
    doc["baseline"] = map_summary(sweep.baseline, sweep.report.baseline);
    doc["cases"] = rows;
    doc["delta_pl_definition"] = "dB-domain ratio of summed minimum path loss (normative)";
    doc["delta_pl_linear_definition"] = "same ratio over linear path loss 10^(PL/10) (supplementary)";
    return doc.dump(2) + "\n";
}

// Writes to a sibling temporary, then renames over the target.
inline void write_file_atomic(const std::filesystem::path& path, const std::string& content)
{
    std::filesystem::path tmp = path;
    tmp += ".partial";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw std::runtime_error("cannot write " + tmp.string());
        }
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        out.flush();
        if (!out) {
            throw std::runtime_error("write failed for " + tmp.string());
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp);
        throw std::runtime_error("cannot rename " + tmp.string() + " to " + path.string() + ": " + ec.message());
    }
}

}  // namespace riscope::output

#endif  // RISCOPE_OUTPUT_HPP
