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

#ifndef RISCOPE_COMMANDS_HPP
#define RISCOPE_COMMANDS_HPP

// The `simulate` and `height-sweep` experiments, independent of argument parsing.

#include "riscope/engine.hpp"
#include "riscope/errors.hpp"
#include "riscope/metrics.hpp"
#include "riscope/output.hpp"
#include "riscope/scenario.hpp"
#include "riscope/sweep.hpp"

#include <charconv>
#include <cmath>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace riscope {

// Process exit codes of the command-line tool.
enum class ExitCode : int { success = 0, usage = 1, scenario_invalid = 2, model_range = 3 };

struct SimulateOptions {
    std::filesystem::path scenario;
    bool ris_enabled = false;
    std::filesystem::path out_dir = ".";
    unsigned workers = 1;
};

struct HeightSweepOptions {
    std::filesystem::path scenario;
    std::vector<double> offsets_m{0.0, 10.0, 20.0, 30.0};
    std::filesystem::path out_dir = ".";
    unsigned workers = 1;
};

// "0,10,20.5" -> {0, 10, 20.5}
inline std::vector<double> parse_offsets(const std::string& text)
{
    std::vector<double> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = std::min(text.find(',', pos), text.size());
        const std::string token = text.substr(pos, comma - pos);
        double v = 0.0;
        const auto* first = token.data();
        const auto* last = token.data() + token.size();
        const auto res = std::from_chars(first, last, v);
        if (token.empty() || res.ec != std::errc() || res.ptr != last || !std::isfinite(v)) {
            throw std::invalid_argument("bad offset list '" + text + "'");
        }
        out.push_back(v);
        pos = comma + 1;
    }
    return out;
}

// Offset label used in per-case file names, e.g. 10 -> "10", 2.5 -> "2.5".
inline std::string offset_label(double offset_m) { return output::format_number(offset_m); }

struct OutputFile {
    std::string name;
    std::string content;
};

inline std::vector<OutputFile> simulate_outputs(const Scene& scene, bool ris_enabled, unsigned workers)
{
    const CoverageMap map = sweep_grid(scene, ris_enabled, {workers});
    const CdfStats stats = cdf_stats(map);
    return {{"pl_map.csv", output::pl_map_csv(map)},
            {"cdf.csv", output::cdf_csv(stats)},
            {"summary.json", output::simulate_summary_json(scene, map, stats)}};
}

inline std::vector<OutputFile> height_sweep_outputs(const Scene& scene, const std::vector<double>& offsets,
                                                    unsigned workers)
{
    const HeightSweep sweep = height_sweep(scene, offsets, {workers});
    std::vector<OutputFile> files;
    files.push_back({"sweep.csv", output::sweep_csv(sweep.report)});
    files.push_back({"sweep_summary.json", output::sweep_summary_json(scene, sweep)});
    files.push_back({"pl_map_nris.csv", output::pl_map_csv(sweep.baseline)});
    files.push_back({"cdf_nris.csv", output::cdf_csv(sweep.report.baseline)});
    for (std::size_t i = 0; i < sweep.cases.size(); ++i) {
        const std::string label = offset_label(sweep.cases[i].offset_m);
        files.push_back({"pl_map_offset_" + label + ".csv", output::pl_map_csv(sweep.maps[i])});
        files.push_back({"cdf_offset_" + label + ".csv", output::cdf_csv(sweep.report.cases[i])});
    }
    return files;
}

// Everything is computed before the first file is written.
inline void write_outputs(const std::filesystem::path& out_dir, const std::vector<OutputFile>& files)
{
    std::filesystem::create_directories(out_dir);
    for (const auto& f : files) {
        output::write_file_atomic(out_dir / f.name, f.content);
    }
}

inline void run_simulate(const SimulateOptions& opts)
{
    const Scene scene = load_scenario(opts.scenario);
    write_outputs(opts.out_dir, simulate_outputs(scene, opts.ris_enabled, opts.workers));
}

inline void run_height_sweep(const HeightSweepOptions& opts)
{
    const Scene scene = load_scenario(opts.scenario);
    write_outputs(opts.out_dir, height_sweep_outputs(scene, opts.offsets_m, opts.workers));
}

}  // namespace riscope

#endif  // RISCOPE_COMMANDS_HPP
