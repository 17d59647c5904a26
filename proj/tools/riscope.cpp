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

#include "riscope/commands.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace {

int report(riscope::ExitCode code, const std::string& what)
{
    std::cerr << "riscope: " << what << '\n';
    return static_cast<int>(code);
}

}  // namespace

int main(int argc, char** argv)
{
    using namespace riscope;

    CLI::App app{"riscope: urban path-loss coverage with reflecting surfaces"};
    app.require_subcommand(1);

    SimulateOptions sim;
    std::string ris_flag;
    auto* simulate = app.add_subcommand("simulate", "Minimum path-loss map for one configuration");
    simulate->add_option("--scenario", sim.scenario, "Scenario JSON file")->required();
    simulate->add_option("--ris", ris_flag, "Include reflected paths")->required()->check(CLI::IsMember({"on", "off"}));
    simulate->add_option("--workers", sim.workers, "Worker threads")->check(CLI::Range(1u, 1024u));
    simulate->add_option("--out-dir", sim.out_dir, "Output directory");

    HeightSweepOptions sweep;
    std::string offsets = "0,10,20,30";
    auto* height = app.add_subcommand("height-sweep", "Panel suspension-height sweep against the no-panel baseline");
    height->add_option("--scenario", sweep.scenario, "Scenario JSON file")->required();
    height->add_option("--offsets", offsets, "Comma-separated offsets below the antenna height, metres")
        ->capture_default_str();
    height->add_option("--workers", sweep.workers, "Worker threads")->check(CLI::Range(1u, 1024u));
    height->add_option("--out-dir", sweep.out_dir, "Output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : static_cast<int>(ExitCode::usage);
    }

    try {
        if (*simulate) {
            sim.ris_enabled = ris_flag == "on";
            run_simulate(sim);
        } else {
            sweep.offsets_m = parse_offsets(offsets);
            run_height_sweep(sweep);
        }
    } catch (const ScenarioError& e) {
        return report(ExitCode::scenario_invalid, std::string("invalid scenario: ") + e.what());
    } catch (const ModelRangeError& e) {
        return report(ExitCode::model_range, std::string("model range error: ") + e.what());
    } catch (const std::exception& e) {
        return report(ExitCode::usage, e.what());
    }
    return static_cast<int>(ExitCode::success);
}
