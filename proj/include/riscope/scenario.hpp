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

#ifndef RISCOPE_SCENARIO_HPP
#define RISCOPE_SCENARIO_HPP

// Scenario documents: strict JSON schema in, validated Scene out, and back.

#include "riscope/errors.hpp"
#include "riscope/scene.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <limits>
#include <set>
#include <sstream>
#include <string>
#include <string_view>

namespace riscope {

namespace scenario_detail {

using nlohmann::json;

// A JSON value together with its path from the document root, for error messages.
class Field {
public:
    Field(const json& value, std::string path) : value_(value), path_(std::move(path)) {}

    const json& value() const { return value_; }
    const std::string& path() const { return path_; }

    [[noreturn]] void fail(const std::string& message) const { throw ScenarioError(path_, message); }

    const Field& expect_object(std::initializer_list<std::string_view> allowed) const
    {
        if (!value_.is_object()) {
            fail("expected an object");
        }
        for (const auto& [key, _] : value_.items()) {
            if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
                throw ScenarioError(child_path(key), "unknown key");
            }
        }
        return *this;
    }

    bool has(std::string_view key) const { return value_.contains(key) && !value_.at(std::string(key)).is_null(); }

    Field operator[](std::string_view key) const
    {
        const std::string k(key);
        if (!value_.contains(k)) {
            throw ScenarioError(child_path(key), "missing required key");
        }
        return {value_.at(k), child_path(key)};
    }

    Field operator[](std::size_t index) const { return {value_.at(index), path_ + "[" + std::to_string(index) + "]"}; }

    std::size_t array_size() const
    {
        if (!value_.is_array()) {
            fail("expected an array");
        }
        return value_.size();
    }

    double number() const
    {
        if (!value_.is_number()) {
            fail("expected a number");
        }
        const double v = value_.get<double>();
        if (!std::isfinite(v)) {
            fail("must be finite");
        }
        return v;
    }

    long long integer() const
    {
        if (!value_.is_number_integer()) {
            fail("expected an integer");
        }
        return value_.get<long long>();
    }

    std::string string() const
    {
        if (!value_.is_string()) {
            fail("expected a string");
        }
        return value_.get<std::string>();
    }

    double number_or(std::string_view key, double fallback) const { return has(key) ? (*this)[key].number() : fallback; }

    Vec2 vec2() const
    {
        if (array_size() != 2) {
            fail("expected [x, y]");
        }
        return {(*this)[0].number(), (*this)[1].number()};
    }

    Vec3 vec3() const
    {
        if (array_size() != 3) {
            fail("expected [x, y, z]");
        }
        return {(*this)[0].number(), (*this)[1].number(), (*this)[2].number()};
    }

private:
    std::string child_path(std::string_view key) const { return path_.empty() ? std::string(key) : path_ + "." + std::string(key); }

    const json& value_;
    std::string path_;
};

inline void require(bool ok, const Field& f, const std::string& message)
{
    if (!ok) {
        f.fail(message);
    }
}

inline int read_id(const Field& f, std::set<long long>& seen)
{
    const Field id = f["id"];
    const long long v = id.integer();
    require(v >= 0 && v <= 0x7fffffff, id, "must be a non-negative 32-bit integer");
    require(seen.insert(v).second, id, "duplicate id " + std::to_string(v));
    return static_cast<int>(v);
}

inline int read_count(const Field& f, const char* what)
{
    const long long v = f.integer();
    require(v >= 1 && v <= 0x7fffffff, f, std::string(what) + " must be at least 1");
    return static_cast<int>(v);
}

inline GridSpec read_grid(const Field& f)
{
    f.expect_object({"origin", "cell_size_m", "nx", "ny", "receiver_height_m"});
    GridSpec g;
    g.origin = f["origin"].vec2();
    g.cell_size_m = f["cell_size_m"].number();
    require(g.cell_size_m > 0.0, f["cell_size_m"], "must be positive");
    g.nx = static_cast<std::size_t>(read_count(f["nx"], "nx"));
    g.ny = static_cast<std::size_t>(read_count(f["ny"], "ny"));
    g.receiver_height_m = f.number_or("receiver_height_m", 1.5);
    if (f.has("receiver_height_m")) {
        require(g.receiver_height_m > 0.0, f["receiver_height_m"], "must be positive");
    }
    return g;
}

inline Building read_building(const Field& f, std::set<long long>& ids)
{
    f.expect_object({"id", "footprint", "height_m"});
    const int id = read_id(f, ids);
    const Field fp = f["footprint"];
    const std::size_t n = fp.array_size();
    require(n >= 3, fp, "footprint needs at least 3 vertices");
    std::vector<Vec2> ring;
    ring.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        ring.push_back(fp[i].vec2());
    }
    require(polygon::is_simple(ring), fp, "footprint is not a simple polygon");
    require(polygon::signed_area(ring) > 0.0, fp, "footprint vertices must be counter-clockwise");
    const double h = f["height_m"].number();
    require(h > 0.0, f["height_m"], "must be positive");
    return Building(id, std::move(ring), h);
}

inline CellConfig read_cell(const Field& f, std::set<long long>& ids)
{
    f.expect_object({"id", "site_position", "frequency_hz", "tx_power_dbm", "antenna_gain_dbi", "feeder_loss_db",
                     "antenna_elements", "margins", "passthrough"});
    CellConfig c;
    c.id = read_id(f, ids);
    c.site_position = f["site_position"].vec3();
    require(c.site_position.z > 0.0, f["site_position"][2], "antenna height must be positive");
    c.frequency_hz = f["frequency_hz"].number();
    require(c.frequency_hz > 0.0, f["frequency_hz"], "must be positive");
    c.tx_power_dbm = f["tx_power_dbm"].number();
    c.antenna_gain_dbi = f["antenna_gain_dbi"].number();
    c.feeder_loss_db = f["feeder_loss_db"].number();
    if (f.has("antenna_elements")) {
        c.antenna_elements = read_count(f["antenna_elements"], "antenna_elements");
    }
    if (f.has("margins")) {
        const Field m = f["margins"];
        m.expect_object({"interference_db", "doppler_db", "fade_db", "shadow_db", "implementation_db"});
        c.margins = {m.number_or("interference_db", 0.0), m.number_or("doppler_db", 0.0), m.number_or("fade_db", 0.0),
                     m.number_or("shadow_db", 0.0), m.number_or("implementation_db", 0.0)};
    }
    if (f.has("passthrough")) {
        const Field p = f["passthrough"];
        p.expect_object({"bandwidth_hz", "used_subcarriers", "total_subcarriers", "sampling_factor", "reuse_factor",
                         "coherence_time_s", "coherence_bandwidth_hz", "spatial_duty_cycle_pct", "noise_factor_db"});
        auto& t = c.passthrough;
        t.bandwidth_hz = p.number_or("bandwidth_hz", 0.0);
        t.used_subcarriers = p.number_or("used_subcarriers", 0.0);
        t.total_subcarriers = p.number_or("total_subcarriers", 0.0);
        t.sampling_factor = p.number_or("sampling_factor", 0.0);
        t.reuse_factor = p.number_or("reuse_factor", 0.0);
        t.coherence_time_s = p.number_or("coherence_time_s", 0.0);
        t.coherence_bandwidth_hz = p.number_or("coherence_bandwidth_hz", 0.0);
        t.spatial_duty_cycle_pct = p.number_or("spatial_duty_cycle_pct", 0.0);
        t.noise_factor_db = p.number_or("noise_factor_db", 0.0);
    }
    return c;
}

// Normals within 1e-6 of unit length are accepted and renormalized. Vectors
// already unit to rounding are kept as written so that save/load round-trips.
inline constexpr double normal_length_tolerance = 1e-6;
inline constexpr double normal_keep_tolerance = 8.0 * std::numeric_limits<double>::epsilon();

inline RisPanel read_panel(const Field& f, std::set<long long>& ids, double default_exponent)
{
    f.expect_object({"id", "center", "unit_normal", "rows", "cols", "pitch_row_m", "pitch_col_m", "amplitude",
                     "pattern_exponent"});
    RisPanel r;
    r.id = read_id(f, ids);
    r.center = f["center"].vec3();
    require(r.center.z > 0.0, f["center"][2], "suspension height must be positive");
    const Vec3 n = f["unit_normal"].vec3();
    const double len = norm(n);
    require(std::abs(len - 1.0) <= normal_length_tolerance, f["unit_normal"], "must have unit length");
    r.unit_normal = std::abs(len - 1.0) <= normal_keep_tolerance ? n : (1.0 / len) * n;
    r.rows = read_count(f["rows"], "rows");
    r.cols = read_count(f["cols"], "cols");
    r.pitch_row_m = f["pitch_row_m"].number();
    require(r.pitch_row_m > 0.0, f["pitch_row_m"], "must be positive");
    r.pitch_col_m = f["pitch_col_m"].number();
    require(r.pitch_col_m > 0.0, f["pitch_col_m"], "must be positive");
    r.amplitude = f["amplitude"].number();
    require(r.amplitude > 0.0 && r.amplitude <= 1.0, f["amplitude"], "must lie in (0, 1]");
    r.pattern_exponent = f.number_or("pattern_exponent", default_exponent);
    if (f.has("pattern_exponent")) {
        require(r.pattern_exponent >= 0.0, f["pattern_exponent"], "must be non-negative");
    }
    return r;
}

inline ModelOptions read_options(const Field& f)
{
    f.expect_object({"unit_cell_gain_override", "pattern_exponent_default", "ris_rx_gain_dbi", "bs_height_m"});
    ModelOptions o;
    if (f.has("unit_cell_gain_override")) {
        o.unit_cell_gain_override = f["unit_cell_gain_override"].number();
        require(*o.unit_cell_gain_override > 0.0, f["unit_cell_gain_override"], "must be positive");
    }
    o.pattern_exponent_default = f.number_or("pattern_exponent_default", 1.0);
    require(o.pattern_exponent_default >= 0.0, f, "pattern_exponent_default must be non-negative");
    o.ris_rx_gain_dbi = f.number_or("ris_rx_gain_dbi", 0.0);
    if (f.has("bs_height_m")) {
        o.bs_height_m = f["bs_height_m"].number();
        require(*o.bs_height_m > 0.0, f["bs_height_m"], "must be positive");
    }
    return o;
}

inline std::string describe_parse_error(const std::string& text, const json::parse_error& e)
{
    std::size_t line = 1;
    std::size_t column = 1;
    const std::size_t end = std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0, text.size());
    for (std::size_t i = 0; i < end; ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return "parse error at line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + e.what();
}

inline json vec_json(Vec2 v) { return json::array({v.x, v.y}); }
inline json vec_json(Vec3 v) { return json::array({v.x, v.y, v.z}); }

}  // namespace scenario_detail

inline Scene parse_scenario(const std::string& text)
{
    using namespace scenario_detail;
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ScenarioError("", describe_parse_error(text, e));
    }

    const Field root(doc, "");
    root.expect_object({"meta", "grid", "buildings", "cells", "ris_panels", "model_options"});

    Scene scene;
    {
        const Field meta = root["meta"];
        meta.expect_object({"name", "description", "determinism"});
        scene.meta.name = meta["name"].string();
        if (meta.has("description")) {
            scene.meta.description = meta["description"].string();
        }
        if (meta.has("determinism")) {
            scene.meta.determinism = meta["determinism"].string();
        }
    }
    scene.grid = read_grid(root["grid"]);
    if (root.has("model_options")) {
        scene.options = read_options(root["model_options"]);
    }

    std::set<long long> ids;
    const Field buildings = root["buildings"];
    for (std::size_t i = 0, n = buildings.array_size(); i < n; ++i) {
        scene.buildings.push_back(read_building(buildings[i], ids));
    }
    ids.clear();
    const Field cells = root["cells"];
    const std::size_t ncell = cells.array_size();
    require(ncell >= 1, cells, "at least one cell is required");
    for (std::size_t i = 0; i < ncell; ++i) {
        scene.cells.push_back(read_cell(cells[i], ids));
    }
    ids.clear();
    const Field panels = root["ris_panels"];
    for (std::size_t i = 0, n = panels.array_size(); i < n; ++i) {
        scene.ris_panels.push_back(read_panel(panels[i], ids, scene.options.pattern_exponent_default));
    }
    return scene;
}

inline Scene load_scenario(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ScenarioError("", "cannot open scenario file " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scenario(buf.str());
}

inline nlohmann::json scenario_to_json(const Scene& scene)
{
    using scenario_detail::vec_json;
    using nlohmann::json;

    json doc;
    doc["meta"] = {{"name", scene.meta.name}, {"description", scene.meta.description},
                   {"determinism", scene.meta.determinism}};
    const auto& g = scene.grid;
    doc["grid"] = {{"origin", vec_json(g.origin)}, {"cell_size_m", g.cell_size_m}, {"nx", g.nx}, {"ny", g.ny},
                   {"receiver_height_m", g.receiver_height_m}};

    json buildings = json::array();
    for (const auto& b : scene.buildings) {
        json fp = json::array();
        for (const auto& v : b.footprint()) {
            fp.push_back(vec_json(v));
        }
        buildings.push_back({{"id", b.id()}, {"footprint", fp}, {"height_m", b.height_m()}});
    }
    doc["buildings"] = buildings;

    json cells = json::array();
    for (const auto& c : scene.cells) {
        const auto& m = c.margins;
        const auto& p = c.passthrough;
        cells.push_back({{"id", c.id},
                         {"site_position", vec_json(c.site_position)},
                         {"frequency_hz", c.frequency_hz},
                         {"tx_power_dbm", c.tx_power_dbm},
                         {"antenna_gain_dbi", c.antenna_gain_dbi},
                         {"feeder_loss_db", c.feeder_loss_db},
                         {"antenna_elements", c.antenna_elements},
                         {"margins",
                          {{"interference_db", m.interference_db},
                           {"doppler_db", m.doppler_db},
                           {"fade_db", m.fade_db},
                           {"shadow_db", m.shadow_db},
                           {"implementation_db", m.implementation_db}}},
                         {"passthrough",
                          {{"bandwidth_hz", p.bandwidth_hz},
                           {"used_subcarriers", p.used_subcarriers},
                           {"total_subcarriers", p.total_subcarriers},
                           {"sampling_factor", p.sampling_factor},
                           {"reuse_factor", p.reuse_factor},
                           {"coherence_time_s", p.coherence_time_s},
                           {"coherence_bandwidth_hz", p.coherence_bandwidth_hz},
                           {"spatial_duty_cycle_pct", p.spatial_duty_cycle_pct},
                           {"noise_factor_db", p.noise_factor_db}}}});
    }
    doc["cells"] = cells;

    json panels = json::array();
    for (const auto& r : scene.ris_panels) {
        panels.push_back({{"id", r.id},
                          {"center", vec_json(r.center)},
                          {"unit_normal", vec_json(r.unit_normal)},
                          {"rows", r.rows},
                          {"cols", r.cols},
                          {"pitch_row_m", r.pitch_row_m},
                          {"pitch_col_m", r.pitch_col_m},
                          {"amplitude", r.amplitude},
                          {"pattern_exponent", r.pattern_exponent}});
    }
    doc["ris_panels"] = panels;

    const auto& o = scene.options;
    json options = {{"pattern_exponent_default", o.pattern_exponent_default}, {"ris_rx_gain_dbi", o.ris_rx_gain_dbi}};
    options["unit_cell_gain_override"] =
        o.unit_cell_gain_override ? json(*o.unit_cell_gain_override) : json(nullptr);
    if (o.bs_height_m) {
        options["bs_height_m"] = *o.bs_height_m;
    }
    doc["model_options"] = options;
    return doc;
}

inline std::string write_scenario(const Scene& scene) { return scenario_to_json(scene).dump(2) + "\n"; }

}  // namespace riscope

#endif  // RISCOPE_SCENARIO_HPP
