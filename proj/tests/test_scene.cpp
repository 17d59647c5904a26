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

#include "oracles.hpp"
#include "riscope/scene.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <set>

using namespace riscope;

namespace {

Building square(int id, double x0, double y0, double x1, double y1, double h)
{
    return Building(id, {{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}}, h);
}

Scene scene_with(std::vector<Building> buildings)
{
    Scene s;
    s.buildings = std::move(buildings);
    return s;
}

}  // namespace

TEST(LosVisible, EmptySceneSeesEverything)
{
    const Scene s;
    EXPECT_TRUE(los_visible({0, 0, 10}, {20, 0, 10}, s));
    EXPECT_TRUE(los_visible({-5, 3, 0.5}, {400, -80, 60}, s));
}

TEST(LosVisible, SegmentThroughPrismIsBlocked)
{
    const Scene s = scene_with({square(1, 5, -5, 15, 5, 30)});
    EXPECT_FALSE(los_visible({0, 0, 10}, {20, 0, 10}, s));
}

TEST(LosVisible, ClearsRoofByTenCentimetres)
{
    const Building b = square(1, 5, -5, 15, 5, 30);
    const Scene s = scene_with({b});
    const Point3 a{0, 0, 30.1};
    const Point3 c{20, 0, 30.1};
    EXPECT_TRUE(oracle::sampled_visible(a, c, {{5, -5, 15, 5, 30}}));
    EXPECT_TRUE(los_visible(a, c, s));
    // Segment that dips just under the roof is caught.
    EXPECT_FALSE(los_visible({0, 0, 29.9}, {20, 0, 29.9}, s));
}

TEST(LosVisible, GrazingAFaceIsNotOcclusion)
{
    const Scene s = scene_with({square(1, 0, 0, 10, 10, 20)});
    // Runs along the wall x = 10.
    EXPECT_TRUE(los_visible({10, -5, 5}, {10, 15, 5}, s));
    // Starts on the wall and leaves outward.
    EXPECT_TRUE(los_visible({10, 5, 5}, {30, 5, 5}, s));
    // Starts on the roof and rises.
    EXPECT_TRUE(los_visible({5, 5, 20}, {50, 5, 40}, s));
    // Starts on the roof and sinks across the interior.
    EXPECT_FALSE(los_visible({5, 5, 20}, {-20, 5, 1}, s));
    // Touches a vertical edge only.
    EXPECT_TRUE(los_visible({0, -10, 5}, {-10, 0, 5}, s));
}

TEST(LosVisible, LShapedFootprintNotch)
{
    // L-shape missing the top-right quadrant [5,10]x[5,10].
    const Building l(1, {{0, 0}, {10, 0}, {10, 5}, {5, 5}, {5, 10}, {0, 10}}, 20);
    const Scene s = scene_with({l});
    EXPECT_TRUE(los_visible({7.5, 20, 3}, {7.5, 6, 3}, s));    // into the notch from above
    EXPECT_FALSE(los_visible({7.5, 20, 3}, {7.5, -5, 3}, s));  // through the lower arm
    EXPECT_TRUE(los_visible({20, 7.5, 3}, {5.5, 7.5, 3}, s));
    EXPECT_FALSE(los_visible({20, 7.5, 3}, {-5, 7.5, 3}, s));

    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-5.0, 15.0);
    std::uniform_real_distribution<double> z(0.0, 30.0);
    const std::vector<Vec2> ring(l.footprint().begin(), l.footprint().end());
    int compared = 0;
    for (int i = 0; i < 300; ++i) {
        const Point3 a{u(rng), u(rng), z(rng)};
        const Point3 b{u(rng), u(rng), z(rng)};
        if (point_in_building(a, s) || point_in_building(b, s)) {
            continue;
        }
        EXPECT_EQ(los_visible(a, b, s), oracle::sampled_visible_polygon(a, b, ring, 20.0)) << i;
        ++compared;
    }
    EXPECT_GT(compared, 100);
}

TEST(LosVisible, VerticalSegment)
{
    const Scene s = scene_with({square(1, 0, 0, 10, 10, 20)});
    EXPECT_FALSE(los_visible({5, 5, 1}, {5, 5, 40}, s));
    EXPECT_TRUE(los_visible({15, 5, 1}, {15, 5, 40}, s));
    EXPECT_TRUE(los_visible({5, 5, 20}, {5, 5, 40}, s));
}

TEST(LosVisible, PropertySymmetryAndMonotonicity)
{
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(0.0, 100.0);
    std::uniform_real_distribution<double> z(0.5, 50.0);
    for (int trial = 0; trial < 500; ++trial) {
        Scene s;
        const int n = 1 + trial % 5;
        for (int k = 0; k < n; ++k) {
            const auto b = oracle::random_box(rng, 100.0);
            s.buildings.push_back(oracle::to_building(k, b));
        }
        const Point3 a{u(rng), u(rng), z(rng)};
        const Point3 b{u(rng), u(rng), z(rng)};
        const bool v = los_visible(a, b, s);
        ASSERT_EQ(v, los_visible(b, a, s));
        if (v) {
            for (std::size_t drop = 0; drop < s.buildings.size(); ++drop) {
                Scene fewer = s;
                fewer.buildings.erase(fewer.buildings.begin() + static_cast<long>(drop));
                ASSERT_TRUE(los_visible(a, b, fewer));
            }
        }
    }
}

TEST(PointInBuilding, StrictInterior)
{
    const Scene s = scene_with({square(1, 0, 0, 10, 10, 20)});
    EXPECT_FALSE(point_in_building({5, 5, 25}, s));
    EXPECT_TRUE(point_in_building({5, 5, 10}, s));
    EXPECT_FALSE(point_in_building({10, 5, 10}, s));
    EXPECT_FALSE(point_in_building({5, 5, 20}, s));
    EXPECT_FALSE(point_in_building({5, 5, 0}, s));
    EXPECT_FALSE(point_in_building({-1, 5, 10}, s));
}

TEST(GridPointPosition, CellCenters)
{
    GridSpec g;
    g.origin = {0, 0};
    g.cell_size_m = 10;
    g.nx = 4;
    g.ny = 3;
    g.receiver_height_m = 1.5;
    EXPECT_EQ(grid_point_position(g, 0, 0), (Point3{5, 5, 1.5}));
    EXPECT_EQ(grid_point_position(g, 3, 2), (Point3{35, 25, 1.5}));
    EXPECT_THROW(grid_point_position(g, 4, 0), std::out_of_range);
    EXPECT_THROW(grid_point_position(g, 0, 3), std::out_of_range);

    std::set<std::tuple<double, double>> seen;
    for (std::size_t y = 0; y < g.ny; ++y) {
        for (std::size_t x = 0; x < g.nx; ++x) {
            const auto p = grid_point_position(g, x, y);
            EXPECT_TRUE(seen.emplace(p.x, p.y).second);
        }
    }
}

TEST(RisAngles, Examples)
{
    RisPanel panel;
    panel.center = {0, 0, 0};
    panel.unit_normal = {1, 0, 0};

    auto g = ris_angles({10, 0, 0}, panel, {5, 0, 0});
    EXPECT_DOUBLE_EQ(g.theta_t, 0.0);
    EXPECT_DOUBLE_EQ(g.theta_r, 0.0);

    g = ris_angles({0, 7, 3}, panel, {5, 0, 0});
    EXPECT_NEAR(g.theta_t, std::numbers::pi / 2, 1e-15);

    g = ris_angles({10, 0, 0}, panel, {10, 10, 0});
    EXPECT_DOUBLE_EQ(g.theta_t, 0.0);
    EXPECT_NEAR(g.theta_r, std::numbers::pi / 4, 1e-15);
    EXPECT_DOUBLE_EQ(g.d1_m, 10.0);
    EXPECT_NEAR(g.d2_m, std::sqrt(200.0), 1e-12);

    g = ris_angles({-3, 1, 0}, panel, {10, 10, 0});
    EXPECT_GT(g.theta_t, std::numbers::pi / 2);
    EXPECT_LE(g.theta_t, std::numbers::pi);
}

TEST(RisAngles, SwapIsExact)
{
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-100.0, 100.0);
    RisPanel panel;
    panel.center = {1, 2, 30};
    panel.unit_normal = {0, 1, 0};
    for (int i = 0; i < 1000; ++i) {
        const Point3 tx{u(rng), u(rng), u(rng)};
        const Point3 rx{u(rng), u(rng), u(rng)};
        const auto f = ris_angles(tx, panel, rx);
        const auto b = ris_angles(rx, panel, tx);
        ASSERT_EQ(f.theta_t, b.theta_r);
        ASSERT_EQ(f.theta_r, b.theta_t);
        ASSERT_EQ(f.d1_m, b.d2_m);
        ASSERT_EQ(f.d2_m, b.d1_m);
    }
}

TEST(Polygon, SimpleAndOrientation)
{
    const std::vector<Vec2> ccw{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
    const std::vector<Vec2> bowtie{{0, 0}, {1, 1}, {1, 0}, {0, 1}};
    const std::vector<Vec2> collinear{{0, 0}, {1, 0}, {2, 0}};
    EXPECT_TRUE(polygon::is_simple(ccw));
    EXPECT_GT(polygon::signed_area(ccw), 0.0);
    EXPECT_FALSE(polygon::is_simple(bowtie));
    EXPECT_FALSE(polygon::is_simple(collinear));
}

TEST(GlobalBsHeight, ExplicitOrCommon)
{
    Scene s;
    CellConfig c;
    c.site_position = {0, 0, 42.5};
    s.cells = {c, c};
    EXPECT_DOUBLE_EQ(global_bs_height(s), 42.5);
    s.cells[1].site_position.z = 30;
    EXPECT_THROW(global_bs_height(s), std::invalid_argument);
    s.options.bs_height_m = 40.0;
    EXPECT_DOUBLE_EQ(global_bs_height(s), 40.0);
}
