#include <cmath>

#include <gtest/gtest.h>

#include "rift/error.hpp"
#include "rift/generators.hpp"
#include "rift/geometry.hpp"

namespace {

using namespace rift;

const double kRoot2 = std::sqrt(2.0);

TileRegion ell() { return TileRegion({{0, 0}, {1, 0}, {1, 1}}); }

TEST(Pinch, Examples)
{
    EXPECT_EQ(pinch_corners(TileRegion({{0, 0}, {1, 1}})), (std::vector<Cell>{Cell{1, 1}}));
    EXPECT_TRUE(pinch_corners(ell()).empty());
    EXPECT_TRUE(pinch_corners(TileRegion({{0, 0}, {1, 0}, {0, 1}, {1, 1}})).empty());
    // Anti-diagonal pinch.
    EXPECT_EQ(pinch_corners(TileRegion({{1, 0}, {0, 1}})), (std::vector<Cell>{Cell{1, 1}}));
}

TEST(Region, Walkability)
{
    TileRegion pinched({{0, 0}, {1, 1}});
    EXPECT_TRUE(pinched.walkable({0.5, 0.5}));
    EXPECT_TRUE(pinched.walkable({1.0, 0.5}));
    EXPECT_FALSE(pinched.walkable({1.0, 1.0}));
    EXPECT_FALSE(pinched.walkable({1.5, 0.5}));
    EXPECT_TRUE(ell().walkable({1.0, 1.0}));
    EXPECT_EQ(ell().reflex_corners(), (std::vector<Cell>{Cell{1, 1}}));
}

TEST(Geodesic, SamePointIsZero)
{
    EXPECT_DOUBLE_EQ(*euclidean_geodesic(ell(), {0.5, 0.5}, {0.5, 0.5}), 0.0);
    EXPECT_DOUBLE_EQ(*euclidean_geodesic(ell(), {1.25, 1.75}, {1.25, 1.75}), 0.0);
}

TEST(Geodesic, DiagonalThroughNonPinchCorner)
{
    EXPECT_NEAR(*euclidean_geodesic(ell(), {0.5, 0.5}, {1.5, 1.5}), kRoot2, 1e-12);
}

TEST(Geodesic, PinchBlocks)
{
    EXPECT_FALSE(euclidean_geodesic(TileRegion({{0, 0}, {1, 1}}), {0.5, 0.5}, {1.5, 1.5}).has_value());
}

TEST(Geodesic, BendsAroundReflexCorner)
{
    // U shape: from the bottom of the left arm to the bottom of the right arm.
    TileRegion u({{0, 0}, {1, 0}, {2, 0}, {0, 1}, {2, 1}, {0, 2}, {2, 2}});
    const double d = *euclidean_geodesic(u, {0.5, 2.5}, {2.5, 2.5});
    // Down to corner (1,1), across to (2,1), up again.
    const double expected = std::hypot(0.5, 1.5) + 1.0 + std::hypot(0.5, 1.5);
    EXPECT_NEAR(d, expected, 1e-12);
}

TEST(Geodesic, OutsidePointThrows)
{
    try {
        euclidean_geodesic(ell(), {0.5, 1.5}, {0.5, 0.5});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::point_outside_region);
    }
}

TEST(GridDistance, Examples)
{
    EXPECT_EQ(grid_distance(ell(), {0, 0}, {0, 0}), 0);
    EXPECT_EQ(grid_distance(TileRegion({{0, 0}, {1, 0}, {2, 0}}), {0, 0}, {2, 0}), 2);
    EXPECT_FALSE(grid_distance(TileRegion({{0, 0}, {1, 1}}), {0, 0}, {1, 1}).has_value());
    EXPECT_THROW(grid_distance(ell(), {0, 0}, {5, 5}), Error);
}

TEST(FineGrid, Examples)
{
    EXPECT_DOUBLE_EQ(*fine_grid_distance(ell(), {0.5, 0.5}, {0.5, 0.5}, 4), 0.0);
    TileRegion corridor({{0, 0}, {1, 0}, {2, 0}});
    for (int k : {2, 4, 16})
        EXPECT_DOUBLE_EQ(*fine_grid_distance(corridor, {0.5, 0.5}, {2.5, 0.5}, k), 2.0);
    const double fine = *fine_grid_distance(ell(), {0.5, 0.5}, {1.5, 1.5}, 16);
    EXPECT_GE(fine, kRoot2 - 1e-12);
    EXPECT_LE(fine, 1.09 * kRoot2);
    EXPECT_FALSE(fine_grid_distance(TileRegion({{0, 0}, {1, 1}}), {0.5, 0.5}, {1.5, 1.5}, 16).has_value());
}

TEST(FineGrid, Preconditions)
{
    EXPECT_THROW(fine_grid_distance(ell(), {0.5, 0.5}, {1.5, 1.5}, 1), Error);
    EXPECT_THROW(fine_grid_distance(ell(), {0.3, 0.5}, {1.5, 1.5}, 4), Error);
}

TEST(GeodesicProperties, MetricAxiomsOnRandomRegions)
{
    Rng rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        TileRegion region = random_region(rng, 5, 5, 0.7);
        std::vector<Point> pts;
        std::vector<Cell> tiles(region.tiles().begin(), region.tiles().end());
        for (int i = 0; i < 5; ++i)
            pts.push_back(center(tiles[std::uniform_int_distribution<std::size_t>(0, tiles.size() - 1)(rng)]));
        GeodesicMetric metric(region);
        auto d = metric.all_pairs(pts);
        for (std::size_t i = 0; i < pts.size(); ++i)
            for (std::size_t j = 0; j < pts.size(); ++j) {
                ASSERT_EQ(d[i][j].has_value(), d[j][i].has_value());
                if (!d[i][j])
                    continue;
                EXPECT_NEAR(*d[i][j], *d[j][i], 1e-12);
                EXPECT_EQ(*d[i][j] < kGeometryEps, pts[i] == pts[j]);
                auto single = euclidean_geodesic(region, pts[i], pts[j]);
                ASSERT_TRUE(single.has_value());
                EXPECT_NEAR(*single, *d[i][j], 1e-9);
                for (std::size_t k = 0; k < pts.size(); ++k)
                    if (d[i][k] && d[k][j])
                        EXPECT_LE(*d[i][j], *d[i][k] + *d[k][j] + 1e-9);
            }
    }
}

TEST(GeodesicProperties, NeverLongerThanTileSteps)
{
    Rng rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        TileRegion region = random_region(rng, 6, 6, 0.6);
        std::vector<Cell> tiles(region.tiles().begin(), region.tiles().end());
        std::uniform_int_distribution<std::size_t> pick(0, tiles.size() - 1);
        Cell a = tiles[pick(rng)], b = tiles[pick(rng)];
        auto steps = grid_distance(region, a, b);
        auto exact = euclidean_geodesic(region, center(a), center(b));
        auto fine = fine_grid_distance(region, center(a), center(b), 4);
        ASSERT_EQ(steps.has_value(), exact.has_value());
        ASSERT_EQ(fine.has_value(), exact.has_value());
        if (!steps)
            continue;
        EXPECT_LE(*exact, *steps + kGeometryEps);
        EXPECT_GE(*exact, std::hypot(a.x - b.x, a.y - b.y) - kGeometryEps);
        EXPECT_GE(*fine, *exact - kGeometryEps);
    }
}

}  // namespace
