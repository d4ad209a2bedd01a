#include <cmath>

#include <gtest/gtest.h>

#include "rift/crystal_bonds.hpp"
#include "rift/error.hpp"
#include "rift/generators.hpp"

namespace {

using namespace rift;

TileRegion row(int n)
{
    std::vector<Cell> tiles;
    for (int x = 0; x < n; ++x)
        tiles.push_back({x, 0});
    return TileRegion(tiles);
}

// A at x=1, B at x=0, C at x=2, bonds A-B and A-C.
BondBoard collinear(std::optional<Cell> start)
{
    return BondBoard(row(3), {{1, 0}, {0, 0}, {2, 0}}, start, {{0, 1}, {0, 2}}, DistanceModel::grid_steps);
}

TEST(BondBoard, Validation)
{
    EXPECT_THROW(BondBoard(row(2), {{0, 0}, {0, 0}}, std::nullopt, {}, DistanceModel::grid_steps), Error);
    EXPECT_THROW(BondBoard(row(2), {{5, 0}}, std::nullopt, {}, DistanceModel::grid_steps), Error);
    EXPECT_THROW(BondBoard(row(2), {{0, 0}}, Cell{3, 3}, {}, DistanceModel::grid_steps), Error);
    EXPECT_THROW(BondBoard(row(2), {{0, 0}, {1, 0}}, std::nullopt, {{0, 2}}, DistanceModel::grid_steps), Error);
    EXPECT_THROW(BondBoard(row(2), {{0, 0}, {1, 0}}, std::nullopt, {{0, 0}}, DistanceModel::grid_steps), Error);
    EXPECT_THROW(BondBoard(row(2), {{0, 0}, {1, 0}}, std::nullopt, {{0, 1}, {1, 0}}, DistanceModel::grid_steps),
                 Error);
    // Cycle among three crystals.
    EXPECT_THROW(BondBoard(row(3), {{0, 0}, {1, 0}, {2, 0}}, std::nullopt, {{0, 1}, {1, 2}, {0, 2}},
                           DistanceModel::grid_steps),
                 Error);
}

TEST(BondBoard, Connectivity)
{
    EXPECT_TRUE(collinear(std::nullopt).connected());
    BondBoard forest(row(4), {{0, 0}, {1, 0}, {2, 0}, {3, 0}}, std::nullopt, {{0, 1}, {2, 3}},
                     DistanceModel::grid_steps);
    EXPECT_FALSE(forest.connected());
    EXPECT_FALSE(forest.bonds_connected());
    BondBoard isolated(row(3), {{0, 0}, {1, 0}, {2, 0}}, std::nullopt, {{0, 1}}, DistanceModel::grid_steps);
    EXPECT_FALSE(isolated.connected());
    EXPECT_TRUE(isolated.bonds_connected());
}

TEST(Metric, GridAndEuclideanModels)
{
    TileRegion ell({{0, 0}, {1, 0}, {1, 1}});
    BondBoard grid(ell, {{0, 0}, {1, 1}}, Cell{1, 0}, {{0, 1}}, DistanceModel::grid_steps);
    auto d = crystal_metric(grid);
    ASSERT_EQ(d.size(), 3u);
    EXPECT_DOUBLE_EQ(d[0][1], 2.0);
    EXPECT_DOUBLE_EQ(d[0][2], 1.0);
    EXPECT_DOUBLE_EQ(d[2][1], 1.0);
    EXPECT_EQ(start_index(grid), 2);
    auto e = crystal_metric(grid.with_model(DistanceModel::euclidean));
    EXPECT_NEAR(e[0][1], std::sqrt(2.0), 1e-12);
    EXPECT_EQ(start_index(collinear(std::nullopt)), std::nullopt);
}

TEST(Metric, UnreachableCrystal)
{
    BondBoard split(TileRegion({{0, 0}, {2, 0}}), {{0, 0}, {2, 0}}, std::nullopt, {}, DistanceModel::grid_steps);
    try {
        crystal_metric(split);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::unreachable_crystal);
    }
    BondBoard pinched(TileRegion({{0, 0}, {1, 1}}), {{0, 0}, {1, 1}}, std::nullopt, {}, DistanceModel::euclidean);
    EXPECT_THROW(crystal_metric(pinched), Error);
}

TEST(Solve, CollinearFromEitherEnd)
{
    BondWalk from_b = solve_crystal_bonds(collinear(Cell{0, 0}));
    EXPECT_DOUBLE_EQ(from_b.total_length, 2.0);
    EXPECT_EQ(from_b.visit_sequence, (std::vector<int>{1, 0, 2}));
    EXPECT_DOUBLE_EQ(solve_crystal_bonds(collinear(Cell{1, 0})).total_length, 3.0);
    EXPECT_DOUBLE_EQ(solve_crystal_bonds(collinear(std::nullopt)).total_length, 2.0);
}

TEST(Solve, SingleBondAndNoBonds)
{
    BondBoard one(row(4), {{0, 0}, {3, 0}}, Cell{1, 0}, {{0, 1}}, DistanceModel::grid_steps);
    EXPECT_DOUBLE_EQ(solve_crystal_bonds(one).total_length, 4.0);
    EXPECT_DOUBLE_EQ(brute_force_crystal_bonds(one).total_length, 4.0);
    BondBoard none(row(2), {{0, 0}}, Cell{1, 0}, {}, DistanceModel::grid_steps);
    EXPECT_DOUBLE_EQ(brute_force_crystal_bonds(none).total_length, 0.0);
}

TEST(Solve, DisconnectedBondsNeedTheOracle)
{
    BondBoard forest(row(4), {{0, 0}, {1, 0}, {2, 0}, {3, 0}}, std::nullopt, {{0, 1}, {2, 3}},
                     DistanceModel::grid_steps);
    try {
        solve_crystal_bonds(forest);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::disconnected_required_set);
    }
    EXPECT_DOUBLE_EQ(brute_force_crystal_bonds(forest).total_length, 3.0);
}

TEST(Solve, OracleRejectsTooManyBonds)
{
    std::vector<Cell> crystals;
    std::vector<Bond> bonds;
    for (int x = 0; x < 10; ++x) {
        crystals.push_back({x, 0});
        if (x > 0)
            bonds.push_back({x - 1, x});
    }
    BondBoard long_chain(row(10), crystals, std::nullopt, bonds, DistanceModel::grid_steps);
    try {
        brute_force_crystal_bonds(long_chain);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::too_many_bonds);
    }
    EXPECT_DOUBLE_EQ(solve_crystal_bonds(long_chain).total_length, 9.0);
}

TEST(Solve, MatchesOracleOnRandomTrees)
{
    Rng rng(77);
    for (int trial = 0; trial < 150; ++trial) {
        const auto model = trial % 2 ? DistanceModel::euclidean : DistanceModel::grid_steps;
        BondBoard board = random_tree_board(rng, 6, 6, model);
        if (trial % 3 == 0)
            board = BondBoard(board.region(), board.crystals(), std::nullopt, board.bonds(), model);
        const BondWalk fast = solve_crystal_bonds(board);
        const BondWalk slow = brute_force_crystal_bonds(board);
        EXPECT_NEAR(fast.total_length, slow.total_length, 1e-9) << trial;
        EXPECT_TRUE(verify_bond_walk(board, fast)) << verify_bond_walk(board, fast).describe();
        EXPECT_TRUE(verify_bond_walk(board, slow));
    }
}

TEST(Verify, Violations)
{
    const BondBoard board = collinear(Cell{0, 0});
    EXPECT_TRUE(verify_bond_walk(board, {{1, 0, 2}, 2.0}));
    EXPECT_EQ(verify_bond_walk(board, {{1, 0, 7}, 2.0}).rule(), "bad-index");
    EXPECT_EQ(verify_bond_walk(board, {{1, 0}, 1.0}).rule(), "missing-bond");
    EXPECT_EQ(verify_bond_walk(board, {{1, 0, 2}, 2.5}).rule(), "length-mismatch");
    // Reversed bond traversal counts.
    EXPECT_TRUE(verify_bond_walk(board, {{2, 0, 1}, 4.0}));
}

TEST(DcbReduction, DominoThresholdAndScale)
{
    GridGraph domino({{0, 0}, {1, 0}});
    DcbInstance instance = reduce_grid_to_dcb(domino);
    EXPECT_EQ(instance.threshold, 9);
    EXPECT_EQ(instance.property, HamProperty::path);
    EXPECT_FALSE(instance.board.start());
    ASSERT_EQ(instance.board.crystal_count(), 4u);
    EXPECT_EQ(instance.board.crystals()[1] - instance.board.crystals()[0], (Cell{5, 0}));
    auto d = crystal_metric(instance.board);
    EXPECT_DOUBLE_EQ(d[0][1], 5.0);
    EXPECT_TRUE(decide_dcb(instance.board, instance.threshold));
}

TEST(DcbReduction, TwoByThreeBlock)
{
    GridGraph block({{0, 0}, {1, 0}, {2, 0}, {0, 1}, {1, 1}, {2, 1}});
    DcbInstance instance = reduce_grid_to_dcb(block);
    EXPECT_EQ(instance.threshold, 77);
    EXPECT_NEAR(brute_force_crystal_bonds(instance.board).total_length, 65.0, 1e-9);
}

TEST(DcbReduction, AdjacentVertexCrystalsAreScaledApart)
{
    for_each_grid_graph(3, 2, 5, [](const GridGraph& g) {
        if (g.size() < 2)
            return;
        DcbInstance instance = reduce_grid_to_dcb(g);
        auto d = crystal_metric(instance.board);
        const double scale = 2.0 * static_cast<double>(g.size()) + 1.0;
        for (auto [a, b] : grid_edges(g))
            EXPECT_DOUBLE_EQ(d[static_cast<std::size_t>(*g.index_of(a))][static_cast<std::size_t>(*g.index_of(b))],
                             scale);
        EXPECT_EQ(instance.board.bonds().size(), g.size());
    });
}

TEST(DcbReduction, DecisionMatchesHamiltonianPath)
{
    for_each_grid_graph(3, 2, 5, [](const GridGraph& g) {
        if (g.size() < 2)
            return;
        DcbInstance instance = reduce_grid_to_dcb(g);
        EXPECT_EQ(decide_dcb(instance.board, instance.threshold), has_ham_path_grid(g));
    });
}

TEST(StartGadget, DegreeOneBranchKeepsPath)
{
    GridGraph path({{0, 0}, {1, 0}, {2, 0}});
    DcbInstance gadget = apply_start_gadget(reduce_grid_to_dcb(path), path);
    EXPECT_EQ(gadget.property, HamProperty::path);
    EXPECT_EQ(gadget.threshold, 20);
    ASSERT_TRUE(gadget.board.start());
    EXPECT_EQ(*gadget.board.start(), gadget.board.crystals()[0] + kWest);
    EXPECT_TRUE(decide_dcb(gadget.board, gadget.threshold));
}

TEST(StartGadget, UnitSquareBecomesCycle)
{
    GridGraph square({{0, 0}, {1, 0}, {0, 1}, {1, 1}});
    DcbInstance gadget = apply_start_gadget(reduce_grid_to_dcb(square), square);
    EXPECT_EQ(gadget.property, HamProperty::cycle);
    EXPECT_EQ(gadget.threshold, 44);
    EXPECT_EQ(gadget.board.crystal_count(), 10u);
    EXPECT_TRUE(decide_dcb(gadget.board, gadget.threshold));
}

TEST(StartGadget, Preconditions)
{
    GridGraph path({{0, 0}, {1, 0}, {2, 0}});
    DcbInstance once = apply_start_gadget(reduce_grid_to_dcb(path), path);
    EXPECT_THROW(apply_start_gadget(once, path), Error);
    EXPECT_THROW(reduce_grid_to_dcb(GridGraph({{0, 0}})), Error);
    EXPECT_THROW(reduce_grid_to_dcb(GridGraph({{0, 0}, {2, 0}})), Error);
}

TEST(Decide, MonotoneInThreshold)
{
    GridGraph block({{0, 0}, {1, 0}, {0, 1}});
    DcbInstance instance = reduce_grid_to_dcb(block);
    const double optimum = brute_force_crystal_bonds(instance.board).total_length;
    const auto floor_opt = static_cast<std::int64_t>(std::floor(optimum));
    EXPECT_TRUE(decide_dcb(instance.board, floor_opt + 1));
    EXPECT_TRUE(decide_dcb(instance.board, floor_opt + 50));
    EXPECT_FALSE(decide_dcb(instance.board, static_cast<std::int64_t>(std::ceil(optimum)) - 1));
}

TEST(Decide, UnreachableCrystalIsNo)
{
    BondBoard split(TileRegion({{0, 0}, {2, 0}}), {{0, 0}, {2, 0}}, std::nullopt, {}, DistanceModel::grid_steps);
    EXPECT_FALSE(decide_dcb(split, 1000));
}

}  // namespace
