#include <gtest/gtest.h>

#include "rift/error.hpp"
#include "rift/generators.hpp"
#include "rift/tile_trial.hpp"

namespace {

using namespace rift;

// S . * . F in a row with a crystal in the middle.
TileBoard corridor()
{
    std::map<Cell, int> caps;
    for (int x = 0; x < 5; ++x)
        caps[{x, 0}] = 1;
    return TileBoard(caps, {{2, 0}}, {0, 0}, {4, 0});
}

TilePath straight() { return {{0, 0}, {1, 0}, {2, 0}, {3, 0}, {4, 0}}; }

TEST(TileBoard, Validation)
{
    std::map<Cell, int> caps{{{0, 0}, 1}, {{1, 0}, 1}};
    EXPECT_NO_THROW(TileBoard(caps, {}, {0, 0}, {1, 0}));
    EXPECT_THROW(TileBoard(caps, {}, {0, 0}, {0, 0}), Error);
    EXPECT_THROW(TileBoard(caps, {{0, 0}}, {0, 0}, {1, 0}), Error);
    EXPECT_THROW(TileBoard(caps, {{5, 5}}, {0, 0}, {1, 0}), Error);
    EXPECT_THROW(TileBoard({{{0, 0}, 1}, {{1, 0}, 3}}, {}, {0, 0}, {1, 0}), Error);
    EXPECT_THROW(TileBoard({{{0, 0}, 2}, {{1, 0}, 1}}, {}, {0, 0}, {1, 0}), Error);
}

TEST(Verify, AcceptsStraightWalk)
{
    EXPECT_TRUE(verify_tile_path(corridor(), straight()));
}

TEST(Verify, Violations)
{
    const TileBoard board = corridor();
    EXPECT_EQ(verify_tile_path(board, {}).rule(), "empty-path");
    EXPECT_EQ(verify_tile_path(board, {{1, 0}, {2, 0}}).rule(), "wrong-start");
    EXPECT_EQ(verify_tile_path(board, {{0, 0}, {0, 1}}).rule(), "off-board");
    EXPECT_EQ(verify_tile_path(board, {{0, 0}, {2, 0}, {3, 0}, {4, 0}}).rule(), "not-adjacent");
    EXPECT_EQ(verify_tile_path(board, {{0, 0}, {1, 0}, {2, 0}, {1, 0}, {2, 0}}).rule(), "capacity-exceeded");
    EXPECT_EQ(verify_tile_path(board, {{0, 0}, {1, 0}, {2, 0}, {3, 0}}).rule(), "wrong-finish");
}

TEST(Verify, CrystalMissed)
{
    std::map<Cell, int> caps{{{0, 0}, 1}, {{1, 0}, 1}, {{1, 1}, 1}};
    TileBoard board(caps, {{1, 1}}, {0, 0}, {1, 0});
    EXPECT_EQ(verify_tile_path(board, {{0, 0}, {1, 0}}).rule(), "crystal-missed");
}

TEST(Verify, RevisitingStartExceedsCapacityAtStart)
{
    // S, C, S, C, F on a plus shape: the second visit to S breaks capacity 1.
    std::map<Cell, int> caps{{{0, 0}, 1}, {{1, 0}, 2}, {{2, 0}, 1}};
    TileBoard board(caps, {{1, 0}}, {0, 0}, {2, 0});
    auto report = verify_tile_path(board, {{0, 0}, {1, 0}, {0, 0}, {1, 0}, {2, 0}});
    EXPECT_EQ(report.rule(), "capacity-exceeded");
    EXPECT_NE(report.detail().find("(0, 0)"), std::string::npos) << report.detail();
}

TEST(Solve, StraightCorridor)
{
    auto result = solve_tile_trial(corridor());
    ASSERT_EQ(result.status, SolveStatus::solved);
    EXPECT_EQ(result.path, straight());
}

TEST(Solve, DeadEndCrystalNeedsDoubleTile)
{
    // Crystal on a spur above (1,0); returning requires capacity 2 there.
    std::map<Cell, int> caps{{{0, 0}, 1}, {{1, 0}, 1}, {{2, 0}, 1}, {{1, 1}, 1}};
    EXPECT_EQ(solve_tile_trial(TileBoard(caps, {{1, 1}}, {0, 0}, {2, 0})).status, SolveStatus::unsolvable);
    caps[{1, 0}] = 2;
    TileBoard board(caps, {{1, 1}}, {0, 0}, {2, 0});
    auto result = solve_tile_trial(board);
    ASSERT_EQ(result.status, SolveStatus::solved);
    EXPECT_TRUE(verify_tile_path(board, result.path));
}

TEST(Solve, BudgetExhaustion)
{
    const TileBoard board = reduce_grid_to_tile_trial(GridGraph({{0, 0}, {1, 0}, {2, 0}, {0, 1}, {1, 1}, {2, 1}}));
    auto result = solve_tile_trial(board, 3);
    EXPECT_EQ(result.status, SolveStatus::budget_exhausted);
    EXPECT_LE(result.nodes, 4u);
    EXPECT_EQ(solve_tile_trial(board).status, SolveStatus::solved);
}

TEST(Solve, SolutionsAlwaysVerify)
{
    Rng rng(23);
    int solved = 0;
    for (int i = 0; i < 200; ++i) {
        TileBoard board = random_tile_board(rng, 4);
        auto result = solve_tile_trial(board);
        if (result.status == SolveStatus::solved) {
            ++solved;
            EXPECT_TRUE(verify_tile_path(board, result.path)) << verify_tile_path(board, result.path).describe();
        }
    }
    EXPECT_GT(solved, 0);
}

TEST(Reduction, UnitSquareLayout)
{
    GridGraph square({{0, 0}, {1, 0}, {0, 1}, {1, 1}});
    TileBoard board = reduce_grid_to_tile_trial(square);
    EXPECT_EQ(board.start(), (Cell{-1, -2}));
    EXPECT_EQ(board.finish(), (Cell{2, -2}));
    EXPECT_EQ(board.capacity({0, -1}), 2);
    EXPECT_EQ(board.capacity({0, -2}), 2);
    EXPECT_EQ(board.capacity({0, 0}), 2);
    EXPECT_EQ(board.capacity({1, -1}), 0);
    EXPECT_EQ(board.crystals().size(), 4u);
    EXPECT_EQ(solve_tile_trial(board).status, SolveStatus::solved);
}

TEST(Reduction, CrystalAndDoubleTileCounts)
{
    for_each_grid_graph(3, 3, 6, [](const GridGraph& g) {
        if (g.size() < 2)
            return;
        TileBoard board = reduce_grid_to_tile_trial(g);
        EXPECT_EQ(board.crystals().size(), g.size());
        int doubles = 0;
        for (const auto& [c, cap] : board.capacities())
            doubles += cap == 2;
        EXPECT_EQ(doubles, 3);
    });
}

TEST(Reduction, DominoIsSolvableWithoutHamiltonianCycle)
{
    GridGraph domino({{0, 0}, {1, 0}});
    EXPECT_FALSE(has_ham_cycle_grid(domino));
    TileBoard board = reduce_grid_to_tile_trial(domino);
    auto result = solve_tile_trial(board);
    ASSERT_EQ(result.status, SolveStatus::solved);
    EXPECT_TRUE(verify_tile_path(board, result.path));
}

TEST(Reduction, Preconditions)
{
    EXPECT_THROW(reduce_grid_to_tile_trial(GridGraph({{0, 0}})), Error);
    EXPECT_THROW(reduce_grid_to_tile_trial(GridGraph({{0, 0}, {2, 0}})), Error);
}

TEST(TileBoard, Normalization)
{
    TileBoard board = reduce_grid_to_tile_trial(GridGraph({{0, 0}, {1, 0}, {0, 1}, {1, 1}}));
    TileBoard normal = board.normalized();
    EXPECT_EQ(normal.start(), (Cell{0, 0}));
    EXPECT_EQ(normal.translated({-1, -2}), board);
}

}  // namespace
