#include <benchmark/benchmark.h>

#include <algorithm>

#include "rift/crystal_bonds.hpp"
#include "rift/generators.hpp"
#include "rift/geometry.hpp"
#include "rift/hands_of_time.hpp"
#include "rift/matching.hpp"
#include "rift/tile_trial.hpp"

namespace {

using namespace rift;

BondBoard tree_board(int side, int crystals)
{
    Rng rng(static_cast<std::uint64_t>(side * 1000 + crystals));
    const TileRegion region =
        random_connected_region(rng, side, side, static_cast<std::size_t>(side * side * 4 / 5));
    std::vector<Cell> tiles(region.tiles().begin(), region.tiles().end());
    std::shuffle(tiles.begin(), tiles.end(), rng);
    std::vector<Cell> chosen(tiles.begin(), tiles.begin() + crystals);
    std::vector<Bond> bonds;
    for (int i = 1; i < crystals; ++i)
        bonds.push_back({std::uniform_int_distribution<int>(0, i - 1)(rng), i});
    return BondBoard(region, chosen, tiles[static_cast<std::size_t>(crystals)], bonds, DistanceModel::euclidean);
}

void BM_GeodesicAllPairs(benchmark::State& state)
{
    const BondBoard board = tree_board(static_cast<int>(state.range(0)), 20);
    std::vector<Point> points;
    for (Cell c : board.crystals())
        points.push_back(center(c));
    for (auto _ : state) {
        GeodesicMetric metric(board.region());
        benchmark::DoNotOptimize(metric.all_pairs(points));
    }
}
BENCHMARK(BM_GeodesicAllPairs)->Arg(10)->Arg(20)->Arg(30)->Unit(benchmark::kMillisecond);

void BM_CrystalBonds(benchmark::State& state)
{
    const BondBoard board = tree_board(30, static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(solve_crystal_bonds(board));
}
BENCHMARK(BM_CrystalBonds)->Arg(10)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

void BM_CrystalBondsOracle(benchmark::State& state)
{
    const BondBoard board = tree_board(8, static_cast<int>(state.range(0)));
    const DistanceMatrix metric = crystal_metric(board);
    for (auto _ : state)
        benchmark::DoNotOptimize(brute_force_crystal_bonds(board, metric));
}
BENCHMARK(BM_CrystalBondsOracle)->Arg(5)->Arg(7)->Arg(9)->Unit(benchmark::kMillisecond);

CostMatrix random_costs(int n)
{
    Rng rng(static_cast<std::uint64_t>(n));
    std::uniform_real_distribution<double> u(0.0, 100.0);
    CostMatrix cost(static_cast<std::size_t>(n), std::vector<std::optional<double>>(static_cast<std::size_t>(n)));
    for (std::size_t i = 0; i < cost.size(); ++i)
        for (std::size_t j = i + 1; j < cost.size(); ++j)
            cost[i][j] = cost[j][i] = u(rng);
    return cost;
}

void BM_MatchingSubsetDp(benchmark::State& state)
{
    const CostMatrix cost = random_costs(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(perfect_matching_subset_dp(cost));
}
BENCHMARK(BM_MatchingSubsetDp)->Arg(8)->Arg(12)->Arg(16)->Unit(benchmark::kMicrosecond);

void BM_MatchingBlossom(benchmark::State& state)
{
    const CostMatrix cost = random_costs(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(perfect_matching_blossom(cost));
}
BENCHMARK(BM_MatchingBlossom)->Arg(8)->Arg(16)->Arg(64)->Arg(128)->Unit(benchmark::kMicrosecond);

void BM_ClockSolve(benchmark::State& state)
{
    const ClockInstance clock = gen_solvable_clock(static_cast<std::size_t>(state.range(0)), 7);
    for (auto _ : state)
        benchmark::DoNotOptimize(solve_clock(clock));
}
BENCHMARK(BM_ClockSolve)->Arg(10)->Arg(16)->Arg(22)->Arg(40)->Unit(benchmark::kMillisecond);

void BM_TileTrial(benchmark::State& state)
{
    std::vector<Cell> cells;
    for (int x = 0; x < state.range(0); ++x)
        for (int y = 0; y < 2; ++y)
            cells.push_back({x, y});
    const TileBoard board = reduce_grid_to_tile_trial(GridGraph(cells));
    for (auto _ : state)
        benchmark::DoNotOptimize(solve_tile_trial(board));
}
BENCHMARK(BM_TileTrial)->Arg(2)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
