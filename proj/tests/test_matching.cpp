#include <algorithm>
#include <cmath>
#include <numeric>

#include <gtest/gtest.h>

#include "rift/generators.hpp"
#include "rift/matching.hpp"

namespace {

using namespace rift;

double matching_cost(const CostMatrix& cost, const std::vector<int>& mate)
{
    double total = 0;
    for (std::size_t i = 0; i < mate.size(); ++i) {
        EXPECT_EQ(mate[static_cast<std::size_t>(mate[i])], static_cast<int>(i));
        EXPECT_NE(mate[i], static_cast<int>(i));
        if (static_cast<int>(i) < mate[i]) {
            EXPECT_TRUE(cost[i][static_cast<std::size_t>(mate[i])].has_value());
            total += *cost[i][static_cast<std::size_t>(mate[i])];
        }
    }
    return total;
}

// Recursive enumeration of every perfect matching.
std::optional<double> brute_perfect(const CostMatrix& cost, std::vector<bool>& used)
{
    auto first = std::find(used.begin(), used.end(), false);
    if (first == used.end())
        return 0.0;
    const std::size_t i = static_cast<std::size_t>(first - used.begin());
    used[i] = true;
    std::optional<double> best;
    for (std::size_t j = i + 1; j < used.size(); ++j) {
        if (used[j] || !cost[i][j])
            continue;
        used[j] = true;
        if (auto rest = brute_perfect(cost, used))
            if (!best || *cost[i][j] + *rest < *best)
                best = *cost[i][j] + *rest;
        used[j] = false;
    }
    used[i] = false;
    return best;
}

CostMatrix random_costs(Rng& rng, int n, double forbid, bool integral)
{
    CostMatrix cost(static_cast<std::size_t>(n), std::vector<std::optional<double>>(static_cast<std::size_t>(n)));
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (u(rng) < forbid)
                continue;
            double c = integral ? std::floor(u(rng) * 20) : u(rng) * 10;
            cost[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = c;
            cost[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = c;
        }
    return cost;
}

TEST(PerfectMatching, Trivial)
{
    CostMatrix empty;
    ASSERT_TRUE(perfect_matching_subset_dp(empty));
    EXPECT_TRUE(perfect_matching_subset_dp(empty)->empty());
    CostMatrix pair{{std::nullopt, 3.0}, {3.0, std::nullopt}};
    EXPECT_EQ(*perfect_matching_subset_dp(pair), (std::vector<int>{1, 0}));
    EXPECT_EQ(*perfect_matching_blossom(pair), (std::vector<int>{1, 0}));
}

TEST(PerfectMatching, ForbiddenPairsCanMakeItImpossible)
{
    CostMatrix cost(4, std::vector<std::optional<double>>(4));
    cost[0][1] = cost[1][0] = 1.0;
    cost[0][2] = cost[2][0] = 1.0;
    EXPECT_FALSE(perfect_matching_subset_dp(cost));
    EXPECT_FALSE(perfect_matching_blossom(cost));
    cost[2][3] = cost[3][2] = 5.0;
    auto mate = perfect_matching_blossom(cost);
    ASSERT_TRUE(mate);
    EXPECT_EQ(matching_cost(cost, *mate), 6.0);
}

TEST(PerfectMatching, SquarePrefersShortSides)
{
    // Corners of a unit square: sides cost 1, diagonals sqrt(2).
    const double d = std::sqrt(2.0);
    CostMatrix cost{{std::nullopt, 1.0, d, 1.0},
                    {1.0, std::nullopt, 1.0, d},
                    {d, 1.0, std::nullopt, 1.0},
                    {1.0, d, 1.0, std::nullopt}};
    EXPECT_DOUBLE_EQ(matching_cost(cost, *perfect_matching_subset_dp(cost)), 2.0);
    EXPECT_NEAR(matching_cost(cost, *perfect_matching_blossom(cost)), 2.0, 1e-8);
}

TEST(PerfectMatching, DpAndBlossomAgreeWithEnumeration)
{
    Rng rng(8);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 2 * std::uniform_int_distribution<int>(1, 5)(rng);
        const bool integral = trial % 2 == 0;
        CostMatrix cost = random_costs(rng, n, trial % 3 == 0 ? 0.4 : 0.0, integral);
        std::vector<bool> used(static_cast<std::size_t>(n), false);
        auto best = brute_perfect(cost, used);
        auto dp = perfect_matching_subset_dp(cost);
        auto blossom = perfect_matching_blossom(cost);
        ASSERT_EQ(dp.has_value(), best.has_value());
        ASSERT_EQ(blossom.has_value(), best.has_value());
        if (!best)
            continue;
        EXPECT_NEAR(matching_cost(cost, *dp), *best, 1e-9);
        EXPECT_NEAR(matching_cost(cost, *blossom), *best, integral ? 1e-12 : 1e-7);
    }
}

TEST(PerfectMatching, DispatcherHandlesLargeInstances)
{
    Rng rng(2);
    for (int trial = 0; trial < 5; ++trial) {
        CostMatrix cost = random_costs(rng, 20, 0.0, true);
        auto mate = min_weight_perfect_matching(cost);
        ASSERT_TRUE(mate);
        // Never worse than pairing neighbours in index order.
        std::vector<int> greedy(20);
        std::iota(greedy.begin(), greedy.end(), 0);
        for (std::size_t i = 0; i < 20; i += 2)
            std::swap(greedy[i], greedy[i + 1]);
        EXPECT_LE(matching_cost(cost, *mate), matching_cost(cost, greedy) + 1e-9);
    }
    EXPECT_FALSE(min_weight_perfect_matching(CostMatrix(3, std::vector<std::optional<double>>(3, 1.0))));
}

int brute_max_weight(const std::vector<WeightedEdge>& edges, std::size_t at, std::vector<bool>& used)
{
    if (at == edges.size())
        return 0;
    int best = brute_max_weight(edges, at + 1, used);
    const auto& e = edges[at];
    if (!used[static_cast<std::size_t>(e.u)] && !used[static_cast<std::size_t>(e.v)]) {
        used[static_cast<std::size_t>(e.u)] = used[static_cast<std::size_t>(e.v)] = true;
        best = std::max(best, static_cast<int>(e.weight) +
                                  brute_max_weight(edges, at + 1, used));
        used[static_cast<std::size_t>(e.u)] = used[static_cast<std::size_t>(e.v)] = false;
    }
    return best;
}

TEST(MaxWeightMatching, AgreesWithEnumeration)
{
    Rng rng(31);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = std::uniform_int_distribution<int>(1, 9)(rng);
        std::vector<WeightedEdge> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 2)
                    edges.push_back({u, v, static_cast<std::int64_t>(rng() % 30)});
        std::vector<bool> used(static_cast<std::size_t>(n), false);
        const int best = brute_max_weight(edges, 0, used);
        auto mate = max_weight_matching(n, edges, false);
        ASSERT_EQ(mate.size(), static_cast<std::size_t>(n));
        std::int64_t total = 0;
        for (const auto& e : edges)
            if (mate[static_cast<std::size_t>(e.u)] == e.v) {
                EXPECT_EQ(mate[static_cast<std::size_t>(e.v)], e.u);
                total += e.weight;
            }
        EXPECT_EQ(total, best);
    }
}

TEST(MaxWeightMatching, MaxCardinalityPrefersMoreEdges)
{
    // Path a-b-c-d with a heavy middle edge.
    std::vector<WeightedEdge> edges{{0, 1, 1}, {1, 2, 10}, {2, 3, 1}};
    auto heavy = max_weight_matching(4, edges, false);
    EXPECT_EQ(heavy[1], 2);
    auto full = max_weight_matching(4, edges, true);
    EXPECT_EQ(full[0], 1);
    EXPECT_EQ(full[2], 3);
}

}  // namespace
