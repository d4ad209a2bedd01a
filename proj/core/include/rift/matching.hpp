#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace rift {

/// Dense symmetric cost matrix; nullopt marks a forbidden pair.
using CostMatrix = std::vector<std::vector<std::optional<double>>>;

/// Exact minimum-weight perfect matching by dynamic programming over vertex
/// subsets. Needs an even vertex count of at most kMaxSubsetMatching.
/// Returns mate[i] for every vertex, or nullopt when no perfect matching exists.
inline constexpr int kMaxSubsetMatching = 18;
std::optional<std::vector<int>> perfect_matching_subset_dp(const CostMatrix& cost);

/// Minimum-weight perfect matching by the weighted blossom algorithm, O(n^3).
/// Costs are rounded to multiples of 1e-9 and handled as 64-bit integers, so
/// the optimum is exact for integral costs and within n*1e-9 otherwise.
std::optional<std::vector<int>> perfect_matching_blossom(const CostMatrix& cost);

/// Subset DP when small enough, blossom otherwise.
std::optional<std::vector<int>> min_weight_perfect_matching(const CostMatrix& cost);

struct WeightedEdge {
    int u;
    int v;
    std::int64_t weight;
};

/// Maximum-weight matching on a general graph (Edmonds' blossom algorithm
/// with dual variables). With max_cardinality set, the result is a
/// maximum-weight matching among those of maximum cardinality. Returns
/// mate[i] or -1 for unmatched vertices.
std::vector<int> max_weight_matching(int vertex_count, const std::vector<WeightedEdge>& edges,
                                     bool max_cardinality);

}  // namespace rift
