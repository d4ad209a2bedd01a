#include "rift/rural_postman.hpp"

#include <algorithm>
#include <limits>

#include "rift/error.hpp"
#include "rift/matching.hpp"

namespace rift {

double walk_length(const DistanceMatrix& metric, std::span<const int> sequence, std::optional<int> start)
{
    double total = 0.0;
    if (sequence.empty())
        return total;
    if (start)
        total += metric[static_cast<std::size_t>(*start)][static_cast<std::size_t>(sequence.front())];
    for (std::size_t i = 1; i < sequence.size(); ++i)
        total += metric[static_cast<std::size_t>(sequence[i - 1])][static_cast<std::size_t>(sequence[i])];
    return total;
}

namespace {

/// Hierholzer's algorithm on a multigraph given as an edge list. The trail
/// starts at `from`; the caller guarantees an Euler trail from there exists.
std::vector<int> euler_trail(std::size_t vertex_count, const std::vector<RequiredEdge>& edges, int from)
{
    std::vector<std::vector<std::pair<int, std::size_t>>> adj(vertex_count);
    for (std::size_t e = 0; e < edges.size(); ++e) {
        adj[static_cast<std::size_t>(edges[e].first)].push_back({edges[e].second, e});
        adj[static_cast<std::size_t>(edges[e].second)].push_back({edges[e].first, e});
    }
    std::vector<bool> used(edges.size(), false);
    std::vector<std::size_t> next(vertex_count, 0);
    std::vector<int> stack{from};
    std::vector<int> trail;
    while (!stack.empty()) {
        const auto v = static_cast<std::size_t>(stack.back());
        auto& i = next[v];
        while (i < adj[v].size() && used[adj[v][i].second])
            ++i;
        if (i == adj[v].size()) {
            trail.push_back(stack.back());
            stack.pop_back();
        } else {
            used[adj[v][i].second] = true;
            stack.push_back(adj[v][i].first);
        }
    }
    std::reverse(trail.begin(), trail.end());
    if (trail.size() != edges.size() + 1)
        throw Error(Errc::internal, "augmented multigraph has no Euler trail");
    return trail;
}

bool edges_connected(std::size_t vertex_count, std::span<const RequiredEdge> edges)
{
    std::vector<int> root(vertex_count);
    for (std::size_t i = 0; i < vertex_count; ++i)
        root[i] = static_cast<int>(i);
    auto find = [&](int v) {
        while (root[static_cast<std::size_t>(v)] != v)
            v = root[static_cast<std::size_t>(v)] = root[static_cast<std::size_t>(root[static_cast<std::size_t>(v)])];
        return v;
    };
    for (auto [a, b] : edges)
        root[static_cast<std::size_t>(find(a))] = find(b);
    const int r = find(edges.front().first);
    return std::all_of(edges.begin(), edges.end(), [&](const RequiredEdge& e) { return find(e.first) == r; });
}

}  // namespace

PostmanWalk rural_postman_connected(const DistanceMatrix& metric, std::span<const RequiredEdge> required,
                                    std::optional<int> start)
{
    if (required.empty())
        return {};
    const std::size_t n = metric.size();
    for (auto [a, b] : required)
        if (a < 0 || b < 0 || static_cast<std::size_t>(a) >= n || static_cast<std::size_t>(b) >= n || a == b)
            throw Error(Errc::precondition, "required edge endpoints out of range");
    if (start && (*start < 0 || static_cast<std::size_t>(*start) >= n))
        throw Error(Errc::precondition, "start index out of range");
    if (!edges_connected(n, required))
        throw Error(Errc::disconnected_required_set, "required edges form more than one component");

    std::vector<int> degree(n, 0);
    for (auto [a, b] : required) {
        ++degree[static_cast<std::size_t>(a)];
        ++degree[static_cast<std::size_t>(b)];
    }
    std::vector<int> odd;
    for (std::size_t v = 0; v < n; ++v)
        if (degree[v] % 2 != 0)
            odd.push_back(static_cast<int>(v));

    auto start_leg = [&](int v) {
        return start ? metric[static_cast<std::size_t>(*start)][static_cast<std::size_t>(v)] : 0.0;
    };

    // A closed circuit may be entered anywhere; the nearest vertex wins.
    int nearest = -1;
    double nearest_leg = std::numeric_limits<double>::infinity();
    for (std::size_t v = 0; v < n; ++v)
        if (degree[v] > 0 && start_leg(static_cast<int>(v)) < nearest_leg) {
            nearest_leg = start_leg(static_cast<int>(v));
            nearest = static_cast<int>(v);
        }

    std::vector<RequiredEdge> multigraph(required.begin(), required.end());
    int trail_from = nearest;
    if (!odd.empty()) {
        const std::size_t k = odd.size();
        const std::size_t head = k, tail = k + 1;
        CostMatrix cost(k + 2, std::vector<std::optional<double>>(k + 2));
        for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t j = 0; j < k; ++j)
                if (i != j)
                    cost[i][j] = metric[static_cast<std::size_t>(odd[i])][static_cast<std::size_t>(odd[j])];
            cost[i][head] = cost[head][i] = start_leg(odd[i]);
            cost[i][tail] = cost[tail][i] = 0.0;
        }
        // Pairing the terminals with each other closes the walk: every odd
        // vertex gets a deadhead and the circuit is entered at `nearest`.
        cost[head][tail] = cost[tail][head] = nearest_leg;
        auto mate = min_weight_perfect_matching(cost);
        if (!mate)
            throw Error(Errc::internal, "odd-vertex matching failed");
        const auto head_mate = static_cast<std::size_t>((*mate)[head]);
        if (head_mate != tail)
            trail_from = odd[head_mate];
        for (std::size_t i = 0; i < k; ++i) {
            const auto j = static_cast<std::size_t>((*mate)[i]);
            if (j < k && i < j)
                multigraph.push_back({odd[i], odd[j]});
        }
    }

    PostmanWalk walk;
    walk.sequence = euler_trail(n, multigraph, trail_from);
    walk.length = walk_length(metric, walk.sequence, start);
    return walk;
}

}  // namespace rift
