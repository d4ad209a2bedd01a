#include "rift/graphs.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <queue>
#include <string>

#include "rift/error.hpp"

namespace rift {

GridGraph::GridGraph(std::vector<Cell> vertices) : vertices_(std::move(vertices))
{
    if (vertices_.empty())
        throw Error(Errc::precondition, "grid graph must have at least one vertex");
    std::sort(vertices_.begin(), vertices_.end());
    vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
}

bool GridGraph::contains(Cell c) const
{
    return std::binary_search(vertices_.begin(), vertices_.end(), c);
}

std::optional<std::size_t> GridGraph::index_of(Cell c) const
{
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), c);
    if (it == vertices_.end() || *it != c)
        return std::nullopt;
    return static_cast<std::size_t>(it - vertices_.begin());
}

std::size_t GridGraph::degree(Cell c) const
{
    std::size_t deg = 0;
    for (Cell step : kOrthogonal)
        deg += contains(c + step) ? 1 : 0;
    return deg;
}

std::vector<std::vector<std::size_t>> GridGraph::adjacency() const
{
    std::vector<std::vector<std::size_t>> adj(vertices_.size());
    for (std::size_t i = 0; i < vertices_.size(); ++i)
        for (Cell step : kOrthogonal)
            if (auto j = index_of(vertices_[i] + step))
                adj[i].push_back(*j);
    return adj;
}

bool GridGraph::is_connected() const
{
    auto adj = adjacency();
    std::vector<bool> seen(vertices_.size(), false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
        std::size_t u = stack.back();
        stack.pop_back();
        for (std::size_t w : adj[u])
            if (!seen[w]) {
                seen[w] = true;
                ++reached;
                stack.push_back(w);
            }
    }
    return reached == vertices_.size();
}

int GridGraph::min_x() const
{
    return std::min_element(vertices_.begin(), vertices_.end(),
                            [](Cell a, Cell b) { return a.x < b.x; })->x;
}

int GridGraph::max_x() const
{
    return std::max_element(vertices_.begin(), vertices_.end(),
                            [](Cell a, Cell b) { return a.x < b.x; })->x;
}

int GridGraph::min_y() const
{
    return std::min_element(vertices_.begin(), vertices_.end(),
                            [](Cell a, Cell b) { return a.y < b.y; })->y;
}

int GridGraph::max_y() const
{
    return std::max_element(vertices_.begin(), vertices_.end(),
                            [](Cell a, Cell b) { return a.y < b.y; })->y;
}

Digraph::Digraph(int vertex_count, std::vector<Arc> arcs)
    : vertex_count_(vertex_count), arcs_(std::move(arcs))
{
    if (vertex_count_ < 1)
        throw Error(Errc::precondition, "digraph needs at least one vertex");
    std::vector<Arc> sorted = arcs_;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        auto [s, t] = sorted[i];
        if (s < 0 || t < 0 || s >= vertex_count_ || t >= vertex_count_)
            throw Error(Errc::invariant, "arc endpoint out of range: " + std::to_string(s) +
                                             " " + std::to_string(t));
        if (s == t)
            throw Error(Errc::invariant, "self-loop at vertex " + std::to_string(s));
        if (i > 0 && sorted[i - 1] == sorted[i])
            throw Error(Errc::invariant, "duplicate arc " + std::to_string(s) + " " +
                                             std::to_string(t));
    }
}

std::vector<std::vector<int>> Digraph::out_neighbors() const
{
    std::vector<std::vector<int>> out(static_cast<std::size_t>(vertex_count_));
    for (auto [s, t] : arcs_)
        out[static_cast<std::size_t>(s)].push_back(t);
    return out;
}

bool Digraph::has_arc(int from, int to) const
{
    return std::find(arcs_.begin(), arcs_.end(), Arc{from, to}) != arcs_.end();
}

bool Digraph::outdeg12() const
{
    for (const auto& out : out_neighbors())
        if (out.empty() || out.size() > 2)
            return false;
    return true;
}

std::vector<std::pair<Cell, Cell>> grid_edges(const GridGraph& g)
{
    std::vector<std::pair<Cell, Cell>> edges;
    for (Cell c : g.vertices()) {
        if (g.contains(c + kEast))
            edges.emplace_back(c, c + kEast);
        if (g.contains(c + kNorth))
            edges.emplace_back(c, c + kNorth);
    }
    return edges;
}

namespace {

using Mask = std::uint64_t;

constexpr Mask bit(std::size_t i) { return Mask{1} << i; }

/// Backtracking Hamiltonian search on an undirected graph of at most 64
/// vertices. Branches are cut when the unvisited vertices are no longer
/// connected to the current endpoint.
class UndirectedHamSearch {
public:
    explicit UndirectedHamSearch(const std::vector<std::vector<std::size_t>>& adj)
        : n_(adj.size()), adj_(adj.size(), 0)
    {
        if (n_ > 64)
            throw Error(Errc::instance_too_large,
                        "Hamiltonian search supports at most 64 vertices");
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j : adj[i])
                adj_[i] |= bit(j);
        full_ = n_ == 64 ? ~Mask{0} : bit(n_) - 1;
    }

    bool path_from(std::size_t start)
    {
        closed_ = false;
        origin_ = start;
        return extend(start, bit(start));
    }

    bool cycle()
    {
        closed_ = true;
        origin_ = 0;
        return extend(0, bit(0));
    }

private:
    bool reachable(std::size_t from, Mask visited) const
    {
        Mask open = full_ & ~visited;
        if (closed_)
            open |= bit(origin_);
        Mask frontier = adj_[from] & open;
        Mask seen = frontier;
        while (frontier) {
            Mask next = 0;
            for (Mask f = frontier; f; f &= f - 1)
                next |= adj_[static_cast<std::size_t>(std::countr_zero(f))];
            next &= open & ~seen;
            seen |= next;
            frontier = next;
        }
        return (seen & open) == open;
    }

    bool extend(std::size_t at, Mask visited)
    {
        if (visited == full_)
            return !closed_ || (adj_[at] & bit(origin_));
        if (!reachable(at, visited))
            return false;
        for (Mask next = adj_[at] & ~visited; next; next &= next - 1) {
            auto w = static_cast<std::size_t>(std::countr_zero(next));
            if (extend(w, visited | bit(w)))
                return true;
        }
        return false;
    }

    std::size_t n_;
    std::vector<Mask> adj_;
    Mask full_ = 0;
    bool closed_ = false;
    std::size_t origin_ = 0;
};

/// Grid graphs are bipartite under the checkerboard colouring.
std::pair<int, int> colour_counts(const GridGraph& g)
{
    int even = 0, odd = 0;
    for (Cell c : g.vertices())
        (((c.x + c.y) % 2 + 2) % 2 == 0 ? even : odd) += 1;
    return {even, odd};
}

}  // namespace

bool has_ham_cycle_grid(const GridGraph& g)
{
    if (g.size() < 4)
        return false;
    auto [even, odd] = colour_counts(g);
    if (even != odd || !g.is_connected())
        return false;
    UndirectedHamSearch search(g.adjacency());
    return search.cycle();
}

bool has_ham_path_grid(const GridGraph& g)
{
    if (g.size() == 1)
        return true;
    auto [even, odd] = colour_counts(g);
    if (std::abs(even - odd) > 1 || !g.is_connected())
        return false;
    UndirectedHamSearch search(g.adjacency());
    for (std::size_t start = 0; start < g.size(); ++start) {
        // With unequal colour classes both endpoints lie in the larger class.
        Cell c = g.vertices()[start];
        bool c_even = ((c.x + c.y) % 2 + 2) % 2 == 0;
        if (even > odd && !c_even)
            continue;
        if (odd > even && c_even)
            continue;
        if (search.path_from(start))
            return true;
    }
    return false;
}

std::optional<std::vector<int>> find_directed_ham_path(const Digraph& d)
{
    const int n = d.vertex_count();
    if (n > kMaxDirectedHamVertices)
        throw Error(Errc::instance_too_large,
                    "directed Hamiltonian oracle supports at most " +
                        std::to_string(kMaxDirectedHamVertices) + " vertices");
    std::vector<std::uint32_t> pred(static_cast<std::size_t>(n), 0);
    for (auto [s, t] : d.arcs())
        pred[static_cast<std::size_t>(t)] |= std::uint32_t{1} << s;

    // ends[mask]: vertices v such that some path covers exactly mask and ends at v.
    const std::size_t subsets = std::size_t{1} << n;
    std::vector<std::uint32_t> ends(subsets, 0);
    for (int v = 0; v < n; ++v)
        ends[std::size_t{1} << v] = std::uint32_t{1} << v;
    for (std::size_t mask = 1; mask < subsets; ++mask) {
        if (std::popcount(mask) < 2)
            continue;
        std::uint32_t e = 0;
        for (auto rest = static_cast<std::uint32_t>(mask); rest; rest &= rest - 1) {
            int v = std::countr_zero(rest);
            std::size_t without = mask & ~(std::size_t{1} << v);
            if (ends[without] & pred[static_cast<std::size_t>(v)])
                e |= std::uint32_t{1} << v;
        }
        ends[mask] = e;
    }

    std::size_t mask = subsets - 1;
    if (ends[mask] == 0)
        return std::nullopt;
    std::vector<int> path;
    int v = std::countr_zero(ends[mask]);
    while (true) {
        path.push_back(v);
        std::size_t without = mask & ~(std::size_t{1} << v);
        if (without == 0)
            break;
        int u = std::countr_zero(ends[without] & pred[static_cast<std::size_t>(v)]);
        mask = without;
        v = u;
    }
    std::reverse(path.begin(), path.end());
    return path;
}

bool has_directed_ham_path(const Digraph& d)
{
    return find_directed_ham_path(d).has_value();
}

Digraph symmetric_orientation(const GridGraph& g)
{
    std::vector<Arc> arcs;
    auto adj = g.adjacency();
    for (std::size_t i = 0; i < adj.size(); ++i)
        for (std::size_t j : adj[i])
            arcs.emplace_back(static_cast<int>(i), static_cast<int>(j));
    return Digraph(static_cast<int>(g.size()), std::move(arcs));
}

void for_each_grid_graph(int box_w, int box_h, int max_vertices,
                         const std::function<void(const GridGraph&)>& visit)
{
    if (box_w < 1 || box_h < 1)
        throw Error(Errc::precondition, "box dimensions must be positive");
    if (box_w * box_h > kMaxEnumerationCells)
        throw Error(Errc::box_too_large, "box area must not exceed " +
                                             std::to_string(kMaxEnumerationCells));
    const int cells = box_w * box_h;
    for (std::uint32_t subset = 1; subset < (std::uint32_t{1} << cells); ++subset) {
        if (std::popcount(subset) > max_vertices)
            continue;
        std::vector<Cell> vs;
        for (int i = 0; i < cells; ++i)
            if (subset & (std::uint32_t{1} << i))
                vs.push_back({i % box_w, i / box_w});
        GridGraph g(std::move(vs));
        if (g.is_connected())
            visit(g);
    }
}

std::vector<GridGraph> enumerate_grid_graphs(int box_w, int box_h, int max_vertices)
{
    std::vector<GridGraph> out;
    for_each_grid_graph(box_w, box_h, max_vertices,
                        [&](const GridGraph& g) { out.push_back(g); });
    return out;
}

}  // namespace rift
