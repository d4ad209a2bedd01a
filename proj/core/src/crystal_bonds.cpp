#include "rift/crystal_bonds.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <numeric>
#include <set>
#include <string>

#include "rift/error.hpp"

namespace rift {

const char* to_string(DistanceModel model) noexcept
{
    return model == DistanceModel::grid_steps ? "grid" : "euclid";
}

namespace {

class DisjointSets {
public:
    explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

    std::size_t find(std::size_t v)
    {
        while (parent_[v] != v)
            v = parent_[v] = parent_[parent_[v]];
        return v;
    }

    bool unite(std::size_t a, std::size_t b)
    {
        a = find(a);
        b = find(b);
        if (a == b)
            return false;
        parent_[a] = b;
        return true;
    }

private:
    std::vector<std::size_t> parent_;
};

}  // namespace

BondBoard::BondBoard(TileRegion region, std::vector<Cell> crystals, std::optional<Cell> start,
                     std::vector<Bond> bonds, DistanceModel model)
    : region_(std::move(region)), crystals_(std::move(crystals)), start_(start), bonds_(std::move(bonds)),
      model_(model)
{
    std::set<Cell> seen;
    for (Cell c : crystals_) {
        if (!region_.contains(c))
            throw Error(Errc::invariant, "crystal off the region at " + to_string(c));
        if (!seen.insert(c).second)
            throw Error(Errc::invariant, "two crystals share tile " + to_string(c));
    }
    if (start_ && !region_.contains(*start_))
        throw Error(Errc::invariant, "start off the region at " + to_string(*start_));

    const int r = static_cast<int>(crystals_.size());
    std::set<Bond> distinct;
    DisjointSets forest(crystals_.size());
    for (auto& bond : bonds_) {
        if (bond.first > bond.second)
            std::swap(bond.first, bond.second);
        if (bond.first < 0 || bond.second >= r)
            throw Error(Errc::invariant, "bond refers to a missing crystal");
        if (bond.first == bond.second)
            throw Error(Errc::invariant, "bond joins a crystal to itself");
        if (!distinct.insert(bond).second)
            throw Error(Errc::invariant, "duplicate bond " + std::to_string(bond.first) + " " +
                                             std::to_string(bond.second));
        if (!forest.unite(static_cast<std::size_t>(bond.first), static_cast<std::size_t>(bond.second)))
            throw Error(Errc::invariant, "bond graph must be a forest");
    }
}

bool BondBoard::connected() const
{
    return !crystals_.empty() && bonds_.size() + 1 == crystals_.size();
}

bool BondBoard::bonds_connected() const
{
    if (bonds_.empty())
        return true;
    std::set<int> touched;
    for (auto [a, b] : bonds_) {
        touched.insert(a);
        touched.insert(b);
    }
    // A forest on t vertices with t-1 edges is a tree.
    return bonds_.size() + 1 == touched.size();
}

BondBoard BondBoard::with_model(DistanceModel model) const
{
    BondBoard copy = *this;
    copy.model_ = model;
    return copy;
}

std::optional<int> start_index(const BondBoard& board)
{
    if (!board.start())
        return std::nullopt;
    return static_cast<int>(board.crystal_count());
}

namespace {

std::vector<int> bfs_steps(const TileRegion& region, Cell source)
{
    const int w = region.max_x() - region.min_x() + 1;
    const int h = region.max_y() - region.min_y() + 1;
    auto index = [&](Cell c) {
        return static_cast<std::size_t>((c.y - region.min_y()) * w + (c.x - region.min_x()));
    };
    std::vector<int> steps(static_cast<std::size_t>(w * h), -1);
    std::deque<Cell> queue{source};
    steps[index(source)] = 0;
    while (!queue.empty()) {
        Cell c = queue.front();
        queue.pop_front();
        for (Cell d : kOrthogonal) {
            Cell n = c + d;
            if (region.contains(n) && steps[index(n)] < 0) {
                steps[index(n)] = steps[index(c)] + 1;
                queue.push_back(n);
            }
        }
    }
    return steps;
}

}  // namespace

DistanceMatrix crystal_metric(const BondBoard& board)
{
    std::vector<Cell> cells = board.crystals();
    if (board.start())
        cells.push_back(*board.start());
    const std::size_t n = cells.size();
    DistanceMatrix metric(n, std::vector<double>(n, 0.0));
    const TileRegion& region = board.region();

    if (board.model() == DistanceModel::grid_steps) {
        const int w = region.max_x() - region.min_x() + 1;
        for (std::size_t i = 0; i < n; ++i) {
            auto steps = bfs_steps(region, cells[i]);
            for (std::size_t j = 0; j < n; ++j) {
                const int s = steps[static_cast<std::size_t>((cells[j].y - region.min_y()) * w +
                                                             (cells[j].x - region.min_x()))];
                if (s < 0)
                    throw Error(Errc::unreachable_crystal, to_string(cells[j]) + " from " + to_string(cells[i]));
                metric[i][j] = s;
            }
        }
        return metric;
    }

    std::vector<Point> points;
    for (Cell c : cells)
        points.push_back(center(c));
    GeodesicMetric geodesic(region);
    auto pairs = geodesic.all_pairs(points);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (!pairs[i][j])
                throw Error(Errc::unreachable_crystal, to_string(cells[j]) + " from " + to_string(cells[i]));
            metric[i][j] = *pairs[i][j];
        }
    return metric;
}

BondWalk solve_crystal_bonds(const BondBoard& board, const DistanceMatrix& metric)
{
    if (!board.bonds_connected())
        throw Error(Errc::disconnected_required_set, "bond graph has several components");
    auto postman = rural_postman_connected(metric, board.bonds(), start_index(board));
    return {std::move(postman.sequence), postman.length};
}

BondWalk solve_crystal_bonds(const BondBoard& board)
{
    return solve_crystal_bonds(board, crystal_metric(board));
}

BondWalk brute_force_crystal_bonds(const BondBoard& board, const DistanceMatrix& metric)
{
    const auto& bonds = board.bonds();
    const std::size_t b = bonds.size();
    if (b > kMaxBruteForceBonds)
        throw Error(Errc::too_many_bonds, std::to_string(b) + " bonds, at most " +
                                              std::to_string(kMaxBruteForceBonds) + " supported");
    if (b == 0)
        return {};

    const auto start = start_index(board);
    auto tail = [&](std::size_t e, int dir) { return dir == 0 ? bonds[e].first : bonds[e].second; };
    auto head = [&](std::size_t e, int dir) { return dir == 0 ? bonds[e].second : bonds[e].first; };
    auto d = [&](int u, int v) { return metric[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)]; };

    // best[mask][2*e+dir]: shortest walk traversing exactly the bonds in mask,
    // the last one being e in orientation dir. Same optimum as enumerating
    // every ordering and orientation, without the factorial blow-up.
    const std::size_t subsets = std::size_t{1} << b;
    const double inf = std::numeric_limits<double>::infinity();
    std::vector<std::vector<double>> best(subsets, std::vector<double>(2 * b, inf));
    std::vector<std::vector<int>> prev(subsets, std::vector<int>(2 * b, -1));
    for (std::size_t e = 0; e < b; ++e)
        for (int dir = 0; dir < 2; ++dir) {
            const double leg = start ? d(*start, tail(e, dir)) : 0.0;
            best[std::size_t{1} << e][2 * e + static_cast<std::size_t>(dir)] = leg + d(tail(e, dir), head(e, dir));
        }
    for (std::size_t mask = 1; mask < subsets; ++mask)
        for (std::size_t state = 0; state < 2 * b; ++state) {
            const double here = best[mask][state];
            if (here == inf)
                continue;
            const int at = head(state / 2, static_cast<int>(state % 2));
            for (std::size_t f = 0; f < b; ++f) {
                if (mask & (std::size_t{1} << f))
                    continue;
                for (int dir = 0; dir < 2; ++dir) {
                    const double cost = here + d(at, tail(f, dir)) + d(tail(f, dir), head(f, dir));
                    auto& slot = best[mask | (std::size_t{1} << f)][2 * f + static_cast<std::size_t>(dir)];
                    if (cost < slot) {
                        slot = cost;
                        prev[mask | (std::size_t{1} << f)][2 * f + static_cast<std::size_t>(dir)] =
                            static_cast<int>(state);
                    }
                }
            }
        }

    const std::size_t full = subsets - 1;
    std::size_t state = static_cast<std::size_t>(
        std::min_element(best[full].begin(), best[full].end()) - best[full].begin());
    const double optimum = best[full][state];

    std::vector<std::size_t> order;
    for (std::size_t mask = full;;) {
        order.push_back(state);
        const int p = prev[mask][state];
        mask &= ~(std::size_t{1} << (state / 2));
        if (p < 0)
            break;
        state = static_cast<std::size_t>(p);
    }
    std::reverse(order.begin(), order.end());

    BondWalk walk;
    for (std::size_t s : order) {
        const int from = tail(s / 2, static_cast<int>(s % 2));
        if (walk.visit_sequence.empty() || walk.visit_sequence.back() != from)
            walk.visit_sequence.push_back(from);
        walk.visit_sequence.push_back(head(s / 2, static_cast<int>(s % 2)));
    }
    walk.total_length = optimum;
    return walk;
}

BondWalk brute_force_crystal_bonds(const BondBoard& board)
{
    if (board.bonds().size() > kMaxBruteForceBonds)
        throw Error(Errc::too_many_bonds, std::to_string(board.bonds().size()) + " bonds, at most " +
                                              std::to_string(kMaxBruteForceBonds) + " supported");
    return brute_force_crystal_bonds(board, crystal_metric(board));
}

ValidityReport verify_bond_walk(const BondBoard& board, const BondWalk& walk)
{
    const int r = static_cast<int>(board.crystal_count());
    for (int c : walk.visit_sequence)
        if (c < 0 || c >= r)
            return ValidityReport::violation("bad-index", "crystal " + std::to_string(c) + " does not exist");

    std::set<Bond> formed;
    for (std::size_t i = 1; i < walk.visit_sequence.size(); ++i) {
        int a = walk.visit_sequence[i - 1], b = walk.visit_sequence[i];
        formed.insert({std::min(a, b), std::max(a, b)});
    }
    for (const Bond& bond : board.bonds())
        if (!formed.count(bond))
            return ValidityReport::violation("missing-bond", std::to_string(bond.first) + "-" +
                                                                 std::to_string(bond.second));

    DistanceMatrix metric;
    try {
        metric = crystal_metric(board);
    } catch (const Error& e) {
        return ValidityReport::violation("unreachable", e.what());
    }
    const double actual = walk_length(metric, walk.visit_sequence, start_index(board));
    if (std::abs(actual - walk.total_length) > 1e-9)
        return ValidityReport::violation("length-mismatch", "stated " + std::to_string(walk.total_length) +
                                                                ", recomputed " + std::to_string(actual));
    return ValidityReport::valid();
}

namespace {

/// Placement of the reduction: vertex (x, y) maps to tile ((x-min_x)s, (y-min_y)s).
struct DcbLayout {
    const GridGraph& graph;
    int scale;

    Cell tile(Cell vertex) const
    {
        return {(vertex.x - graph.min_x()) * scale, (vertex.y - graph.min_y()) * scale};
    }
};

void require_reducible(const GridGraph& g)
{
    if (g.size() < 2 || !g.is_connected())
        throw Error(Errc::precondition, "reduction needs a connected grid graph with at least 2 vertices");
}

}  // namespace

DcbInstance reduce_grid_to_dcb(const GridGraph& g)
{
    require_reducible(g);
    const int v = static_cast<int>(g.size());
    const DcbLayout layout{g, 2 * v + 1};

    std::set<Cell> tiles;
    for (Cell c : g.vertices())
        tiles.insert(layout.tile(c));
    for (auto [a, b] : grid_edges(g)) {
        const Cell step = b - a;
        for (int t = 1; t <= 2 * v; ++t)
            tiles.insert(layout.tile(a) + Cell{step.x * t, step.y * t});
    }

    std::vector<Cell> crystals;
    for (Cell c : g.vertices())
        crystals.push_back(layout.tile(c));
    std::vector<Bond> bonds;
    for (int i = 0; i < v; ++i) {
        const Cell at = crystals[static_cast<std::size_t>(i)];
        for (Cell d : kOrthogonal)
            if (tiles.count(at + d)) {
                crystals.push_back(at + d);
                bonds.push_back({i, v + i});
                break;
            }
    }

    BondBoard board(TileRegion({tiles.begin(), tiles.end()}), std::move(crystals), std::nullopt,
                    std::move(bonds), DistanceModel::grid_steps);
    const std::int64_t threshold = std::int64_t{v - 1} * (2 * v + 1) + 2 * v;
    return {std::move(board), threshold, HamProperty::path};
}

DcbInstance apply_start_gadget(const DcbInstance& instance, const GridGraph& g)
{
    require_reducible(g);
    const int v = static_cast<int>(g.size());
    const BondBoard& board = instance.board;
    if (board.start() || board.crystal_count() != 2 * g.size() || instance.property != HamProperty::path)
        throw Error(Errc::precondition, "start gadget applies to a fresh grid-graph reduction");
    const DcbLayout layout{g, 2 * v + 1};

    // Leftmost column, topmost first.
    const int left = g.min_x();
    std::vector<Cell> column;
    for (Cell c : g.vertices())
        if (c.x == left)
            column.push_back(c);
    std::sort(column.begin(), column.end(), [](Cell a, Cell b) { return a.y > b.y; });

    std::vector<Cell> tiles(board.region().tiles().begin(), board.region().tiles().end());
    std::vector<Cell> crystals = board.crystals();
    std::vector<Bond> bonds = board.bonds();

    for (Cell c : column)
        if (g.degree(c) == 1) {
            const Cell start = layout.tile(c) + kWest;
            tiles.push_back(start);
            BondBoard out(TileRegion(std::move(tiles)), std::move(crystals), start, std::move(bonds),
                          board.model());
            return {std::move(out), instance.threshold, HamProperty::path};
        }

    auto chosen = std::find_if(column.begin(), column.end(), [&](Cell c) { return g.degree(c) == 2; });
    // The topmost vertex of the leftmost column has no west or north
    // neighbour, so it has degree 1 or 2.
    if (chosen == column.end())
        throw Error(Errc::internal, "no leftmost vertex of degree 1 or 2");

    const Cell vertex = *chosen;
    const Cell at = layout.tile(vertex);
    const auto index = static_cast<std::size_t>(*g.index_of(vertex));
    const Cell partner_dir = crystals[static_cast<std::size_t>(v) + index] - at;
    Cell broken_dir{};
    for (Cell d : kOrthogonal)
        if (d != partner_dir && g.contains(vertex + d))
            broken_dir = d;

    // Drop the corridor tile next to the vertex and bend the broken end
    // sideways by two tiles.
    tiles.erase(std::find(tiles.begin(), tiles.end(), at + broken_dir));
    const Cell end = at + Cell{2 * broken_dir.x, 2 * broken_dir.y};
    const Cell side = broken_dir.x != 0 ? Cell{-partner_dir.x, -partner_dir.y} : kWest;
    const Cell first = end + side;
    const Cell second = first + side;
    tiles.push_back(first);
    tiles.push_back(second);
    const int pair = static_cast<int>(crystals.size());
    crystals.push_back(first);
    crystals.push_back(second);
    bonds.push_back({pair, pair + 1});

    const Cell start = at + kWest;
    tiles.push_back(start);
    BondBoard out(TileRegion(std::move(tiles)), std::move(crystals), start, std::move(bonds), board.model());
    const std::int64_t threshold = std::int64_t{v} * (2 * v + 1) + 2 * v;
    return {std::move(out), threshold, HamProperty::cycle};
}

bool decide_dcb(const BondBoard& board, std::int64_t threshold)
{
    DistanceMatrix metric;
    try {
        metric = crystal_metric(board);
    } catch (const Error& e) {
        // A crystal that cannot be reached leaves no finite walk at all.
        if (e.code() != Errc::unreachable_crystal)
            throw;
        return false;
    }
    return brute_force_crystal_bonds(board, metric).total_length <= static_cast<double>(threshold) + 1e-9;
}

}  // namespace rift
