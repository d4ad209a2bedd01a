#include "rift/generators.hpp"

#include <algorithm>
#include <set>
#include <vector>

#include "rift/error.hpp"

namespace rift {

namespace {

int uniform(Rng& rng, int lo, int hi)
{
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

bool coin(Rng& rng, double p)
{
    return std::bernoulli_distribution(p)(rng);
}

template <class T>
const T& pick(Rng& rng, const std::vector<T>& items)
{
    return items[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(items.size()) - 1))];
}

/// Uniform-ish big integer in [0, bound) from random decimal digits.
BigInt random_below(Rng& rng, const BigInt& bound)
{
    const std::size_t digits = bound.str().size() + 2;
    BigInt x = 0;
    for (std::size_t i = 0; i < digits; ++i)
        x = x * 10 + uniform(rng, 0, 9);
    return x % bound;
}

std::vector<Cell> sample_cells(Rng& rng, std::span<const Cell> from, std::size_t count)
{
    std::vector<Cell> pool(from.begin(), from.end());
    std::shuffle(pool.begin(), pool.end(), rng);
    pool.resize(std::min(count, pool.size()));
    return pool;
}

}  // namespace

Digraph random_outdeg12_digraph(Rng& rng, int v)
{
    if (v < 2)
        throw Error(Errc::precondition, "outdegree 1 or 2 needs at least 2 vertices");
    std::vector<Arc> arcs;
    for (int j = 0; j < v; ++j) {
        std::vector<int> others;
        for (int k = 0; k < v; ++k)
            if (k != j)
                others.push_back(k);
        std::shuffle(others.begin(), others.end(), rng);
        const int degree = v > 2 && coin(rng, 0.5) ? 2 : 1;
        for (int i = 0; i < degree; ++i)
            arcs.emplace_back(j, others[static_cast<std::size_t>(i)]);
    }
    return Digraph(v, std::move(arcs));
}

Digraph random_digraph(Rng& rng, int max_v)
{
    const int v = uniform(rng, 1, max_v);
    std::vector<Arc> arcs;
    for (int s = 0; s < v; ++s)
        for (int t = 0; t < v; ++t)
            if (s != t && coin(rng, 0.3))
                arcs.emplace_back(s, t);
    std::shuffle(arcs.begin(), arcs.end(), rng);
    return Digraph(v, std::move(arcs));
}

GridGraph random_grid_graph(Rng& rng, int w, int h)
{
    std::vector<Cell> cells;
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x)
            if (coin(rng, 0.5))
                cells.push_back({x, y});
    if (cells.empty())
        cells.push_back({uniform(rng, 0, w - 1), uniform(rng, 0, h - 1)});
    return GridGraph(std::move(cells));
}

TileRegion random_connected_region(Rng& rng, int w, int h, std::size_t tiles)
{
    tiles = std::clamp<std::size_t>(tiles, 1, static_cast<std::size_t>(w * h));
    std::set<Cell> region{{uniform(rng, 0, w - 1), uniform(rng, 0, h - 1)}};
    while (region.size() < tiles) {
        std::vector<Cell> frontier;
        for (Cell c : region)
            for (Cell d : kOrthogonal) {
                Cell n = c + d;
                if (n.x >= 0 && n.y >= 0 && n.x < w && n.y < h && !region.count(n))
                    frontier.push_back(n);
            }
        region.insert(pick(rng, frontier));
    }
    return TileRegion({region.begin(), region.end()});
}

TileRegion random_region(Rng& rng, int w, int h, double density)
{
    std::vector<Cell> cells;
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x)
            if (coin(rng, density))
                cells.push_back({x, y});
    if (cells.empty())
        cells.push_back({uniform(rng, 0, w - 1), uniform(rng, 0, h - 1)});
    return TileRegion(std::move(cells));
}

BondBoard random_tree_board(Rng& rng, int side, int max_crystals, DistanceModel model)
{
    const int w = uniform(rng, 2, side), h = uniform(rng, 2, side);
    const int r = uniform(rng, 2, max_crystals);
    const auto area = static_cast<std::size_t>(w * h);
    const auto size = static_cast<std::size_t>(uniform(rng, std::min(r + 1, w * h), w * h));
    TileRegion region = random_connected_region(rng, w, h, std::max<std::size_t>(size, std::min<std::size_t>(r, area)));
    auto crystals = sample_cells(rng, region.tiles(), static_cast<std::size_t>(r));
    std::vector<Bond> bonds;
    for (int i = 1; i < static_cast<int>(crystals.size()); ++i)
        bonds.push_back({uniform(rng, 0, i - 1), i});
    const Cell start = pick(rng, std::vector<Cell>(region.tiles().begin(), region.tiles().end()));
    return BondBoard(std::move(region), std::move(crystals), start, std::move(bonds), model);
}

BondBoard random_bond_board(Rng& rng, int side)
{
    const int w = uniform(rng, 1, side), h = uniform(rng, 1, side);
    TileRegion region = coin(rng, 0.7) ? random_connected_region(rng, w, h, static_cast<std::size_t>(uniform(rng, 1, w * h)))
                                       : random_region(rng, w, h, 0.5);
    const int r = uniform(rng, 0, std::min<int>(6, static_cast<int>(region.tiles().size())));
    auto crystals = sample_cells(rng, region.tiles(), static_cast<std::size_t>(r));
    std::vector<Bond> bonds;
    for (int i = 1; i < r; ++i)
        if (coin(rng, 0.6))
            bonds.push_back(coin(rng, 0.5) ? Bond{uniform(rng, 0, i - 1), i} : Bond{i, uniform(rng, 0, i - 1)});
    std::shuffle(bonds.begin(), bonds.end(), rng);
    std::optional<Cell> start;
    if (coin(rng, 0.7))
        start = pick(rng, std::vector<Cell>(region.tiles().begin(), region.tiles().end()));
    const auto model = coin(rng, 0.5) ? DistanceModel::grid_steps : DistanceModel::euclidean;
    return BondBoard(std::move(region), std::move(crystals), start, std::move(bonds), model);
}

TileBoard random_tile_board(Rng& rng, int side)
{
    const int w = uniform(rng, 2, side), h = uniform(rng, 1, side);
    TileRegion region = random_connected_region(rng, w, h, static_cast<std::size_t>(uniform(rng, 2, w * h)));
    auto tiles = sample_cells(rng, region.tiles(), region.tiles().size());
    const Cell start = tiles[0], finish = tiles[1];
    std::map<Cell, int> caps;
    std::set<Cell> crystals;
    for (std::size_t i = 0; i < tiles.size(); ++i) {
        caps[tiles[i]] = i < 2 ? 1 : uniform(rng, 1, 2);
        if (i >= 2 && coin(rng, 0.4))
            crystals.insert(tiles[i]);
    }
    return TileBoard(std::move(caps), std::move(crystals), start, finish);
}

ClockInstance random_sparse_clock(Rng& rng, int digits, std::size_t occupied)
{
    BigInt n = 0;
    const int length = uniform(rng, 1, std::max(1, digits));
    for (int i = 0; i < length; ++i)
        n = n * 10 + uniform(rng, i == 0 ? 1 : 0, 9);
    if (n < 2)
        n = 2;
    std::map<BigInt, BigInt> nodes;
    const BigInt half = n / 2;
    const std::size_t target = n < BigInt(occupied) ? static_cast<std::size_t>(n) : std::max<std::size_t>(occupied, 1);
    while (nodes.size() < target)
        nodes.emplace(random_below(rng, n), 1 + random_below(rng, half));
    return ClockInstance(std::move(n), std::move(nodes));
}

Point random_point_in(Rng& rng, Cell tile, int k)
{
    return {tile.x + static_cast<double>(uniform(rng, 1, k - 1)) / k,
            tile.y + static_cast<double>(uniform(rng, 1, k - 1)) / k};
}

}  // namespace rift
