#include "rift/tile_trial.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "rift/error.hpp"

namespace rift {

TileBoard::TileBoard(std::map<Cell, int> capacities, std::set<Cell> crystals, Cell start, Cell finish)
    : capacities_(std::move(capacities)), crystals_(std::move(crystals)), start_(start), finish_(finish)
{
    for (const auto& [cell, cap] : capacities_)
        if (cap != 1 && cap != 2)
            throw Error(Errc::invariant, "tile capacity must be 1 or 2 at " + to_string(cell));
    for (Cell c : crystals_)
        if (!capacities_.count(c))
            throw Error(Errc::invariant, "crystal off the board at " + to_string(c));
    if (!capacities_.count(start_))
        throw Error(Errc::invariant, "start is not a tile");
    if (!capacities_.count(finish_))
        throw Error(Errc::invariant, "finish is not a tile");
    if (start_ == finish_)
        throw Error(Errc::invariant, "start and finish coincide");
    if (capacities_.at(start_) != 1 || capacities_.at(finish_) != 1)
        throw Error(Errc::invariant, "start and finish must have capacity 1");
    if (crystals_.count(start_) || crystals_.count(finish_))
        throw Error(Errc::invariant, "start and finish must not hold crystals");
}

int TileBoard::capacity(Cell c) const
{
    auto it = capacities_.find(c);
    return it == capacities_.end() ? 0 : it->second;
}

TileBoard TileBoard::translated(Cell offset) const
{
    std::map<Cell, int> caps;
    for (const auto& [cell, cap] : capacities_)
        caps.emplace(cell + offset, cap);
    std::set<Cell> crystals;
    for (Cell c : crystals_)
        crystals.insert(c + offset);
    return TileBoard(std::move(caps), std::move(crystals), start_ + offset, finish_ + offset);
}

TileBoard TileBoard::normalized() const
{
    int min_x = capacities_.begin()->first.x, min_y = capacities_.begin()->first.y;
    for (const auto& [cell, cap] : capacities_) {
        min_x = std::min(min_x, cell.x);
        min_y = std::min(min_y, cell.y);
    }
    return translated({-min_x, -min_y});
}

ValidityReport verify_tile_path(const TileBoard& board, const TilePath& path)
{
    if (path.empty())
        return ValidityReport::violation("empty-path", "a path needs at least one step");
    if (path.front() != board.start())
        return ValidityReport::violation("wrong-start", "path begins at " + to_string(path.front()));
    std::map<Cell, int> used;
    for (std::size_t i = 0; i < path.size(); ++i) {
        Cell c = path[i];
        if (board.capacity(c) == 0)
            return ValidityReport::violation("off-board", "step " + std::to_string(i) + " at " + to_string(c));
        if (i > 0) {
            Cell d = c - path[i - 1];
            if (std::abs(d.x) + std::abs(d.y) != 1)
                return ValidityReport::violation("not-adjacent", "step " + std::to_string(i) + " from " +
                                                                     to_string(path[i - 1]) + " to " +
                                                                     to_string(c));
        }
        if (++used[c] > board.capacity(c))
            return ValidityReport::violation("capacity-exceeded", "at " + to_string(c));
    }
    if (path.back() != board.finish())
        return ValidityReport::violation("wrong-finish", "path ends at " + to_string(path.back()));
    for (Cell crystal : board.crystals())
        if (!used.count(crystal))
            return ValidityReport::violation("crystal-missed", "at " + to_string(crystal));
    return ValidityReport::valid();
}

namespace {

class TileSearch {
public:
    TileSearch(const TileBoard& board, std::uint64_t budget) : budget_(budget)
    {
        for (const auto& [cell, cap] : board.capacities()) {
            cells_.push_back(cell);
            residual_.push_back(cap);
            crystal_.push_back(board.has_crystal(cell));
        }
        auto index = [&](Cell c) {
            return static_cast<int>(std::lower_bound(cells_.begin(), cells_.end(), c) - cells_.begin());
        };
        adj_.resize(cells_.size());
        for (std::size_t i = 0; i < cells_.size(); ++i)
            for (Cell d : kOrthogonal)
                if (board.capacity(cells_[i] + d) > 0)
                    adj_[i].push_back(index(cells_[i] + d));
        start_ = index(board.start());
        finish_ = index(board.finish());
        touched_.assign(cells_.size(), 0);
        uncollected_ = static_cast<int>(board.crystals().size());
        seen_.assign(cells_.size(), 0);
    }

    TileTrialResult run()
    {
        TileTrialResult result;
        step_on(start_);
        bool found = false;
        try {
            found = search(start_);
        } catch (const BudgetExhausted&) {
            result.status = SolveStatus::budget_exhausted;
            result.nodes = nodes_;
            return result;
        }
        result.nodes = nodes_;
        if (found) {
            result.status = SolveStatus::solved;
            for (int i : path_)
                result.path.push_back(cells_[static_cast<std::size_t>(i)]);
        } else {
            result.status = SolveStatus::unsolvable;
        }
        return result;
    }

private:
    struct BudgetExhausted {};

    void step_on(int i)
    {
        auto u = static_cast<std::size_t>(i);
        --residual_[u];
        if (crystal_[u] && touched_[u] == 0)
            --uncollected_;
        ++touched_[u];
        path_.push_back(i);
    }

    void step_off(int i)
    {
        auto u = static_cast<std::size_t>(i);
        --touched_[u];
        if (crystal_[u] && touched_[u] == 0)
            ++uncollected_;
        ++residual_[u];
        path_.pop_back();
    }

    /// Finish and every uncollected crystal must remain reachable through
    /// tiles with residual capacity.
    bool still_feasible(int at)
    {
        ++epoch_;
        std::vector<int> stack{at};
        seen_[static_cast<std::size_t>(at)] = epoch_;
        int crystals_seen = 0;
        bool finish_seen = false;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int w : adj_[static_cast<std::size_t>(u)]) {
                auto uw = static_cast<std::size_t>(w);
                if (residual_[uw] == 0 || seen_[uw] == epoch_)
                    continue;
                seen_[uw] = epoch_;
                if (crystal_[uw] && touched_[uw] == 0)
                    ++crystals_seen;
                finish_seen = finish_seen || w == finish_;
                stack.push_back(w);
            }
        }
        return finish_seen && crystals_seen == uncollected_;
    }

    bool search(int at)
    {
        if (++nodes_ > budget_)
            throw BudgetExhausted{};
        if (at == finish_ && uncollected_ == 0)
            return true;
        if (!still_feasible(at))
            return false;
        for (int w : adj_[static_cast<std::size_t>(at)]) {
            if (residual_[static_cast<std::size_t>(w)] == 0)
                continue;
            step_on(w);
            if (search(w))
                return true;
            step_off(w);
        }
        return false;
    }

    std::vector<Cell> cells_;
    std::vector<int> residual_;
    std::vector<bool> crystal_;
    std::vector<int> touched_;
    std::vector<std::vector<int>> adj_;
    std::vector<int> path_;
    std::vector<unsigned> seen_;
    unsigned epoch_ = 0;
    int start_ = 0;
    int finish_ = 0;
    int uncollected_ = 0;
    std::uint64_t nodes_ = 0;
    std::uint64_t budget_;
};

}  // namespace

TileTrialResult solve_tile_trial(const TileBoard& board, std::uint64_t node_budget)
{
    return TileSearch(board, node_budget).run();
}

TileBoard reduce_grid_to_tile_trial(const GridGraph& g)
{
    if (g.size() < 2 || !g.is_connected())
        throw Error(Errc::precondition, "reduction needs a connected grid graph with at least 2 vertices");

    // Bottommost vertex, ties broken by minimum x. Vertices are sorted by
    // (x, y), so scan for the smallest (y, x).
    Cell bottom = g.vertices().front();
    for (Cell c : g.vertices())
        if (c.y < bottom.y || (c.y == bottom.y && c.x < bottom.x))
            bottom = c;

    std::map<Cell, int> caps;
    std::set<Cell> crystals;
    for (Cell c : g.vertices()) {
        caps[c] = 1;
        crystals.insert(c);
    }
    caps[bottom] = 2;

    const int corridor_y = g.min_y() - 2;
    for (int x = g.min_x() - 1; x <= g.max_x() + 1; ++x)
        caps[{x, corridor_y}] = 1;
    caps[{bottom.x, bottom.y - 1}] = 2;
    caps[{bottom.x, bottom.y - 2}] = 2;

    Cell start{g.min_x() - 1, corridor_y};
    Cell finish{g.max_x() + 1, corridor_y};
    return TileBoard(std::move(caps), std::move(crystals), start, finish);
}

}  // namespace rift
