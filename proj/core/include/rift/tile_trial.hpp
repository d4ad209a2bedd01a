#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <set>
#include <vector>

#include "rift/graphs.hpp"
#include "rift/report.hpp"

namespace rift {

/// Tile Trial instance. Capacities are 1 or 2; start and finish are distinct,
/// capacity-1 tiles without crystals.
class TileBoard {
public:
    TileBoard(std::map<Cell, int> capacities, std::set<Cell> crystals, Cell start, Cell finish);

    const std::map<Cell, int>& capacities() const noexcept { return capacities_; }
    const std::set<Cell>& crystals() const noexcept { return crystals_; }
    Cell start() const noexcept { return start_; }
    Cell finish() const noexcept { return finish_; }

    /// 0 for cells that are not tiles.
    int capacity(Cell c) const;
    bool has_crystal(Cell c) const { return crystals_.count(c) != 0; }

    TileBoard translated(Cell offset) const;
    /// Translated so the minimum tile coordinates are (0, 0).
    TileBoard normalized() const;

    friend bool operator==(const TileBoard&, const TileBoard&) = default;

private:
    std::map<Cell, int> capacities_;
    std::set<Cell> crystals_;
    Cell start_;
    Cell finish_;
};

using TilePath = std::vector<Cell>;

ValidityReport verify_tile_path(const TileBoard& board, const TilePath& path);

struct TileTrialResult {
    SolveStatus status = SolveStatus::unsolvable;
    TilePath path;  // set when solved
    std::uint64_t nodes = 0;
};

inline constexpr std::uint64_t kUnlimitedBudget = std::numeric_limits<std::uint64_t>::max();

/// Exact backtracking search. Each expanded step costs one unit of node_budget.
TileTrialResult solve_tile_trial(const TileBoard& board,
                                 std::uint64_t node_budget = kUnlimitedBudget);

/// Hamiltonian-cycle reduction: crystal tiles on the vertices, a capacity-2
/// connector column under the bottommost vertex, and a start-to-finish
/// corridor two rows below the graph. Requires g connected with |g| >= 2.
TileBoard reduce_grid_to_tile_trial(const GridGraph& g);

}  // namespace rift
