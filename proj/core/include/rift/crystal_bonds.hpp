#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "rift/geometry.hpp"
#include "rift/graphs.hpp"
#include "rift/report.hpp"
#include "rift/rural_postman.hpp"

namespace rift {

enum class DistanceModel { grid_steps, euclidean };

const char* to_string(DistanceModel model) noexcept;

/// Unordered pair of crystal indices, stored with first < second.
using Bond = std::pair<int, int>;

/// Crystal Bonds instance. Crystals and the start sit at tile centres. The
/// required bonds form a forest over the crystals. Without a start tile the
/// player may begin at any crystal.
class BondBoard {
public:
    BondBoard(TileRegion region, std::vector<Cell> crystals, std::optional<Cell> start,
              std::vector<Bond> bonds, DistanceModel model);

    const TileRegion& region() const noexcept { return region_; }
    const std::vector<Cell>& crystals() const noexcept { return crystals_; }
    const std::optional<Cell>& start() const noexcept { return start_; }
    const std::vector<Bond>& bonds() const noexcept { return bonds_; }
    DistanceModel model() const noexcept { return model_; }

    std::size_t crystal_count() const noexcept { return crystals_.size(); }
    /// The bonds form a single tree spanning every crystal.
    bool connected() const;
    /// The bonds form one component over the crystals they touch; isolated
    /// crystals are ignored.
    bool bonds_connected() const;

    BondBoard with_model(DistanceModel model) const;

    friend bool operator==(const BondBoard&, const BondBoard&) = default;

private:
    TileRegion region_;
    std::vector<Cell> crystals_;
    std::optional<Cell> start_;
    std::vector<Bond> bonds_;
    DistanceModel model_;
};

struct BondWalk {
    std::vector<int> visit_sequence;
    double total_length = 0.0;

    friend bool operator==(const BondWalk&, const BondWalk&) = default;
};

/// Distances over crystals 0..r-1 and, when the board has one, the start at
/// index r. Throws Errc::unreachable_crystal when any pair is disconnected.
DistanceMatrix crystal_metric(const BondBoard& board);

/// Metric index of the start point, if any.
std::optional<int> start_index(const BondBoard& board);

/// Optimal walk for boards whose bonds are connected: metric closure
/// followed by the connected rural postman solver.
BondWalk solve_crystal_bonds(const BondBoard& board);
BondWalk solve_crystal_bonds(const BondBoard& board, const DistanceMatrix& metric);

inline constexpr std::size_t kMaxBruteForceBonds = 8;

/// Minimum over every ordering and orientation of the required bonds, with
/// deadhead legs between consecutive traversals. Works for any forest.
/// Throws Errc::too_many_bonds above kMaxBruteForceBonds.
BondWalk brute_force_crystal_bonds(const BondBoard& board);
BondWalk brute_force_crystal_bonds(const BondBoard& board, const DistanceMatrix& metric);

ValidityReport verify_bond_walk(const BondBoard& board, const BondWalk& walk);

enum class HamProperty { path, cycle };

/// A Disconnected Crystal Bonds decision instance produced by the grid-graph
/// reduction: optimum <= threshold exactly when the source graph has the
/// stated Hamiltonian property.
struct DcbInstance {
    BondBoard board;
    std::int64_t threshold;
    HamProperty property;
};

/// Scale the graph by 2v+1, lay corridors of 2v tiles along its edges and
/// bond each vertex crystal to a partner on its first existing neighbour
/// tile in east, north, west, south order. No start tile; threshold
/// (v-1)(2v+1) + 2v. Requires g connected with v >= 2.
DcbInstance reduce_grid_to_dcb(const GridGraph& g);

/// Add a start tile west of a leftmost vertex. With a degree-1 leftmost
/// vertex the property stays Hamiltonian path. Otherwise the leftmost
/// vertex of degree 2 loses its unpartnered corridor tile, the broken
/// corridor is extended by two tiles carrying a bonded crystal pair, and the
/// property becomes Hamiltonian cycle with threshold v(2v+1) + 2v.
DcbInstance apply_start_gadget(const DcbInstance& instance, const GridGraph& g);

/// Optimal covering walk length <= threshold, decided with the exhaustive
/// oracle. A board with an unreachable crystal has no walk and yields false.
bool decide_dcb(const BondBoard& board, std::int64_t threshold);

}  // namespace rift
