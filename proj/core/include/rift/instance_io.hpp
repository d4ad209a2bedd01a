#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "rift/crystal_bonds.hpp"
#include "rift/graphs.hpp"
#include "rift/hands_of_time.hpp"
#include "rift/tile_trial.hpp"

namespace rift {

/// Line-oriented text formats. Serialization is byte-deterministic and
/// parse(serialize(x)) == x. Parsers throw Errc::syntax with a line number
/// for malformed text and Errc::invariant when the value itself is invalid.
enum class DocKind {
    grid_graph,
    digraph,
    tile_board,
    tile_path,
    bond_board,
    bond_walk,
    clock,
    clock_solution,
    certificate,
};

const char* to_string(DocKind kind) noexcept;
std::optional<DocKind> parse_doc_kind(std::string_view name);

// One `x y` lattice point per line, sorted.
std::string serialize(const GridGraph& g);
GridGraph parse_grid_graph(std::string_view text);

// `v`, then one `src dst` arc per line.
std::string serialize(const Digraph& d);
Digraph parse_digraph(std::string_view text);

// One character per cell, top row first; the top-left cell is (0, max_y).
// Serializing needs non-negative coordinates (see TileBoard::normalized).
std::string serialize(const TileBoard& board);
TileBoard parse_tile_board(std::string_view text);

// One `x y` tile per line, in walking order.
std::string serialize(const TilePath& path);
TilePath parse_tile_path(std::string_view text);

// `model grid|euclid`, `start x y|none`, then counted sections
// `tiles n`, `crystals n` and `bonds n`.
std::string serialize(const BondBoard& board);
BondBoard parse_bond_board(std::string_view text);

// `length <shortest round-trip decimal>` and `visit i j ...`.
std::string serialize(const BondWalk& walk);
BondWalk parse_bond_walk(std::string_view text);

// A bond board followed by `threshold k` and `property path|cycle`.
std::string serialize(const DcbInstance& instance);
DcbInstance parse_dcb_instance(std::string_view text);

// `N`, then one `position value` per line. Parsing also accepts
// `dense n` followed by n values in clock order.
std::string serialize(const ClockInstance& clock);
ClockInstance parse_clock(std::string_view text);

// One `position cw|ccw` per line.
std::string serialize(const ClockSolution& solution);
ClockSolution parse_clock_solution(std::string_view text);

// Counted sections: digraph, clock, labels, secondaries, intended, verdicts.
std::string serialize(const ReductionCertificate& cert);
ReductionCertificate parse_certificate(std::string_view text);

}  // namespace rift
