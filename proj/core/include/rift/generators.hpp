#pragma once

#include <cstdint>
#include <random>

#include "rift/crystal_bonds.hpp"
#include "rift/geometry.hpp"
#include "rift/graphs.hpp"
#include "rift/hands_of_time.hpp"
#include "rift/tile_trial.hpp"

namespace rift {

/// Seeded random instances for sweeps, round-trip tests and the CLI. Equal
/// seeds give equal values with a given standard library.
using Rng = std::mt19937_64;

/// Digraph on v vertices where every vertex has outdegree 1 or 2.
Digraph random_outdeg12_digraph(Rng& rng, int v);

/// Any digraph on 1..max_v vertices.
Digraph random_digraph(Rng& rng, int max_v);

/// Any nonempty set of cells inside [0,w)x[0,h); not necessarily connected.
GridGraph random_grid_graph(Rng& rng, int w, int h);

/// Connected tile region grown from a seed tile inside [0,w)x[0,h).
TileRegion random_connected_region(Rng& rng, int w, int h, std::size_t tiles);

/// Random tiles inside [0,w)x[0,h); may be disconnected or pinched.
TileRegion random_region(Rng& rng, int w, int h, double density);

/// Connected region of at most side x side tiles holding 2..max_crystals
/// crystals joined by a random spanning tree, with a start tile.
BondBoard random_tree_board(Rng& rng, int side, int max_crystals, DistanceModel model);

/// Any valid bond board: forest bonds, optional start, either model.
BondBoard random_bond_board(Rng& rng, int side);

/// Any valid Tile Trial board with non-negative coordinates.
TileBoard random_tile_board(Rng& rng, int side);

/// Sparse clock with circumference up to about 10^digits.
ClockInstance random_sparse_clock(Rng& rng, int digits, std::size_t occupied);

/// Lattice-aligned point inside a tile: coordinates are multiples of 1/k.
Point random_point_in(Rng& rng, Cell tile, int k);

}  // namespace rift
