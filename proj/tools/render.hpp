#pragma once

#include <string>

#include "rift/crystal_bonds.hpp"
#include "rift/graphs.hpp"
#include "rift/hands_of_time.hpp"
#include "rift/tile_trial.hpp"

namespace rift::cli {

// Display-only pictures. Nothing here is meant to be parsed back.

std::string render(const GridGraph& g);
std::string render(const TileBoard& board);
std::string render(const BondBoard& board);
std::string render(const ClockInstance& clock);

}  // namespace rift::cli
