#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "rift/tile_trial.hpp"

namespace rift {

struct SweepOptions {
    int box_w = 3;
    int box_h = 3;
    int max_v = 8;
    std::size_t count = 200;
    std::uint64_t seed = 1;
    unsigned jobs = 1;
    std::uint64_t budget = kUnlimitedBudget;
};

/// Aggregate of one sweep. Cases are merged in input order, so the first
/// failure does not depend on the number of jobs.
struct SweepReport {
    std::string family;
    std::size_t cases = 0;
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::size_t indeterminate = 0;
    std::string first_failure;
    std::string counterexample;

    bool ok() const noexcept { return failed == 0 && indeterminate == 0; }
};

/// Tile Trial reduction: solvable exactly when the graph has a Hamiltonian
/// cycle, over every connected graph of the box with 2..max_v vertices.
SweepReport sweep_thm1(const SweepOptions& options);

/// Disconnected Crystal Bonds reduction under the grid model, with and
/// without the start gadget, over the same family.
SweepReport sweep_thm3(const SweepOptions& options);

enum class ClockCheck { equivalence, audit, both };

/// Partial Hands of Time reduction on `count` seeded digraphs with
/// v in [2, 7] and outdegree 1 or 2. `audit` checks the no-stray-landing
/// property and the digit facts instead of solvability.
SweepReport sweep_thm4(const SweepOptions& options, ClockCheck check = ClockCheck::both);

/// Connected rural postman solver against the exhaustive oracle on `count`
/// random tree boards, alternating grid and Euclidean models.
SweepReport sweep_cb_oracle(const SweepOptions& options);

/// Exact geodesics against the 1/16 lattice oracle on `count` random cases.
SweepReport sweep_geo_oracle(const SweepOptions& options);

/// Dispatch by family name: thm1, thm3, thm4, cb-oracle, geo-oracle.
std::optional<SweepReport> run_sweep(std::string_view family, const SweepOptions& options);

}  // namespace rift
