#include "rift/sweeps.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <functional>
#include <sstream>
#include <thread>
#include <vector>

#include "rift/crystal_bonds.hpp"
#include "rift/error.hpp"
#include "rift/generators.hpp"
#include "rift/geometry.hpp"
#include "rift/graphs.hpp"
#include "rift/hands_of_time.hpp"
#include "rift/instance_io.hpp"

namespace rift {

namespace {

enum class Outcome { pass, fail, indeterminate };

struct CaseResult {
    Outcome outcome = Outcome::pass;
    std::string what;
    std::string document;
};

CaseResult fail(std::string what, std::string document)
{
    return {Outcome::fail, std::move(what), std::move(document)};
}

/// Runs case(i) for i in [0, n) on up to `jobs` threads and merges the
/// results in index order.
SweepReport run_cases(std::string family, std::size_t n, unsigned jobs,
                      const std::function<CaseResult(std::size_t)>& run_case)
{
    std::vector<CaseResult> results(n);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < n;) {
            try {
                results[i] = run_case(i);
            } catch (const std::exception& e) {
                results[i] = fail(std::string("exception: ") + e.what(), "");
            }
        }
    };
    const unsigned threads = std::clamp<unsigned>(jobs, 1, static_cast<unsigned>(std::max<std::size_t>(n, 1)));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t)
        pool.emplace_back(worker);
    worker();
    for (auto& t : pool)
        t.join();

    SweepReport report;
    report.family = std::move(family);
    report.cases = n;
    for (auto& r : results) {
        switch (r.outcome) {
        case Outcome::pass: ++report.passed; continue;
        case Outcome::fail: ++report.failed; break;
        case Outcome::indeterminate: ++report.indeterminate; break;
        }
        if (report.first_failure.empty()) {
            report.first_failure = std::move(r.what);
            report.counterexample = std::move(r.document);
        }
    }
    return report;
}

/// Independent stream per case, so results do not depend on scheduling.
Rng case_rng(std::uint64_t seed, std::size_t index)
{
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
    return Rng(seq);
}

std::vector<GridGraph> reducible_graphs(const SweepOptions& o)
{
    std::vector<GridGraph> out;
    for_each_grid_graph(o.box_w, o.box_h, o.max_v, [&](const GridGraph& g) {
        if (g.size() >= 2)
            out.push_back(g);
    });
    return out;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

SweepReport sweep_thm1(const SweepOptions& o)
{
    const auto graphs = reducible_graphs(o);
    return run_cases("thm1", graphs.size(), o.jobs, [&](std::size_t i) -> CaseResult {
        const GridGraph& g = graphs[i];
        const TileBoard board = reduce_grid_to_tile_trial(g);
        const auto result = solve_tile_trial(board, o.budget);
        if (result.status == SolveStatus::budget_exhausted)
            return {Outcome::indeterminate, "budget exhausted", serialize(g)};
        const bool solvable = result.status == SolveStatus::solved;
        if (solvable) {
            auto report = verify_tile_path(board, result.path);
            if (!report)
                return fail("solver path rejected: " + report.describe(), serialize(g));
        }
        const bool cycle = has_ham_cycle_grid(g);
        if (solvable != cycle)
            return fail(std::string("tile trial solvable=") + yes_no(solvable) + ", hamiltonian cycle=" + yes_no(cycle),
                        serialize(g));
        return {};
    });
}

SweepReport sweep_thm3(const SweepOptions& o)
{
    const auto graphs = reducible_graphs(o);
    return run_cases("thm3", graphs.size(), o.jobs, [&](std::size_t i) -> CaseResult {
        const GridGraph& g = graphs[i];
        const DcbInstance base = reduce_grid_to_dcb(g);
        const bool path = has_ham_path_grid(g);
        const bool within = decide_dcb(base.board, base.threshold);
        if (within != path)
            return fail(std::string("within threshold=") + yes_no(within) + ", hamiltonian path=" + yes_no(path),
                        serialize(g));

        const DcbInstance gadget = apply_start_gadget(base, g);
        const bool expected =
            gadget.property == HamProperty::cycle ? has_ham_cycle_grid(g) : path;
        const bool gadget_within = decide_dcb(gadget.board, gadget.threshold);
        if (gadget_within != expected)
            return fail(std::string("start gadget within threshold=") + yes_no(gadget_within) + ", hamiltonian " +
                            (gadget.property == HamProperty::cycle ? "cycle=" : "path=") + yes_no(expected),
                        serialize(g));
        return {};
    });
}

SweepReport sweep_thm4(const SweepOptions& o, ClockCheck check)
{
    return run_cases("thm4", o.count, o.jobs, [&](std::size_t i) -> CaseResult {
        Rng rng = case_rng(o.seed, i);
        const int v = std::uniform_int_distribution<int>(2, 7)(rng);
        const Digraph d = random_outdeg12_digraph(rng, v);
        const ReductionCertificate cert = reduce_digraph_to_phot(d);

        if (check != ClockCheck::equivalence) {
            for (const auto& report : {audit_no_stray_landing(cert), check_digit_lemmas(cert)})
                if (!report)
                    return fail(report.describe(), serialize(d));
        }
        if (check != ClockCheck::audit) {
            const auto result = solve_clock(cert.clock, o.budget);
            if (result.status == SolveStatus::budget_exhausted)
                return {Outcome::indeterminate, "budget exhausted", serialize(d)};
            const bool solvable = result.status == SolveStatus::solved;
            if (solvable) {
                auto report = verify_clock_solution(cert.clock, *result.solution);
                if (!report)
                    return fail("solver selection rejected: " + report.describe(), serialize(d));
            }
            const bool ham = has_directed_ham_path(d);
            if (solvable != ham)
                return fail(std::string("clock solvable=") + yes_no(solvable) + ", hamiltonian path=" + yes_no(ham),
                            serialize(d));
        }
        return {};
    });
}

SweepReport sweep_cb_oracle(const SweepOptions& o)
{
    return run_cases("cb-oracle", o.count, o.jobs, [&](std::size_t i) -> CaseResult {
        Rng rng = case_rng(o.seed, i);
        const auto model = i % 2 == 0 ? DistanceModel::grid_steps : DistanceModel::euclidean;
        const BondBoard board = random_tree_board(rng, 8, 7, model);
        const auto metric = crystal_metric(board);
        const BondWalk fast = solve_crystal_bonds(board, metric);
        const BondWalk exact = brute_force_crystal_bonds(board, metric);
        for (const BondWalk* walk : {&fast, &exact}) {
            auto report = verify_bond_walk(board, *walk);
            if (!report)
                return fail("walk rejected: " + report.describe(), serialize(board));
        }
        const double gap = std::abs(fast.total_length - exact.total_length);
        const bool agree = model == DistanceModel::grid_steps ? gap == 0.0 : gap <= 1e-9;
        if (!agree) {
            std::ostringstream what;
            what.precision(17);
            what << "solver " << fast.total_length << ", oracle " << exact.total_length;
            return fail(what.str(), serialize(board));
        }
        return {};
    });
}

SweepReport sweep_geo_oracle(const SweepOptions& o)
{
    constexpr int k = 16;
    return run_cases("geo-oracle", o.count, o.jobs, [&](std::size_t i) -> CaseResult {
        Rng rng = case_rng(o.seed, i);
        std::uniform_int_distribution<int> side(1, 6);
        const int w = side(rng), h = side(rng);
        const TileRegion region = random_region(rng, w, h, 0.65);
        std::vector<Cell> tiles(region.tiles().begin(), region.tiles().end());
        std::uniform_int_distribution<std::size_t> which(0, tiles.size() - 1);
        const bool centres = i % 2 == 0;
        const Cell a = tiles[which(rng)], b = tiles[which(rng)];
        const Point p = centres ? center(a) : random_point_in(rng, a, k);
        const Point q = centres ? center(b) : random_point_in(rng, b, k);

        std::ostringstream doc;
        doc << serialize(GridGraph(tiles)) << "p " << p.x << ' ' << p.y << "\nq " << q.x << ' ' << q.y << '\n';
        const auto exact = euclidean_geodesic(region, p, q);
        const auto fine = fine_grid_distance(region, p, q, k);
        if (exact.has_value() != fine.has_value())
            return fail(std::string("reachability differs: geodesic ") + (exact ? "reachable" : "unreachable") +
                            ", lattice " + (fine ? "reachable" : "unreachable"),
                        doc.str());
        if (centres) {
            const auto steps = grid_distance(region, a, b);
            if (steps.has_value() != exact.has_value())
                return fail("reachability differs between geodesic and tile steps", doc.str());
            if (steps && *exact > *steps + kGeometryEps)
                return fail("geodesic longer than the tile-step walk", doc.str());
        }
        if (exact && !(*exact <= *fine + kGeometryEps && *fine <= 1.09 * *exact + kGeometryEps)) {
            std::ostringstream what;
            what.precision(17);
            what << "geodesic " << *exact << ", lattice " << *fine;
            return fail(what.str(), doc.str());
        }
        return {};
    });
}

std::optional<SweepReport> run_sweep(std::string_view family, const SweepOptions& options)
{
    if (family == "thm1")
        return sweep_thm1(options);
    if (family == "thm3")
        return sweep_thm3(options);
    if (family == "thm4")
        return sweep_thm4(options);
    if (family == "cb-oracle")
        return sweep_cb_oracle(options);
    if (family == "geo-oracle")
        return sweep_geo_oracle(options);
    return std::nullopt;
}

}  // namespace rift
