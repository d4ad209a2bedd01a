#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "render.hpp"
#include "rift/crystal_bonds.hpp"
#include "rift/error.hpp"
#include "rift/generators.hpp"
#include "rift/hands_of_time.hpp"
#include "rift/instance_io.hpp"
#include "rift/sweeps.hpp"
#include "rift/tile_trial.hpp"

namespace {

using namespace rift;

enum Exit { kOk = 0, kNegative = 1, kRejected = 2, kUsage = 3 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path)
{
    if (path == "-")
        return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw UsageError("cannot open " + path);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

struct Options {
    std::string kind;
    std::string input = "-";
    std::string solution;
    std::string model;
    std::optional<std::int64_t> threshold;
    std::uint64_t seed = 1;
    std::uint64_t budget = kUnlimitedBudget;
    unsigned jobs = 1;
    std::string box;
    std::optional<int> max_v;
    std::optional<std::size_t> count;
    std::size_t n = 8;
    bool solvable = false;
    bool decide = false;
};

std::pair<int, int> parse_box(const std::string& box)
{
    int w = 0, h = 0;
    char x = 0;
    std::istringstream in(box);
    if (!(in >> w >> x >> h) || (x != 'x' && x != 'X') || w < 1 || h < 1 || in.peek() != EOF)
        throw UsageError("--box expects WxH, got '" + box + "'");
    return {w, h};
}

BondBoard with_model_override(BondBoard board, const Options& o)
{
    if (o.model == "grid")
        return board.with_model(DistanceModel::grid_steps);
    if (o.model == "euclid")
        return board.with_model(DistanceModel::euclidean);
    return board;
}

[[noreturn]] void unknown_kind(const std::string& command, const std::string& kind)
{
    throw UsageError("'" + command + "' does not handle kind '" + kind + "'");
}

int cmd_solve(const Options& o)
{
    const std::string text = read_input(o.input);
    if (o.kind == "tile-board") {
        const auto result = solve_tile_trial(parse_tile_board(text), o.budget);
        if (result.status == SolveStatus::budget_exhausted) {
            std::cout << "INDETERMINATE\n";
            std::cerr << "node budget exhausted after " << result.nodes << " nodes\n";
            return kNegative;
        }
        if (result.status == SolveStatus::unsolvable) {
            std::cout << "UNSOLVABLE\n";
            return kNegative;
        }
        std::cout << serialize(result.path);
        return kOk;
    }
    if (o.kind == "bond-board") {
        const BondBoard board = with_model_override(parse_bond_board(text), o);
        DistanceMatrix metric;
        try {
            metric = crystal_metric(board);
        } catch (const Error& e) {
            if (e.code() != Errc::unreachable_crystal)
                throw;
            std::cout << "UNSOLVABLE\n";
            std::cerr << e.what() << '\n';
            return kNegative;
        }
        const BondWalk walk = board.bonds_connected() ? solve_crystal_bonds(board, metric)
                                                      : brute_force_crystal_bonds(board, metric);
        std::cout << serialize(walk);
        if (o.threshold && walk.total_length > static_cast<double>(*o.threshold) + 1e-9) {
            std::cerr << "over threshold " << *o.threshold << '\n';
            return kNegative;
        }
        return kOk;
    }
    if (o.kind == "dcb") {
        const DcbInstance instance = parse_dcb_instance(text);
        const BondBoard board = with_model_override(instance.board, o);
        DistanceMatrix metric;
        try {
            metric = crystal_metric(board);
        } catch (const Error& e) {
            if (e.code() != Errc::unreachable_crystal)
                throw;
            std::cout << "NO\n";
            std::cerr << e.what() << '\n';
            return kNegative;
        }
        const BondWalk walk = brute_force_crystal_bonds(board, metric);
        const std::int64_t threshold = o.threshold.value_or(instance.threshold);
        const bool yes = walk.total_length <= static_cast<double>(threshold) + 1e-9;
        std::cout << serialize(walk) << (yes ? "YES" : "NO") << " against threshold " << threshold << '\n';
        return yes ? kOk : kNegative;
    }
    if (o.kind == "clock") {
        const auto result = solve_clock(parse_clock(text), o.budget);
        if (result.status == SolveStatus::budget_exhausted) {
            std::cout << "INDETERMINATE\n";
            std::cerr << "node budget exhausted after " << result.nodes << " nodes\n";
            return kNegative;
        }
        if (result.status == SolveStatus::unsolvable) {
            std::cout << "UNSOLVABLE\n";
            return kNegative;
        }
        std::cout << serialize(*result.solution);
        return kOk;
    }
    unknown_kind("solve", o.kind);
}

int cmd_reduce(const Options& o)
{
    const std::string text = read_input(o.input);
    if (o.kind == "tile-trial") {
        std::cout << serialize(reduce_grid_to_tile_trial(parse_grid_graph(text)).normalized());
        return kOk;
    }
    if (o.kind == "dcb" || o.kind == "dcb-start") {
        const GridGraph g = parse_grid_graph(text);
        DcbInstance instance = reduce_grid_to_dcb(g);
        if (o.kind == "dcb-start")
            instance = apply_start_gadget(instance, g);
        std::cout << serialize(instance);
        return kOk;
    }
    if (o.kind == "phot") {
        ReductionCertificate cert = reduce_digraph_to_phot(parse_digraph(text));
        if (o.decide) {
            cert.source_verdict = has_directed_ham_path(cert.source);
            const auto result = solve_clock(cert.clock, o.budget);
            if (result.status != SolveStatus::budget_exhausted)
                cert.clock_verdict = result.status == SolveStatus::solved;
        }
        std::cout << serialize(cert);
        return kOk;
    }
    unknown_kind("reduce", o.kind);
}

int report_verdict(const ValidityReport& report)
{
    if (report) {
        std::cout << "ok\n";
        return kOk;
    }
    std::cout << "invalid: " << report.describe() << '\n';
    return kRejected;
}

int cmd_verify(const Options& o)
{
    const std::string instance = read_input(o.input);
    const std::string solution = read_input(o.solution);
    if (o.kind == "tile-board")
        return report_verdict(verify_tile_path(parse_tile_board(instance), parse_tile_path(solution)));
    if (o.kind == "bond-board")
        return report_verdict(
            verify_bond_walk(with_model_override(parse_bond_board(instance), o), parse_bond_walk(solution)));
    if (o.kind == "clock")
        return report_verdict(verify_clock_solution(parse_clock(instance), parse_clock_solution(solution)));
    unknown_kind("verify", o.kind);
}

int cmd_gen(const Options& o)
{
    Rng rng(o.seed);
    const int n = static_cast<int>(o.n);
    if (o.kind == "clock") {
        std::cout << serialize(o.solvable ? gen_solvable_clock(o.n, o.seed) : gen_random_clock(o.n, o.seed));
        return kOk;
    }
    if (o.kind == "digraph") {
        std::cout << serialize(random_outdeg12_digraph(rng, n));
        return kOk;
    }
    if (o.kind == "grid-graph") {
        auto [w, h] = o.box.empty() ? std::pair{3, 3} : parse_box(o.box);
        std::cout << serialize(random_grid_graph(rng, w, h));
        return kOk;
    }
    if (o.kind == "bond-board") {
        const auto model = o.model == "euclid" ? DistanceModel::euclidean : DistanceModel::grid_steps;
        std::cout << serialize(random_tree_board(rng, 8, std::max(2, n), model));
        return kOk;
    }
    if (o.kind == "tile-board") {
        std::cout << serialize(random_tile_board(rng, std::max(2, n)));
        return kOk;
    }
    unknown_kind("gen", o.kind);
}

int cmd_sweep(const Options& o)
{
    SweepOptions s;
    if (!o.box.empty())
        std::tie(s.box_w, s.box_h) = parse_box(o.box);
    s.max_v = o.max_v.value_or(o.kind == "thm3" ? 6 : 8);
    s.count = o.count.value_or(o.kind == "cb-oracle" ? 100 : 200);
    s.seed = o.seed;
    s.jobs = o.jobs;
    s.budget = o.budget;
    const auto report = run_sweep(o.kind, s);
    if (!report)
        throw UsageError("unknown sweep family '" + o.kind + "'");
    std::cout << report->family << ": " << report->cases << " cases, " << report->passed << " passed, "
              << report->failed << " failed, " << report->indeterminate << " indeterminate\n";
    if (report->ok()) {
        std::cout << "pass\n";
        return kOk;
    }
    std::cout << "fail\nfirst counterexample: " << report->first_failure << '\n' << report->counterexample;
    return kRejected;
}

int cmd_render(const Options& o)
{
    const std::string text = read_input(o.input);
    if (o.kind == "grid-graph")
        std::cout << cli::render(parse_grid_graph(text));
    else if (o.kind == "tile-board")
        std::cout << cli::render(parse_tile_board(text));
    else if (o.kind == "bond-board")
        std::cout << cli::render(parse_bond_board(text));
    else if (o.kind == "clock")
        std::cout << cli::render(parse_clock(text));
    else
        unknown_kind("render", o.kind);
    return kOk;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Solvers, reductions and sweeps for the temporal rift puzzles"};
    app.require_subcommand(1);
    Options o;

    auto add_model = [&](CLI::App* cmd) {
        cmd->add_option("--model", o.model, "Distance model for bond boards")->check(CLI::IsMember({"grid", "euclid"}));
    };

    auto* solve = app.add_subcommand("solve", "Solve a tile-board, bond-board, dcb instance or clock");
    solve->add_option("kind", o.kind)->required();
    solve->add_option("input", o.input, "Instance file, - for stdin");
    solve->add_option("--budget", o.budget, "Search node budget");
    solve->add_option("--threshold", o.threshold, "Report walks longer than this as negative");
    add_model(solve);

    auto* reduce = app.add_subcommand("reduce", "Build tile-trial, dcb, dcb-start or phot reduction");
    reduce->add_option("kind", o.kind)->required();
    reduce->add_option("input", o.input, "Grid graph or digraph file, - for stdin");
    reduce->add_flag("--decide", o.decide, "Fill in both verdicts of a phot certificate");
    reduce->add_option("--budget", o.budget, "Search node budget for --decide");

    auto* verify = app.add_subcommand("verify", "Check a solution against its instance");
    verify->add_option("kind", o.kind)->required();
    verify->add_option("instance", o.input)->required();
    verify->add_option("solution", o.solution)->required();
    add_model(verify);

    auto* gen = app.add_subcommand("gen", "Emit a random clock, digraph, grid-graph, bond-board or tile-board");
    gen->add_option("kind", o.kind)->required();
    gen->add_option("--seed", o.seed);
    gen->add_option("--n", o.n, "Size: clock positions, digraph vertices, crystals or board side")
        ->check(CLI::Range(2, 1 << 20));
    gen->add_option("--box", o.box, "Box WxH for grid graphs");
    gen->add_flag("--solvable", o.solvable, "Plant a solution in a clock");
    add_model(gen);

    auto* sweep = app.add_subcommand("sweep", "Run thm1, thm3, thm4, cb-oracle or geo-oracle");
    sweep->add_option("family", o.kind)->required();
    sweep->add_option("--box", o.box, "Enumeration box WxH");
    sweep->add_option("--max-v", o.max_v, "Largest enumerated graph");
    sweep->add_option("--count", o.count, "Number of random cases");
    sweep->add_option("--seed", o.seed);
    sweep->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::Range(1u, 256u));
    sweep->add_option("--budget", o.budget, "Search node budget per case");

    auto* render = app.add_subcommand("render", "ASCII picture of a grid-graph, tile-board, bond-board or clock");
    render->add_option("kind", o.kind)->required();
    render->add_option("input", o.input, "Instance file, - for stdin");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kOk : kUsage;
    }

    try {
        if (*solve)
            return cmd_solve(o);
        if (*reduce)
            return cmd_reduce(o);
        if (*verify)
            return cmd_verify(o);
        if (*gen)
            return cmd_gen(o);
        if (*sweep)
            return cmd_sweep(o);
        return cmd_render(o);
    } catch (const UsageError& e) {
        std::cerr << "rift: " << e.what() << '\n';
    } catch (const Error& e) {
        std::cerr << "rift: " << e.what() << '\n';
    }
    return kUsage;
}
