#include <algorithm>
#include <cmath>

#include <gtest/gtest.h>

#include "rift/error.hpp"
#include "rift/generators.hpp"
#include "rift/instance_io.hpp"

namespace {

using namespace rift;

constexpr int kRounds = 500;

template <class T, class Parse>
void expect_round_trip(const T& value, Parse parse)
{
    const std::string text = serialize(value);
    const T back = parse(text);
    EXPECT_TRUE(back == value) << text;
    EXPECT_EQ(serialize(back), text);
}

Errc error_code(auto&& fn)
{
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "no error raised";
    return Errc::internal;
}

std::string error_message(auto&& fn)
{
    try {
        fn();
    } catch (const Error& e) {
        return e.what();
    }
    return {};
}

TEST(DocKind, Names)
{
    for (DocKind kind : {DocKind::grid_graph, DocKind::digraph, DocKind::tile_board, DocKind::tile_path,
                         DocKind::bond_board, DocKind::bond_walk, DocKind::clock, DocKind::clock_solution,
                         DocKind::certificate})
        EXPECT_EQ(parse_doc_kind(to_string(kind)), kind);
    EXPECT_EQ(parse_doc_kind("bond-board"), DocKind::bond_board);
    EXPECT_FALSE(parse_doc_kind("sudoku"));
}

TEST(RoundTrip, GridGraphsAndDigraphs)
{
    Rng rng(1);
    for (int i = 0; i < kRounds; ++i) {
        expect_round_trip(random_grid_graph(rng, 5, 4), parse_grid_graph);
        expect_round_trip(random_digraph(rng, 9), parse_digraph);
    }
}

TEST(RoundTrip, TileBoardsAndPaths)
{
    Rng rng(2);
    for (int i = 0; i < kRounds; ++i) {
        TileBoard board = random_tile_board(rng, 5);
        expect_round_trip(board, parse_tile_board);
        TilePath path(board.capacities().size());
        std::transform(board.capacities().begin(), board.capacities().end(), path.begin(),
                       [](const auto& entry) { return entry.first; });
        std::shuffle(path.begin(), path.end(), rng);
        expect_round_trip(path, parse_tile_path);
    }
}

TEST(RoundTrip, BondBoardsWalksAndDcbInstances)
{
    Rng rng(3);
    std::uniform_real_distribution<double> length(0.0, 1000.0);
    for (int i = 0; i < kRounds; ++i) {
        BondBoard board = random_bond_board(rng, 6);
        expect_round_trip(board, parse_bond_board);

        BondWalk walk;
        for (std::size_t c = 0; c < board.crystal_count(); ++c)
            walk.visit_sequence.push_back(static_cast<int>(c));
        std::shuffle(walk.visit_sequence.begin(), walk.visit_sequence.end(), rng);
        walk.total_length = i % 2 ? length(rng) : std::floor(length(rng));
        expect_round_trip(walk, parse_bond_walk);

        DcbInstance instance{board, static_cast<std::int64_t>(rng() % 100000),
                             i % 2 ? HamProperty::cycle : HamProperty::path};
        const std::string text = serialize(instance);
        const DcbInstance back = parse_dcb_instance(text);
        EXPECT_EQ(back.board, instance.board);
        EXPECT_EQ(back.threshold, instance.threshold);
        EXPECT_EQ(back.property, instance.property);
        EXPECT_EQ(serialize(back), text);
    }
}

TEST(RoundTrip, ClocksAndSolutions)
{
    Rng rng(4);
    for (int i = 0; i < kRounds; ++i) {
        ClockInstance clock = i % 2 ? gen_random_clock(2 + rng() % 30, rng()) : random_sparse_clock(rng, 50, 8);
        expect_round_trip(clock, parse_clock);
        ClockSolution solution;
        for (const auto& [p, value] : clock.occupied())
            solution.moves.push_back({p, rng() % 2 ? Turn::cw : Turn::ccw});
        expect_round_trip(solution, parse_clock_solution);
    }
}

TEST(RoundTrip, Certificates)
{
    Rng rng(5);
    for (int i = 0; i < kRounds; ++i) {
        ReductionCertificate cert = reduce_digraph_to_phot(random_outdeg12_digraph(rng, 2 + i % 6));
        if (i % 3 == 1)
            cert.source_verdict = true;
        if (i % 3 == 2) {
            cert.source_verdict = false;
            cert.clock_verdict = true;
        }
        expect_round_trip(cert, parse_certificate);
    }
}

TEST(Parse, DenseClockForm)
{
    EXPECT_EQ(parse_clock("dense 4\n2 2 2 2\n"), ClockInstance::dense({2, 2, 2, 2}));
    EXPECT_EQ(parse_clock("dense 3\n1\n1\n1\n"), ClockInstance::dense({1, 1, 1}));
}

TEST(Parse, InvalidValuesAreInvariantErrors)
{
    EXPECT_EQ(error_code([] { parse_clock("5\n0 0\n"); }), Errc::invariant);
    EXPECT_EQ(error_code([] { parse_clock("dense 2\n0 1\n"); }), Errc::invariant);
    EXPECT_EQ(error_code([] { parse_tile_board("SS.F\n"); }), Errc::invariant);
    EXPECT_EQ(error_code([] { parse_tile_board("S..\n"); }), Errc::invariant);
    EXPECT_EQ(error_code([] { parse_digraph("2\n0 0\n"); }), Errc::invariant);
}

TEST(Parse, SyntaxErrorsCarryLineNumbers)
{
    EXPECT_EQ(error_code([] { parse_clock("7\n0 1\n3 x\n"); }), Errc::syntax);
    EXPECT_NE(error_message([] { parse_clock("7\n0 1\n3 x\n"); }).find("line 3"), std::string::npos);
    EXPECT_NE(error_message([] { parse_grid_graph("0 0\n\n1\n"); }).find("line 3"), std::string::npos);
    EXPECT_EQ(error_code([] { parse_bond_walk("visit 1 0\n"); }), Errc::syntax);
    EXPECT_EQ(error_code([] { parse_tile_board("S?F\n"); }), Errc::syntax);
    EXPECT_EQ(error_code([] { parse_clock("dense 3\n1 1\n"); }), Errc::syntax);
    EXPECT_EQ(error_code([] { parse_bond_board("model taxicab\n"); }), Errc::syntax);
}

TEST(Parse, BondWalkLengthRoundTripsExactly)
{
    BondWalk walk{{0, 1}, 0.1 + 0.2};
    EXPECT_EQ(parse_bond_walk(serialize(walk)).total_length, walk.total_length);
}

}  // namespace
