#include "rift/instance_io.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <set>
#include <sstream>
#include <vector>

#include "rift/error.hpp"

namespace rift {

namespace {

constexpr std::pair<DocKind, const char*> kKindNames[] = {
    {DocKind::grid_graph, "grid-graph"},   {DocKind::digraph, "digraph"},
    {DocKind::tile_board, "tile-board"},   {DocKind::tile_path, "tile-path"},
    {DocKind::bond_board, "bond-board"},   {DocKind::bond_walk, "bond-walk"},
    {DocKind::clock, "clock"},             {DocKind::clock_solution, "clock-solution"},
    {DocKind::certificate, "certificate"},
};

struct Line {
    int number = 0;
    std::string_view raw;
    std::vector<std::string_view> tokens;
};

[[noreturn]] void syntax_error(int line, const std::string& message)
{
    throw Error(Errc::syntax, "line " + std::to_string(line) + ": " + message);
}

std::vector<std::string_view> split_tokens(std::string_view s)
{
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t'))
            ++i;
        std::size_t j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t')
            ++j;
        if (j > i)
            out.push_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

/// Physical lines with 1-based numbers. A trailing newline does not start a
/// new line.
std::vector<Line> split_lines(std::string_view text)
{
    std::vector<Line> lines;
    int number = 0;
    while (!text.empty()) {
        const auto end = text.find('\n');
        std::string_view raw = text.substr(0, end);
        if (!raw.empty() && raw.back() == '\r')
            raw.remove_suffix(1);
        lines.push_back({++number, raw, split_tokens(raw)});
        if (end == std::string_view::npos)
            break;
        text.remove_prefix(end + 1);
    }
    return lines;
}

/// Cursor over the non-blank lines of a token-oriented document.
class Reader {
public:
    explicit Reader(std::string_view text)
    {
        for (auto& line : split_lines(text)) {
            last_ = line.number;
            if (!line.tokens.empty())
                lines_.push_back(std::move(line));
        }
    }

    bool done() const { return pos_ == lines_.size(); }

    const Line& next(const std::string& expected)
    {
        if (done())
            syntax_error(last_ + 1, "unexpected end of input, expected " + expected);
        return lines_[pos_++];
    }

    /// Next line, which must start with `keyword` and have `arity` more tokens.
    const Line& keyword(std::string_view word, std::size_t arity)
    {
        const Line& line = next("'" + std::string(word) + "'");
        if (line.tokens[0] != word)
            syntax_error(line.number, "expected '" + std::string(word) + "', found '" +
                                          std::string(line.tokens[0]) + "'");
        expect_arity(line, arity + 1);
        return line;
    }

    void finish()
    {
        if (!done())
            syntax_error(lines_[pos_].number, "unexpected trailing content");
    }

    static void expect_arity(const Line& line, std::size_t n)
    {
        if (line.tokens.size() != n)
            syntax_error(line.number,
                         "expected " + std::to_string(n) + " fields, found " + std::to_string(line.tokens.size()));
    }

private:
    std::vector<Line> lines_;
    std::size_t pos_ = 0;
    int last_ = 0;
};

template <class Int>
Int to_integer(std::string_view token, int line)
{
    Int value{};
    const char* first = token.data();
    const char* last = first + token.size();
    if (!token.empty() && token[0] == '+')
        syntax_error(line, "malformed integer '" + std::string(token) + "'");
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last)
        syntax_error(line, "malformed integer '" + std::string(token) + "'");
    return value;
}

int to_int(std::string_view token, int line) { return to_integer<int>(token, line); }

std::size_t to_count(std::string_view token, int line) { return to_integer<std::size_t>(token, line); }

BigInt to_bigint(std::string_view token, int line)
{
    std::string_view digits = token;
    if (!digits.empty() && digits[0] == '-')
        digits.remove_prefix(1);
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }))
        syntax_error(line, "malformed integer '" + std::string(token) + "'");
    return BigInt(std::string(token));
}

double to_double(std::string_view token, int line)
{
    double value = 0.0;
    const char* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(token.data(), last, value);
    if (ec != std::errc() || ptr != last)
        syntax_error(line, "malformed number '" + std::string(token) + "'");
    return value;
}

std::string format_double(double value)
{
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
    if (ec != std::errc())
        throw Error(Errc::internal, "cannot format number");
    return std::string(buf, ptr);
}

Cell to_cell(const Line& line, std::size_t at = 0)
{
    return {to_int(line.tokens[at], line.number), to_int(line.tokens[at + 1], line.number)};
}

/// Constructors report bad values as precondition or invariant errors; a
/// parser reports both as invariant violations.
template <class F>
auto construct(F&& make) -> decltype(make())
{
    try {
        return make();
    } catch (const Error& e) {
        if (e.code() == Errc::precondition)
            throw Error(Errc::invariant, e.what());
        throw;
    }
}

void write_cell(std::ostringstream& out, Cell c) { out << c.x << ' ' << c.y << '\n'; }

std::vector<Cell> read_cells(Reader& in, std::size_t count)
{
    std::vector<Cell> cells;
    for (std::size_t i = 0; i < count; ++i) {
        const Line& line = in.next("a point 'x y'");
        Reader::expect_arity(line, 2);
        cells.push_back(to_cell(line));
    }
    return cells;
}

// Digraph and clock bodies, shared with the certificate format.

void write_arcs(std::ostringstream& out, const Digraph& d)
{
    for (auto [s, t] : d.arcs())
        out << s << ' ' << t << '\n';
}

std::vector<Arc> read_arcs(Reader& in, std::optional<std::size_t> count)
{
    std::vector<Arc> arcs;
    while (count ? arcs.size() < *count : !in.done()) {
        const Line& line = in.next("an arc 'src dst'");
        Reader::expect_arity(line, 2);
        arcs.emplace_back(to_int(line.tokens[0], line.number), to_int(line.tokens[1], line.number));
    }
    return arcs;
}

void write_occupied(std::ostringstream& out, const ClockInstance& clock)
{
    for (const auto& [position, value] : clock.occupied())
        out << position << ' ' << value << '\n';
}

std::map<BigInt, BigInt> read_occupied(Reader& in, std::optional<std::size_t> count)
{
    std::map<BigInt, BigInt> occupied;
    std::size_t read = 0;
    while (count ? read < *count : !in.done()) {
        const Line& line = in.next("a node 'position value'");
        Reader::expect_arity(line, 2);
        BigInt position = to_bigint(line.tokens[0], line.number);
        if (!occupied.emplace(position, to_bigint(line.tokens[1], line.number)).second)
            throw Error(Errc::invariant, "line " + std::to_string(line.number) + ": position " +
                                             position.str() + " listed twice");
        ++read;
    }
    return occupied;
}

const char* verdict_name(const std::optional<bool>& v)
{
    return !v ? "unknown" : *v ? "yes" : "no";
}

std::optional<bool> read_verdict(std::string_view token, int line)
{
    if (token == "yes")
        return true;
    if (token == "no")
        return false;
    if (token == "unknown")
        return std::nullopt;
    syntax_error(line, "verdict must be yes, no or unknown");
}

const char* case_name(SecondaryCase c)
{
    return c == SecondaryCase::a ? "a" : c == SecondaryCase::b ? "b" : "c";
}

}  // namespace

const char* to_string(DocKind kind) noexcept
{
    for (auto [k, name] : kKindNames)
        if (k == kind)
            return name;
    return "unknown";
}

std::optional<DocKind> parse_doc_kind(std::string_view name)
{
    for (auto [k, n] : kKindNames)
        if (name == n)
            return k;
    return std::nullopt;
}

std::string serialize(const GridGraph& g)
{
    std::ostringstream out;
    for (Cell c : g.vertices())
        write_cell(out, c);
    return out.str();
}

GridGraph parse_grid_graph(std::string_view text)
{
    Reader in(text);
    std::vector<Cell> cells;
    while (!in.done()) {
        const Line& line = in.next("a vertex");
        Reader::expect_arity(line, 2);
        cells.push_back(to_cell(line));
    }
    std::set<Cell> distinct(cells.begin(), cells.end());
    if (distinct.size() != cells.size())
        throw Error(Errc::invariant, "vertex listed twice");
    return construct([&] { return GridGraph(std::move(cells)); });
}

std::string serialize(const Digraph& d)
{
    std::ostringstream out;
    out << d.vertex_count() << '\n';
    write_arcs(out, d);
    return out.str();
}

Digraph parse_digraph(std::string_view text)
{
    Reader in(text);
    const Line& head = in.next("vertex count");
    Reader::expect_arity(head, 1);
    const int v = to_int(head.tokens[0], head.number);
    auto arcs = read_arcs(in, std::nullopt);
    return construct([&] { return Digraph(v, std::move(arcs)); });
}

std::string serialize(const TileBoard& board)
{
    int max_x = 0, max_y = 0;
    for (const auto& [c, cap] : board.capacities()) {
        if (c.x < 0 || c.y < 0)
            throw Error(Errc::precondition, "tile-board text needs non-negative coordinates");
        max_x = std::max(max_x, c.x);
        max_y = std::max(max_y, c.y);
    }
    std::string out;
    for (int y = max_y; y >= 0; --y) {
        for (int x = 0; x <= max_x; ++x) {
            const Cell c{x, y};
            const int cap = board.capacity(c);
            char ch = '#';
            if (c == board.start())
                ch = 'S';
            else if (c == board.finish())
                ch = 'F';
            else if (cap > 0)
                ch = board.has_crystal(c) ? (cap == 2 ? '@' : '*') : (cap == 2 ? '2' : '.');
            out += ch;
        }
        out += '\n';
    }
    return out;
}

TileBoard parse_tile_board(std::string_view text)
{
    const auto lines = split_lines(text);
    if (lines.empty())
        throw Error(Errc::syntax, "line 1: empty tile board");
    const int height = static_cast<int>(lines.size());
    std::map<Cell, int> caps;
    std::set<Cell> crystals;
    std::vector<Cell> starts, finishes;
    for (const auto& line : lines) {
        const int y = height - line.number;
        for (std::size_t x = 0; x < line.raw.size(); ++x) {
            const Cell c{static_cast<int>(x), y};
            switch (line.raw[x]) {
            case '#': break;
            case '.': caps[c] = 1; break;
            case '2': caps[c] = 2; break;
            case '*': caps[c] = 1; crystals.insert(c); break;
            case '@': caps[c] = 2; crystals.insert(c); break;
            case 'S': caps[c] = 1; starts.push_back(c); break;
            case 'F': caps[c] = 1; finishes.push_back(c); break;
            default:
                syntax_error(line.number, std::string("unknown cell character '") + line.raw[x] + "'");
            }
        }
    }
    if (starts.size() != 1)
        throw Error(Errc::invariant, "tile board needs exactly one S, found " + std::to_string(starts.size()));
    if (finishes.size() != 1)
        throw Error(Errc::invariant, "tile board needs exactly one F, found " + std::to_string(finishes.size()));
    return construct([&] { return TileBoard(std::move(caps), std::move(crystals), starts[0], finishes[0]); });
}

std::string serialize(const TilePath& path)
{
    std::ostringstream out;
    for (Cell c : path)
        write_cell(out, c);
    return out.str();
}

TilePath parse_tile_path(std::string_view text)
{
    Reader in(text);
    TilePath path;
    while (!in.done()) {
        const Line& line = in.next("a tile");
        Reader::expect_arity(line, 2);
        path.push_back(to_cell(line));
    }
    return path;
}

std::string serialize(const BondBoard& board)
{
    std::ostringstream out;
    out << "model " << to_string(board.model()) << '\n';
    if (board.start())
        out << "start " << board.start()->x << ' ' << board.start()->y << '\n';
    else
        out << "start none\n";
    out << "tiles " << board.region().tiles().size() << '\n';
    for (Cell c : board.region().tiles())
        write_cell(out, c);
    out << "crystals " << board.crystal_count() << '\n';
    for (Cell c : board.crystals())
        write_cell(out, c);
    out << "bonds " << board.bonds().size() << '\n';
    for (auto [a, b] : board.bonds())
        out << a << ' ' << b << '\n';
    return out.str();
}

namespace {

BondBoard read_bond_board(Reader& in)
{
    const Line& model_line = in.keyword("model", 1);
    DistanceModel model;
    if (model_line.tokens[1] == "grid")
        model = DistanceModel::grid_steps;
    else if (model_line.tokens[1] == "euclid")
        model = DistanceModel::euclidean;
    else
        syntax_error(model_line.number, "model must be grid or euclid");

    const Line& start_line = in.next("'start'");
    if (start_line.tokens[0] != "start")
        syntax_error(start_line.number, "expected 'start'");
    std::optional<Cell> start;
    if (start_line.tokens.size() == 2 && start_line.tokens[1] == "none")
        start = std::nullopt;
    else if (start_line.tokens.size() == 3)
        start = to_cell(start_line, 1);
    else
        syntax_error(start_line.number, "expected 'start x y' or 'start none'");

    const Line& tiles_line = in.keyword("tiles", 1);
    auto tiles = read_cells(in, to_count(tiles_line.tokens[1], tiles_line.number));
    if (std::set<Cell>(tiles.begin(), tiles.end()).size() != tiles.size())
        throw Error(Errc::invariant, "tile listed twice");
    const Line& crystals_line = in.keyword("crystals", 1);
    auto crystals = read_cells(in, to_count(crystals_line.tokens[1], crystals_line.number));
    const Line& bonds_line = in.keyword("bonds", 1);
    auto bonds = read_arcs(in, to_count(bonds_line.tokens[1], bonds_line.number));

    return construct([&] {
        return BondBoard(TileRegion(std::move(tiles)), std::move(crystals), start, std::move(bonds), model);
    });
}

}  // namespace

BondBoard parse_bond_board(std::string_view text)
{
    Reader in(text);
    BondBoard board = read_bond_board(in);
    in.finish();
    return board;
}

std::string serialize(const BondWalk& walk)
{
    std::ostringstream out;
    out << "length " << format_double(walk.total_length) << '\n';
    out << "visit";
    for (int c : walk.visit_sequence)
        out << ' ' << c;
    out << '\n';
    return out.str();
}

BondWalk parse_bond_walk(std::string_view text)
{
    Reader in(text);
    BondWalk walk;
    const Line& length = in.keyword("length", 1);
    walk.total_length = to_double(length.tokens[1], length.number);
    if (!(walk.total_length >= 0.0))
        throw Error(Errc::invariant, "walk length must be non-negative");
    const Line& visit = in.next("'visit'");
    if (visit.tokens[0] != "visit")
        syntax_error(visit.number, "expected 'visit'");
    for (std::size_t i = 1; i < visit.tokens.size(); ++i)
        walk.visit_sequence.push_back(to_int(visit.tokens[i], visit.number));
    in.finish();
    return walk;
}

std::string serialize(const DcbInstance& instance)
{
    return serialize(instance.board) + "threshold " + std::to_string(instance.threshold) + "\nproperty " +
           (instance.property == HamProperty::path ? "path" : "cycle") + '\n';
}

DcbInstance parse_dcb_instance(std::string_view text)
{
    Reader in(text);
    BondBoard board = read_bond_board(in);
    const Line& threshold = in.keyword("threshold", 1);
    const auto k = to_integer<std::int64_t>(threshold.tokens[1], threshold.number);
    const Line& property = in.keyword("property", 1);
    HamProperty p = HamProperty::path;
    if (property.tokens[1] == "cycle")
        p = HamProperty::cycle;
    else if (property.tokens[1] != "path")
        syntax_error(property.number, "property must be path or cycle");
    in.finish();
    return {std::move(board), k, p};
}

std::string serialize(const ClockInstance& clock)
{
    std::ostringstream out;
    out << clock.circumference() << '\n';
    write_occupied(out, clock);
    return out.str();
}

ClockInstance parse_clock(std::string_view text)
{
    Reader in(text);
    const Line& head = in.next("circumference");
    if (head.tokens[0] == "dense") {
        Reader::expect_arity(head, 2);
        const std::size_t n = to_count(head.tokens[1], head.number);
        std::vector<BigInt> values;
        while (!in.done()) {
            const Line& line = in.next("values");
            for (auto token : line.tokens)
                values.push_back(to_bigint(token, line.number));
        }
        if (values.size() != n)
            throw Error(Errc::syntax, "line " + std::to_string(head.number) + ": dense clock declares " +
                                          std::to_string(n) + " values, found " + std::to_string(values.size()));
        return construct([&] { return ClockInstance::dense(values); });
    }
    Reader::expect_arity(head, 1);
    BigInt n = to_bigint(head.tokens[0], head.number);
    auto occupied = read_occupied(in, std::nullopt);
    return construct([&] { return ClockInstance(std::move(n), std::move(occupied)); });
}

std::string serialize(const ClockSolution& solution)
{
    std::ostringstream out;
    for (const auto& move : solution.moves)
        out << move.position << ' ' << to_string(move.turn) << '\n';
    return out.str();
}

ClockSolution parse_clock_solution(std::string_view text)
{
    Reader in(text);
    ClockSolution solution;
    while (!in.done()) {
        const Line& line = in.next("a move");
        Reader::expect_arity(line, 2);
        Turn turn = Turn::cw;
        if (line.tokens[1] == "ccw")
            turn = Turn::ccw;
        else if (line.tokens[1] != "cw")
            syntax_error(line.number, "direction must be cw or ccw");
        solution.moves.push_back({to_bigint(line.tokens[0], line.number), turn});
    }
    return solution;
}

std::string serialize(const ReductionCertificate& cert)
{
    std::ostringstream out;
    out << "digraph " << cert.source.vertex_count() << ' ' << cert.source.arcs().size() << '\n';
    write_arcs(out, cert.source);
    out << "clock " << cert.clock.circumference() << ' ' << cert.clock.size() << '\n';
    write_occupied(out, cert.clock);
    out << "labels " << cert.labels.size() << '\n';
    for (const auto& [label, position] : cert.labels)
        out << label.segment << ' ' << label.offset << ' ' << position << '\n';
    out << "secondaries " << cert.secondaries.size() << '\n';
    for (const auto& s : cert.secondaries)
        out << s.j << ' ' << s.k << ' ' << s.m << ' ' << case_name(s.which) << ' ' << s.label.segment << ' '
            << s.label.offset << '\n';
    out << "intended " << cert.intended.size() << '\n';
    for (const auto& t : cert.intended)
        out << t.from << ' ' << t.to << '\n';
    out << "verdicts " << verdict_name(cert.source_verdict) << ' ' << verdict_name(cert.clock_verdict) << '\n';
    return out.str();
}

ReductionCertificate parse_certificate(std::string_view text)
{
    Reader in(text);
    const Line& dg = in.keyword("digraph", 2);
    const int v = to_int(dg.tokens[1], dg.number);
    auto arcs = read_arcs(in, to_count(dg.tokens[2], dg.number));
    Digraph source = construct([&] { return Digraph(v, std::move(arcs)); });

    const Line& cl = in.keyword("clock", 2);
    BigInt n = to_bigint(cl.tokens[1], cl.number);
    auto occupied = read_occupied(in, to_count(cl.tokens[2], cl.number));
    ClockInstance clock = construct([&] { return ClockInstance(std::move(n), std::move(occupied)); });

    std::map<NodeLabel, BigInt> labels;
    const Line& lb = in.keyword("labels", 1);
    for (std::size_t i = 0, count = to_count(lb.tokens[1], lb.number); i < count; ++i) {
        const Line& line = in.next("a label");
        Reader::expect_arity(line, 3);
        NodeLabel label{to_int(line.tokens[0], line.number), to_bigint(line.tokens[1], line.number)};
        if (!labels.emplace(std::move(label), to_bigint(line.tokens[2], line.number)).second)
            throw Error(Errc::invariant, "line " + std::to_string(line.number) + ": label listed twice");
    }

    std::vector<SecondaryNode> secondaries;
    const Line& sc = in.keyword("secondaries", 1);
    for (std::size_t i = 0, count = to_count(sc.tokens[1], sc.number); i < count; ++i) {
        const Line& line = in.next("a secondary node");
        Reader::expect_arity(line, 6);
        SecondaryNode node;
        node.j = to_int(line.tokens[0], line.number);
        node.k = to_int(line.tokens[1], line.number);
        node.m = to_int(line.tokens[2], line.number);
        if (line.tokens[3] == "a")
            node.which = SecondaryCase::a;
        else if (line.tokens[3] == "b")
            node.which = SecondaryCase::b;
        else if (line.tokens[3] == "c")
            node.which = SecondaryCase::c;
        else
            syntax_error(line.number, "case must be a, b or c");
        node.label = {to_int(line.tokens[4], line.number), to_bigint(line.tokens[5], line.number)};
        if (!labels.count(node.label))
            throw Error(Errc::invariant, "line " + std::to_string(line.number) + ": secondary node has no label");
        secondaries.push_back(std::move(node));
    }

    std::vector<Transition> intended;
    const Line& it = in.keyword("intended", 1);
    for (std::size_t i = 0, count = to_count(it.tokens[1], it.number); i < count; ++i) {
        const Line& line = in.next("a transition");
        Reader::expect_arity(line, 2);
        intended.push_back({to_bigint(line.tokens[0], line.number), to_bigint(line.tokens[1], line.number)});
    }

    const Line& vd = in.keyword("verdicts", 2);
    auto source_verdict = read_verdict(vd.tokens[1], vd.number);
    auto clock_verdict = read_verdict(vd.tokens[2], vd.number);
    in.finish();

    std::set<BigInt> positions;
    for (const auto& [label, position] : labels) {
        if (!clock.occupied().count(position))
            throw Error(Errc::invariant, "label points at empty position " + position.str());
        if (!positions.insert(position).second)
            throw Error(Errc::invariant, "label map is not injective at " + position.str());
    }

    return {std::move(source), std::move(clock),        std::move(labels), std::move(secondaries),
            std::move(intended), source_verdict, clock_verdict};
}

}  // namespace rift
