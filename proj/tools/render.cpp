#include "render.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace rift::cli {

namespace {

struct Canvas {
    int min_x, min_y, width, height;
    std::vector<std::string> rows;

    Canvas(int min_x_, int min_y_, int max_x, int max_y, char fill)
        : min_x(min_x_), min_y(min_y_), width(max_x - min_x_ + 1), height(max_y - min_y_ + 1),
          rows(static_cast<std::size_t>(height), std::string(static_cast<std::size_t>(width), fill))
    {
    }

    char& at(int x, int y)
    {
        return rows[static_cast<std::size_t>(height - 1 - (y - min_y))][static_cast<std::size_t>(x - min_x)];
    }

    std::string framed() const
    {
        std::string edge = "+" + std::string(static_cast<std::size_t>(width), '-') + "+\n";
        std::string out = edge;
        for (const auto& row : rows)
            out += "|" + row + "|\n";
        return out + edge;
    }
};

char crystal_glyph(std::size_t i)
{
    constexpr const char* digits = "0123456789abcdefghijklmnopqrstuvwxyz";
    return i < 36 ? digits[i] : '+';
}

}  // namespace

std::string render(const GridGraph& g)
{
    Canvas canvas(2 * g.min_x(), 2 * g.min_y(), 2 * g.max_x(), 2 * g.max_y(), ' ');
    for (Cell c : g.vertices())
        canvas.at(2 * c.x, 2 * c.y) = 'o';
    for (auto [a, b] : grid_edges(g))
        canvas.at(a.x + b.x, a.y + b.y) = a.y == b.y ? '-' : '|';
    return canvas.framed() + std::to_string(g.size()) + " vertices, " + std::to_string(grid_edges(g).size()) +
           " edges\n";
}

std::string render(const TileBoard& board)
{
    const auto& caps = board.capacities();
    int min_x = board.start().x, max_x = min_x, min_y = board.start().y, max_y = min_y;
    for (const auto& [c, cap] : caps) {
        min_x = std::min(min_x, c.x);
        max_x = std::max(max_x, c.x);
        min_y = std::min(min_y, c.y);
        max_y = std::max(max_y, c.y);
    }
    Canvas canvas(min_x, min_y, max_x, max_y, ' ');
    for (const auto& [c, cap] : caps)
        canvas.at(c.x, c.y) = board.has_crystal(c) ? (cap == 2 ? '@' : '*') : (cap == 2 ? '2' : '.');
    canvas.at(board.start().x, board.start().y) = 'S';
    canvas.at(board.finish().x, board.finish().y) = 'F';
    return canvas.framed() + "* crystal  2 double tile  @ double crystal tile  S start  F finish\n";
}

std::string render(const BondBoard& board)
{
    const auto& region = board.region();
    Canvas canvas(region.min_x(), region.min_y(), region.max_x(), region.max_y(), ' ');
    for (Cell c : region.tiles())
        canvas.at(c.x, c.y) = '.';
    if (board.start())
        canvas.at(board.start()->x, board.start()->y) = 'S';
    for (std::size_t i = 0; i < board.crystal_count(); ++i)
        canvas.at(board.crystals()[i].x, board.crystals()[i].y) = crystal_glyph(i);

    std::ostringstream out;
    out << canvas.framed() << "model " << to_string(board.model()) << ", " << board.crystal_count()
        << " crystals, bonds:";
    for (auto [a, b] : board.bonds())
        out << ' ' << crystal_glyph(static_cast<std::size_t>(a)) << '-' << crystal_glyph(static_cast<std::size_t>(b));
    out << '\n';
    return out.str();
}

std::string render(const ClockInstance& clock)
{
    std::ostringstream out;
    out << "clock of " << clock.circumference() << " positions, " << clock.size() << " occupied\n";
    if (clock.is_dense() && clock.size() <= 40) {
        for (const auto& [position, value] : clock.occupied())
            out << '[' << value << ']';
        out << '\n';
    }
    for (const auto& [position, value] : clock.occupied()) {
        const BigInt cw = clock.clockwise(position, value);
        const BigInt ccw = clock.counterclockwise(position, value);
        out << position << " (" << value << "): cw -> " << cw << (clock.occupied().count(cw) ? " *" : "")
            << ", ccw -> " << ccw << (clock.occupied().count(ccw) ? " *" : "") << '\n';
    }
    out << "* lands on an occupied position\n";
    return out.str();
}

}  // namespace rift::cli
