#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace rift {

/// A point of the integer lattice. Doubles as a tile coordinate.
struct Cell {
    int x = 0;
    int y = 0;

    friend auto operator<=>(const Cell&, const Cell&) = default;
    friend Cell operator+(Cell a, Cell b) { return {a.x + b.x, a.y + b.y}; }
    friend Cell operator-(Cell a, Cell b) { return {a.x - b.x, a.y - b.y}; }
};

inline std::string to_string(Cell c)
{
    return "(" + std::to_string(c.x) + ", " + std::to_string(c.y) + ")";
}

inline constexpr Cell kEast{1, 0};
inline constexpr Cell kNorth{0, 1};
inline constexpr Cell kWest{-1, 0};
inline constexpr Cell kSouth{0, -1};
inline constexpr Cell kOrthogonal[4] = {kEast, kNorth, kWest, kSouth};

/// Induced subgraph of the integer lattice: two vertices are adjacent exactly
/// when they are at Euclidean distance 1. No edge list is stored.
class GridGraph {
public:
    /// Duplicates are merged. Throws Errc::precondition when empty.
    explicit GridGraph(std::vector<Cell> vertices);

    std::span<const Cell> vertices() const noexcept { return vertices_; }
    std::size_t size() const noexcept { return vertices_.size(); }
    bool contains(Cell c) const;
    std::optional<std::size_t> index_of(Cell c) const;
    std::size_t degree(Cell c) const;
    /// Neighbour lists by vertex index (sorted vertex order).
    std::vector<std::vector<std::size_t>> adjacency() const;
    bool is_connected() const;

    int min_x() const;
    int max_x() const;
    int min_y() const;
    int max_y() const;

    friend bool operator==(const GridGraph&, const GridGraph&) = default;

private:
    std::vector<Cell> vertices_;  // sorted, unique
};

using Arc = std::pair<int, int>;

/// Directed graph on vertices 0..v-1 without self-loops or parallel arcs.
class Digraph {
public:
    Digraph(int vertex_count, std::vector<Arc> arcs);

    int vertex_count() const noexcept { return vertex_count_; }
    const std::vector<Arc>& arcs() const noexcept { return arcs_; }
    std::vector<std::vector<int>> out_neighbors() const;
    bool has_arc(int from, int to) const;
    /// Every vertex has outdegree 1 or 2.
    bool outdeg12() const;

    friend bool operator==(const Digraph&, const Digraph&) = default;

private:
    int vertex_count_;
    std::vector<Arc> arcs_;
};

/// Unordered lattice edges of g, each pair ordered (smaller, larger).
std::vector<std::pair<Cell, Cell>> grid_edges(const GridGraph& g);

/// Hamiltonian cycle oracle. Graphs with fewer than 4 vertices have none.
bool has_ham_cycle_grid(const GridGraph& g);
/// Hamiltonian path oracle. A single vertex is a path.
bool has_ham_path_grid(const GridGraph& g);

/// Largest digraph accepted by the directed Hamiltonian path oracle.
inline constexpr int kMaxDirectedHamVertices = 22;

/// Subset dynamic programme over (visited set, last vertex).
/// Throws Errc::instance_too_large above kMaxDirectedHamVertices.
std::optional<std::vector<int>> find_directed_ham_path(const Digraph& d);
bool has_directed_ham_path(const Digraph& d);

/// Both orientations of every lattice edge, vertices indexed in sorted order.
Digraph symmetric_orientation(const GridGraph& g);

inline constexpr int kMaxEnumerationCells = 12;

/// Every connected induced grid graph with cells in [0,w)x[0,h) and at most
/// max_vertices vertices, each yielded once. Throws Errc::box_too_large when
/// w*h exceeds kMaxEnumerationCells.
void for_each_grid_graph(int box_w, int box_h, int max_vertices,
                         const std::function<void(const GridGraph&)>& visit);
std::vector<GridGraph> enumerate_grid_graphs(int box_w, int box_h, int max_vertices);

}  // namespace rift
