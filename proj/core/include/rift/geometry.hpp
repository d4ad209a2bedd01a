#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "rift/graphs.hpp"

namespace rift {

struct Point {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Point&, const Point&) = default;
};

/// Centre of the unit square occupied by tile c.
inline Point center(Cell c) { return {c.x + 0.5, c.y + 0.5}; }

inline constexpr double kGeometryEps = 1e-9;

/// Walkable area: the closed union of unit squares [x,x+1]x[y,y+1], with
/// every pinch corner removed. A pinch corner is a lattice point where exactly
/// two tiles meet, diagonally.
class TileRegion {
public:
    /// Duplicates are merged. Throws Errc::precondition when empty.
    explicit TileRegion(std::vector<Cell> tiles);

    std::span<const Cell> tiles() const noexcept { return tiles_; }
    bool contains(Cell tile) const noexcept;
    /// Number of tiles among the four cells around lattice corner c.
    int corner_occupancy(Cell corner) const noexcept;
    bool is_pinch(Cell corner) const noexcept;
    /// Corners with exactly three surrounding tiles; the only possible
    /// bend points of a shortest path.
    std::vector<Cell> reflex_corners() const;

    /// Inside the closed union and not a pinch corner.
    bool walkable(Point p) const noexcept;
    /// Every point of [a,b] is walkable.
    bool segment_admissible(Point a, Point b) const;

    int min_x() const noexcept { return min_x_; }
    int min_y() const noexcept { return min_y_; }
    int max_x() const noexcept { return max_x_; }
    int max_y() const noexcept { return max_y_; }

    friend bool operator==(const TileRegion& a, const TileRegion& b) { return a.tiles_ == b.tiles_; }

private:
    std::vector<Cell> tiles_;  // sorted, unique
    int min_x_ = 0, min_y_ = 0, max_x_ = 0, max_y_ = 0;
    std::vector<char> occupied_;  // bounding-box bitmap, row-major
};

std::vector<Cell> pinch_corners(const TileRegion& region);

/// Shortest walking distance inside the region via a visibility graph over
/// the endpoints and reflex corners. nullopt when unreachable. Throws
/// Errc::point_outside_region for non-walkable endpoints.
std::optional<double> euclidean_geodesic(const TileRegion& region, Point p, Point q);

/// Minimum number of orthogonal tile steps. nullopt when unreachable.
std::optional<int> grid_distance(const TileRegion& region, Cell a, Cell b);

/// Shortest path on the 8-connected lattice of spacing 1/k restricted to the
/// region. Never shorter than the geodesic. p and q must be lattice points.
std::optional<double> fine_grid_distance(const TileRegion& region, Point p, Point q,
                                         int subdivision);

/// Reusable geodesic oracle: the corner visibility graph is built once, then
/// each batch of query points is attached and solved with Dijkstra.
class GeodesicMetric {
public:
    explicit GeodesicMetric(const TileRegion& region);

    std::optional<double> distance(Point p, Point q) const;
    /// Pairwise distances among points; entry [i][j] is nullopt when unreachable.
    std::vector<std::vector<std::optional<double>>> all_pairs(std::span<const Point> points) const;

    std::size_t corner_count() const noexcept { return corners_.size(); }

private:
    const TileRegion* region_;
    std::vector<Point> corners_;
    std::vector<std::vector<std::pair<std::size_t, double>>> corner_edges_;
};

}  // namespace rift
