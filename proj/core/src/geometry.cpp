#include "rift/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <functional>
#include <limits>
#include <queue>

#include "rift/error.hpp"

namespace rift {

namespace {

bool near_integer(double v) { return std::abs(v - std::round(v)) < kGeometryEps; }

double dist(Point a, Point b) { return std::hypot(a.x - b.x, a.y - b.y); }

int floor_int(double v) { return static_cast<int>(std::floor(v)); }

}  // namespace

TileRegion::TileRegion(std::vector<Cell> tiles) : tiles_(std::move(tiles))
{
    if (tiles_.empty())
        throw Error(Errc::precondition, "tile region must contain at least one tile");
    std::sort(tiles_.begin(), tiles_.end());
    tiles_.erase(std::unique(tiles_.begin(), tiles_.end()), tiles_.end());
    min_x_ = max_x_ = tiles_.front().x;
    min_y_ = max_y_ = tiles_.front().y;
    for (Cell t : tiles_) {
        min_x_ = std::min(min_x_, t.x);
        max_x_ = std::max(max_x_, t.x);
        min_y_ = std::min(min_y_, t.y);
        max_y_ = std::max(max_y_, t.y);
    }
    const auto w = static_cast<std::size_t>(max_x_ - min_x_ + 1);
    const auto h = static_cast<std::size_t>(max_y_ - min_y_ + 1);
    occupied_.assign(w * h, 0);
    for (Cell t : tiles_)
        occupied_[static_cast<std::size_t>(t.y - min_y_) * w + static_cast<std::size_t>(t.x - min_x_)] = 1;
}

bool TileRegion::contains(Cell t) const noexcept
{
    if (t.x < min_x_ || t.x > max_x_ || t.y < min_y_ || t.y > max_y_)
        return false;
    const auto w = static_cast<std::size_t>(max_x_ - min_x_ + 1);
    return occupied_[static_cast<std::size_t>(t.y - min_y_) * w + static_cast<std::size_t>(t.x - min_x_)] != 0;
}

int TileRegion::corner_occupancy(Cell c) const noexcept
{
    return int(contains({c.x - 1, c.y - 1})) + int(contains({c.x, c.y - 1})) +
           int(contains({c.x - 1, c.y})) + int(contains({c.x, c.y}));
}

bool TileRegion::is_pinch(Cell c) const noexcept
{
    bool sw = contains({c.x - 1, c.y - 1});
    bool se = contains({c.x, c.y - 1});
    bool nw = contains({c.x - 1, c.y});
    bool ne = contains({c.x, c.y});
    return (sw && ne && !se && !nw) || (se && nw && !sw && !ne);
}

std::vector<Cell> TileRegion::reflex_corners() const
{
    std::vector<Cell> out;
    for (int x = min_x_; x <= max_x_ + 1; ++x)
        for (int y = min_y_; y <= max_y_ + 1; ++y)
            if (corner_occupancy({x, y}) == 3)
                out.push_back({x, y});
    return out;
}

bool TileRegion::walkable(Point p) const noexcept
{
    const bool on_x = near_integer(p.x);
    const bool on_y = near_integer(p.y);
    const int cx = on_x ? static_cast<int>(std::lround(p.x)) : floor_int(p.x);
    const int cy = on_y ? static_cast<int>(std::lround(p.y)) : floor_int(p.y);
    if (on_x && on_y)
        return corner_occupancy({cx, cy}) > 0 && !is_pinch({cx, cy});
    if (on_x)
        return contains({cx - 1, cy}) || contains({cx, cy});
    if (on_y)
        return contains({cx, cy - 1}) || contains({cx, cy});
    return contains({cx, cy});
}

bool TileRegion::segment_admissible(Point a, Point b) const
{
    if (!walkable(a) || !walkable(b))
        return false;
    const double dx = b.x - a.x;
    const double dy = b.y - a.y;
    if (std::abs(dx) < kGeometryEps && std::abs(dy) < kGeometryEps)
        return true;

    // Split at every crossing of an integer grid line; each open piece then
    // lies inside one cell or along one grid line.
    std::vector<double> cuts{0.0, 1.0};
    if (std::abs(dx) >= kGeometryEps)
        for (int i = static_cast<int>(std::ceil(std::min(a.x, b.x)));
             i <= static_cast<int>(std::floor(std::max(a.x, b.x))); ++i)
            cuts.push_back((i - a.x) / dx);
    if (std::abs(dy) >= kGeometryEps)
        for (int j = static_cast<int>(std::ceil(std::min(a.y, b.y)));
             j <= static_cast<int>(std::floor(std::max(a.y, b.y))); ++j)
            cuts.push_back((j - a.y) / dy);
    std::sort(cuts.begin(), cuts.end());

    auto at = [&](double t) { return Point{a.x + t * dx, a.y + t * dy}; };
    const double length = std::hypot(dx, dy);
    for (std::size_t i = 0; i < cuts.size(); ++i) {
        Point p = at(cuts[i]);
        // Lattice points met along the way must not be pinch corners.
        if (near_integer(p.x) && near_integer(p.y) &&
            is_pinch({static_cast<int>(std::lround(p.x)), static_cast<int>(std::lround(p.y))}))
            return false;
        if (i + 1 == cuts.size() || (cuts[i + 1] - cuts[i]) * length < kGeometryEps)
            continue;
        if (!walkable(at(0.5 * (cuts[i] + cuts[i + 1]))))
            return false;
    }
    return true;
}

std::vector<Cell> pinch_corners(const TileRegion& region)
{
    std::vector<Cell> out;
    for (int x = region.min_x() + 1; x <= region.max_x(); ++x)
        for (int y = region.min_y() + 1; y <= region.max_y(); ++y)
            if (region.is_pinch({x, y}))
                out.push_back({x, y});
    return out;
}

namespace {

std::vector<double> dijkstra(const std::vector<std::vector<std::pair<std::size_t, double>>>& adj,
                             std::size_t source)
{
    std::vector<double> best(adj.size(), std::numeric_limits<double>::infinity());
    using Item = std::pair<double, std::size_t>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
    best[source] = 0.0;
    queue.push({0.0, source});
    while (!queue.empty()) {
        auto [d, u] = queue.top();
        queue.pop();
        if (d > best[u])
            continue;
        for (auto [w, len] : adj[u])
            if (d + len < best[w]) {
                best[w] = d + len;
                queue.push({best[w], w});
            }
    }
    return best;
}

}  // namespace

GeodesicMetric::GeodesicMetric(const TileRegion& region) : region_(&region)
{
    for (Cell c : region.reflex_corners())
        corners_.push_back({static_cast<double>(c.x), static_cast<double>(c.y)});
    corner_edges_.resize(corners_.size());
    for (std::size_t i = 0; i < corners_.size(); ++i)
        for (std::size_t j = i + 1; j < corners_.size(); ++j)
            if (region.segment_admissible(corners_[i], corners_[j])) {
                double len = dist(corners_[i], corners_[j]);
                corner_edges_[i].push_back({j, len});
                corner_edges_[j].push_back({i, len});
            }
}

std::vector<std::vector<std::optional<double>>>
GeodesicMetric::all_pairs(std::span<const Point> points) const
{
    for (Point p : points)
        if (!region_->walkable(p))
            throw Error(Errc::point_outside_region,
                        "(" + std::to_string(p.x) + ", " + std::to_string(p.y) + ")");

    const std::size_t nc = corners_.size();
    std::vector<std::vector<std::pair<std::size_t, double>>> adj = corner_edges_;
    adj.resize(nc + points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        const std::size_t pi = nc + i;
        for (std::size_t c = 0; c < nc; ++c)
            if (region_->segment_admissible(points[i], corners_[c])) {
                double len = dist(points[i], corners_[c]);
                adj[pi].push_back({c, len});
                adj[c].push_back({pi, len});
            }
        for (std::size_t j = i + 1; j < points.size(); ++j)
            if (region_->segment_admissible(points[i], points[j])) {
                double len = dist(points[i], points[j]);
                adj[pi].push_back({nc + j, len});
                adj[nc + j].push_back({pi, len});
            }
    }

    std::vector<std::vector<std::optional<double>>> out(points.size(),
                                                        std::vector<std::optional<double>>(points.size()));
    for (std::size_t i = 0; i < points.size(); ++i) {
        out[i][i] = 0.0;
        auto best = dijkstra(adj, nc + i);
        for (std::size_t j = 0; j < points.size(); ++j) {
            if (j == i)
                continue;
            double d = best[nc + j];
            if (std::isfinite(d))
                out[i][j] = d;
        }
    }
    // Symmetrise against rounding in the two Dijkstra runs.
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            if (out[i][j] && out[j][i])
                out[i][j] = out[j][i] = std::min(*out[i][j], *out[j][i]);
    return out;
}

std::optional<double> GeodesicMetric::distance(Point p, Point q) const
{
    Point pts[2] = {p, q};
    return all_pairs(pts)[0][1];
}

std::optional<double> euclidean_geodesic(const TileRegion& region, Point p, Point q)
{
    if (!region.walkable(p) || !region.walkable(q))
        throw Error(Errc::point_outside_region, "geodesic endpoint is not walkable");
    if (dist(p, q) < kGeometryEps)
        return 0.0;
    if (region.segment_admissible(p, q))
        return dist(p, q);
    return GeodesicMetric(region).distance(p, q);
}

std::optional<int> grid_distance(const TileRegion& region, Cell a, Cell b)
{
    if (!region.contains(a) || !region.contains(b))
        throw Error(Errc::point_outside_region, "grid distance endpoint is not a tile");
    if (a == b)
        return 0;
    const int w = region.max_x() - region.min_x() + 1;
    const int h = region.max_y() - region.min_y() + 1;
    auto index = [&](Cell c) {
        return static_cast<std::size_t>((c.y - region.min_y()) * w + (c.x - region.min_x()));
    };
    std::vector<int> steps(static_cast<std::size_t>(w * h), -1);
    std::deque<Cell> queue{a};
    steps[index(a)] = 0;
    while (!queue.empty()) {
        Cell c = queue.front();
        queue.pop_front();
        for (Cell d : kOrthogonal) {
            Cell n = c + d;
            if (!region.contains(n) || steps[index(n)] >= 0)
                continue;
            steps[index(n)] = steps[index(c)] + 1;
            if (n == b)
                return steps[index(n)];
            queue.push_back(n);
        }
    }
    return std::nullopt;
}

std::optional<double> fine_grid_distance(const TileRegion& region, Point p, Point q, int k)
{
    if (k < 2)
        throw Error(Errc::precondition, "subdivision must be at least 2");
    auto to_lattice = [&](Point pt) {
        double u = pt.x * k, v = pt.y * k;
        if (!near_integer(u) || !near_integer(v))
            throw Error(Errc::precondition, "endpoint is not a point of the 1/k lattice");
        return Cell{static_cast<int>(std::lround(u)), static_cast<int>(std::lround(v))};
    };
    const Cell src = to_lattice(p);
    const Cell dst = to_lattice(q);

    // Integer lattice coordinates u in [min_x*k, (max_x+1)*k].
    const int u0 = region.min_x() * k, v0 = region.min_y() * k;
    const int nu = (region.max_x() - region.min_x() + 1) * k + 1;
    const int nv = (region.max_y() - region.min_y() + 1) * k + 1;
    auto fdiv = [](int a, int b) { return a >= 0 ? a / b : -((-a + b - 1) / b); };
    auto tile = [&](int cu, int cv) { return region.contains({fdiv(cu, k), fdiv(cv, k)}); };

    auto node_ok = [&](int u, int v) {
        const bool on_x = u % k == 0, on_y = v % k == 0;
        const int cx = fdiv(u, k), cy = fdiv(v, k);
        if (on_x && on_y) {
            int occ = int(region.contains({cx - 1, cy - 1})) + int(region.contains({cx, cy - 1})) +
                      int(region.contains({cx - 1, cy})) + int(region.contains({cx, cy}));
            bool sw = region.contains({cx - 1, cy - 1}), ne = region.contains({cx, cy});
            bool se = region.contains({cx, cy - 1}), nw = region.contains({cx - 1, cy});
            bool pinch = occ == 2 && ((sw && ne) || (se && nw));
            return occ > 0 && !pinch;
        }
        if (on_x)
            return region.contains({cx - 1, cy}) || region.contains({cx, cy});
        if (on_y)
            return region.contains({cx, cy - 1}) || region.contains({cx, cy});
        return region.contains({cx, cy});
    };
    // A step between neighbouring lattice nodes stays inside one unit cell's closure.
    auto step_ok = [&](int u, int v, int du, int dv) {
        const int lu = std::min(u, u + du), lv = std::min(v, v + dv);
        if (du != 0 && dv != 0)
            return tile(lu, lv);
        if (du != 0) {
            if (v % k == 0)
                return tile(lu, v - 1) || tile(lu, v);
            return tile(lu, v);
        }
        if (u % k == 0)
            return tile(u - 1, lv) || tile(u, lv);
        return tile(u, lv);
    };

    auto in_box = [&](Cell c) {
        return c.x >= u0 && c.y >= v0 && c.x < u0 + nu && c.y < v0 + nv;
    };
    if (!in_box(src) || !in_box(dst) || !node_ok(src.x, src.y) || !node_ok(dst.x, dst.y))
        throw Error(Errc::point_outside_region, "fine-grid endpoint is not walkable");
    if (src == dst)
        return 0.0;

    auto index = [&](int u, int v) { return static_cast<std::size_t>((v - v0) * nu + (u - u0)); };
    std::vector<double> best(static_cast<std::size_t>(nu * nv), std::numeric_limits<double>::infinity());
    using Item = std::pair<double, Cell>;
    auto later = [](const Item& a, const Item& b) { return a.first > b.first; };
    std::priority_queue<Item, std::vector<Item>, decltype(later)> queue(later);
    best[index(src.x, src.y)] = 0.0;
    queue.push({0.0, src});
    const double straight = 1.0 / k, diagonal = std::sqrt(2.0) / k;
    while (!queue.empty()) {
        auto [d, c] = queue.top();
        queue.pop();
        if (d > best[index(c.x, c.y)])
            continue;
        if (c == dst)
            return d;
        for (int du = -1; du <= 1; ++du)
            for (int dv = -1; dv <= 1; ++dv) {
                if (du == 0 && dv == 0)
                    continue;
                Cell n{c.x + du, c.y + dv};
                if (!in_box(n) || !node_ok(n.x, n.y) || !step_ok(c.x, c.y, du, dv))
                    continue;
                double nd = d + (du != 0 && dv != 0 ? diagonal : straight);
                if (nd < best[index(n.x, n.y)]) {
                    best[index(n.x, n.y)] = nd;
                    queue.push({nd, n});
                }
            }
    }
    return std::nullopt;
}

}  // namespace rift
