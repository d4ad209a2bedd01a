#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace rift {

/// Complete symmetric distance matrix satisfying the triangle inequality
/// (a metric closure).
using DistanceMatrix = std::vector<std::vector<double>>;

using RequiredEdge = std::pair<int, int>;

struct PostmanWalk {
    std::vector<int> sequence;  // metric indices, start excluded
    double length = 0.0;
};

/// Minimum-length open walk from `start` that traverses every required edge
/// as a consecutive pair. The required edges must form one connected
/// component (Errc::disconnected_required_set otherwise). Without a start the
/// walk may begin anywhere.
///
/// The walk is an Euler trail of the required multigraph augmented by
/// deadhead edges. The deadheads are a minimum perfect matching on the odd
/// vertices plus two virtual terminals: one standing for the start leg and
/// one, at zero cost, for the free end of the trail. Matching the two
/// terminals together yields a closed circuit entered nearest the start.
PostmanWalk rural_postman_connected(const DistanceMatrix& metric,
                                    std::span<const RequiredEdge> required,
                                    std::optional<int> start);

/// Length of visiting `sequence` in order, plus the leg from `start`.
double walk_length(const DistanceMatrix& metric, std::span<const int> sequence,
                   std::optional<int> start);

}  // namespace rift
